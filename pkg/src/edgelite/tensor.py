"""Dense 4-D tensors in fixed (batch, channel, row, column) layout.

Float32 tensors are plain buffers; int8 tensors always carry affine
quantization metadata (real = scale * (q - zero_point)).  Data is stored
batch-major so that per-filter weight slices stay contiguous for the conv
kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DTypeError, ShapeError, SizeError
from .rng import Rng

# Element counts must stay indexable with signed 64-bit offsets.
_MAX_ELEMENTS = 2**62


class Shape(NamedTuple):
    n: int
    c: int
    h: int
    w: int

    def count(self) -> int:
        return self.n * self.c * self.h * self.w

    def validate(self) -> "Shape":
        for dim in self:
            if int(dim) < 1:
                raise ShapeError(f"all dimensions must be >= 1, got {tuple(self)}")
        if self.count() > _MAX_ELEMENTS:
            raise SizeError(f"element count {self.count()} exceeds addressable range")
        return self


@dataclass(frozen=True)
class QuantParams:
    """Per-tensor affine mapping real = scale * (q - zero_point)."""

    scale: float
    zero_point: int

    def __post_init__(self):
        if not (self.scale > 0.0) or not np.isfinite(self.scale):
            raise ValueError(f"scale must be positive and finite, got {self.scale}")
        if not (-128 <= self.zero_point <= 127):
            raise ValueError(f"zero_point must lie in [-128, 127], got {self.zero_point}")


@dataclass
class Tensor:
    """4-D array plus optional quantization metadata.

    Treated as immutable once constructed; training code mutates weight
    buffers in place through ``data`` but never reshapes or re-types them.
    """

    data: np.ndarray
    quant: Optional[QuantParams] = field(default=None)

    def __post_init__(self):
        if self.data.ndim != 4:
            raise ShapeError(f"tensors are 4-D (n,c,h,w), got ndim={self.data.ndim}")
        Shape(*self.data.shape).validate()
        if self.data.dtype == np.float32:
            if self.quant is not None:
                raise DTypeError("float32 tensors must not carry quant metadata")
        elif self.data.dtype == np.int8:
            if self.quant is None:
                raise DTypeError("int8 tensors require quant metadata")
        else:
            raise DTypeError(f"unsupported dtype {self.data.dtype}; use float32 or int8")

    @property
    def shape(self) -> Shape:
        return Shape(*self.data.shape)

    @property
    def dtype(self) -> np.dtype:
        return self.data.dtype

    def count(self) -> int:
        return self.shape.count()

    def nbytes(self) -> int:
        return self.data.nbytes

    def copy(self) -> "Tensor":
        return Tensor(self.data.copy(), self.quant)


def tensor_zeros(shape: Shape, dtype=np.float32, quant: Optional[QuantParams] = None) -> Tensor:
    """All-real-zero tensor; for int8 that is the zero-point value."""
    shape = Shape(*shape).validate()
    if np.dtype(dtype) == np.int8:
        qp = quant if quant is not None else QuantParams(1.0, 0)
        data = np.full(tuple(shape), qp.zero_point, dtype=np.int8)
        return Tensor(data, qp)
    return Tensor(np.zeros(tuple(shape), dtype=np.float32))


def tensor_init_he(shape: Shape, fan_in: int, rng: Rng) -> Tensor:
    """He-normal init: normal(0, sqrt(2 / fan_in))."""
    shape = Shape(*shape).validate()
    if fan_in < 1:
        raise ValueError(f"fan_in must be >= 1, got {fan_in}")
    std = float(np.sqrt(2.0 / fan_in))
    return Tensor(rng.normal(tuple(shape), std=std, dtype=np.float32))


def tensor_concat_channels(parts: Sequence[Tensor]) -> Tensor:
    """Concatenate along the channel axis, preserving part order."""
    if len(parts) < 2:
        raise ShapeError("need at least two tensors to concatenate")
    first = parts[0]
    for p in parts[1:]:
        if (p.shape.n, p.shape.h, p.shape.w) != (first.shape.n, first.shape.h, first.shape.w):
            raise ShapeError(
                f"spatial/batch mismatch: {tuple(p.shape)} vs {tuple(first.shape)}"
            )
        if p.dtype != first.dtype:
            raise DTypeError(f"mixed dtypes in concat: {p.dtype} vs {first.dtype}")
        if p.quant != first.quant:
            raise DTypeError("int8 concat requires identical quant params")
    data = np.concatenate([p.data for p in parts], axis=1)
    return Tensor(data, first.quant)


def concat_offsets(parts: Sequence[Tensor]) -> list[int]:
    """Channel offset of each part inside the concatenated tensor."""
    offsets = [0]
    for p in parts[:-1]:
        offsets.append(offsets[-1] + p.shape.c)
    return offsets


def split_channels(t: Tensor, widths: Sequence[int]) -> list[Tensor]:
    """Inverse of concat: slice back into parts of the given channel widths."""
    if sum(widths) != t.shape.c:
        raise ShapeError(f"widths sum {sum(widths)} != channels {t.shape.c}")
    out, start = [], 0
    for w in widths:
        out.append(Tensor(t.data[:, start:start + w].copy(), t.quant))
        start += w
    return out
