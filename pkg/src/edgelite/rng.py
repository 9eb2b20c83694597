"""Deterministic random number generation.

All randomness in the package flows through :class:`Rng`, a thin wrapper
around numpy's counter-based Philox bit generator.  Philox is a pure
function of (key, counter), so a given seed reproduces the same stream on
every platform, which is what makes dataset generation and weight
initialization bit-reproducible.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _tag_to_word(tag) -> int:
    """Map an arbitrary tag to a stable 64-bit word (never python hash())."""
    if isinstance(tag, (int, np.integer)):
        return int(tag) & 0xFFFFFFFFFFFFFFFF
    digest = hashlib.blake2s(str(tag).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class Rng:
    """Seeded Philox generator with hierarchical sub-stream derivation."""

    def __init__(self, seed: int, _lane: int = 0):
        if seed < 0:
            raise ValueError("seed must be a non-negative 64-bit integer")
        self.seed = int(seed)
        self._lane = int(_lane)
        self._gen = np.random.Generator(
            np.random.Philox(key=[self.seed & 0xFFFFFFFFFFFFFFFF, self._lane])
        )

    def child(self, tag) -> "Rng":
        """Independent stream derived from this seed and a tag.

        Children of distinct tags never share state with each other or the
        parent; repeated calls with the same tag return identical streams.
        """
        return Rng(self.seed, _lane=self._lane ^ _tag_to_word(tag))

    def normal(self, shape, std=1.0, dtype=np.float32):
        return self._gen.normal(0.0, std, size=shape).astype(dtype)

    def uniform(self, shape, low=0.0, high=1.0, dtype=np.float32):
        return self._gen.uniform(low, high, size=shape).astype(dtype)

    def integers(self, low, high, shape=None):
        return self._gen.integers(low, high, size=shape)

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def __repr__(self):
        return f"Rng(seed={self.seed}, lane={self._lane:#x})"
