"""Kernel backend selection.

Two implementations of the hot numeric kernels ship side by side:

* ``numpy``  -- im2col + BLAS matmul (and exact float64 GEMM for the
  integer path).  Default: on typical x86 hosts the BLAS route is several
  times faster than anything a JIT'd scalar loop achieves on one core.
* ``numba``  -- fused @njit loop kernels.  Opt in with
  ``EDGELITE_BACKEND=numba`` (useful on hosts without a tuned BLAS, or
  with many cores where the parallel loops win).

``benchmarks/bench_kernels.py`` compares both lanes on representative
layer shapes.
"""

from __future__ import annotations

import os

from .errors import ConfigError

BACKEND_ENV = "EDGELITE_BACKEND"
_VALID = ("numpy", "numba")

_active: str | None = None


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _resolve_from_env() -> str:
    raw = os.environ.get(BACKEND_ENV, "").strip().lower()
    if raw in ("", "auto"):
        return "numpy"
    if raw not in _VALID:
        raise ConfigError(f"{BACKEND_ENV}={raw!r}: expected one of {_VALID} or 'auto'")
    if raw == "numba" and not numba_available():
        raise ConfigError(f"{BACKEND_ENV}=numba but numba is not importable")
    return raw


def active_backend() -> str:
    global _active
    if _active is None:
        _active = _resolve_from_env()
    return _active


def set_backend(name: str) -> None:
    """Programmatic override (tests, benchmark driver)."""
    global _active
    if name not in _VALID:
        raise ConfigError(f"unknown backend {name!r}; expected one of {_VALID}")
    if name == "numba" and not numba_available():
        raise ConfigError("numba backend requested but numba is not importable")
    _active = name
