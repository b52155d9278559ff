"""Backend selection for the exact-arithmetic kernels.

The compiled extension is used when it importable; setting DUFLO_PURE=1 in
the environment forces the pure-Python fallback.  Both implement the same
contract and produce identical results (see tests/test_kernels.py and
benchmarks/bench_kernels.py).
"""

import os

from . import _kernels_py

if os.environ.get("DUFLO_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
matmul_pairs = _impl.matmul_pairs
rref_int = _impl.rref_int

__all__ = ["BACKEND", "matmul_pairs", "rref_int"]
