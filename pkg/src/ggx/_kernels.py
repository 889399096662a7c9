"""Kernel dispatch.

The env var GGX_NUMBA picks the implementation: "0"/"off" forces the plain
Python bitset path, "1"/"on" requires numba, anything else (or unset) uses
numba when importable and falls back otherwise.  `benchmarks/bench_kernels.py`
times the two paths against each other.
"""

from __future__ import annotations

import os


def _flag() -> bool | None:
    v = os.environ.get("GGX_NUMBA", "").strip().lower()
    if v in ("0", "false", "off", "no"):
        return False
    if v in ("1", "true", "on", "yes"):
        return True
    return None


_pref = _flag()
if _pref is False:
    from . import _kernels_py as _impl

    USING_NUMBA = False
else:
    try:
        from . import _kernels_nb as _impl  # noqa: F401

        USING_NUMBA = True
    except ImportError:
        if _pref is True:
            raise
        from . import _kernels_py as _impl

        USING_NUMBA = False

hole_search = _impl.hole_search
brute_odd_hole = _impl.brute_odd_hole
clique_reduce = _impl.clique_reduce
