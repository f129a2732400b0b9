"""Backend selection for the hot kernels.

The compiled extension (edgealg._core, Cython) is used when it imported
successfully and the problem fits its limits (<= 64 variables, packable
multidegree keys); otherwise the pure-Python fallback runs. Set
EDGEALG_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_pure as _pure

if os.environ.get("EDGEALG_PURE"):
    _core = None
else:
    try:
        from . import _core  # type: ignore[attr-defined]
    except ImportError:
        _core = None

BACKEND = "compiled" if _core is not None else "pure"


def make_reducer(nvars: int):
    if _core is not None and nvars <= 64:
        return _core.Reducer(nvars)
    return _pure.Reducer(nvars)


def _fits_compiled_fibers(ne: int, nv: int, degree: int) -> bool:
    if ne == 0 or ne > 64:
        return False
    bits = max(2, (2 * degree).bit_length())
    return nv <= 2 * (64 // bits)


def fiber_groups_exact(eu, ev, nv: int, degree: int, want_exponents: bool):
    """Nontrivial fibers of the degree-`degree` edge monomials, grouped by
    vertex multidegree. See _kernels_pure.fiber_groups_exact for the shape."""
    if _core is not None and _fits_compiled_fibers(len(eu), nv, degree):
        return _core.fiber_groups_exact(list(eu), list(ev), nv, degree, want_exponents)
    return _pure.fiber_groups_exact(list(eu), list(ev), nv, degree, want_exponents)
