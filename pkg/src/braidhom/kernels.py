"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over.  Setting ``BRAIDHOM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("BRAIDHOM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

multiply = _impl.multiply
inverse = _impl.inverse
length = _impl.length
right_descent_mask = _impl.right_descent_mask
left_descent_mask = _impl.left_descent_mask
left_weight = _impl.left_weight


def elementary_divisors(rows, ncols):
    """Unsorted nonzero pivots of an integer matrix given as dense rows."""
    if _impl is not _pykernels:
        try:
            return _impl.elementary_divisors(rows, ncols)
        except OverflowError:
            pass
    return _pykernels.elementary_divisors(rows, ncols)
