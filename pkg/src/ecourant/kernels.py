"""Backend selection for the hot loops.

The compiled extension ``ecourant._kernels`` is used when it was built;
otherwise the pure-Python twin is used.  Setting ``ECOURANT_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("ECOURANT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

contract2 = _impl.contract2
matvec = _impl.matvec
matmul = _impl.matmul
row_reduce = _impl.row_reduce

__all__ = ["BACKEND", "contract2", "matvec", "matmul", "row_reduce"]
