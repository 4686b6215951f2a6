"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
twin.  Setting ``TRUNCGROUP_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("TRUNCGROUP_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

mul_into = _impl.mul_into
axpy_into = _impl.axpy_into
add_into = _impl.add_into
pruned = _impl.pruned
sparse_mul = _impl.sparse_mul
cyclo_mul = _impl.cyclo_mul

__all__ = ["BACKEND", "mul_into", "axpy_into", "add_into", "pruned",
           "sparse_mul", "cyclo_mul"]
