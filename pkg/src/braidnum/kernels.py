"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``BRAIDNUM_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("BRAIDNUM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass

signed_labels = _impl.signed_labels
sweep = _impl.sweep


def implementations():
    """Available backends as ``{name: module}``."""
    impls = {"python": _kernels_py}
    try:
        from . import _ckernels
        impls["cython"] = _ckernels
    except ImportError:
        pass
    return impls
