"""Kernel backend selection: compiled extension when present, else pure Python.

`kernels` is the module the rest of the package uses. Both implementations
are importable side by side (the benchmark and the parity tests need that);
selection happens once at import time and is reported by `BACKEND`.
"""

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

if _kernels_cy is not None:
    kernels = _kernels_cy
    BACKEND = "compiled"
else:
    kernels = _kernels_py
    BACKEND = "pure"


def available_backends():
    out = {"pure": _kernels_py}
    if _kernels_cy is not None:
        out["compiled"] = _kernels_cy
    return out
