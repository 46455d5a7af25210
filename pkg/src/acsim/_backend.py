"""Selects the geometry kernel implementation at import time.

The compiled Cython module is preferred. Setting ``ACSIM_PURE_PYTHON=1``
forces the numpy fallback, which is also used when the extension was not
built.
"""
import importlib
import os

_NAMES = {"cython": "acsim._kernels", "python": "acsim._pykernels"}


def load(name):
    """Return the kernel module for ``name`` ("cython" or "python")."""
    return importlib.import_module(_NAMES[name])


def available():
    found = []
    for name in _NAMES:
        try:
            load(name)
        except ImportError:
            continue
        found.append(name)
    return found


if os.environ.get("ACSIM_PURE_PYTHON", "") not in ("", "0"):
    BACKEND = "python"
else:
    BACKEND = "cython" if "cython" in available() else "python"

kernels = load(BACKEND)
