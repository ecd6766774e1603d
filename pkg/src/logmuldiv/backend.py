"""Kernel backend selection.

Hot array kernels exist twice with identical semantics: a numba ``@njit``
build and a pure-numpy vectorized build.  The active one is picked from the
``LOGMULDIV_BACKEND`` environment variable:

    auto   (default) numba when importable, numpy otherwise
    numba  force the jitted kernels (raises if numba is unavailable)
    numpy  force the vectorized fallback

Both produce bit-identical results (asserted by the test suite); the choice
only affects speed.  ``set_backend`` overrides the environment at runtime.
"""

from __future__ import annotations

import os

_ENV_VAR = "LOGMULDIV_BACKEND"
_CHOICES = ("auto", "numba", "numpy")

_active_name: str | None = None
_active_module = None


def _load(name: str):
    if name == "numpy":
        from . import _kernels_numpy

        return "numpy", _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return "numba", _kernels_numba
    # auto
    try:
        from . import _kernels_numba

        return "numba", _kernels_numba
    except ImportError:
        from . import _kernels_numpy

        return "numpy", _kernels_numpy


def set_backend(name: str) -> None:
    """Select the kernel backend by name ('auto', 'numba' or 'numpy')."""
    global _active_name, _active_module
    if name not in _CHOICES:
        raise ValueError(f"unknown backend {name!r}, expected one of {_CHOICES}")
    _active_name, _active_module = _load(name)


def get_backend() -> str:
    """Name of the active backend, resolving the environment on first use."""
    if _active_name is None:
        set_backend(os.environ.get(_ENV_VAR, "auto"))
    return _active_name


def kernels():
    """The active kernel module."""
    get_backend()
    return _active_module
