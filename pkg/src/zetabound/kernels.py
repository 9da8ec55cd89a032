"""Backend selection for the hot kernels.

The compiled extension is preferred. The pure-Python module is used when the
extension is missing, when ``ZETABOUND_PURE_PYTHON=1`` is set, or when the
working precision has been lowered through ``ZETA_BOUND_PRECISION`` (only the
Python kernels apply that extra widening).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels
from .interval import PRECISION

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels


def available() -> list[str]:
    return sorted(_BACKENDS)


def _default() -> ModuleType:
    if os.environ.get("ZETABOUND_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    if PRECISION != 53 or _ckernels is None:
        return _pykernels
    return _ckernels


def get_backend(name: str | None = None) -> ModuleType:
    """Kernel module by name ("cython" or "python"); None gives the default."""
    if name is None:
        return active
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available()}") from None


active: ModuleType = _default()
