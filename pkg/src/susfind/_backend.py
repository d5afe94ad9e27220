"""Kernel backend selection.

The compiled ``_ckernels`` extension is preferred; if it cannot be
imported the pure-Python kernels are used.  ``SUSFIND_BACKEND=python``
forces the fallback for the whole process.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["c"] = _ckernels


def _default() -> ModuleType:
    forced = os.environ.get("SUSFIND_BACKEND", "").strip().lower()
    if forced:
        if forced not in BACKENDS:
            raise ImportError(f"SUSFIND_BACKEND={forced!r} is not available; have {sorted(BACKENDS)}")
        return BACKENDS[forced]
    return BACKENDS.get("c", _pykernels)


DEFAULT = _default()


def get(name: str | None = None) -> ModuleType:
    """Return the kernel module called *name* ("c" or "python"), or the default."""
    if name is None or name == "auto":
        return DEFAULT
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}") from None
