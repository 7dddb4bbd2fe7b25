"""Split-kernel selection: compiled extension when available, numpy fallback.

BOTSCOPE_FOREST_BACKEND=pure|compiled|auto (default auto) forces a choice;
"compiled" raises when the extension is missing rather than silently
degrading. Both kernels produce bit-identical splits.
"""

from __future__ import annotations

import os

from . import _split_py

try:
    from . import _split as _compiled
except ImportError:
    _compiled = None


def get(name: str | None = None):
    """The kernel module for the requested backend name."""
    choice = name or os.environ.get("BOTSCOPE_FOREST_BACKEND", "auto")
    if choice == "pure":
        return _split_py
    if choice == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled split kernel requested but the extension is not built")
        return _compiled
    if choice == "auto":
        return _compiled if _compiled is not None else _split_py
    raise ValueError(f"unknown forest backend {choice!r}")


def active_name() -> str:
    return get().BACKEND_NAME


def compiled_available() -> bool:
    return _compiled is not None
