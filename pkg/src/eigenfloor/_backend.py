"""Kernel backend selection.

The compiled extension is used when importable, otherwise the pure-Python
kernels. Set EIGENFLOOR_BACKEND=c or =py to force a choice (a forced backend
that is unavailable raises ImportError at package import)."""

import os

_choice = os.environ.get("EIGENFLOOR_BACKEND", "").strip().lower()

if _choice in ("py", "python"):
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _choice in ("c", "compiled", "cython"):
    from . import _kernels_c as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _choice:
    raise ImportError(f"unknown EIGENFLOOR_BACKEND value: {_choice!r}")
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation this process is using."""
    return BACKEND
