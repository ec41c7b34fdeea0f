"""Kernel backend selection: compiled extension if importable, NumPy otherwise.

Set VRIESZ_BACKEND=python to force the fallback (used by the benchmark and the
backend-parity tests).
"""

from __future__ import annotations

import os

from . import _core_py

if os.environ.get("VRIESZ_BACKEND", "").lower() == "python":
    core = _core_py
else:
    try:
        from . import _core as core  # type: ignore[no-redef]
    except ImportError:
        core = _core_py

python_core = _core_py


def backend_name() -> str:
    return core.BACKEND
