"""Hot loops: the compiled extension when it was built, the NumPy version otherwise.

Set ``CRYSTAL_SM_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _search_py

try:
    if os.environ.get("CRYSTAL_SM_PURE"):
        raise ImportError("pure fallback requested")
    from . import _search as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "numpy"
closure_hits = _compiled.closure_hits if _compiled is not None else _search_py.closure_hits
closure_hits_py = _search_py.closure_hits
