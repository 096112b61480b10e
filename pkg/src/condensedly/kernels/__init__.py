"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The Cython extension is picked at import time when available; set
CONDENSEDLY_PURE=1 to force the fallback. Both backends are exercised
against each other in the test suite and the benchmark.
"""

from __future__ import annotations

import os

from .automaton import Automaton, fold_codepoints

if os.environ.get("CONDENSEDLY_PURE"):
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

ac_scan = _impl.ac_scan
bm25_accumulate = _impl.bm25_accumulate

__all__ = ["Automaton", "fold_codepoints", "ac_scan", "bm25_accumulate",
           "BACKEND"]
