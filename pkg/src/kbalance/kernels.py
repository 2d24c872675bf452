"""Kernel selection: compiled extension if available, else pure Python.

Set KBALANCE_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("KBALANCE_PURE_PYTHON"):
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND: str = _impl.BACKEND
coloring_census = _impl.coloring_census
orientation_search = _impl.orientation_search
linear_extension_census = _impl.linear_extension_census
