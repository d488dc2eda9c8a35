"""Kernel backend selection.

The compiled Cython module `_ck` is preferred when it has been built
(`python setup.py build_ext --inplace` or the `speed` extra); otherwise the
pure-Python twin `pyk` serves the same API.  Set VERTEXMAGIC_PURE=1 to force
the fallback, e.g. for the benchmark's side-by-side comparison.
"""

from __future__ import annotations

import os

from . import pyk

_impl = pyk
if not os.environ.get("VERTEXMAGIC_PURE"):
    try:
        from . import _ck  # type: ignore[attr-defined]

        _impl = _ck
    except ImportError:
        pass

BACKEND = _impl.BACKEND
min_code = _impl.min_code
search_exists = _impl.search_exists
search_count = _impl.search_count


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name."""
    out = {"python": pyk}
    try:
        from . import _ck  # type: ignore[attr-defined]

        out["cython"] = _ck
    except ImportError:
        pass
    return out
