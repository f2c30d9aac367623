"""Propagation backend selection.

The compiled extension is preferred when built; the pure Python engine is
the fallback. Set POWERDOM_PURE=1 to force the fallback (used by the
benchmark and for debugging).
"""

import os

from . import _pycore

try:
    from . import _core as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("POWERDOM_PURE"):
    PropagationCore = _compiled.PropagationCore
    BACKEND = "compiled"
else:
    PropagationCore = _pycore.PropagationCore
    BACKEND = "pure"


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _compiled is not None else ("pure",)
