"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``QXOR_PURE_PYTHON=1`` in the environment to force the fallback.
``backend_name`` reports which implementation is active.
"""

import os

from . import pure

_compiled = None
if os.environ.get("QXOR_PURE_PYTHON", "") != "1":
    try:
        from . import _gf2core as _compiled
    except ImportError:
        _compiled = None

backend_name = "cython" if _compiled is not None else "pure"
_impl = _compiled if _compiled is not None else pure

elim = _impl.elim
parity_forest_run = _impl.parity_forest_run


def available_backends() -> dict:
    """Importable kernel implementations, keyed by name."""
    out = {"pure": pure}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
