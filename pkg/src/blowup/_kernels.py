"""Kernel dispatch: compiled core when available, pure Python otherwise.

Set ``BLOWUP_PURE=1`` in the environment to force the fallback.  Graphs
beyond the compiled core's 512-vertex limit are routed to the fallback
transparently.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("BLOWUP_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

_C_LIMIT = 512


def _route(name):
    fast = getattr(_impl, name)
    slow = getattr(_pykernels, name)
    if fast is slow:
        return slow

    def dispatch(rows, n, *args):
        if n > _C_LIMIT:
            return slow(rows, n, *args)
        return fast(rows, n, *args)

    dispatch.__name__ = name
    return dispatch


triangle_total = _route("triangle_total")
triangle_per_vertex = _route("triangle_per_vertex")
c33_witness = _route("c33_witness")
c33_witness_touching = _route("c33_witness_touching")
p33_witness = _route("p33_witness")
p33_witness_touching = _route("p33_witness_touching")
