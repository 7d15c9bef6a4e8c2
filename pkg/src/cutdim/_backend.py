"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when
``CUTDIM_PURE_PYTHON=1`` is set, the pure-Python kernels take over.  Both
return identical results; the wrappers here decide when int64 is safe.
"""

from __future__ import annotations

import os

from . import _pykernels

_INT64_SAFE = 1 << 62

compiled = None
if os.environ.get("CUTDIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

kernels = compiled if compiled is not None else _pykernels
BACKEND: str = kernels.NAME


def available_backends() -> dict:
    out = {"python": _pykernels}
    if compiled is not None:
        out["compiled"] = compiled
    return out


def cut_weights(n: int, w: list[int], backend=None) -> list[int]:
    impl = backend or kernels
    if impl is not _pykernels and (n > 62 or sum(abs(x) for x in w) >= _INT64_SAFE):
        impl = _pykernels
    return impl.cut_weights(n, w)


def crossing_matrix(n: int, masks: list[int], cols: list[int], backend=None) -> list[list[int]]:
    impl = backend or kernels
    if impl is not _pykernels and n > 63:
        impl = _pykernels
    return impl.crossing_matrix(n, masks, cols)


def rank_int(rows: list[list[int]], backend=None) -> int:
    return (backend or kernels).rank_int(rows)
