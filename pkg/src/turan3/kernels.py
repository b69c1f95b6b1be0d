"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The active backend is chosen once at import.  Set ``TURAN3_KERNELS=pure`` to
force the fallback, ``TURAN3_KERNELS=fast`` to require the extension (raising
if it did not build), or leave unset/``auto`` to prefer the extension.
All entry points take adjacency as per-vertex Python int bit rows; packing
for the compiled side happens here.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

try:  # pragma: no cover - depends on the build environment
    from . import _fastcore
except ImportError:  # pragma: no cover
    _fastcore = None

_MODE = os.environ.get("TURAN3_KERNELS", "auto").lower()
if _MODE == "fast" and _fastcore is None:
    raise ImportError("TURAN3_KERNELS=fast but the compiled extension is missing")
_ACTIVE = _fastcore if (_fastcore is not None and _MODE != "pure") else _kernels_py


def backend_name() -> str:
    """Name of the active backend: 'fast' or 'pure'."""
    return _ACTIVE.BACKEND


def have_fast() -> bool:
    return _fastcore is not None


def pack_rows(rows: Sequence[int], n: int):
    """Pack int bit rows into an (n, words) uint64 array for the fast backend."""
    import numpy as np

    words = max((n + 63) // 64, 1)
    arr = np.zeros((n, words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i in range(n):
        r = rows[i]
        j = 0
        while r:
            arr[i, j] = r & mask
            r >>= 64
            j += 1
    return arr


def _dispatch(fname: str, rows: Sequence[int], n: int):
    if _ACTIVE is _kernels_py:
        return getattr(_kernels_py, fname)(rows, n)
    return getattr(_fastcore, fname)(pack_rows(rows, n), n)


def triangle_count(rows: Sequence[int], n: int) -> int:
    return _dispatch("triangle_count", rows, n)


def triangle_list(rows: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    return _dispatch("triangle_list", rows, n)


def max_common_neighbors_3(rows: Sequence[int], n: int):
    return _dispatch("max_common_neighbors_3", rows, n)
