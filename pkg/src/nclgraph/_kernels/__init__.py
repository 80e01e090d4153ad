"""Kernel backend selection.

The compiled Cython module is preferred when it imported cleanly and the
instance is small enough for its fixed-width masks; otherwise the
pure-Python twin runs.  Both backends implement identical algorithms and
produce identical outputs (including witness masks), so selection is purely
a speed decision.  Set ``NCLGRAPH_PURE=1`` to force the pure backend.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import pure as _pure

_fast = None
if not os.environ.get("NCLGRAPH_PURE"):
    try:
        from . import _speedups as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "pure" if _fast is None else "compiled"

# Mask-width limits of the compiled kernels.
_NCL_FAST_MAX = 28
_MASK_FAST_MAX = 64


def backend_name() -> str:
    return BACKEND


def ncl_subset_table(closed: Sequence[int]) -> bytearray:
    if _fast is not None and len(closed) <= _NCL_FAST_MAX:
        return _fast.ncl_subset_table(closed)
    return _pure.ncl_subset_table(closed)


def max_clique(adj: Sequence[int]) -> int:
    if _fast is not None and len(adj) <= _MASK_FAST_MAX:
        return _fast.max_clique(adj)
    return _pure.max_clique(adj)


def chromatic_number(adj: Sequence[int]) -> int:
    if _fast is not None and len(adj) <= _MASK_FAST_MAX:
        return _fast.chromatic_number(adj)
    return _pure.chromatic_number(adj)
