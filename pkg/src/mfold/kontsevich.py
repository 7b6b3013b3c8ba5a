"""Kontsevich's classical count of rational plane curves.

Kept deliberately separate from :mod:`mfold.recursion` so the two can be
compared against each other.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def _n(d: int) -> int:
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += _n(d1) * _n(d2) * (
            d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
        )
    return total


def n_plane(d: int) -> int:
    """Number of rational degree-``d`` plane curves through ``3d - 1`` generic points."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"degree must be a positive integer, got {d!r}")
    for k in range(1, d):  # warm bottom-up, keeps the call stack shallow
        _n(k)
    return _n(d)
