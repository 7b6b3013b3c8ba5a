"""Curve classes ``dL - mE`` on the plane blown up at one point."""
from __future__ import annotations

from typing import Iterator, NamedTuple


class CurveClass(NamedTuple):
    """The class ``d*L - m*E``; any integer pair is allowed."""

    d: int
    m: int

    def __add__(self, other):  # type: ignore[override]
        return CurveClass(self.d + other.d, self.m + other.m)

    def __sub__(self, other):
        return CurveClass(self.d - other.d, self.m - other.m)

    def is_zero(self) -> bool:
        return self.d == 0 and self.m == 0

    def __str__(self) -> str:
        return f"({self.d},{self.m})"


LINE = CurveClass(1, 0)
EXCEPTIONAL = CurveClass(0, -1)


def as_class(a) -> CurveClass:
    if isinstance(a, CurveClass):
        return a
    d, m = a
    return CurveClass(int(d), int(m))


def require_nonzero(a: CurveClass) -> CurveClass:
    a = as_class(a)
    if a.is_zero():
        raise ValueError("curve class (0,0) is not a moduli class")
    return a


def pairing(a1, a2) -> int:
    """Intersection pairing ``(d1,m1).(d2,m2) = d1*d2 - m1*m2``."""
    d1, m1 = a1
    d2, m2 = a2
    return d1 * d2 - m1 * m2


def line_degree(a) -> int:
    return pairing(a, LINE)


def split_range(a, m_margin: int = 1) -> Iterator[tuple[CurveClass, CurveClass]]:
    """Yield the splits ``a = a1 + a2`` that can contribute to the recursion.

    Both parts are nonzero, ``0 <= d1 <= d`` and
    ``-m_margin <= m1 <= m + m_margin``. Splits outside the default window
    (``m_margin=1``) always contribute zero; larger margins exist only to
    check that claim.
    """
    a = require_nonzero(a)
    for d1 in range(0, a.d + 1):
        for m1 in range(-m_margin, a.m + m_margin + 1):
            a1 = CurveClass(d1, m1)
            a2 = a - a1
            if a1.is_zero() or a2.is_zero():
                continue
            yield a1, a2
