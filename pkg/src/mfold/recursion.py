"""Family version of Kontsevich's recursion on the one-point blow-up.

``N_alpha(r, theta)`` counts genus-zero stable maps in class
``alpha = dL - mE`` through ``r`` generic points, with the blown-up point
itself constrained to a generic cycle of codimension ``theta`` in the plane.
For ``theta = 0`` and ``r = 3d + 1 - m`` this is the number of rational
degree-``d`` curves with an ``m``-fold point through ``r`` points.

Every value is an exact Python integer.  Results are memoized per engine;
:class:`MemoStore` persists a memo to JSON.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Callable, NamedTuple

from .classes import CurveClass, as_class, pairing, require_nonzero, split_range

MEMO_VERSION = 1

# (d, m, r, theta) -> value
SEEDS: dict[tuple[int, int, int, int], int] = {
    (1, 0, 4, 0): 0,
    (1, 0, 3, 1): 0,
    (1, 1, 3, 0): 0,
    (1, 1, 2, 1): 1,
    # theta = 2: a line through two points, a line through the blown-up
    # point and one more, and the exceptional curve itself.
    (1, 0, 2, 2): 1,
    (1, 1, 1, 2): 1,
    (0, -1, 0, 2): 1,
}


class CountQuery(NamedTuple):
    alpha: CurveClass
    r: int
    theta: int

    @classmethod
    def make(cls, alpha, r: int, theta: int) -> "CountQuery":
        alpha = require_nonzero(as_class(alpha))
        if not isinstance(r, int) or not isinstance(theta, int):
            raise TypeError("r and theta must be integers")
        if r < 0:
            raise ValueError(f"r must be nonnegative, got {r}")
        if theta < 0:
            raise ValueError(f"theta must be nonnegative, got {theta}")
        return cls(alpha, r, theta)

    @classmethod
    def expected(cls, alpha, theta: int = 0) -> "CountQuery":
        """Query with ``r`` chosen so the dimension gate passes."""
        alpha = require_nonzero(as_class(alpha))
        r = 3 * alpha.d + 1 - alpha.m - theta
        if r < 0:
            raise ValueError(
                f"dimension gate gives r = 3d+1-m-theta = {r} < 0 for {alpha}, theta={theta}"
            )
        return cls.make(alpha, r, theta)

    def key(self) -> tuple[int, int, int, int]:
        return (self.alpha.d, self.alpha.m, self.r, self.theta)


def _gate(d: int, m: int, r: int, theta: int) -> bool:
    return r + theta == 3 * d + 1 - m


def dimension_gate(q: CountQuery) -> bool:
    """True iff ``r + theta == 3d + 1 - m``; otherwise the count is zero."""
    require_nonzero(q.alpha)
    return _gate(q.alpha.d, q.alpha.m, q.r, q.theta)


@dataclass
class MemoStore:
    """Exact values keyed by ``(d, m, r, theta)``."""

    entries: dict[tuple[int, int, int, int], int] = field(default_factory=dict)
    version: int = MEMO_VERSION

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key) -> bool:
        return key in self.entries

    def to_json(self) -> str:
        rows = [
            {"d": d, "m": m, "r": r, "theta": t, "count": str(v)}
            for (d, m, r, t), v in sorted(self.entries.items())
        ]
        return json.dumps({"version": self.version, "entries": rows}, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "MemoStore":
        data = json.loads(text)
        if not isinstance(data, dict) or data.get("version") != MEMO_VERSION:
            raise ValueError(f"unsupported memo version: {data.get('version') if isinstance(data, dict) else data!r}")
        store = cls()
        for row in data.get("entries", []):
            key = (int(row["d"]), int(row["m"]), int(row["r"]), int(row["theta"]))
            value = int(row["count"])
            if key in store.entries and store.entries[key] != value:
                raise ValueError(f"conflicting memo entries for {key}")
            store.entries[key] = value
        return store

    def save(self, path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(self.to_json(), encoding="utf-8")
        tmp.replace(path)

    @classmethod
    def load(cls, path) -> "MemoStore":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def mismatches(self) -> list[tuple[tuple[int, int, int, int], int, int]]:
        """Recompute every stored entry from scratch; return ``(key, stored, fresh)`` disagreements."""
        fresh = FamilyRecursion()
        bad = []
        for key, stored in sorted(self.entries.items()):
            d, m, r, t = key
            value = fresh.count((d, m), r, t)
            if value != stored:
                bad.append((key, stored, value))
        return bad


class FamilyRecursion:
    """Evaluator for ``N_alpha(r, theta)``.

    Parameters
    ----------
    memo : MemoStore, optional
        Shared store of computed values. A fresh one is created by default.
    use_memo : bool
        When False nothing is cached; the result is identical but the cost
        grows exponentially with the degree.
    seeds : dict, optional
        Override of the small seed values (used to test failure detection).
    m_margin : int
        Window of the split enumeration, see :func:`split_range`.
    trace : callable, optional
        Called as ``trace(parent, child_r)`` for every recursive lookup.
    """

    def __init__(
        self,
        memo: MemoStore | None = None,
        use_memo: bool = True,
        seeds: dict[tuple[int, int, int, int], int] | None = None,
        m_margin: int = 1,
        trace: Callable[[CountQuery, int], None] | None = None,
    ):
        self.memo = memo if memo is not None else MemoStore()
        self.use_memo = use_memo
        self.seeds = dict(SEEDS if seeds is None else seeds)
        self.m_margin = m_margin
        self.trace = trace

    def base_case(self, q: CountQuery) -> int | None:
        d, m = require_nonzero(q.alpha)
        r, theta = q.r, q.theta
        if not _gate(d, m, r, theta):
            return 0
        if theta >= 3 or d < 0:
            return 0
        if m < 0 and (d, m, theta) != (0, -1, 2):
            return 0
        if d >= 2 and m >= d:
            return 0
        if d == 0 and m >= 1:
            return 0
        if d == 1 and m >= 2:
            return 0
        return self.seeds.get((d, m, r, theta))

    def count(self, alpha, r: int, theta: int = 0) -> int:
        return self._n(CountQuery.make(alpha, r, theta))

    def boundary_B(self, a1, a2, r1: int, r2: int, theta: int) -> int:
        a1 = require_nonzero(as_class(a1))
        a2 = require_nonzero(as_class(a2))
        if min(r1, r2, theta) < 0:
            raise ValueError("r1, r2 and theta must be nonnegative")
        return self._boundary(a1, a2, r1, r2, theta)

    def blowup_gw(self, alpha) -> int:
        """Genus-zero count on the blow-up in class ``dL - mE`` through ``3d-1-m`` points."""
        alpha = require_nonzero(as_class(alpha))
        r = 3 * alpha.d - 1 - alpha.m
        if r < 0:
            return 0
        return self.count(alpha, r, 2)

    def _n(self, q: CountQuery) -> int:
        d, m = q.alpha
        # cheap rejection before touching the memo
        if not _gate(d, m, q.r, q.theta):
            return 0
        key = (d, m, q.r, q.theta)
        if self.use_memo:
            hit = self.memo.entries.get(key)
            if hit is not None:
                return hit
        value = self.base_case(q)
        if value is None:
            value = self._recurse(q)
        if self.use_memo:
            self.memo.entries[key] = value
        return value

    def _boundary(self, a1: CurveClass, a2: CurveClass, r1: int, r2: int, theta: int) -> int:
        n = self._n
        return (
            n(CountQuery(a1, r1, theta + 2)) * n(CountQuery(a2, r2, 0))
            + n(CountQuery(a1, r1, theta + 1)) * n(CountQuery(a2, r2, 1))
            + n(CountQuery(a1, r1, theta)) * n(CountQuery(a2, r2, 2))
        )

    def _recurse(self, q: CountQuery) -> int:
        alpha, r, theta = q
        if r < 3:
            raise RuntimeError(f"no base case and r < 3 for {q}")
        n = r - 3
        total = 0
        for a1, a2 in split_range(alpha, self.m_margin):
            a1a2 = pairing(a1, a2)
            l1, l2 = a1.d, a2.d
            if a1a2 == 0 or l1 == 0:
                continue
            # N_{a1}(s, t) vanishes unless s = g1 - t, and t ranges over
            # theta..theta+2, so only a handful of r1 can contribute.
            g1 = 3 * a1.d + 1 - a1.m - theta
            lo = max(0, g1 - 3)
            hi = min(n, g1)
            for r1 in range(lo, hi + 1):
                r2 = n - r1
                if self.trace is not None:
                    for child_r in (r1 + 1, r2 + 1, r1, r2 + 2):
                        self.trace(q, child_r)
                mid = self._boundary(a1, a2, r1 + 1, r2 + 1, theta)
                end = self._boundary(a1, a2, r1, r2 + 2, theta)
                if mid == 0 and end == 0:
                    continue
                total += comb(n, r1) * a1a2 * l1 * (mid * l2 - end * l1)
        return total


_default = FamilyRecursion()


def default_engine() -> FamilyRecursion:
    return _default


def base_case(q: CountQuery) -> int | None:
    return _default.base_case(q)


def boundary_B(a1, a2, r1: int, r2: int, theta: int) -> int:
    return _default.boundary_B(a1, a2, r1, r2, theta)


def count(alpha, r: int, theta: int = 0) -> int:
    """Exact ``N_alpha(r, theta)`` using the shared process-wide memo."""
    return _default.count(alpha, r, theta)


def blowup_gw(alpha) -> int:
    return _default.blowup_gw(alpha)
