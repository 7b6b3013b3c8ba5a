"""Golden tables and cross-oracle identities.

Each golden row is stored as ``(d, m, theta, r) -> expected`` so a failing
cell points to exactly one printed value.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .chern import fixed_singularity_count
from .kontsevich import n_plane
from .recursion import FamilyRecursion, _gate, default_engine

Row = tuple[tuple[int, int, int, int], int]

GOLDEN: dict[str, list[Row]] = {
    "kontsevich": [
        ((3, 0, 2, 8), 12),
        ((4, 0, 2, 11), 620),
        ((5, 0, 2, 14), 87304),
        ((6, 0, 2, 17), 26312976),
        ((7, 0, 2, 20), 14616808192),
        ((8, 0, 2, 23), 13525751027392),
    ],
    "nodes-free": [
        ((3, 2, 0, 8), 12),
        ((4, 2, 0, 11), 1860),
        ((5, 2, 0, 14), 523824),
        ((6, 2, 0, 17), 263129760),
        ((7, 2, 0, 20), 219252122880),
        ((8, 2, 0, 23), 284040771575232),
    ],
    "nodes-line": [
        ((3, 2, 1, 7), 6),
        ((4, 2, 1, 10), 768),
        ((5, 2, 1, 13), 181320),
        ((6, 2, 1, 16), 78076800),
        ((7, 2, 1, 19), 56831124000),
        ((8, 2, 1, 22), 65305557682176),
    ],
    "nodes-point": [
        ((3, 2, 2, 6), 1),
        ((4, 2, 2, 9), 96),
        ((5, 2, 2, 12), 18132),
        ((6, 2, 2, 15), 6506400),
        ((7, 2, 2, 18), 4059366000),
        ((8, 2, 2, 21), 4081597355136),
    ],
    "triple-free": [
        ((4, 3, 0, 10), 60),
        ((5, 3, 0, 13), 56400),
        ((6, 3, 0, 16), 49177440),
        ((7, 3, 0, 19), 56784765120),
        ((8, 3, 0, 22), 91466185097280),
    ],
    "triple-line": [
        ((4, 3, 1, 9), 12),
        ((5, 3, 1, 12), 9600),
        ((6, 3, 1, 15), 7221096),
        ((7, 3, 1, 18), 7307731200),
        ((8, 3, 1, 21), 10461017642880),
    ],
    "triple-point": [
        ((4, 3, 2, 8), 1),
        ((5, 3, 2, 11), 640),
        ((6, 3, 2, 14), 401172),
        ((7, 3, 2, 17), 347987200),
        ((8, 3, 2, 20), 435875735120),
    ],
    "mfold-theta0": [
        ((4, 3, 0, 10), 60),
        ((5, 4, 0, 12), 180),
        ((6, 5, 0, 14), 420),
        ((7, 6, 0, 16), 840),
        ((8, 7, 0, 18), 1512),
        ((9, 8, 0, 20), 2520),
    ],
    "mfold-theta1": [
        ((4, 3, 1, 9), 12),
        ((5, 4, 1, 11), 20),
        ((6, 5, 1, 13), 30),
        ((7, 6, 1, 15), 42),
        ((8, 7, 1, 17), 56),
        ((9, 8, 1, 19), 72),
    ],
    "mfold-theta2": [
        ((4, 3, 2, 8), 1),
        ((5, 4, 2, 10), 1),
        ((6, 5, 2, 12), 1),
        ((7, 6, 2, 14), 1),
        ((8, 7, 2, 16), 1),
        ((9, 8, 2, 18), 1),
    ],
}

TABLE_NAMES = tuple(GOLDEN)
MAX_IDENTITY_DEGREE = 10


@dataclass
class Check:
    name: str
    key: tuple[int, ...]
    expected: int
    computed: int

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def as_dict(self) -> dict:
        out = asdict(self)
        out["key"] = list(self.key)
        out["expected"] = str(self.expected)
        out["computed"] = str(self.computed)
        out["passed"] = self.passed
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def run_table(name: str, engine: FamilyRecursion | None = None) -> Report:
    """Recompute one golden table with the family recursion."""
    if name not in GOLDEN:
        raise KeyError(f"unknown table {name!r}; known: {', '.join(TABLE_NAMES)}")
    engine = engine or default_engine()
    report = Report(name)
    for (d, m, theta, r), expected in GOLDEN[name]:
        report.checks.append(Check(name, (d, m, theta, r), expected, engine.count((d, m), r, theta)))
    return report


def run_identities(max_d: int = 8, engine: FamilyRecursion | None = None) -> Report:
    """Node identity, plane reduction and Euler-class agreement up to ``max_d``."""
    if max_d > MAX_IDENTITY_DEGREE:
        raise ValueError(f"max_d is capped at {MAX_IDENTITY_DEGREE}")
    engine = engine or default_engine()
    report = Report(f"identities (max_d={max_d})")
    for d in range(3, max_d + 1):
        nodes = (d - 1) * (d - 2) // 2
        report.checks.append(
            Check("node-identity", (d,), nodes * n_plane(d), engine.count((d, 2), 3 * d - 1, 0))
        )
    for d in range(1, max_d + 1):
        report.checks.append(Check("plane-reduction", (d,), n_plane(d), engine.blowup_gw((d, 0))))
    for d in range(4, min(max_d + 1, 9) + 1):
        for theta in (0, 1, 2):
            report.checks.append(
                Check(
                    "chern-agreement",
                    (d, d - 1, theta),
                    fixed_singularity_count(d, d - 1, theta),
                    engine.count((d, d - 1), 2 * d + 2 - theta, theta),
                )
            )
    return report


def verify(deep: bool = False, engine: FamilyRecursion | None = None) -> list[Report]:
    reports = [run_table(name, engine) for name in TABLE_NAMES]
    reports.append(run_identities(MAX_IDENTITY_DEGREE if deep else 8, engine))
    return reports


def golden_rows_pass_gate() -> bool:
    return all(_gate(d, m, r, t) for rows in GOLDEN.values() for (d, m, t, r), _ in rows)
