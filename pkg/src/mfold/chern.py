"""Euler-class count of curves in a linear system with an m-fold point.

Works in ``H^*(P^D x P^2) = Z[y, a] / (y^(D+1), a^3)`` where ``D = d(d+3)/2``
is the dimension of the space of degree-``d`` curves, ``y`` its hyperplane
class and ``a`` the hyperplane class of the plane.  The locus of pairs
(curve, point) where all partial derivatives of order ``< m`` vanish is the
product of the Euler classes of the jet bundles ``V_k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

A_TOP = 2


def linear_system_dim(d: int) -> int:
    return d * (d + 3) // 2


@dataclass(frozen=True)
class CohomClass:
    """Truncated polynomial ``sum c[i, j] y^i a^j`` with ``i <= dim``, ``j <= 2``."""

    dim: int
    coeffs: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {
            (i, j): c
            for (i, j), c in self.coeffs.items()
            if c != 0 and 0 <= i <= self.dim and 0 <= j <= A_TOP
        }
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def constant(cls, dim: int, c: int = 1) -> "CohomClass":
        return cls(dim, {(0, 0): c})

    @classmethod
    def y(cls, dim: int) -> "CohomClass":
        return cls(dim, {(1, 0): 1})

    @classmethod
    def a(cls, dim: int) -> "CohomClass":
        return cls(dim, {(0, 1): 1})

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def degrees(self) -> set[int]:
        return {i + j for i, j in self.coeffs}

    def _check(self, other: "CohomClass") -> None:
        if self.dim != other.dim:
            raise ValueError(f"mismatched linear system dimensions {self.dim} != {other.dim}")

    def _coerce(self, other) -> "CohomClass":
        if isinstance(other, int):
            return CohomClass.constant(self.dim, other)
        self._check(other)
        return other

    def __add__(self, other) -> "CohomClass":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return CohomClass(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> "CohomClass":
        return CohomClass(self.dim, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "CohomClass":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CohomClass":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CohomClass":
        if isinstance(other, int):
            return CohomClass(self.dim, {k: c * other for k, c in self.coeffs.items()})
        return ring_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CohomClass":
        if k < 0:
            raise ValueError("negative power")
        out = CohomClass.constant(self.dim)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomClass):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.coeffs.items())))


def ring_mul(p: CohomClass, q: CohomClass) -> CohomClass:
    """Product with ``y^(dim+1) = a^3 = 0`` applied as terms are formed."""
    p._check(q)
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in p.coeffs.items():
        for (i2, j2), c2 in q.coeffs.items():
            i, j = i1 + i2, j1 + j2
            if i > p.dim or j > A_TOP:
                continue
            out[(i, j)] = out.get((i, j), 0) + c1 * c2
    return CohomClass(p.dim, out)


def _sym_power_e2(k: int) -> tuple[int, int]:
    """Return ``(A, B)`` with ``e2`` of the roots ``i*x1 + (k-i)*x2`` equal to
    ``A*(x1^2 + x2^2) + B*x1*x2``."""
    # sum_{i<j} (i x1 + (k-i) x2)(j x1 + (k-j) x2)
    #   = sum_{i<j} [ i j x1^2 + (k-i)(k-j) x2^2 + (i(k-j) + j(k-i)) x1 x2 ]
    # the x1^2 and x2^2 sums agree by i -> k - i symmetry.
    s1 = k * (k + 1) // 2
    s2 = k * (k + 1) * (2 * k + 1) // 6
    a_coef = (s1 * s1 - s2) // 2  # sum_{i<j} i*j
    # sum_{i<j} i(k-j) + j(k-i) = sum_{i != j} i(k-j) = (sum i)(sum (k-j)) - sum i(k-i)
    b_coef = s1 * s1 - (k * s1 - s2)
    return a_coef, b_coef


def euler_V(k: int, d: int) -> CohomClass:
    """Euler class of ``V_k = O_D(1) (x) Sym^k(T*P^2) (x) O(d)``.

    The Chern roots of ``T*P^2`` satisfy ``x1 + x2 = -3a`` and
    ``x1 x2 = 3a^2``; since ``a^3 = 0`` only the first two elementary
    symmetric functions of the roots of ``Sym^k`` survive.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    dim = linear_system_dim(d)
    a = CohomClass.a(dim)
    c1 = CohomClass.y(dim) + d * a
    alpha1 = -3 * a
    beta2 = 3 * (a * a)
    e1 = (k * (k + 1) // 2) * alpha1
    A, B = _sym_power_e2(k)
    # x1^2 + x2^2 = alpha1^2 - 2 beta2
    e2 = A * (alpha1 * alpha1 - 2 * beta2) + B * beta2
    out = c1 ** (k + 1) + e1 * c1 ** k
    if k >= 1:
        out = out + e2 * c1 ** (k - 1)
    return out


def s_class(m: int, d: int) -> CohomClass:
    """Class of the locus where ``f`` vanishes to order ``m`` at the point."""
    if m < 2:
        raise ValueError("m must be at least 2")
    out = CohomClass.constant(linear_system_dim(d))
    for k in range(m):
        out = out * euler_V(k, d)
    return out


def codim_j(d: int, m: int) -> int:
    if m < 2:
        raise ValueError("m must be at least 2")
    twice = d * (d + 3) - (m * m + m - 4)
    return twice // 2


def fixed_singularity_count(d: int, m: int, theta: int) -> int:
    """Curves of degree ``d`` through ``j - theta`` generic points with an
    ``m``-fold point on a generic cycle of class ``a^theta``.

    Counts every curve in the linear system, rational or not; it agrees with
    the rational count only when ``m = d - 1``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if theta not in (0, 1, 2):
        raise ValueError("theta must be 0, 1 or 2")
    dim = linear_system_dim(d)
    npts = codim_j(d, m) - theta
    if npts < 0:
        raise ValueError(f"no room for point conditions: j - theta = {npts}")
    y = CohomClass.y(dim)
    a = CohomClass.a(dim)
    cls = s_class(m, d) * y ** npts * a ** theta
    return cls.coefficient(dim, A_TOP)
