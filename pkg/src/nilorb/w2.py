"""Exact quadratic generators on the type-B Cartan and their zero locus.

Works with a rank-r root system of type B realized in coordinates
eps_1..eps_r: simple roots eps_i - eps_(i+1) and eps_r, long roots
+-eps_i +- eps_j, short roots +-eps_i.  Polynomials live in the symmetric
algebra of the Cartan, written in the Chevalley coroot variables
h_1..h_r; evaluating h_i at a weight returns that weight's i-th
fundamental-weight coordinate.

The generator set w2_generators(r) spans a distinguished r(r-1)/2
dimensional space of homogeneous quadratics whose common zero locus on
the Cartan is exactly the union of the coordinate lines C.eps_i.  Base
case r = 3:

    p1 = h1*h3,  p2 = (2*h2 + h3)*h3,  p3 = (h1 + h2)*h2 + h2*h3/2.

For r >= 4 the set consists of h1*h_(j+2) for j = 1..r-2, the rank-(r-1)
generators re-indexed onto h2..h_r, and one closing element constructed
from coroot-evaluation forms:

    q1 - h1 * t,   q1 = <eps1+eps3 coroot> * <eps2+eps4 coroot>,
                   t  = <eps3+eps4 coroot> = h3 + 2h4 + ... + 2h_(r-1) + h_r.

In eps-coordinates the closing element reads
(a1+a3)(a2+a4) - (a1-a2)(a3+a4), which visibly kills every axis.

All arithmetic is exact rational; vanishing is decided, never
approximated.  Everything is pure and thread-safe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

RationalLike = Fraction | int | str


def _frac(x: RationalLike) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True)
class CartanPoint:
    """A Cartan element in either fundamental-weight or eps coordinates."""

    rank: int
    coords: tuple[Fraction, ...]
    basis: str  # "omega" | "eps"

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        if self.basis not in ("omega", "eps"):
            raise ValueError(f"basis must be 'omega' or 'eps', got {self.basis!r}")
        coords = tuple(_frac(c) for c in self.coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @staticmethod
    def omega(coords: Sequence[RationalLike]) -> "CartanPoint":
        return CartanPoint(len(coords), tuple(Fraction(c) for c in coords), "omega")

    @staticmethod
    def eps(coords: Sequence[RationalLike]) -> "CartanPoint":
        return CartanPoint(len(coords), tuple(Fraction(c) for c in coords), "eps")

    def to_eps(self) -> "CartanPoint":
        """a_i = l_i + l_(i+1) + ... + l_(r-1) + l_r / 2."""
        if self.basis == "eps":
            return self
        lam = self.coords
        r = self.rank
        half_last = lam[r - 1] / 2
        acc = half_last
        out = [Fraction(0)] * r
        out[r - 1] = half_last
        for i in range(r - 2, -1, -1):
            acc += lam[i]
            out[i] = acc
        return CartanPoint(r, tuple(out), "eps")

    def to_omega(self) -> "CartanPoint":
        """l_i = a_i - a_(i+1) for i < r, l_r = 2 a_r."""
        if self.basis == "omega":
            return self
        a = self.coords
        r = self.rank
        out = [a[i] - a[i + 1] for i in range(r - 1)] + [2 * a[r - 1]]
        return CartanPoint(r, tuple(out), "omega")


def omega_to_eps(point: CartanPoint) -> CartanPoint:
    return point.to_eps()


def eps_to_omega(point: CartanPoint) -> CartanPoint:
    return point.to_omega()


@dataclass(frozen=True)
class QuadPoly:
    """Homogeneous quadratic in h_1..h_rank with exact rational coefficients.

    Terms are stored as ((i, j), c) with 1 <= i <= j <= rank, meaning
    c * h_i * h_j; the term list is sorted, so equal polynomials have
    identical representations.
    """

    rank: int
    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = {}
        for (i, j), c in self.terms:
            if not (1 <= i <= j <= self.rank):
                raise ValueError(f"bad variable pair ({i}, {j}) for rank {self.rank}")
            c = _frac(c)
            if c:
                cleaned[(i, j)] = cleaned.get((i, j), Fraction(0)) + c
        object.__setattr__(
            self,
            "terms",
            tuple(sorted((k, v) for k, v in cleaned.items() if v)),
        )

    def coefficient(self, i: int, j: int) -> Fraction:
        key = (min(i, j), max(i, j))
        for k, v in self.terms:
            if k == key:
                return v
        return Fraction(0)

    def evaluate(self, point: CartanPoint) -> Fraction:
        if point.rank != self.rank:
            raise ValueError(f"rank mismatch: poly {self.rank}, point {point.rank}")
        lam = point.to_omega().coords
        return sum((c * lam[i - 1] * lam[j - 1] for (i, j), c in self.terms), Fraction(0))

    def shift(self) -> "QuadPoly":
        """Re-index h_i -> h_(i+1), raising the rank by one."""
        return QuadPoly(
            self.rank + 1, tuple(((i + 1, j + 1), c) for (i, j), c in self.terms)
        )

    def __sub__(self, other: "QuadPoly") -> "QuadPoly":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return QuadPoly(self.rank, self.terms + tuple((k, -c) for k, c in other.terms))

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [[i, j, str(c)] for (i, j), c in self.terms],
        }


def _product(rank: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> QuadPoly:
    """Product of two linear forms given by h-coordinate vectors."""
    terms = []
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            c = u[i - 1] * v[j - 1] if i == j else u[i - 1] * v[j - 1] + u[j - 1] * v[i - 1]
            if c:
                terms.append(((i, j), c))
    return QuadPoly(rank, tuple(terms))


def _monomial(rank: int, i: int, j: int, c: RationalLike = 1) -> QuadPoly:
    return QuadPoly(rank, (((min(i, j), max(i, j)), _frac(c)),))


def _coroot_form(rank: int, i: int, j: int) -> list[Fraction]:
    """The coroot of the long root eps_i + eps_j as a vector in h-coordinates.

    H_k (dual to eps_k) expands as h_k + ... + h_(r-1) + h_r/2.
    """
    out = [Fraction(0)] * rank
    for idx in (i, j):
        for k in range(idx, rank):
            out[k - 1] += 1
        out[rank - 1] += Fraction(1, 2)
    return out


@lru_cache(maxsize=None)
def w2_generators(rank: int) -> tuple[QuadPoly, ...]:
    """The r(r-1)/2 quadratic generators, built by the rank recursion."""
    if rank < 3:
        raise ValueError("rank must be at least 3")
    if rank == 3:
        p1 = _monomial(3, 1, 3)
        p2 = QuadPoly(3, (((2, 3), Fraction(2)), ((3, 3), Fraction(1))))
        p3 = QuadPoly(
            3, (((1, 2), Fraction(1)), ((2, 2), Fraction(1)), ((2, 3), Fraction(1, 2)))
        )
        return (p1, p2, p3)
    gens = [_monomial(rank, 1, j + 2) for j in range(1, rank - 1)]
    gens.extend(p.shift() for p in w2_generators(rank - 1))
    q1 = _product(rank, _coroot_form(rank, 1, 3), _coroot_form(rank, 2, 4))
    theta2 = _coroot_form(rank, 3, 4)
    h1 = [Fraction(0)] * rank
    h1[0] = Fraction(1)
    closing = q1 - _product(rank, h1, theta2)
    gens.append(closing)
    expected = rank * (rank - 1) // 2
    assert len(gens) == expected, (len(gens), expected)
    return tuple(gens)


def vanishes_at(gens: Iterable[QuadPoly], point: CartanPoint) -> bool:
    """Whether every generator evaluates to exactly zero at the point."""
    return all(g.evaluate(point) == 0 for g in gens)


def eps_line_membership(point: CartanPoint) -> int | None:
    """Axis index (1-based) when the point lies on a coordinate line C.eps_i.

    The zero point returns 0 (it lies on every axis); points with two or
    more nonzero eps-coordinates return None.
    """
    coords = point.to_eps().coords
    nonzero = [i + 1 for i, a in enumerate(coords) if a != 0]
    if not nonzero:
        return 0
    if len(nonzero) == 1:
        return nonzero[0]
    return None


def offaxis_vanishing_points(rank: int, count: int, seed: int) -> list[CartanPoint]:
    """Seeded sample of off-axis rational points that unexpectedly vanish.

    Samples integer eps-coordinate vectors with at least two nonzero
    entries (vanishing is homogeneous, so integer points represent every
    rational line).  An empty result is the expected outcome: no point
    off the axes lies in the zero locus.
    """
    if count < 1:
        raise ValueError("count must be positive")
    rng = random.Random(seed)
    gens = w2_generators(rank)
    bad = []
    for _ in range(count):
        while True:
            coords = [rng.randint(-9, 9) for _ in range(rank)]
            if sum(1 for c in coords if c) >= 2:
                break
        point = CartanPoint.eps(coords)
        if vanishes_at(gens, point):
            bad.append(point)
    return bad
