"""Integer partitions and the combinatorics of their dominance order.

This module is the combinatorial bedrock of the package: canonical
partitions, the orthogonal/symplectic validity rules, dominance
comparisons, collapses, enumeration and covering relations (minimal
degenerations).

Conventions:

* partitions are canonical -- weakly decreasing positive parts, no zeros;
* ``eps`` is ``+1`` (orthogonal rule: every even part value has even
  multiplicity) or ``-1`` (symplectic rule: every odd part value has
  even multiplicity);
* every listing is returned in decreasing lexicographic order, so all
  outputs are deterministic and golden-testable.

All functions are pure and all values immutable; everything here is safe
to call concurrently.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator

ORTHOGONAL = 1
SYMPLECTIC = -1

Eps = int


def check_eps(eps: int) -> int:
    if eps not in (ORTHOGONAL, SYMPLECTIC):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")
    return eps


@dataclass(frozen=True)
class Partition:
    """A partition in canonical form: weakly decreasing positive parts.

    The constructor accepts any iterable of integers, drops zeros and
    re-sorts, so two equal partitions always have identical part tuples.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cleaned = sorted((int(p) for p in self.parts if int(p) != 0), reverse=True)
        if cleaned and cleaned[-1] < 0:
            raise ValueError(f"partition parts must be positive, got {cleaned}")
        object.__setattr__(self, "parts", tuple(cleaned))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), reading missing parts as 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self.parts if p == value)

    def dual(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every leading partial sum is at least other's.

        Only defined between partitions of the same total.
        """
        if self.n != other.n:
            raise ValueError(
                f"dominance compares partitions of equal totals: {self.n} != {other.n}"
            )
        a = b = 0
        for x, y in zip_longest(self.parts, other.parts, fillvalue=0):
            a += x
            b += y
            if a < b:
                return False
        return True

    def is_valid(self, eps: int) -> bool:
        """Membership in the eps-validity class (orthogonal or symplectic)."""
        check_eps(eps)
        want = 0 if eps == ORTHOGONAL else 1
        counts = Counter(self.parts)
        return all(c % 2 == 0 for v, c in counts.items() if v % 2 == want)

    def as_list(self) -> list[int]:
        return list(self.parts)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; ``k^m`` expands to m copies of k.

    Output is canonical (sorted decreasing); exponent notation is accepted
    on input but never emitted on output.
    """
    if text is None or not text.strip():
        raise ValueError("empty partition text")
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty token in partition text {text!r}")
        if "^" in token:
            base_s, _, exp_s = token.partition("^")
            base = _parse_int(base_s, text)
            exp = _parse_int(exp_s, text)
            if exp < 1:
                raise ValueError(f"exponent must be >= 1 in token {token!r}")
            if base < 1:
                raise ValueError(f"parts must be positive, got {base} in {text!r}")
            parts.extend([base] * exp)
        else:
            value = _parse_int(token, text)
            if value < 1:
                raise ValueError(f"parts must be positive, got {value} in {text!r}")
            parts.append(value)
    return Partition(parts)


def _parse_int(token: str, text: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise ValueError(f"non-integer token {token.strip()!r} in partition text {text!r}") from None


def is_valid_eps(lam: Partition, eps: int) -> bool:
    return lam.is_valid(eps)


def dual(lam: Partition) -> Partition:
    return lam.dual()


def dominates(lam: Partition, eta: Partition) -> bool:
    return lam.dominates(eta)


def strictly_dominates(lam: Partition, eta: Partition) -> bool:
    return lam != eta and lam.dominates(eta)


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for head in range(min(n, maxpart), 0, -1):
        for tail in _partitions_bounded(n - head, head):
            out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, decreasing lexicographically."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


@lru_cache(maxsize=None)
def enumerate_eps(n: int, eps: int) -> tuple[Partition, ...]:
    """All eps-valid partitions of n, decreasing lexicographically.

    Empty for eps=-1 with odd n (there is no symplectic partition of an
    odd number); that case is an error only at the collapse level.
    """
    check_eps(eps)
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(p for p in all_partitions(n) if p.is_valid(eps))


def collapse(lam: Partition, eps: int) -> Partition:
    """Largest eps-valid partition dominated by ``lam``.

    Greedy repair: take the largest violating part value, move one box
    from its last row down to the first row that can absorb it, repeat.
    The brute-force maximality oracle in the test suite cross-checks this
    for all small totals.
    """
    check_eps(eps)
    if eps == SYMPLECTIC and lam.n % 2 == 1:
        raise ValueError(f"no symplectic partition of odd n = {lam.n}")
    want = 0 if eps == ORTHOGONAL else 1
    parts = list(lam.parts)
    for _ in range(lam.n * lam.n + 2):
        counts = Counter(parts)
        bad = [v for v, c in counts.items() if c % 2 == 1 and v % 2 == want]
        if not bad:
            return Partition(parts)
        v = max(bad)
        i = max(k for k, p in enumerate(parts) if p == v)
        parts[i] -= 1
        for j in range(i + 1, len(parts)):
            if parts[j] < v - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
    raise AssertionError("collapse did not terminate")  # pragma: no cover


@lru_cache(maxsize=None)
def covers(lam: Partition) -> tuple[Partition, ...]:
    """Partitions covered by ``lam`` in the dominance order on all of P(n).

    One-box moves: to the adjacent row when the gap is at least 2, or past
    a plateau of height v-1 onto a row of height exactly v-2.
    """
    p = list(lam.parts) + [0]
    found: set[Partition] = set()
    for i in range(len(p) - 1):
        v = p[i]
        if v - p[i + 1] >= 2:
            q = p[:]
            q[i] -= 1
            q[i + 1] += 1
            found.add(Partition(q))
        j = i + 1
        while j < len(p) and p[j] == v - 1:
            j += 1
        if j > i + 1 and j < len(p) and p[j] == v - 2:
            q = p[:]
            q[i] -= 1
            q[j] += 1
            found.add(Partition(q))
    return tuple(sorted(found, key=lambda t: t.parts, reverse=True))


@lru_cache(maxsize=None)
def minimal_degenerations(lam: Partition, eps: int) -> tuple[Partition, ...]:
    """All partitions adjacent to ``lam`` from below in the eps-valid order.

    Every element of the class strictly below ``lam`` lies below the
    collapse of some dominance cover of ``lam``, so the adjacent elements
    are the maximal collapses of the covers.  The test suite checks this
    against the brute-force covering relation.
    """
    check_eps(eps)
    if not lam.is_valid(eps):
        raise ValueError(f"partition {lam} is not valid for eps={eps}")
    cands = {collapse(mu, eps) for mu in covers(lam)}
    out = [c for c in cands if not any(d != c and d.dominates(c) for d in cands)]
    return tuple(sorted(out, key=lambda t: t.parts, reverse=True))


def hasse(n: int, eps: int) -> tuple[tuple[Partition, Partition], ...]:
    """Covering edges of the eps-valid dominance order, larger to smaller."""
    check_eps(eps)
    edges: list[tuple[Partition, Partition]] = []
    for lam in enumerate_eps(n, eps):
        for eta in minimal_degenerations(lam, eps):
            edges.append((lam, eta))
    return tuple(edges)
