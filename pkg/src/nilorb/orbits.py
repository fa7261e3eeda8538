"""Nilpotent orbits of the classical Lie algebras sl_n, o_n and sp_n.

Orbits are represented by their Jordan-type partitions.  The closure
order is dominance; dimensions come from the standard dual-partition
formulas; weighted Dynkin diagrams follow the usual sl2-string recipe
with Bourbaki node numbering (chain 1..r, D-fork at nodes r-1 and r,
B-arrow into node r).

Type-D policy: everything closure- and normality-related works at the
O(n) level, where orbits are parametrized by orthogonal partitions.  The
SO-level I/II split of a very even partition is carried as metadata and
only consulted by ``weighted_dynkin``.  Convention: label I puts the
larger diagram value on node r (the last node), label II on node r-1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .partitions import ORTHOGONAL, SYMPLECTIC, Partition

SERIES = ("sl", "so", "sp")

SO_LABELS = ("I", "II")


class VeryEvenOrderWarning(UserWarning):
    """Two distinct SO-orbits over one very even partition are being compared.

    As SO-orbits they are incomparable; the value returned is the O(n)-level
    answer (their closures coincide as an O(n)-orbit closure).
    """


@dataclass(frozen=True)
class ClassicalAlgebra:
    """A classical algebra tag: series 'sl', 'so' (meaning o_n) or 'sp'."""

    series: str
    n: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise ValueError(f"series must be one of {SERIES}, got {self.series!r}")
        if self.series == "sl" and self.n < 2:
            raise ValueError("sl requires n >= 2")
        if self.series == "so" and self.n < 3:
            raise ValueError("so requires n >= 3")
        if self.series == "sp":
            if self.n < 2 or self.n % 2 == 1:
                raise ValueError("sp requires even n >= 2")

    @property
    def eps(self) -> int | None:
        """Validity sign for partitions; None for sl (no constraint)."""
        if self.series == "so":
            return ORTHOGONAL
        if self.series == "sp":
            return SYMPLECTIC
        return None

    @property
    def rank(self) -> int:
        if self.series == "sl":
            return self.n - 1
        return (self.n - 1) // 2 if self.n % 2 else self.n // 2

    @property
    def dim(self) -> int:
        if self.series == "sl":
            return self.n * self.n - 1
        if self.series == "so":
            return self.n * (self.n - 1) // 2
        return self.n * (self.n + 1) // 2

    def __str__(self) -> str:
        return f"{self.series}{self.n}"


def _check_partition_for(algebra: ClassicalAlgebra, lam: Partition) -> None:
    if lam.n != algebra.n:
        raise ValueError(f"partition of {lam.n} does not match {algebra}")
    eps = algebra.eps
    if eps is not None and not lam.is_valid(eps):
        kind = "orthogonal" if eps == ORTHOGONAL else "symplectic"
        raise ValueError(f"{lam} is not a valid {kind} partition")


def is_very_even(algebra: ClassicalAlgebra, lam: Partition) -> bool:
    return (
        algebra.series == "so"
        and algebra.n % 2 == 0
        and bool(lam.parts)
        and all(p % 2 == 0 for p in lam.parts)
    )


@dataclass(frozen=True)
class Orbit:
    """A nilpotent orbit, labelled by its Jordan-type partition.

    For a very even partition in even o_n this is the O(n)-orbit (the
    union of the two SO-orbits) unless an I/II label picks one of them.
    """

    algebra: ClassicalAlgebra
    lam: Partition
    so_label: str | None = None

    def __post_init__(self) -> None:
        _check_partition_for(self.algebra, self.lam)
        if self.so_label is not None:
            if self.so_label not in SO_LABELS:
                raise ValueError(f"so_label must be 'I' or 'II', got {self.so_label!r}")
            if not self.very_even:
                raise ValueError("so_label is only meaningful for very even partitions")

    @property
    def very_even(self) -> bool:
        return is_very_even(self.algebra, self.lam)

    def as_dict(self) -> dict:
        return {
            "series": self.algebra.series,
            "n": self.algebra.n,
            "partition": self.lam.as_list(),
            "very_even": self.very_even,
            "so_label": self.so_label,
        }

    @staticmethod
    def from_dict(data: dict) -> "Orbit":
        return Orbit(
            ClassicalAlgebra(data["series"], data["n"]),
            Partition(data["partition"]),
            data.get("so_label"),
        )


def orbit_from_partition(
    algebra: ClassicalAlgebra, lam: Partition, so_label: str | None = None
) -> Orbit:
    return Orbit(algebra, lam, so_label)


def dim_nilpotent_orbit(algebra: ClassicalAlgebra, lam: Partition) -> int:
    """Orbit dimension from the dual partition; always an even integer."""
    _check_partition_for(algebra, lam)
    s = lam.dual()
    ssq = sum(x * x for x in s.parts)
    odd = sum(1 for p in lam.parts if p % 2 == 1)
    if algebra.series == "sl":
        return algebra.n**2 - ssq
    if algebra.series == "so":
        return (algebra.n**2 - algebra.n) // 2 - (ssq - odd) // 2
    return (algebra.n**2 + algebra.n) // 2 - (ssq + odd) // 2


def dim_orbit(orbit: Orbit) -> int:
    return dim_nilpotent_orbit(orbit.algebra, orbit.lam)


def codim_degeneration(algebra: ClassicalAlgebra, lam: Partition, eta: Partition) -> int:
    """codim of the eta-orbit inside the closure of the lam-orbit."""
    _check_partition_for(algebra, lam)
    _check_partition_for(algebra, eta)
    if not lam.dominates(eta):
        raise ValueError(f"{eta} is not a degeneration of {lam}")
    return dim_nilpotent_orbit(algebra, lam) - dim_nilpotent_orbit(algebra, eta)


def closure_leq(a: Orbit, b: Orbit) -> bool:
    """Containment of closures: a's closure inside b's closure.

    For two distinct SO-labels over one very even partition the SO-orbits
    are incomparable; the O(n)-level answer is returned with a warning.
    """
    if a.algebra != b.algebra:
        raise ValueError(f"cannot compare orbits of {a.algebra} and {b.algebra}")
    if (
        a.very_even
        and b.very_even
        and a.lam == b.lam
        and a.so_label is not None
        and b.so_label is not None
        and a.so_label != b.so_label
    ):
        warnings.warn(
            "comparing the two SO-orbits of a very even partition: "
            "returning the O(n)-level answer",
            VeryEvenOrderWarning,
            stacklevel=2,
        )
    return b.lam.dominates(a.lam)


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Node labels of the weighted Dynkin diagram, Bourbaki order."""

    series: str
    rank: int
    labels: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"series": self.series, "rank": self.rank, "labels": list(self.labels)}

    @staticmethod
    def from_dict(data: dict) -> "WeightedDynkinDiagram":
        return WeightedDynkinDiagram(data["series"], data["rank"], tuple(data["labels"]))


def _string_values(lam: Partition) -> list[int]:
    """The sl2-string multiset: p-1, p-3, ..., 1-p for every part p."""
    vals: list[int] = []
    for p in lam.parts:
        vals.extend(range(p - 1, -p, -2))
    vals.sort(reverse=True)
    return vals


def weighted_dynkin(orbit: Orbit) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of the orbit.

    The dominant semisimple element is read off the sorted string
    multiset; labels are its values on the simple roots.  Very even
    partitions need an I/II label because the two SO-orbits differ by
    swapping the labels of the two fork nodes.
    """
    algebra, lam = orbit.algebra, orbit.lam
    vals = _string_values(lam)
    r = algebra.rank
    if algebra.series == "sl":
        labels = [vals[i] - vals[i + 1] for i in range(algebra.n - 1)]
        return WeightedDynkinDiagram("sl", r, tuple(labels))
    h = vals[:r]
    if algebra.series == "sp":
        labels = [h[i] - h[i + 1] for i in range(r - 1)] + [2 * h[r - 1]]
        return WeightedDynkinDiagram("sp", r, tuple(labels))
    if algebra.n % 2 == 1:  # type B
        labels = [h[i] - h[i + 1] for i in range(r - 1)] + [h[r - 1]]
        return WeightedDynkinDiagram("so", r, tuple(labels))
    # type D
    if orbit.very_even:
        if orbit.so_label is None:
            raise ValueError("very even partition needs an I/II label for its diagram")
        if orbit.so_label == "II":
            h[-1] = -h[-1]
    labels = [h[i] - h[i + 1] for i in range(r - 2)]
    labels.append(h[r - 2] - h[r - 1])
    labels.append(h[r - 2] + h[r - 1])
    return WeightedDynkinDiagram("so", r, tuple(labels))
