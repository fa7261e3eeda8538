"""The Kraft-Procesi degeneration calculus for orthogonal/symplectic orbits.

A strict degeneration (a pair eta < lam of eps-valid partitions) reduces,
by erasing common leading rows and common leading columns, to a unique
irreducible pair; the reduction preserves the codimension and the smooth
equivalence class of the singularity.  Minimal irreducible degenerations
fall into eight classified rows (letters a..h below); row e is the only
one whose singularity is not normal (two branches).

Two corrections to commonly printed versions of that classification are
baked in: row b has eta = (2n-2, 2) (the symplectic rule forces the even
part), and row f has lam = (2, 2, 1^(2n-3)) (the exponent that makes the
total 2n+1 and the codimension 4n-4).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .orbits import ClassicalAlgebra, dim_nilpotent_orbit, is_very_even
from .partitions import (
    ORTHOGONAL,
    SYMPLECTIC,
    Partition,
    check_eps,
    minimal_degenerations,
)

ROW_SCHEDULE = "rows_first"
COLUMN_SCHEDULE = "columns_first"


def _common_column_count(lam: Partition, eta: Partition) -> int:
    a, b = lam.dual().parts, eta.dual().parts
    s = 0
    for x, y in zip(a, b):
        if x != y:
            break
        s += 1
    return s


def _common_row_block(lam: Partition, eta: Partition, eps: int) -> int:
    """Length of the longest common leading row block whose prefix is valid.

    When the maximal common block is not an eps-valid partition, backs off
    to the largest valid shorter prefix (possibly none).
    """
    t_max = 0
    for x, y in zip(lam.parts, eta.parts):
        if x != y:
            break
        t_max += 1
    for t in range(t_max, 0, -1):
        if Partition(lam.parts[:t]).is_valid(eps):
            return t
    return 0


def _erase_columns(p: Partition, s: int) -> Partition:
    return Partition(x - s for x in p.parts if x > s)


@dataclass(frozen=True)
class Reduction:
    """Erasure ledger: original pair, irreducible pair, per-stage erasures.

    ``rows_erased[k]`` is the row block removed at stage k (may be empty),
    ``cols_erased[k]`` the number of columns removed at stage k.
    """

    lam: Partition
    eta: Partition
    eps: int
    lam_p: Partition
    eta_p: Partition
    eps_p: int
    rows_erased: tuple[tuple[int, ...], ...]
    cols_erased: tuple[int, ...]

    def __post_init__(self) -> None:
        total_cols = sum(self.cols_erased)
        if self.eps_p != self.eps * (-1) ** total_cols:
            raise ValueError("inconsistent sign ledger in reduction")

    @property
    def trivial(self) -> bool:
        return self.lam == self.lam_p and self.eta == self.eta_p

    def as_dict(self) -> dict:
        return {
            "lambda_p": self.lam_p.as_list(),
            "eta_p": self.eta_p.as_list(),
            "eps_p": self.eps_p,
            "rows_erased": [list(block) for block in self.rows_erased],
            "cols_erased": list(self.cols_erased),
        }


def _check_degeneration(lam: Partition, eta: Partition, eps: int) -> None:
    check_eps(eps)
    if not lam.is_valid(eps):
        raise ValueError(f"{lam} is not valid for eps={eps}")
    if not eta.is_valid(eps):
        raise ValueError(f"{eta} is not valid for eps={eps}")
    if not lam.dominates(eta):
        raise ValueError(f"{eta} is not a degeneration of {lam}")


def reduce_degeneration(
    lam: Partition, eta: Partition, eps: int, schedule: str = ROW_SCHEDULE
) -> Reduction:
    """Erase common leading rows and columns down to the irreducible pair.

    The two schedules differ only in which erasure each pass tries first;
    they reach the same irreducible pair (confluence is enforced by the
    test suite, not assumed here).
    """
    _check_degeneration(lam, eta, eps)
    if lam == eta:
        raise ValueError("nothing to reduce: the two partitions are equal")
    if schedule not in (ROW_SCHEDULE, COLUMN_SCHEDULE):
        raise ValueError(f"unknown schedule {schedule!r}")
    cur_l, cur_e, cur_eps = lam, eta, eps
    rows_log: list[tuple[int, ...]] = []
    cols_log: list[int] = []
    while True:
        block: tuple[int, ...] = ()
        ncols = 0
        if schedule == ROW_SCHEDULE:
            t = _common_row_block(cur_l, cur_e, cur_eps)
            if t:
                block = cur_l.parts[:t]
                cur_l = Partition(cur_l.parts[t:])
                cur_e = Partition(cur_e.parts[t:])
            s = _common_column_count(cur_l, cur_e)
            if s:
                ncols = s
                cur_l = _erase_columns(cur_l, s)
                cur_e = _erase_columns(cur_e, s)
                cur_eps *= (-1) ** s
        else:
            s = _common_column_count(cur_l, cur_e)
            if s:
                ncols = s
                cur_l = _erase_columns(cur_l, s)
                cur_e = _erase_columns(cur_e, s)
                cur_eps *= (-1) ** s
            t = _common_row_block(cur_l, cur_e, cur_eps)
            if t:
                block = cur_l.parts[:t]
                cur_l = Partition(cur_l.parts[t:])
                cur_e = Partition(cur_e.parts[t:])
        if not block and not ncols:
            break
        rows_log.append(block)
        cols_log.append(ncols)
    return Reduction(lam, eta, eps, cur_l, cur_e, cur_eps, tuple(rows_log), tuple(cols_log))


class SingKind(Enum):
    KLEINIAN_A = "A"
    KLEINIAN_D = "D"
    TWO_BRANCHES_A = "AuA"
    MINIMAL_CLOSURE = "min"
    NOT_MINIMAL = "not-minimal"
    UNKNOWN_NON_MINIMAL = "unknown-non-minimal"


KP_CODIM = {
    "a": lambda n: 2,
    "b": lambda n: 2,
    "c": lambda n: 2,
    "d": lambda n: 2,
    "e": lambda n: 2,
    "f": lambda n: 4 * n - 4,
    "g": lambda n: 2 * n,
    "h": lambda n: 4 * n - 6,
}


@dataclass(frozen=True)
class SingularityClass:
    """Outcome of the eight-row classification of irreducible minimal pairs.

    ``index`` is k for A_k/D_k/(A_k u A_k) and the rank for the minimal
    orbit closures b_n/c_n/d_n (``series`` then names the series letter).
    ``kp_type`` is the table letter a..h, present exactly for table rows.
    """

    kind: SingKind
    index: int | None = None
    series: str | None = None
    kp_type: str | None = None

    @property
    def minimal(self) -> bool:
        return self.kp_type is not None

    @property
    def branches(self) -> int:
        if not self.minimal:
            raise ValueError("branch count is read off the table only for minimal rows")
        return 2 if self.kind is SingKind.TWO_BRANCHES_A else 1

    def label(self) -> str:
        if self.kind is SingKind.KLEINIAN_A:
            return f"A{self.index}"
        if self.kind is SingKind.KLEINIAN_D:
            return f"D{self.index}"
        if self.kind is SingKind.TWO_BRANCHES_A:
            return f"A{self.index} u A{self.index}"
        if self.kind is SingKind.MINIMAL_CLOSURE:
            return f"{self.series}{self.index}"
        return self.kind.value

    def as_dict(self) -> dict:
        return {"singularity": self.label(), "kp_type": self.kp_type}


def _is_irreducible(lam: Partition, eta: Partition, eps: int) -> bool:
    return _common_row_block(lam, eta, eps) == 0 and _common_column_count(lam, eta) == 0


def classify_irreducible(lam_p: Partition, eta_p: Partition, eps_p: int) -> SingularityClass:
    """Match an irreducible pair against the eight classified rows.

    Pairs matching no row are not minimal degenerations (the table is a
    complete list of the minimal irreducible ones).
    """
    _check_degeneration(lam_p, eta_p, eps_p)
    if lam_p == eta_p:
        raise ValueError("not a strict degeneration")
    if not _is_irreducible(lam_p, eta_p, eps_p):
        raise ValueError(f"pair ({lam_p}; {eta_p}) is reducible")
    l, e = lam_p.parts, eta_p.parts
    if eps_p == SYMPLECTIC:
        # a: (2) > (1,1) in sp_2
        if l == (2,) and e == (1, 1):
            return SingularityClass(SingKind.KLEINIAN_A, 1, kp_type="a")
        # b: (2n) > (2n-2,2), n > 1
        if len(l) == 1 and l[0] % 2 == 0 and l[0] >= 4 and e == (l[0] - 2, 2):
            return SingularityClass(SingKind.KLEINIAN_D, l[0] // 2 + 1, kp_type="b")
        # d: (2n+1,2n+1) > (2n,2n,2), n > 0
        if (
            len(l) == 2
            and l[0] == l[1]
            and l[0] % 2 == 1
            and l[0] >= 3
            and e == (l[0] - 1, l[0] - 1, 2)
        ):
            return SingularityClass(SingKind.KLEINIAN_A, l[0] - 2, kp_type="d")
        # g: (2,1^(2n-2)) > (1^(2n)), n > 1
        if (
            len(l) >= 3
            and l[0] == 2
            and all(x == 1 for x in l[1:])
            and all(x == 1 for x in e)
        ):
            return SingularityClass(
                SingKind.MINIMAL_CLOSURE, lam_p.n // 2, series="c", kp_type="g"
            )
    else:
        # c: (2n+1) > (2n-1,1,1), n > 0
        if len(l) == 1 and l[0] % 2 == 1 and l[0] >= 3 and e == (l[0] - 2, 1, 1):
            return SingularityClass(SingKind.KLEINIAN_A, l[0] - 2, kp_type="c")
        # e: (2n,2n) > (2n-1,2n-1,1,1), n > 0 -- the two-branch row
        if (
            len(l) == 2
            and l[0] == l[1]
            and l[0] % 2 == 0
            and e == (l[0] - 1, l[0] - 1, 1, 1)
        ):
            return SingularityClass(SingKind.TWO_BRANCHES_A, l[0] - 1, kp_type="e")
        if (
            len(l) >= 3
            and l[0] == l[1] == 2
            and all(x == 1 for x in l[2:])
            and all(x == 1 for x in e)
        ):
            if lam_p.n % 2 == 1:
                # f: (2,2,1^(2n-3)) > (1^(2n+1)), n > 1
                return SingularityClass(
                    SingKind.MINIMAL_CLOSURE, (lam_p.n - 1) // 2, series="b", kp_type="f"
                )
            if len(l) >= 4:
                # h: (2,2,1^(2n-4)) > (1^(2n)), n > 2
                return SingularityClass(
                    SingKind.MINIMAL_CLOSURE, lam_p.n // 2, series="d", kp_type="h"
                )
    return SingularityClass(SingKind.NOT_MINIMAL)


def degeneration_singularity(lam: Partition, eta: Partition, eps: int) -> SingularityClass:
    """Reduce, then classify.  Non-minimal degenerations come back unknown.

    The classification table covers only minimal degenerations, so a pair
    reducing to no table row is reported as unknown-non-minimal.
    """
    red = reduce_degeneration(lam, eta, eps)
    cls = classify_irreducible(red.lam_p, red.eta_p, red.eps_p)
    if cls.kind is SingKind.NOT_MINIMAL:
        return SingularityClass(SingKind.UNKNOWN_NON_MINIMAL)
    return cls


NORMAL = "Normal"
NON_NORMAL = "NonNormal"
VERY_EVEN_UNSUPPORTED = "VeryEvenUnsupported"


@dataclass(frozen=True)
class NormalityVerdict:
    status: str
    witnesses: tuple[Partition, ...] = ()

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witnesses": [w.as_list() for w in self.witnesses],
        }


def _algebra_for_eps(eps: int, n: int) -> ClassicalAlgebra:
    return ClassicalAlgebra("so" if eps == ORTHOGONAL else "sp", n)


def hesselink_shortcut(algebra: ClassicalAlgebra, lam: Partition) -> bool:
    """Sufficient normality test: lam1+lam2 <= 4 for o_n, lam1 <= 2 for sp_n."""
    if algebra.series == "so":
        return lam.part(0) + lam.part(1) <= 4
    if algebra.series == "sp":
        return lam.part(0) <= 2
    return True


def is_normal_closure(algebra: ClassicalAlgebra, lam: Partition) -> NormalityVerdict:
    """Normality of the orbit closure.

    Normality is decided in codimension 2: the closure is normal exactly
    when no codimension-2 minimal degeneration reduces to the two-branch
    row e.  Very even partitions in even o_n are outside this criterion
    and short-circuit to an unsupported verdict.  The sufficient shortcut
    (small first parts) is evaluated independently and cross-checked.
    """
    if algebra.series == "sl":
        if lam.n != algebra.n:
            raise ValueError(f"partition of {lam.n} does not match {algebra}")
        return NormalityVerdict(NORMAL)
    eps = algebra.eps
    assert eps is not None
    if not lam.is_valid(eps) or lam.n != algebra.n:
        raise ValueError(f"{lam} is not an orbit partition of {algebra}")
    if is_very_even(algebra, lam):
        return NormalityVerdict(VERY_EVEN_UNSUPPORTED)
    witnesses = []
    dim_lam = dim_nilpotent_orbit(algebra, lam)
    for eta in minimal_degenerations(lam, eps):
        if dim_lam - dim_nilpotent_orbit(algebra, eta) != 2:
            continue
        if degeneration_singularity(lam, eta, eps).kp_type == "e":
            witnesses.append(eta)
    verdict = NormalityVerdict(
        NON_NORMAL if witnesses else NORMAL,
        tuple(sorted(witnesses, key=lambda p: p.parts, reverse=True)),
    )
    if hesselink_shortcut(algebra, lam) and verdict.status != NORMAL:
        raise RuntimeError(
            f"normality shortcut contradicts the codimension-2 scan for {lam}"
        )
    return verdict


def branches_at(lam: Partition, eta: Partition, eps: int) -> int | None:
    """Number of irreducible components of the slice into the lam-closure
    at a point of the eta-orbit; None means unknown.

    Equal partitions give the one-point slice.  Minimal degenerations read
    the count off the classification (2 for row e, otherwise 1).  Other
    degenerations are unibranch when the closure is normal; beyond that
    the count needs data outside this package's scope.
    """
    _check_degeneration(lam, eta, eps)
    if lam == eta:
        return 1
    cls = degeneration_singularity(lam, eta, eps)
    if cls.minimal:
        return cls.branches
    verdict = is_normal_closure(_algebra_for_eps(eps, lam.n), lam)
    return 1 if verdict.status == NORMAL else None


EMPTY_SLICE = "empty"
POINT_SLICE = "point"
PROPER_SLICE = "proper"


@dataclass(frozen=True)
class SliceReport:
    """Transverse-slice report: dimension, component count, singularity."""

    kind: str
    lam: Partition
    eta: Partition
    eps: int | None
    dimension: int | None = None
    components: int | None = None
    singularity: SingularityClass | None = None
    reduction: Reduction | None = None

    def as_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "lambda": self.lam.as_list(),
            "eta": self.eta.as_list(),
            "eps": self.eps,
            "dimension": self.dimension,
            "components": self.components,
            "kp_type": self.singularity.kp_type if self.singularity else None,
            "singularity": self.singularity.label() if self.singularity else None,
            "reduction": self.reduction.as_dict() if self.reduction else None,
        }
        return out


def slice_report(algebra: ClassicalAlgebra, lam: Partition, eta: Partition) -> SliceReport:
    """Slice of the lam-orbit closure at a point of the eta-orbit.

    The slice is empty exactly when eta is not a degeneration of lam, and
    a single point when the partitions coincide.
    """
    _check_partition = lam.n == algebra.n and eta.n == algebra.n
    if not _check_partition:
        raise ValueError("partitions must match the algebra size")
    eps = algebra.eps
    if eps is not None:
        for p in (lam, eta):
            if not p.is_valid(eps):
                raise ValueError(f"{p} is not valid for {algebra}")
    if not lam.dominates(eta):
        return SliceReport(EMPTY_SLICE, lam, eta, eps)
    if lam == eta:
        return SliceReport(POINT_SLICE, lam, eta, eps, dimension=0, components=1)
    dimension = dim_nilpotent_orbit(algebra, lam) - dim_nilpotent_orbit(algebra, eta)
    if algebra.series == "sl":
        # sl closures are normal, hence unibranch; the eight-row table does
        # not apply to this series.
        return SliceReport(PROPER_SLICE, lam, eta, None, dimension, components=1)
    assert eps is not None
    red = reduce_degeneration(lam, eta, eps)
    cls = classify_irreducible(red.lam_p, red.eta_p, red.eps_p)
    if cls.kind is SingKind.NOT_MINIMAL:
        comp = branches_at(lam, eta, eps)
        return SliceReport(PROPER_SLICE, lam, eta, eps, dimension, comp, None, red)
    return SliceReport(PROPER_SLICE, lam, eta, eps, dimension, cls.branches, cls, red)
