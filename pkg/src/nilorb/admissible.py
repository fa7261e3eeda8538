"""Classical partition families with admissible-level shapes, and the
machinery that regenerates their codimension-2 degeneration tables.

Each family is a symbolic partition shape (a block of q's plus a few
fixed parts) with printed constraints on q, s and the block multiplicity
m.  For every family the registry also carries the symbolic table rows:
the codimension-2 minimal degenerations eta together with the reduction
data (eps', lambda', eta') and the classification letter.  The
verification sweep instantiates every legal (family, q, s, m), recomputes
the rows from scratch with the degeneration engine, and demands an exact
match with the instantiated symbolic rows.

Row-pattern instances whose eta comes out invalid, equal to lambda, or
not strictly below lambda are skipped and logged; these are edge
parameters the printed per-row ranges implicitly exclude.

Also here: the small numerology helpers (specific orbit partitions by
case number, an exact central-charge evaluation for type D, and the
Virasoro minimal-series central charge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from .kraft_procesi import classify_irreducible, reduce_degeneration
from .orbits import ClassicalAlgebra, dim_nilpotent_orbit
from .partitions import ORTHOGONAL, SYMPLECTIC, Partition, minimal_degenerations

SERIES_KEYS = ("sp", "so-odd", "so-even")

_EPS = {"sp": SYMPLECTIC, "so-odd": ORTHOGONAL, "so-even": ORTHOGONAL}


def _algebra(series: str, n: int) -> ClassicalAlgebra:
    return ClassicalAlgebra("sp" if series == "sp" else "so", n)


def _rank(series: str, n: int) -> int:
    return (n - 1) // 2 if series == "so-odd" else n // 2


@dataclass(frozen=True)
class RowPattern:
    """One printed table row: condition on (q, s), symbolic eta and
    reduction data."""

    key: str
    cond: Callable[[int, int], bool]
    eta: Callable[[int, int, int], list[int]]  # (q, m, s) -> parts
    eps_p: int
    lam_p: Callable[[int, int], list[int]]
    eta_p: Callable[[int, int], list[int]]
    kp_type: str
    m_need: int = 0  # q-rows consumed by the eta pattern


@dataclass(frozen=True)
class Family:
    series: str
    family: str
    q_parity: int  # required q % 2
    s_parity: int
    s_min: int
    s_max_off: int  # s <= q + s_max_off
    m_parity: int | None  # required m % 2, or None for no constraint
    m_min: int
    pattern: Callable[[int, int, int], list[int]]  # (q, m, s) -> parts
    rows: tuple[RowPattern, ...]

    @property
    def key(self) -> str:
        return f"{self.series}.{self.family}"

    def s_values(self, q: int) -> list[int]:
        lo = self.s_min
        if lo % 2 != self.s_parity:
            lo += 1
        return list(range(lo, q + self.s_max_off + 1, 2))


def _sp_family(family, s_min, s_max_off, q_parity, m_parity, m_min, pattern, rows):
    return Family("sp", family, q_parity, 0, s_min, s_max_off, m_parity, m_min, pattern, rows)


FAMILIES: tuple[Family, ...] = (
    # --- sp_{2r}, eps = -1 -------------------------------------------------
    _sp_family(
        "I", 0, -1, 1, 0, 2,
        lambda q, m, s: [q] * m + [s],
        (
            RowPattern("I.d", lambda q, s: 0 <= s <= q - 3,
                       lambda q, m, s: [q] * (m - 2) + [q - 1, q - 1, s + 2], -1,
                       lambda q, s: [q - s, q - s], lambda q, s: [q - s - 1, q - s - 1, 2],
                       "d", m_need=2),
            RowPattern("I.b", lambda q, s: 4 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [s - 2, 2], -1,
                       lambda q, s: [s], lambda q, s: [s - 2, 2], "b"),
            RowPattern("I.a", lambda q, s: s == 2,
                       lambda q, m, s: [q] * m + [1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    _sp_family(
        "II", 0, -1, 1, 0, 2,
        lambda q, m, s: [q] * m + [q - 1] + [s],
        (
            RowPattern("II.b1", lambda q, s: 0 <= s <= q - 5,
                       lambda q, m, s: [q] * m + [q - 3, s + 2], -1,
                       lambda q, s: [q - 1 - s], lambda q, s: [q - 3 - s, 2], "b"),
            RowPattern("II.a1", lambda q, s: s == q - 3,
                       lambda q, m, s: [q] * m + [q - 2, s + 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
            RowPattern("II.b2", lambda q, s: 4 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [q - 1, s - 2, 2], -1,
                       lambda q, s: [s], lambda q, s: [s - 2, 2], "b"),
            RowPattern("II.a2", lambda q, s: s == 2,
                       lambda q, m, s: [q] * m + [q - 1, 1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    _sp_family(
        "III", 0, -1, 0, None, 1,
        lambda q, m, s: [q] * m + [s],
        (
            RowPattern("III.b1", lambda q, s: 0 <= s <= q - 2,
                       lambda q, m, s: [q] * (m - 1) + [q - 2, s + 2], -1,
                       lambda q, s: [q - s], lambda q, s: [q - s - 2, 2], "b", m_need=1),
            RowPattern("III.a1", lambda q, s: s == q - 2,
                       lambda q, m, s: [q] * (m - 1) + [q - 1, s + 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a", m_need=1),
            RowPattern("III.b2", lambda q, s: 4 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [s - 2, 2], -1,
                       lambda q, s: [s], lambda q, s: [s - 2, 2], "b"),
            RowPattern("III.a2", lambda q, s: s == 2,
                       lambda q, m, s: [q] * m + [1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    _sp_family(
        "IV", 0, -1, 1, 0, 2,
        lambda q, m, s: [q + 1] + [q] * m + [s],
        (
            RowPattern("IV.d", lambda q, s: 0 <= s <= q - 3,
                       lambda q, m, s: [q + 1] + [q] * (m - 2) + [q - 1, q - 1, s + 2], -1,
                       lambda q, s: [q - s, q - s], lambda q, s: [q - s - 1, q - s - 1, 2],
                       "d", m_need=2),
            RowPattern("IV.b", lambda q, s: 4 <= s <= q - 1,
                       lambda q, m, s: [q + 1] + [q] * m + [s - 2, 2], -1,
                       lambda q, s: [s], lambda q, s: [s - 2, 2], "b"),
            RowPattern("IV.a", lambda q, s: s == 2,
                       lambda q, m, s: [q + 1] + [q] * m + [1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    _sp_family(
        "V", 2, -1, 1, 0, 2,
        lambda q, m, s: [q + 1] + [q] * m + [q - 1] + [s],
        (
            RowPattern("V.b1", lambda q, s: 0 <= s <= q - 5,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 3, s + 2], -1,
                       lambda q, s: [q - 1 - s], lambda q, s: [q - 3 - s, 2], "b"),
            RowPattern("V.a1", lambda q, s: s == q - 3,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 2, s + 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
            RowPattern("V.b2", lambda q, s: 4 <= s <= q - 1,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 1, s - 2, 2], -1,
                       lambda q, s: [s], lambda q, s: [s - 2, 2], "b"),
            RowPattern("V.a2", lambda q, s: s == 2,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 1, 1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    # --- so_{2r+1}, eps = +1 ----------------------------------------------
    Family(
        "so-odd", "I", 1, 1, 0, 0, 0, 2,
        lambda q, m, s: [q] * m + [s],
        (
            RowPattern("I.b", lambda q, s: 0 <= s <= q - 4,
                       lambda q, m, s: [q] * (m - 1) + [q - 2, s + 2], -1,
                       lambda q, s: [q - s], lambda q, s: [q - s - 2, 2], "b", m_need=1),
            RowPattern("I.c", lambda q, s: 3 <= s <= q,
                       lambda q, m, s: [q] * m + [s - 2, 1, 1], 1,
                       lambda q, s: [s], lambda q, s: [s - 2, 1, 1], "c"),
            RowPattern("I.a", lambda q, s: s == q - 2,
                       lambda q, m, s: [q] * (m - 1) + [q - 1, q - 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a", m_need=1),
        ),
    ),
    Family(
        "so-odd", "II", 1, 1, 0, -1, 1, 1,
        lambda q, m, s: [q] * m + [s] + [1],
        (
            RowPattern("II.b1", lambda q, s: 0 <= s <= q - 4,
                       lambda q, m, s: [q] * (m - 1) + [q - 2, s + 2, 1], -1,
                       lambda q, s: [q - s], lambda q, s: [q - s - 2, 2], "b", m_need=1),
            RowPattern("II.b2", lambda q, s: 5 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [s - 2, 3], -1,
                       lambda q, s: [s - 1], lambda q, s: [s - 3, 2], "b"),
            RowPattern("II.a", lambda q, s: s == 3,
                       lambda q, m, s: [q] * m + [2, 2], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    Family(
        "so-odd", "III", 0, 1, 0, -1, 0, 2,
        lambda q, m, s: [q] * m + [s],
        (
            RowPattern("III.d", lambda q, s: 0 <= s <= q - 3,
                       lambda q, m, s: [q] * (m - 2) + [q - 1, q - 1, s + 2], -1,
                       lambda q, s: [q - s, q - s], lambda q, s: [q - 1 - s, q - 1 - s, 2],
                       "d", m_need=2),
            RowPattern("III.c", lambda q, s: 3 <= s <= q,
                       lambda q, m, s: [q] * m + [s - 2, 1, 1], 1,
                       lambda q, s: [s], lambda q, s: [s - 2, 1, 1], "c"),
        ),
    ),
    Family(
        "so-odd", "IV", 0, 1, 0, -1, 0, 2,
        lambda q, m, s: [q] * m + [q - 1] + [s] + [1],
        (
            RowPattern("IV.b1", lambda q, s: 1 <= s <= q - 5,
                       lambda q, m, s: [q] * m + [q - 3, s + 2, 1], -1,
                       lambda q, s: [q - 1 - s], lambda q, s: [q - 3 - s, 2], "b"),
            RowPattern("IV.a1", lambda q, s: s == q - 3,
                       lambda q, m, s: [q] * m + [q - 2, s + 1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
            RowPattern("IV.b2", lambda q, s: 5 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [q - 1, s - 2, 3], -1,
                       lambda q, s: [s - 1], lambda q, s: [s - 3, 2], "b"),
            RowPattern("IV.a2", lambda q, s: s == 3,
                       lambda q, m, s: [q] * m + [q - 1, 2, 2], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    # --- so_{2r}, eps = +1 --------------------------------------------------
    Family(
        "so-even", "I", 1, 1, 0, 0, 1, 1,
        lambda q, m, s: [q] * m + [s],
        (
            RowPattern("I.b", lambda q, s: 0 <= s <= q - 4,
                       lambda q, m, s: [q] * (m - 1) + [q - 2, s + 2], -1,
                       lambda q, s: [q - s], lambda q, s: [q - s - 2, 2], "b", m_need=1),
            RowPattern("I.c", lambda q, s: 3 <= s <= q,
                       lambda q, m, s: [q] * m + [s - 2, 1, 1], 1,
                       lambda q, s: [s], lambda q, s: [s - 2, 1, 1], "c"),
            RowPattern("I.a", lambda q, s: s == q - 2,
                       lambda q, m, s: [q] * (m - 1) + [q - 1, s + 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a", m_need=1),
        ),
    ),
    Family(
        "so-even", "II", 1, 1, 0, -1, 0, 2,
        lambda q, m, s: [q] * m + [s] + [1],
        (
            RowPattern("II.b1", lambda q, s: 0 <= s <= q - 4,
                       lambda q, m, s: [q] * (m - 1) + [q - 2, s + 2, 1], -1,
                       lambda q, s: [q - s], lambda q, s: [q - s - 2, 2], "b", m_need=1),
            RowPattern("II.b2", lambda q, s: 5 <= s <= q - 1,
                       lambda q, m, s: [q] * m + [s - 2, 3], -1,
                       lambda q, s: [s - 1], lambda q, s: [s - 3, 2], "b"),
            RowPattern("II.a", lambda q, s: s == 3,
                       lambda q, m, s: [q] * m + [2, 2], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    Family(
        "so-even", "III", 0, 1, 0, -1, 0, 2,
        lambda q, m, s: [q + 1] + [q] * m + [s],
        (
            RowPattern("III.c", lambda q, s: 3 <= s <= q - 1,
                       lambda q, m, s: [q + 1] + [q] * m + [s - 2, 1, 1], 1,
                       lambda q, s: [s], lambda q, s: [s - 2, 1, 1], "c"),
            RowPattern("III.d", lambda q, s: 0 <= s <= q - 3,
                       lambda q, m, s: [q + 1] + [q] * (m - 2) + [q - 1, q - 1, s + 2], -1,
                       lambda q, s: [q - s, q - s], lambda q, s: [q - 1 - s, q - 1 - s, 2],
                       "d", m_need=2),
            # Printed with the condition s = 2, which no legal parameter
            # meets: this family forces s odd.  Kept for completeness; the
            # verification reports it as structurally unreachable.
            RowPattern("III.a", lambda q, s: s == 2,
                       lambda q, m, s: [q + 1] + [q] * m + [1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
    Family(
        "so-even", "IV", 0, 1, 0, -1, 0, 2,
        lambda q, m, s: [q + 1] + [q] * m + [q - 1] + [s] + [1],
        (
            RowPattern("IV.b1", lambda q, s: 0 <= s <= q - 5,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 3, s + 2, 1], -1,
                       lambda q, s: [q - 1 - s], lambda q, s: [q - 3 - s, 2], "b"),
            RowPattern("IV.a1", lambda q, s: s == q - 3,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 2, s + 1, 1], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
            RowPattern("IV.b2", lambda q, s: 5 <= s <= q - 1,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 1, s - 2, 3], -1,
                       lambda q, s: [s - 1], lambda q, s: [s - 3, 2], "b"),
            RowPattern("IV.a2", lambda q, s: s == 3,
                       lambda q, m, s: [q + 1] + [q] * m + [q - 1, 2, 2], -1,
                       lambda q, s: [2], lambda q, s: [1, 1], "a"),
        ),
    ),
)

UNREACHABLE_ROWS = frozenset({"so-even.III.a"})


def family_index() -> dict[str, Family]:
    return {f.key: f for f in FAMILIES}


def get_family(series: str, family: str) -> Family:
    try:
        return family_index()[f"{series}.{family}"]
    except KeyError:
        raise ValueError(f"unknown family {series} {family}") from None


@dataclass(frozen=True)
class FamilySpec:
    """A concrete family instance: series, family id, q, s and the rank."""

    series: str
    family: str
    q: int
    s: int
    r: int

    @property
    def n(self) -> int:
        return 2 * self.r + 1 if self.series == "so-odd" else 2 * self.r

    @property
    def eps(self) -> int:
        return _EPS[self.series]


def _resolve_multiplicity(fam: Family, q: int, s: int, n: int) -> int:
    fixed = sum(fam.pattern(q, 0, s))
    if (n - fixed) % q != 0:
        raise ValueError(
            f"no integral q-multiplicity for {fam.key} with q={q}, s={s}, n={n}"
        )
    m = (n - fixed) // q
    if m < fam.m_min:
        raise ValueError(
            f"q-multiplicity {m} below the family minimum {fam.m_min} "
            f"for {fam.key} with q={q}, s={s}, n={n}"
        )
    if fam.m_parity is not None and m % 2 != fam.m_parity:
        parity = "even" if fam.m_parity == 0 else "odd"
        raise ValueError(f"{fam.key} needs an {parity} q-multiplicity, got {m}")
    return m


def _check_family_constraints(fam: Family, q: int, s: int) -> None:
    if q < 2:
        raise ValueError("q must be at least 2")
    if q % 2 != fam.q_parity:
        parity = "even" if fam.q_parity == 0 else "odd"
        raise ValueError(f"{fam.key} requires q {parity}, got q={q}")
    if s % 2 != fam.s_parity:
        parity = "even" if fam.s_parity == 0 else "odd"
        raise ValueError(f"{fam.key} requires s {parity}, got s={s}")
    if not (fam.s_min <= s <= q + fam.s_max_off):
        raise ValueError(
            f"{fam.key} requires {fam.s_min} <= s <= q{fam.s_max_off:+d}, got s={s}"
        )


def family_partition(spec: FamilySpec) -> Partition:
    """The concrete partition of a family instance.

    The q-block multiplicity is not an input: it is pinned down by the
    total n = 2r (or 2r+1), and must meet the family's minimum and parity.
    """
    fam = get_family(spec.series, spec.family)
    _check_family_constraints(fam, spec.q, spec.s)
    m = _resolve_multiplicity(fam, spec.q, spec.s, spec.n)
    lam = Partition(fam.pattern(spec.q, m, spec.s))
    if not lam.is_valid(spec.eps):
        raise ValueError(f"family instance {spec} yields invalid partition {lam}")
    return lam


@dataclass(frozen=True)
class TableRow:
    """One codimension-2 degeneration row, as both engines produce it."""

    lam: Partition
    eta: Partition
    eps_p: int
    lam_p: Partition
    eta_p: Partition
    kp_type: str

    def signature(self) -> tuple:
        return (
            self.eta.parts,
            self.eps_p,
            self.lam_p.parts,
            self.eta_p.parts,
            self.kp_type,
        )

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam.as_list(),
            "eta": self.eta.as_list(),
            "eps_p": self.eps_p,
            "lambda_p": self.lam_p.as_list(),
            "eta_p": self.eta_p.as_list(),
            "type": self.kp_type,
        }


def codim2_rows(lam: Partition, eps: int) -> tuple[TableRow, ...]:
    """All codimension-2 minimal degenerations of lam with their reductions.

    An empty result means the closure has no codimension-2 boundary orbit
    and is therefore normal.
    """
    algebra = _algebra("sp" if eps == SYMPLECTIC else "so-odd" if lam.n % 2 else "so-even", lam.n)
    dim_lam = dim_nilpotent_orbit(algebra, lam)
    rows = []
    for eta in minimal_degenerations(lam, eps):
        if dim_lam - dim_nilpotent_orbit(algebra, eta) != 2:
            continue
        red = reduce_degeneration(lam, eta, eps)
        cls = classify_irreducible(red.lam_p, red.eta_p, red.eps_p)
        if cls.kp_type is None:
            raise RuntimeError(
                f"codimension-2 minimal degeneration {lam} > {eta} matches no table row"
            )
        rows.append(TableRow(lam, eta, red.eps_p, red.lam_p, red.eta_p, cls.kp_type))
    return tuple(sorted(rows, key=lambda r: r.eta.parts, reverse=True))


def expected_rows(spec: FamilySpec) -> tuple[dict[str, TableRow], list[str]]:
    """Instantiate the printed row patterns that apply to a family instance.

    Returns (row-key -> TableRow, skip log).  Rows are skipped when the
    instance cannot realize them: not enough q-rows, eta invalid, or eta
    not strictly below lambda.
    """
    fam = get_family(spec.series, spec.family)
    lam = family_partition(spec)
    m = _resolve_multiplicity(fam, spec.q, spec.s, spec.n)
    rows: dict[str, TableRow] = {}
    skipped: list[str] = []
    for rp in fam.rows:
        if not rp.cond(spec.q, spec.s):
            continue
        key = f"{fam.key}.{rp.key.split('.', 1)[1]}"
        if m < rp.m_need:
            skipped.append(f"{key}@q={spec.q},s={spec.s},r={spec.r}: needs m>={rp.m_need}")
            continue
        eta = Partition(rp.eta(spec.q, m, spec.s))
        if eta.n != lam.n or not eta.is_valid(spec.eps) or eta == lam or not lam.dominates(eta):
            skipped.append(f"{key}@q={spec.q},s={spec.s},r={spec.r}: eta pattern degenerate")
            continue
        rows[key] = TableRow(
            lam, eta, rp.eps_p,
            Partition(rp.lam_p(spec.q, spec.s)),
            Partition(rp.eta_p(spec.q, spec.s)),
            rp.kp_type,
        )
    return rows, skipped


@dataclass
class InstanceResult:
    spec: FamilySpec
    lam: Partition
    engine_rows: tuple[TableRow, ...]
    mismatches: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    fired: set[str] = field(default_factory=set)


def verify_instance(spec: FamilySpec) -> InstanceResult:
    """Check one family instance: engine rows == instantiated printed rows."""
    lam = family_partition(spec)
    engine = codim2_rows(lam, spec.eps)
    expected, skipped = expected_rows(spec)
    result = InstanceResult(spec, lam, engine, skipped=skipped)
    engine_sigs = {row.signature(): row for row in engine}
    expected_sigs = {row.signature(): key for key, row in expected.items()}
    tag = f"{spec.series}.{spec.family}@q={spec.q},s={spec.s},r={spec.r},lam={lam}"
    for sig, row in engine_sigs.items():
        key = expected_sigs.get(sig)
        if key is None:
            result.mismatches.append(f"{tag}: engine row eta={row.eta} matches no printed row")
        else:
            result.fired.add(key)
    for sig, key in expected_sigs.items():
        if sig not in engine_sigs:
            result.mismatches.append(f"{tag}: printed row {key} not produced by the engine")
    return result


def iter_specs(q_max: int, r_max: int, series: str | None = None):
    """All legal family instances with q <= q_max and rank <= r_max."""
    for fam in FAMILIES:
        if series is not None and fam.series != series:
            continue
        q_lo = 2 if fam.q_parity == 0 else 3
        for q in range(q_lo, q_max + 1, 2):
            for s in fam.s_values(q):
                fixed = sum(fam.pattern(q, 0, s))
                m = fam.m_min
                if fam.m_parity is not None and m % 2 != fam.m_parity:
                    m += 1
                step = 1 if fam.m_parity is None else 2
                while True:
                    n = fixed + m * q
                    if _rank(fam.series, n) > r_max:
                        break
                    want_odd = fam.series == "so-odd"
                    n_min = 2 if fam.series == "sp" else 3
                    if n >= n_min and n % 2 == int(want_odd):
                        yield FamilySpec(fam.series, fam.family, q, s, _rank(fam.series, n))
                    m += step


@dataclass
class TablesReport:
    """Outcome of a full table-regeneration sweep."""

    q_max: int
    r_max: int
    instances: int = 0
    rows_checked: int = 0
    mismatches: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    fired: dict[str, set[str]] = field(default_factory=dict)
    type_e: int = 0
    unexercised: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.type_e == 0

    def as_dict(self) -> dict:
        return {
            "q_max": self.q_max,
            "r_max": self.r_max,
            "instances": self.instances,
            "rows_checked": self.rows_checked,
            "mismatches": list(self.mismatches),
            "skipped": list(self.skipped),
            "type_e": self.type_e,
            "patterns_fired": {k: sorted(v) for k, v in sorted(self.fired.items())},
            "unexercised_patterns": list(self.unexercised),
            "ok": self.ok,
        }


def verify_paper_tables(q_max: int, r_max: int, series: str | None = None) -> TablesReport:
    """Regenerate and check every printed table row within the bounds.

    For each legal instance the engine's codimension-2 rows must coincide
    exactly with the instantiated symbolic rows (eta, eps', lambda',
    eta', type letter), and no row may be of the two-branch type e.
    """
    report = TablesReport(q_max, r_max)
    for fam in FAMILIES:
        report.fired.setdefault(fam.series, set())
    for spec in iter_specs(q_max, r_max, series):
        res = verify_instance(spec)
        report.instances += 1
        report.rows_checked += len(res.engine_rows)
        report.mismatches.extend(res.mismatches)
        report.skipped.extend(res.skipped)
        report.fired[spec.series].update(res.fired)
        report.type_e += sum(1 for row in res.engine_rows if row.kp_type == "e")
    for fam in FAMILIES:
        if series is not None and fam.series != series:
            continue
        for rp in fam.rows:
            key = f"{fam.key}.{rp.key.split('.', 1)[1]}"
            if key not in report.fired[fam.series]:
                report.unexercised.append(key)
    return report


# --- numerology ----------------------------------------------------------


def table1_partition(case: int, r: int) -> Partition:
    """Specific orbit partitions, by case number.

    Case 5: minimal orbit of so_{2r}, r >= 5.  Case 6: the (2^(r-2), 1^4)
    orbit of so_{2r}, r even >= 4.  Case 7: the short orbit of so_{2r+1},
    r >= 3.
    """
    if case == 5:
        if r < 5:
            raise ValueError("case 5 requires r >= 5")
        return Partition([2, 2] + [1] * (2 * r - 4))
    if case == 6:
        if r < 4 or r % 2 == 1:
            raise ValueError("case 6 requires even r >= 4")
        return Partition([2] * (r - 2) + [1] * 4)
    if case == 7:
        if r < 3:
            raise ValueError("case 7 requires r >= 3")
        return Partition([3] + [1] * (2 * r - 2))
    raise ValueError(f"case must be 5, 6 or 7, got {case}")


def central_charge_typeD(k: Fraction | int, r: int) -> Fraction:
    """Exact central charge -(k+r-2)(3kr-6k+2r^2-12r+10)/(k+2r-2)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    k = Fraction(k)
    den = k + 2 * r - 2
    if den == 0:
        raise ValueError(f"central charge has a pole at k = {2 - 2 * r}")
    num = (k + r - 2) * (3 * k * r - 6 * k + 2 * r * r - 12 * r + 10)
    return -num / den


def virasoro_c(p: int, q: int) -> Fraction:
    """Minimal-series central charge 1 - 6(p-q)^2/(pq), p,q >= 2 coprime."""
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p}, {q})")
    return 1 - Fraction(6 * (p - q) ** 2, p * q)
