"""Combinatorics of nilpotent orbits in the classical Lie algebras.

Partitions with orthogonal/symplectic validity, the dominance/closure
order, Kraft-Procesi degeneration reduction and singularity
classification, normality of orbit closures, weighted Dynkin diagrams,
branching data for the exceptional types, admissible partition families
with regenerated degeneration tables, and exact quadratic invariants on
the type-B Cartan.
"""

from .partitions import (
    ORTHOGONAL,
    SYMPLECTIC,
    Partition,
    collapse,
    covers,
    dominates,
    dual,
    enumerate_eps,
    hasse,
    is_valid_eps,
    minimal_degenerations,
    parse_partition,
)
from .orbits import (
    ClassicalAlgebra,
    Orbit,
    VeryEvenOrderWarning,
    WeightedDynkinDiagram,
    closure_leq,
    codim_degeneration,
    dim_nilpotent_orbit,
    dim_orbit,
    orbit_from_partition,
    weighted_dynkin,
)
from .kraft_procesi import (
    NormalityVerdict,
    Reduction,
    SingKind,
    SingularityClass,
    SliceReport,
    branches_at,
    classify_irreducible,
    degeneration_singularity,
    is_normal_closure,
    reduce_degeneration,
    slice_report,
)
from .exceptional import (
    NonNormalStatus,
    has_branching,
    nonnormal_status,
    slice_irreducible_exceptional,
)
from .admissible import (
    FamilySpec,
    TableRow,
    central_charge_typeD,
    codim2_rows,
    family_partition,
    table1_partition,
    verify_paper_tables,
    virasoro_c,
)
from .w2 import (
    CartanPoint,
    QuadPoly,
    eps_line_membership,
    eps_to_omega,
    omega_to_eps,
    vanishes_at,
    w2_generators,
)

__version__ = "0.1.0"

__all__ = [
    "ORTHOGONAL",
    "SYMPLECTIC",
    "Partition",
    "collapse",
    "covers",
    "dominates",
    "dual",
    "enumerate_eps",
    "hasse",
    "is_valid_eps",
    "minimal_degenerations",
    "parse_partition",
    "ClassicalAlgebra",
    "Orbit",
    "VeryEvenOrderWarning",
    "WeightedDynkinDiagram",
    "closure_leq",
    "codim_degeneration",
    "dim_nilpotent_orbit",
    "dim_orbit",
    "orbit_from_partition",
    "weighted_dynkin",
    "NormalityVerdict",
    "Reduction",
    "SingKind",
    "SingularityClass",
    "SliceReport",
    "branches_at",
    "classify_irreducible",
    "degeneration_singularity",
    "is_normal_closure",
    "reduce_degeneration",
    "slice_report",
    "NonNormalStatus",
    "has_branching",
    "nonnormal_status",
    "slice_irreducible_exceptional",
    "FamilySpec",
    "TableRow",
    "central_charge_typeD",
    "codim2_rows",
    "family_partition",
    "table1_partition",
    "verify_paper_tables",
    "virasoro_c",
    "CartanPoint",
    "QuadPoly",
    "eps_line_membership",
    "eps_to_omega",
    "omega_to_eps",
    "vanishes_at",
    "w2_generators",
]
