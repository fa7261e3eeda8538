"""Static lookup tables for nilpotent orbits of the exceptional algebras.

Two facts per Bala-Carter label: whether the orbit closure has branching
(several branches at some boundary point) and whether it is on the known
list of non-normal closures.  The non-normal list is exhaustive for G2,
F4 and E6, and only conjecturally exhaustive for E7 and E8.

The data is embedded verbatim; nothing here is recomputed.  One E8 entry
of the non-normal list, ``2A1+A1``, is kept exactly as printed in the
source tables even though it is not a standard Bala-Carter label for E8
(suspected misprint); looking it up succeeds but emits a warning.
"""

from __future__ import annotations

import unicodedata
import warnings
from dataclasses import dataclass

EXCEPTIONAL_TYPES = ("G2", "F4", "E6", "E7", "E8")


class SuspectDataWarning(UserWarning):
    """A lookup touched an entry flagged as a suspected misprint."""


def normalize_label(label: str) -> str:
    """Canonical spelling: no spaces, ASCII primes, tilde written as ~A."""
    text = unicodedata.normalize("NFC", label).strip()
    text = "".join(text.split())
    for prime in ("′", "’", "`", "´"):
        text = text.replace(prime, "'")
    text = text.replace("″", "''")
    text = text.replace("Ã", "~A")
    text = text.replace("Ã", "~A")
    return text


# Complete Bala-Carter vocabularies (number of nilpotent orbits:
# G2: 5, F4: 16, E6: 21, E7: 45, E8: 70).
_VOCAB: dict[str, tuple[str, ...]] = {
    "G2": ("0", "A1", "~A1", "G2(a1)", "G2"),
    "F4": (
        "0", "A1", "~A1", "A1+~A1", "A2", "~A2", "A2+~A1", "~A2+A1", "B2",
        "C3(a1)", "F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4",
    ),
    "E6": (
        "0", "A1", "2A1", "3A1", "A2", "A2+A1", "2A2", "A2+2A1", "A3",
        "2A2+A1", "A3+A1", "D4(a1)", "A4", "D4", "A4+A1", "A5", "D5(a1)",
        "E6(a3)", "D5", "E6(a1)", "E6",
    ),
    "E7": (
        "0", "A1", "2A1", "(3A1)''", "(3A1)'", "A2", "4A1", "A2+A1",
        "A2+2A1", "A3", "2A2", "A2+3A1", "(A3+A1)''", "2A2+A1", "(A3+A1)'",
        "D4(a1)", "A3+2A1", "D4", "D4(a1)+A1", "A3+A2", "A4", "A3+A2+A1",
        "(A5)''", "D4+A1", "A4+A1", "D5(a1)", "A4+A2", "(A5)'", "A5+A1",
        "D5(a1)+A1", "D6(a2)", "E6(a3)", "D5", "E7(a5)", "A6", "D5+A1",
        "D6(a1)", "E7(a4)", "D6", "E6(a1)", "E6", "E7(a3)", "E7(a2)",
        "E7(a1)", "E7",
    ),
    "E8": (
        "0", "A1", "2A1", "3A1", "A2", "4A1", "A2+A1", "A2+2A1", "A3",
        "A2+3A1", "2A2", "2A2+A1", "A3+A1", "D4(a1)", "D4", "2A2+2A1",
        "A3+2A1", "D4(a1)+A1", "A3+A2", "A4", "A3+A2+A1", "D4+A1",
        "D4(a1)+A2", "A4+A1", "2A3", "D5(a1)", "A4+2A1", "A4+A2", "A5",
        "D5(a1)+A1", "A4+A2+A1", "D4+A2", "E6(a3)", "D5", "A4+A3", "A5+A1",
        "D5(a1)+A2", "D6(a2)", "E6(a3)+A1", "E7(a5)", "D5+A1", "E8(a7)",
        "A6", "D6(a1)", "A6+A1", "E7(a4)", "E6(a1)", "D5+A2", "D6", "E6",
        "D7(a2)", "A7", "E6(a1)+A1", "E7(a3)", "E8(b6)", "D7(a1)", "E6+A1",
        "E7(a2)", "E8(a6)", "D7", "E8(b5)", "E7(a1)", "E8(a5)", "E8(b4)",
        "E7", "E8(a4)", "E8(a3)", "E8(a2)", "E8(a1)", "E8",
        # printed verbatim in the non-normal list; suspected misprint
        "2A1+A1",
    ),
}

# Entries admitted only because a source table prints them; lookups warn.
_SUSPECT: dict[tuple[str, str], str] = {
    ("E8", "2A1+A1"): "not a standard E8 Bala-Carter label; kept verbatim "
    "from the non-normal table (suspected misprint)",
}

# Orbits whose closure has branching (several branches at some boundary
# point).  There is no branching in type G2.
BRANCHING: dict[str, frozenset[str]] = {
    "G2": frozenset(),
    "F4": frozenset({"C3", "C3(a1)"}),
    "E6": frozenset({"A4", "2A2", "A2+A1"}),
    "E7": frozenset({"D6(a1)", "(A5)''", "A4", "A3+A2", "D4(a1)+A1"}),
    "E8": frozenset(
        {
            "E7(a1)", "E6", "E6(a1)", "E7(a4)", "A6", "D6(a1)", "D5+A1",
            "E7(a5)", "A4", "A3+A2", "D4", "D4(a1)", "A3+A1", "2A2+A1",
        }
    ),
}

# Known non-normal orbit closures; exhaustive for G2/F4/E6 only.
NON_NORMAL: dict[str, frozenset[str]] = {
    "G2": frozenset({"~A1"}),
    "F4": frozenset({"C3", "C3(a1)", "~A2+A1", "~A2", "B2"}),
    "E6": frozenset({"A4", "A3+A1", "A3", "2A2", "A2+A1"}),
    "E7": frozenset(
        {
            "D6(a1)", "D6(a2)", "(A5)''", "A4", "A3+A2", "D4(a1)+A1",
            "A3+2A1", "(A3+A1)'", "(A3+A1)''", "A3",
        }
    ),
    "E8": frozenset(
        {
            "E7(a1)", "E7(a2)", "D7(a1)", "E7(a3)", "E6", "D6", "E6(a1)",
            "E7(a4)", "D6(a1)", "A6", "D5+A1", "E7(a5)", "E6(a3)+A1",
            "D6(a2)", "D5(a1)+A2", "A5+A1", "D5", "E6(a3)", "D4+A2",
            "D5(a1)+A1", "A5", "D5(a1)", "D4+A1", "A4", "A3+A2", "A3+2A1",
            "D4", "D4(a1)", "A3+A1", "2A1+A1", "A3",
        }
    ),
}

NON_NORMAL_EXHAUSTIVE: dict[str, bool] = {
    "G2": True,
    "F4": True,
    "E6": True,
    "E7": False,
    "E8": False,
}


def _check(extype: str, label: str) -> str:
    if extype not in EXCEPTIONAL_TYPES:
        raise ValueError(f"unknown exceptional type {extype!r}")
    canon = normalize_label(label)
    if canon not in _VOCAB[extype]:
        raise KeyError(f"unknown {extype} orbit label {label!r}")
    note = _SUSPECT.get((extype, canon))
    if note:
        warnings.warn(f"{extype} label {canon}: {note}", SuspectDataWarning, stacklevel=3)
    return canon


def has_branching(extype: str, label: str) -> bool:
    """Whether the labelled orbit closure has branching."""
    return _check(extype, label) in BRANCHING[extype]


@dataclass(frozen=True)
class NonNormalStatus:
    listed: bool
    exhaustive: bool | None  # None when listed (exhaustiveness moot)

    def as_dict(self) -> dict:
        return {"listed": self.listed, "exhaustive": self.exhaustive}


def nonnormal_status(extype: str, label: str) -> NonNormalStatus:
    """Membership in the known non-normal list, with its exhaustiveness."""
    canon = _check(extype, label)
    if canon in NON_NORMAL[extype]:
        return NonNormalStatus(True, None)
    return NonNormalStatus(False, NON_NORMAL_EXHAUSTIVE[extype])


def slice_irreducible_exceptional(extype: str, label: str) -> bool:
    """Slices into the labelled closure are irreducible at every point
    exactly when the closure has no branching."""
    return not has_branching(extype, label)


def data_note(extype: str, label: str) -> str | None:
    """Caveat attached to an entry, if any (suspected misprints)."""
    if extype not in EXCEPTIONAL_TYPES:
        raise ValueError(f"unknown exceptional type {extype!r}")
    return _SUSPECT.get((extype, normalize_label(label)))


def export_tables() -> dict:
    """The embedded tables as plain JSON-ready data."""
    return {
        "branching": {t: sorted(BRANCHING[t]) for t in EXCEPTIONAL_TYPES},
        "non_normal": {t: sorted(NON_NORMAL[t]) for t in EXCEPTIONAL_TYPES},
        "non_normal_exhaustive": dict(NON_NORMAL_EXHAUSTIVE),
    }
