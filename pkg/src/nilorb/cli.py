"""Command-line front end.

Every library operation is reachable from here with deterministic,
machine-readable output.  Exit codes: 0 success, 1 domain error (invalid
partition, unknown label, ...), 2 usage error.  All numeric output is
exact; rationals are rendered as strings like ``-22/5``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import admissible, exceptional, kraft_procesi as kp, w2
from .orbits import (
    ClassicalAlgebra,
    Orbit,
    WeightedDynkinDiagram,
    dim_orbit,
    weighted_dynkin,
)
from .partitions import Partition, enumerate_eps, hasse, minimal_degenerations, parse_partition

FORMATS = ("pretty", "json", "tsv", "dot")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_kv(payload: dict) -> None:
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}\t{value}")


def _emit(payload: dict, fmt: str, pretty_lines: list[str]) -> None:
    if fmt == "json":
        _emit_json(payload)
    elif fmt == "tsv":
        _emit_kv(payload)
    else:
        for line in pretty_lines:
            print(line)


def _algebra_from_args(args) -> ClassicalAlgebra:
    if args.series is None or args.n is None:
        raise ValueError("this command needs --series and --n")
    return ClassicalAlgebra(args.series, args.n)


def _eps_from_args(args) -> int:
    if args.eps is None:
        raise ValueError("this command needs --eps 1 or --eps -1")
    return args.eps


# --- subcommand handlers ---------------------------------------------------


def _cmd_partition(args) -> int:
    lam = parse_partition(args.lam)
    payload = {
        "partition": lam.as_list(),
        "n": lam.n,
        "dual": lam.dual().as_list(),
        "valid_orthogonal": lam.is_valid(1),
        "valid_symplectic": lam.is_valid(-1),
    }
    _emit(
        payload,
        args.format,
        [
            f"partition {lam} of n={lam.n}",
            f"dual      {lam.dual()}",
            f"orthogonal-valid: {payload['valid_orthogonal']}   "
            f"symplectic-valid: {payload['valid_symplectic']}",
        ],
    )
    return 0


def _cmd_orbit(args) -> int:
    algebra = _algebra_from_args(args)
    orbit = Orbit(algebra, parse_partition(args.lam), args.label)
    payload = orbit.as_dict()
    payload["dim"] = dim_orbit(orbit)
    _emit(
        payload,
        args.format,
        [
            f"orbit {orbit.lam} in {algebra}",
            f"dim = {payload['dim']}, very even: {orbit.very_even}"
            + (f", label {orbit.so_label}" if orbit.so_label else ""),
        ],
    )
    return 0


def _cmd_dynkin(args) -> int:
    algebra = _algebra_from_args(args)
    orbit = Orbit(algebra, parse_partition(args.lam), args.label)
    diagram = weighted_dynkin(orbit)
    payload = orbit.as_dict()
    payload.update(diagram.as_dict())
    _emit(
        payload,
        args.format,
        [f"weighted Dynkin diagram of {orbit.lam} in {algebra}: "
         + ",".join(str(x) for x in diagram.labels)],
    )
    return 0


def _cmd_hasse(args) -> int:
    eps = _eps_from_args(args)
    if args.n is None:
        raise ValueError("hasse needs --n")
    nodes = enumerate_eps(args.n, eps)
    edges = hasse(args.n, eps)
    if args.format == "dot":
        print("digraph hasse {")
        for node in nodes:
            print(f'  "{node}";')
        for lam, eta in edges:
            print(f'  "{lam}" -> "{eta}";')
        print("}")
        return 0
    payload = {
        "n": args.n,
        "eps": eps,
        "nodes": [p.as_list() for p in nodes],
        "edges": [[lam.as_list(), eta.as_list()] for lam, eta in edges],
    }
    _emit(
        payload,
        args.format,
        [f"{lam} -> {eta}" for lam, eta in edges] or ["(no edges)"],
    )
    return 0


def _degeneration_payload(lam: Partition, eta: Partition, eps: int) -> dict:
    algebra = ClassicalAlgebra("so" if eps == 1 else "sp", lam.n)
    red = kp.reduce_degeneration(lam, eta, eps)
    cls = kp.classify_irreducible(red.lam_p, red.eta_p, red.eps_p)
    if cls.kind is kp.SingKind.NOT_MINIMAL:
        cls = kp.SingularityClass(kp.SingKind.UNKNOWN_NON_MINIMAL)
    codim = kp.dim_nilpotent_orbit(algebra, lam) - kp.dim_nilpotent_orbit(algebra, eta)
    return {
        "lambda": lam.as_list(),
        "eta": eta.as_list(),
        "eps": eps,
        "reduction": red.as_dict(),
        "kp_type": cls.kp_type,
        "singularity": cls.label(),
        "codim": codim,
        "components": kp.branches_at(lam, eta, eps),
    }


def _cmd_degen(args) -> int:
    eps = _eps_from_args(args)
    payload = _degeneration_payload(parse_partition(args.lam), parse_partition(args.eta), eps)
    red = payload["reduction"]
    _emit(
        payload,
        args.format,
        [
            f"degeneration {args.lam} > {args.eta} (eps={eps})",
            f"irreducible pair: {Partition(red['lambda_p'])} > {Partition(red['eta_p'])} "
            f"(eps'={red['eps_p']})",
            f"codim {payload['codim']}, type {payload['kp_type']}, "
            f"singularity {payload['singularity']}, components {payload['components']}",
        ],
    )
    return 0


_cmd_sing = _cmd_degen  # same report; `sing` highlights the classification


def _cmd_normal(args) -> int:
    algebra = _algebra_from_args(args)
    lam = parse_partition(args.lam)
    verdict = kp.is_normal_closure(algebra, lam)
    payload = {"series": algebra.series, "n": algebra.n, "partition": lam.as_list()}
    payload.update(verdict.as_dict())
    witness_text = (
        " witnesses: " + "; ".join(str(Partition(w)) for w in payload["witnesses"])
        if payload["witnesses"]
        else ""
    )
    _emit(
        payload,
        args.format,
        [f"closure of {lam} in {algebra}: {verdict.status}{witness_text}"],
    )
    return 0


def _cmd_slice(args) -> int:
    algebra = _algebra_from_args(args)
    report = kp.slice_report(algebra, parse_partition(args.lam), parse_partition(args.eta))
    payload = report.as_dict()
    payload["series"] = algebra.series
    payload["n"] = algebra.n
    pretty = [
        f"slice of the {report.lam}-closure at a {report.eta}-point in {algebra}: {report.kind}"
    ]
    if report.kind == kp.PROPER_SLICE:
        pretty.append(
            f"dim {report.dimension}, components {report.components}, "
            f"singularity {payload['singularity']}"
        )
    _emit(payload, args.format, pretty)
    return 0


def _cmd_exceptional(args) -> int:
    extype = args.extype
    if args.label is None:
        _emit_json(exceptional.export_tables())
        return 0
    branching = exceptional.has_branching(extype, args.label)
    status = exceptional.nonnormal_status(extype, args.label)
    payload = {
        "type": extype,
        "label": exceptional.normalize_label(args.label),
        "branching": branching,
        "non_normal_listed": status.listed,
        "non_normal_exhaustive": status.exhaustive,
        "slice_irreducible": not branching,
        "note": exceptional.data_note(extype, args.label),
    }
    _emit(
        payload,
        args.format,
        [
            f"{extype} orbit {payload['label']}: branching={branching}, "
            f"non-normal listed={status.listed}"
            + ("" if status.listed else f" (exhaustive: {status.exhaustive})"),
        ],
    )
    return 0


_TABLE_COLUMNS = ("family", "q", "s", "lambda", "eta", "eps_p", "lambda_p", "eta_p", "type")


def _table_rows_for(series: str, q: int, rank: int) -> list[dict]:
    rows = []
    for spec in admissible.iter_specs(q, rank, series):
        if spec.q != q or spec.r != rank:
            continue
        lam = admissible.family_partition(spec)
        for row in admissible.codim2_rows(lam, spec.eps):
            rows.append(
                {
                    "family": spec.family,
                    "q": spec.q,
                    "s": spec.s,
                    "lambda": str(row.lam),
                    "eta": str(row.eta),
                    "eps_p": row.eps_p,
                    "lambda_p": str(row.lam_p),
                    "eta_p": str(row.eta_p),
                    "type": row.kp_type,
                }
            )
    rows.sort(key=lambda r: (r["family"], r["s"], r["eta"]))
    return rows


def render_table_tsv(series: str, q: int, rank: int) -> str:
    lines = ["\t".join(_TABLE_COLUMNS)]
    for row in _table_rows_for(series, q, rank):
        lines.append("\t".join(str(row[c]) for c in _TABLE_COLUMNS))
    return "\n".join(lines) + "\n"


def _cmd_admissible_table(args) -> int:
    fmt = args.format
    if args.json:
        fmt = "json"
    if args.tsv:
        fmt = "tsv"
    if fmt == "json":
        _emit_json(
            {
                "series": args.series,
                "q": args.q,
                "rank": args.rank,
                "rows": _table_rows_for(args.series, args.q, args.rank),
            }
        )
    else:
        sys.stdout.write(render_table_tsv(args.series, args.q, args.rank))
    return 0


def _cmd_admissible_verify(args) -> int:
    report = admissible.verify_paper_tables(args.q_max, args.rank_max)
    payload = report.as_dict()
    if args.golden:
        golden_dir = Path(args.golden)
        failures = []
        for path in sorted(golden_dir.glob("*.tsv")):
            series, q, rank = _parse_golden_name(path.stem)
            fresh = render_table_tsv(series, q, rank)
            if fresh != path.read_text():
                failures.append(path.name)
        payload["golden_failures"] = failures
        if failures:
            payload["ok"] = False
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"instances: {payload['instances']}  rows: {payload['rows_checked']}")
        print(f"mismatches: {len(payload['mismatches'])}  type e rows: {payload['type_e']}")
        for miss in payload["mismatches"]:
            print(f"  MISMATCH {miss}")
        if "golden_failures" in payload:
            print(f"golden failures: {payload['golden_failures']}")
        print("ok" if payload["ok"] else "FAILED")
    return 0 if payload["ok"] else 1


def _parse_golden_name(stem: str) -> tuple[str, int, int]:
    # e.g. sp_q5_r7 or so-odd_q5_r6
    try:
        series, q_part, r_part = stem.rsplit("_", 2)
        return series, int(q_part.lstrip("q")), int(r_part.lstrip("r"))
    except ValueError:
        raise ValueError(f"golden file name {stem!r} must look like sp_q5_r7") from None


def _cmd_w2(args) -> int:
    if args.w2_action == "gens":
        gens = w2.w2_generators(args.rank)
        payload = {
            "rank": args.rank,
            "count": len(gens),
            "generators": [g.as_dict() for g in gens],
        }
        _emit(
            payload,
            args.format,
            [f"rank {args.rank}: {len(gens)} generators"]
            + [
                " + ".join(f"{c}*h{i}*h{j}" for (i, j), c in g.terms)
                for g in gens
            ],
        )
        return 0
    if args.w2_action == "check":
        point = CartanPointFromText(args.rank, args.omega, args.eps_coords)
        gens = w2.w2_generators(args.rank)
        vanishes = w2.vanishes_at(gens, point)
        axis = w2.eps_line_membership(point)
        payload = {
            "rank": args.rank,
            "omega": [str(c) for c in point.to_omega().coords],
            "eps": [str(c) for c in point.to_eps().coords],
            "vanishes": vanishes,
            "axis": axis,
        }
        _emit(
            payload,
            args.format,
            [f"vanishes: {vanishes}, axis: {axis}"],
        )
        return 0
    # sample
    bad = w2.offaxis_vanishing_points(args.rank, args.count, args.seed)
    payload = {
        "rank": args.rank,
        "count": args.count,
        "seed": args.seed,
        "unexpected_vanishing": [[str(c) for c in p.coords] for p in bad],
        "ok": not bad,
    }
    _emit(
        payload,
        args.format,
        [f"sampled {args.count} off-axis points (seed {args.seed}): "
         f"{'all nonvanishing' if not bad else f'{len(bad)} FAILURES'}"],
    )
    return 0 if not bad else 1


def CartanPointFromText(rank: int, omega: str | None, eps_coords: str | None) -> w2.CartanPoint:
    if (omega is None) == (eps_coords is None):
        raise ValueError("give exactly one of --omega or --eps-coords")
    text = omega if omega is not None else eps_coords
    coords = [Fraction(tok.strip()) for tok in text.split(",")]
    if len(coords) != rank:
        raise ValueError(f"expected {rank} coordinates, got {len(coords)}")
    if omega is not None:
        return w2.CartanPoint.omega(coords)
    return w2.CartanPoint.eps(coords)


def _cmd_minimal(args) -> int:
    # convenience: the lower covers of a partition (used by `degen --list`)
    eps = _eps_from_args(args)
    lam = parse_partition(args.lam)
    degens = minimal_degenerations(lam, eps)
    payload = {
        "lambda": lam.as_list(),
        "eps": eps,
        "minimal_degenerations": [d.as_list() for d in degens],
    }
    _emit(payload, args.format, [str(d) for d in degens] or ["(none)"])
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilorb",
        description="Nilpotent-orbit combinatorics for the classical Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, fmt=True):
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="pretty")

    p = sub.add_parser("partition", help="parse and describe a partition")
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=_cmd_partition)

    for name, func, needs_eta in (
        ("orbit", _cmd_orbit, False),
        ("dynkin", _cmd_dynkin, False),
    ):
        p = sub.add_parser(name)
        p.add_argument("--series", choices=("sl", "so", "sp"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--label", choices=("I", "II"), default=None)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("hasse", help="covering edges of the eps-valid dominance order")
    p.add_argument("--eps", type=int, choices=(1, -1), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_hasse)

    for name, func in (("degen", _cmd_degen), ("sing", _cmd_sing)):
        p = sub.add_parser(name, help="reduce and classify a degeneration")
        p.add_argument("--eps", type=int, choices=(1, -1), required=True)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--eta", required=True)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("minimal", help="minimal degenerations of a partition")
    p.add_argument("--eps", type=int, choices=(1, -1), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("normal", help="normality of an orbit closure")
    p.add_argument("--series", choices=("sl", "so", "sp"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=_cmd_normal)

    p = sub.add_parser("slice", help="transverse-slice report")
    p.add_argument("--series", choices=("sl", "so", "sp"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--eta", required=True)
    common(p)
    p.set_defaults(func=_cmd_slice)

    p = sub.add_parser("exceptional", help="exceptional-type orbit data")
    p.add_argument("--type", dest="extype", choices=exceptional.EXCEPTIONAL_TYPES, required=True)
    p.add_argument("--label", default=None)
    common(p)
    p.set_defaults(func=_cmd_exceptional)

    p = sub.add_parser("admissible", help="partition families and their tables")
    asub = p.add_subparsers(dest="admissible_action", required=True)
    pt = asub.add_parser("table", help="codimension-2 rows for one (series, q, rank)")
    pt.add_argument("--series", choices=admissible.SERIES_KEYS, required=True)
    pt.add_argument("--q", type=int, required=True)
    pt.add_argument("--rank", type=int, required=True)
    pt.add_argument("--json", action="store_true")
    pt.add_argument("--tsv", action="store_true")
    common(pt)
    pt.set_defaults(func=_cmd_admissible_table)
    pv = asub.add_parser("verify", help="regenerate and check all table rows")
    pv.add_argument("--q-max", type=int, default=9)
    pv.add_argument("--rank-max", type=int, default=12)
    pv.add_argument("--golden", default=None, help="directory of golden .tsv tables")
    common(pv)
    pv.set_defaults(func=_cmd_admissible_verify)

    p = sub.add_parser("w2", help="exact type-B quadratic generators and zero locus")
    wsub = p.add_subparsers(dest="w2_action", required=True)
    pg = wsub.add_parser("gens")
    pg.add_argument("--rank", type=int, required=True)
    common(pg)
    pg.set_defaults(func=_cmd_w2)
    pc = wsub.add_parser("check")
    pc.add_argument("--rank", type=int, required=True)
    pc.add_argument("--omega", default=None, help="fundamental-weight coordinates c1,...,cR")
    pc.add_argument("--eps-coords", default=None, help="eps coordinates a1,...,aR")
    common(pc)
    pc.set_defaults(func=_cmd_w2)
    ps = wsub.add_parser("sample")
    ps.add_argument("--rank", type=int, required=True)
    ps.add_argument("--count", type=int, default=1000)
    ps.add_argument("--seed", type=int, default=0)
    common(ps)
    ps.set_defaults(func=_cmd_w2)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
