"""Command-line front end.

Exit codes: 0 success, 1 domain error (or a failed ``verify`` check),
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

from . import actions, diophantine, families, picard
from .errors import MukaiError
from .lattice import MukaiVector, moduli_dim, moduli_regime, n_from_v, square_norm

log = logging.getLogger("k3mukai.cli")

FORMATS = ("table", "json", "csv")

FAMILY_COLUMNS = ["g0", "k", "g", "v.r", "v.c", "v.s", "n", "delta", "v_squared", "admissible"]
MARKMAN_COLUMNS = ["g", "r", "v.r", "v.c", "v.s", "dim", "regular"]
VERIFY_COLUMNS = ["check", "passed", "detail"]


@dataclass
class Report:
    """A JSON-able payload plus the column order used for csv/table output."""

    payload: Any
    columns: Optional[List[str]] = None


def _flatten(obj: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


def _rows(report: Report) -> tuple:
    payload = report.payload
    items = payload if isinstance(payload, list) else [payload]
    rows = [_flatten(item) for item in items]
    columns = list(report.columns or [])
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns, rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.payload, indent=2) + "\n"
    columns, rows = _rows(report)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "table":
        if report.columns:
            columns = list(report.columns)
        cells = [[_cell(row.get(c)) for c in columns] for row in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        for r in cells:
            lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# --- argument types ---------------------------------------------------------


def _vector(text: str) -> MukaiVector:
    try:
        return MukaiVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str):
    try:
        if text.lstrip().startswith("["):
            return actions.word_from_json(text)
        return actions.parse_word(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# --- subcommands ------------------------------------------------------------


def cmd_act(args) -> Report:
    image = actions.apply_word(args.word, args.v, args.g)
    matrix = actions.compile_word(args.word, args.g)
    return Report(
        {
            "g": args.g,
            "word": actions.word_to_json(args.word),
            "v": args.v.to_dict(),
            "image": image.to_dict(),
            "matrix": matrix,
        },
        ["g", "v.r", "v.c", "v.s", "image.r", "image.c", "image.s"],
    )


def cmd_fixed(args) -> Report:
    cfg = actions.PhiConfig(args.s, args.d, args.g)
    return Report(actions.fixed_report(cfg, args.v).to_dict())


def cmd_family(args) -> Report:
    if args.g0 is not None or args.k is not None:
        if args.g0 is None or args.k is None:
            raise MukaiError("--g0 and --k must be given together")
        insts = [families.build_family_instance(args.g0, args.k)]
    else:
        insts = families.enumerate_families(args.g0_max, args.k_max)
    return Report([inst.to_dict() for inst in insts], FAMILY_COLUMNS)


def cmd_markman(args) -> Report:
    return Report([m.to_dict() for m in families.markman_instances(args.g)], MARKMAN_COLUMNS)


def _instance(args):
    return families.build_family_instance(args.g0, args.k)


def cmd_picard(args) -> Report:
    if args.v is not None:
        if args.g is None:
            raise MukaiError("--v needs --g")
        data = picard.picard_data_for_vector(args.v, args.g)
    else:
        data = picard.picard_data(_instance(args))
    return Report(data.to_dict())


def cmd_classify(args) -> Report:
    inst = _instance(args)
    result = picard.classify_invariant(inst)
    payload = result.to_dict()
    payload["g"] = inst.g
    payload["v"] = inst.v.to_dict()
    return Report(payload, ["g", "n", "delta", "possible"])


def cmd_complement(args) -> Report:
    basis = picard.orthogonal_complement(args.v, args.g)
    return Report([b.to_dict() for b in basis], ["r", "c", "s"])


def cmd_dim(args) -> Report:
    dim = moduli_dim(args.v, args.g)
    payload = {
        "g": args.g,
        "v": args.v.to_dict(),
        "v_squared": square_norm(args.v, args.g),
        "dim": dim,
        "regime": moduli_regime(dim),
        "n": n_from_v(args.v, args.g) if dim >= 2 else None,
    }
    return Report(payload)


def cmd_normalize(args) -> Report:
    return Report(actions.normalize_config(args.s, args.d, args.v, args.g).to_dict())


def cmd_pell(args) -> Report:
    if args.D is not None:
        sol = diophantine.pell_minimal(args.D)
    elif args.g is not None and args.n is not None:
        sol = diophantine.pell_for_moduli(args.g, args.n)
    else:
        raise MukaiError("give --D, or both --g and --n")
    return Report(sol.to_dict(), ["D", "z", "y"])


def run_verify(
    k_max: int = 50,
    g0_max: int = 50,
    family_k_max: int = 6,
    genera: Sequence[int] = (2, 6, 10, 14, 22),
    samples: int = 1000,
    bound: int = 10**6,
    seed: int = 0,
) -> List[dict]:
    """Run the built-in verification sweeps; one result row per check."""
    rows = []

    bad = [k for k in range(k_max + 1) if not diophantine.check_stability_intervals(k, False).ok]
    rows.append({"check": "stability_intervals", "passed": not bad,
                 "detail": f"k <= {k_max}; failing k: {bad[:10]}"})

    rows.append({"check": "slope_monotonicity", "passed": diophantine.check_slope_monotonicity(k_max),
                 "detail": f"k <= {k_max}"})

    insts = families.enumerate_families(g0_max, family_k_max)
    failures = [(i.g0, i.k) for i in insts if not picard.verify_reflection_identity(i).holds]
    rows.append({"check": "reflection_identity", "passed": not failures,
                 "detail": f"{len(insts)} instances (g0 <= {g0_max}, k <= {family_k_max}); failing: {failures[:10]}"})

    rng = random.Random(seed)
    broken = []
    for g in genera:
        for cfg in actions.derive_admissible_configs(g):
            for _ in range(samples):
                v = MukaiVector(*(rng.randint(-bound, bound) for _ in range(3)))
                if actions.phi_on_mukai(cfg, actions.phi_on_mukai(cfg, v)) != v:
                    broken.append((g, cfg.case, v.as_tuple()))
    rows.append({"check": "phi_involutivity", "passed": not broken,
                 "detail": f"{samples} vectors per config, g in {list(genera)}; failing: {broken[:5]}"})
    return rows


def cmd_verify(args) -> Report:
    rows = run_verify(
        k_max=args.k_max,
        g0_max=args.g0_max,
        family_k_max=args.family_k_max,
        genera=args.genera,
        samples=args.samples,
        seed=args.seed,
    )
    return Report(rows, VERIFY_COLUMNS)


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="k3mukai",
        description="Mukai-lattice computations for anti-symplectic involutions of K3 moduli spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("act", parents=[common], help="apply an equivalence word to a Mukai vector")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--word", type=_word, required=True,
                   help='e.g. "reflect:2,1,5;dual;shift;tensor:1" (left to right) or a JSON list')
    p.add_argument("--v", type=_vector, required=True)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("fixed", parents=[common], help="is v fixed by Phi_{S,d}?")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--s", type=_vector, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--v", type=_vector, required=True)
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("family", parents=[common], help="rank 2k+1 involution family")
    p.add_argument("--g0-max", type=int, default=5)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--g0", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("markman", parents=[common], help="Markman-O'Grady vectors (r,H,r)")
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_markman)

    p = sub.add_parser("picard", parents=[common], help="Picard Gram matrix of M(v)")
    p.add_argument("--g0", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--v", type=_vector)
    p.set_defaults(func=cmd_picard)

    p = sub.add_parser("classify", parents=[common], help="possible invariant lattices")
    p.add_argument("--g0", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("complement", parents=[common], help="basis of v-perp")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--v", type=_vector, required=True)
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("dim", parents=[common], help="v^2, dim M(v) and n")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--v", type=_vector, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("normalize", parents=[common], help="conjugate (s, d, v) to d in {0,1}")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--s", type=_vector, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--v", type=_vector, required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("pell", parents=[common], help="minimal solution of z^2 - D y^2 = 1")
    p.add_argument("--D", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("verify", parents=[common], help="run the verification sweeps")
    p.add_argument("--k-max", type=int, default=50, help="interval / monotonicity sweep bound")
    p.add_argument("--g0-max", type=int, default=50)
    p.add_argument("--family-k-max", type=int, default=6)
    p.add_argument("--genera", type=_int_list, default=[2, 6, 10, 14, 22])
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        report = args.func(args)
    except MukaiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = render(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not all(row["passed"] for row in report.payload):
        return 1
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
