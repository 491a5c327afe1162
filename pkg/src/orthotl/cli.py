"""
Command-line front end.

    orthotl qint 3
    orthotl basis --n 4 --shape 2,2 --kind omega
    orthotl transition --shape 3,3 --which Pprime --format csv
    orthotl tl-matrix --n 3 --gen 1
    orthotl verify --suite orthogonality --n 6
    orthotl verify --suite all --specialize 1
    orthotl bijection --shape 3,2

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from orthotl.combinatorics.shapes import Shape, convert, enumerate_one_factors, shapes_of
from orthotl.core import matrices as mx
from orthotl.core.errors import OrthoTLError
from orthotl.core.qscalars import bracket, parse_rational
from orthotl.diagrams.tl_diagrams import DELTA_SIGNS, ei_matrix
from orthotl.modules.maximal import build_basis
from orthotl.modules.tensor_rep import all_signs
from orthotl.modules.transitions import matrix_P, matrix_Pprime, pipp_table
from orthotl.utils.config import DEFAULT_SUITES, Settings, load_settings
from orthotl.utils.log import get_logger, set_level
from orthotl.utils.serialization import to_csv_text, to_json_text, write_output
from orthotl.verification.suites import SUITES, run_all, run_suite

logger = get_logger("orthotl.cli")


class UsageError(OrthoTLError):
    """A flag value that the command cannot use."""


def _shape(args: argparse.Namespace) -> Shape:
    if args.shape is None:
        raise UsageError("--shape is required")
    shape = Shape.parse(args.shape)
    if args.n is not None and args.n != shape.n:
        raise UsageError(f"--n {args.n} does not match --shape {args.shape} (n = {shape.n})")
    return shape


def _shapes(args: argparse.Namespace) -> list[Shape]:
    if args.shape is not None:
        return [_shape(args)]
    if args.n is None:
        raise UsageError("give --n or --shape")
    return shapes_of(args.n)


# ---------------------------------------------------------------------------
# Commands: each returns (json payload, csv records, exit code)
# ---------------------------------------------------------------------------


def cmd_qint(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    value = bracket(args.k)
    return value.to_json(), [{"k": args.k, "value": value}], 0


def cmd_basis(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    payload, records = [], []
    for shape in _shapes(args):
        for alpha, vec in build_basis(shape, args.kind).ordered():
            payload.append({"shape": str(shape), "one_factor": alpha.to_json(), "vector": vec.to_json()})
            for signs, c in vec:
                records.append({"shape": str(shape), "one_factor": str(alpha), "signs": signs, "coeff": c})
    return payload, records, 0


def cmd_transition(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    shape = _shape(args)
    if args.which == "pipp":
        table = pipp_table(shape)
        payload = [
            {"alpha": a.to_json(), "beta": b.to_json(), "terms": poly.to_json(), "expr": str(poly)}
            for (a, b), poly in table.items()
        ]
        records = [{"alpha": str(a), "beta": str(b), "pipp": str(poly)} for (a, b), poly in table.items()]
        return payload, records, 0
    m = matrix_P(shape) if args.which == "P" else matrix_Pprime(shape)
    records = [
        {"alpha": str(a), "beta": str(b), "entry": m.entries[r, c]}
        for r, a in enumerate(m.index)
        for c, b in enumerate(m.index)
        if m.entries[r, c]
    ]
    return m.to_json(), records, 0


def cmd_tl_matrix(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    if args.n is None or args.gen is None:
        raise UsageError("tl-matrix needs --n and --gen")
    sign = args.delta_sign or settings.delta_sign
    op = ei_matrix(args.n, args.gen, sign)
    entries = op.to_matrix()
    basis = all_signs(args.n)
    payload = {
        "n": args.n,
        "gen": args.gen,
        "delta_sign": sign,
        "basis": [list(s) for s in basis],
        "entries": mx.to_json(entries),
    }
    records = [
        {"row": basis[r], "col": basis[c], "entry": entries[r, c]}
        for r in range(len(basis))
        for c in range(len(basis))
        if entries[r, c]
    ]
    return payload, records, 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    if args.n is not None and args.n < 1:
        raise UsageError(f"--n must be at least 1, got {args.n}")
    shape = Shape.parse(args.shape) if args.shape else None
    options: dict[str, Any] = {
        "shape": shape,
        "seed": args.seed,
        "delta_sign": args.delta_sign,
        "specialize_at": parse_rational(args.specialize) if args.specialize is not None else None,
    }
    if args.suite == "all":
        reports = run_all(settings, n=args.n, **options)
    else:
        reports = [run_suite(args.suite, args.n, settings, **options)]
    payload = [r.model_dump() for r in reports]
    records = [
        {
            "suite": r.suite,
            "n": r.n,
            "shape": r.shape,
            "checks_run": r.checks_run,
            "failures": len(r.failures),
            "passed": r.passed,
            "wall_time": r.wall_time,
        }
        for r in reports
    ]
    code = 0 if all(r.passed for r in reports) else 1
    return (payload[0] if len(payload) == 1 else payload), records, code


def cmd_bijection(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict], int]:
    records = []
    for shape in _shapes(args):
        for alpha in enumerate_one_factors(shape):
            records.append(
                {
                    "shape": str(shape),
                    "one_factor": alpha.to_json(),
                    "walk": convert(alpha, "walk").to_json(),
                    "link": convert(alpha, "link").to_json(),
                    "tableau": convert(alpha, "tableau").to_json(),
                }
            )
    return records, records, 0


COMMANDS = {
    "qint": cmd_qint,
    "basis": cmd_basis,
    "transition": cmd_transition,
    "tl-matrix": cmd_tl_matrix,
    "verify": cmd_verify,
    "bijection": cmd_bijection,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None, help="Output format (default from config)")
    common.add_argument("--out", default=None, help="Write output to this file instead of stdout")
    common.add_argument("--config", default=None, help="Path to a YAML config file")

    parser = argparse.ArgumentParser(
        prog="orthotl", description="Orthogonal bases for tensor space and Temperley-Lieb cell modules"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qint", parents=[common], help="Quantum integer [k]")
    p.add_argument("k", type=int)

    p = sub.add_parser("basis", parents=[common], help="omega or nu vectors of a shape")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--shape", default=None, help="L1,L2")
    p.add_argument("--kind", choices=["omega", "nu"], default="omega")

    p = sub.add_parser("transition", parents=[common], help="Transition matrix P, P' or the pi'' polynomials")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--shape", default=None, help="L1,L2")
    p.add_argument("--which", choices=["P", "Pprime", "pipp"], default="P")

    p = sub.add_parser("tl-matrix", parents=[common], help="Matrix of e_i on the tensor space")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--gen", type=int, default=None, help="Generator index i, 1 <= i < n")
    p.add_argument("--delta-sign", choices=list(DELTA_SIGNS), default=None)

    caps = ", ".join(f"{name} {n}" for name, n in DEFAULT_SUITES.items())
    p = sub.add_parser(
        "verify",
        parents=[common],
        help="Run verification suites",
        description=f"Run a verification suite for every n up to --n. Default caps: {caps}.",
    )
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--shape", default=None, help="Restrict to one shape L1,L2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--delta-sign", choices=list(DELTA_SIGNS), default=None)
    p.add_argument("--specialize", default=None, help="Compare both sides at v = V0 (rational, e.g. 1 or 3/2)")

    p = sub.add_parser("bijection", parents=[common], help="1-factors with their walks, link diagrams and tableaux")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--shape", default=None, help="L1,L2")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        settings = load_settings(args.config)
        set_level(settings.log_level)
        payload, records, code = COMMANDS[args.command](args, settings)
        fmt = args.format or settings.default_format
        text = to_json_text(payload) if fmt == "json" else to_csv_text(records)
        write_output(text, args.out)
    except (OrthoTLError, ValueError) as e:
        logger.error("%s: %s", args.command, e)
        return 2
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
