"""Command-line interface.

Exit codes: 0 for success (verifications: every check passed), 1 when a
verification or sweep found a counterexample, 2 for usage errors and
violated preconditions.  All numeric output is exact decimal text.
"""

from __future__ import annotations

import argparse
import json
import sys

from hankelrev.conjectures import (
    ConjectureReport,
    SweepResult,
    prop9_verify,
    report_to_csv,
    report_to_dict,
    report_to_json,
    sweep,
    sweep_to_json,
    verify_alpha_shift,
    verify_anchors,
    verify_conjecture4,
    verify_conjecture6,
    verify_conjecture8,
)
from hankelrev.families import FamilyParams, family_base_ogf, family_reversion_terms
from hankelrev.gf import expand_gf
from hankelrev.hankel import (
    binomial_transform,
    hankel_transform,
    hankel_triple,
    inverse_binomial_transform,
)
from hankelrev.series import PowerSeries

DEFAULT_DEPTH = 6
DEFAULT_SHIFT_ORDER = 10


# ----------------------------------------------------------------------
# input plumbing


def _parse_sequence(text: str) -> list[int]:
    if text == "-":
        text = sys.stdin.read()
    entries = [piece.strip() for piece in text.split(",")]
    if entries == [""]:
        raise ValueError("empty sequence")
    try:
        return [int(piece) for piece in entries]
    except ValueError:
        bad = next(piece for piece in entries if not _is_int(piece))
        raise ValueError(f"invalid sequence entry {bad!r}") from None


def _is_int(piece: str) -> bool:
    try:
        int(piece)
        return True
    except ValueError:
        return False


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _family_params(args: argparse.Namespace) -> FamilyParams:
    if args.alpha is None:
        raise ValueError("--family needs --alpha")
    return FamilyParams(args.alpha, args.beta if args.beta is not None else 0, args.family)


def _sequence_from_args(args: argparse.Namespace, count: int) -> list[int]:
    sources = [s for s in ("seq", "gf", "family") if getattr(args, s, None)]
    if len(sources) != 1:
        raise ValueError("provide exactly one of --seq, --gf, --family")
    if args.seq:
        return _parse_sequence(args.seq)
    if args.gf:
        return expand_gf(args.gf, count - 1).integer_coefficients()
    return family_reversion_terms(_family_params(args), count)


# ----------------------------------------------------------------------
# rendering


def _align_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _emit_values(values: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(values))
    elif fmt == "csv":
        print(",".join(values))
    else:
        rows = [[str(n), v] for n, v in enumerate(values)]
        print(_align_table(["n", "value"], rows))


def render_report(report: ConjectureReport, fmt: str) -> str:
    """Render a verification report in the requested format."""
    if fmt == "json":
        return report_to_json(report)
    if fmt == "csv":
        return report_to_csv(report).rstrip("\n")
    params = report.params
    heading = f"conjecture {report.conjecture_id}"
    if params is not None:
        heading += f": alpha={params.alpha} beta={params.beta}"
    heading += f" depth={report.depth}"
    lines = [heading]
    for note in report.notes:
        lines.append(f"note: {note}")
    rows = [
        [str(c.index), c.claim, c.lhs, c.rhs, "ok" if c.passed else "FAIL"]
        for c in report.checks
    ]
    lines.append(_align_table(["n", "claim", "lhs", "rhs", "status"], rows))
    passed = sum(1 for c in report.checks if c.passed)
    verdict = "all checks passed" if report.all_pass else "CHECKS FAILED"
    lines.append(f"{verdict} ({passed}/{len(report.checks)})")
    return "\n".join(lines)


def _render_sweep(result: SweepResult, fmt: str, full: bool) -> str:
    if fmt == "json":
        return sweep_to_json(result, include_reports=full)
    if fmt == "csv":
        lines = ["conjecture,alpha,beta,depth,status"]
        evaluated = {
            (r.params.alpha, r.params.beta): "pass" if r.all_pass else "fail"
            for r in result.reports
            if r.params is not None
        }
        for point in result.grid:
            state = evaluated.get((point.alpha, point.beta), "skipped")
            lines.append(
                f"{result.conjecture_id},{point.alpha},{point.beta},{result.depth},{state}"
            )
        return "\n".join(lines)
    lines = [
        f"conjecture {result.conjecture_id}: depth={result.depth}"
        f" grid={len(result.grid)} checked={len(result.reports)}"
        f" skipped={len(result.skipped)}"
        f" counterexamples={len(result.counterexamples)}"
    ]
    for report in result.counterexamples:
        lines.append("")
        lines.append(render_report(report, "table"))
    if not result.counterexamples:
        lines.append("no counterexamples")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# command handlers


def _cmd_expand(args: argparse.Namespace) -> int:
    if bool(args.gf) == bool(args.family):
        raise ValueError("provide exactly one of --gf, --family")
    if args.gf:
        series = expand_gf(args.gf, args.order)
    else:
        series = family_base_ogf(_family_params(args), args.order)
    _emit_values(series.coefficient_strings(), args.format)
    return 0


def _cmd_revert(args: argparse.Namespace) -> int:
    if bool(args.gf) == bool(args.family):
        raise ValueError("provide exactly one of --gf, --family")
    if args.gf:
        values = expand_gf(args.gf, args.order).revert().coefficient_strings()
    else:
        terms = family_reversion_terms(_family_params(args), args.order + 1)
        values = [str(t) for t in terms]
    _emit_values(values, args.format)
    return 0


def _cmd_hankel(args: argparse.Namespace) -> int:
    if args.seq:
        terms = _parse_sequence(args.seq)
        depth = args.depth if args.depth is not None else max((len(terms) - 1) // 2, 0)
    else:
        depth = args.depth if args.depth is not None else DEFAULT_DEPTH
        terms = _sequence_from_args(args, 2 * depth + 1)
    transform = hankel_transform(terms, depth)
    _emit_values([str(v) for v in transform], args.format)
    return 0


def _cmd_triple(args: argparse.Namespace) -> int:
    if args.seq:
        terms = _parse_sequence(args.seq)
        depth = args.depth if args.depth is not None else max((len(terms) - 3) // 2, 0)
    else:
        depth = args.depth if args.depth is not None else DEFAULT_DEPTH
        terms = _sequence_from_args(args, 2 * depth + 3)
    triple = hankel_triple(terms, depth)
    if args.format == "json":
        print(triple.to_json())
    elif args.format == "csv":
        print(triple.to_csv(), end="")
    else:
        rows = [[str(v) for v in row] for row in triple.rows()]
        print(_align_table(["n", "h", "h_star", "h_star_star"], rows))
    return 0


def _cmd_binomial(args: argparse.Namespace) -> int:
    terms = _parse_sequence(args.seq)
    result = inverse_binomial_transform(terms) if args.inverse else binomial_transform(terms)
    _emit_values([str(v) for v in result], args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cid = args.conjecture
    if cid == "4":
        report = verify_conjecture4(_required(args, "alpha"), _required(args, "beta"), args.depth)
    elif cid == "6":
        report = verify_conjecture6(_required(args, "alpha"), _required(args, "beta"), args.depth)
    elif cid == "8":
        report = verify_conjecture8(_required(args, "alpha"), args.depth)
    elif cid == "alpha_shift":
        report = verify_alpha_shift(
            _required(args, "alpha"), _required(args, "beta"), args.order
        )
    else:
        report = verify_anchors(args.depth)
    print(render_report(report, args.format))
    return 0 if report.all_pass else 1


def _required(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ValueError(f"conjecture {args.conjecture} needs --{name}")
    return value


def _cmd_sweep(args: argparse.Namespace) -> int:
    alpha_range = _parse_range(args.alpha_range)
    beta_range = _parse_range(args.beta_range) if args.beta_range else None
    result = sweep(args.conjecture, alpha_range, beta_range, args.depth)
    print(_render_sweep(result, args.format, args.full))
    return 0 if not result.counterexamples else 1


def _cmd_prop9(args: argparse.Namespace) -> int:
    report = prop9_verify(args.alpha, args.n)
    print(render_report(report, args.format))
    return 0 if report.all_pass else 1


def _cmd_oeis(args: argparse.Namespace) -> int:
    from hankelrev import oeis

    terms = _parse_sequence(args.seq)
    mode = "offline" if args.offline else "online"
    try:
        matches = oeis.lookup(terms, mode=mode)
    except oeis.OeisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "id": m.id,
                        "name": m.name,
                        "matched_prefix_length": str(m.matched_prefix_length),
                    }
                    for m in matches
                ],
                indent=2,
            )
        )
    elif args.format == "csv":
        lines = ["id,matched_prefix_length,name"]
        for m in matches:
            name = '"' + m.name.replace('"', '""') + '"'
            lines.append(f"{m.id},{m.matched_prefix_length},{name}")
        print("\n".join(lines))
    else:
        if not matches:
            print("no matches")
        else:
            rows = [[m.id, str(m.matched_prefix_length), m.name] for m in matches]
            print(_align_table(["id", "matched", "name"], rows))
    return 0


# ----------------------------------------------------------------------
# parser assembly


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=("A", "B", "C"), help="use a built-in family")
    parser.add_argument("--alpha", type=int, help="family parameter alpha")
    parser.add_argument("--beta", type=int, help="family parameter beta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelrev",
        description="Exact Hankel/binomial transforms, series reversion, and"
        " verification of reversion/Hankel identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a generating function to a series")
    p.add_argument("--gf", help="generating-function expression")
    _add_family_options(p)
    p.add_argument("--order", type=int, required=True, help="truncation order")
    _add_format(p)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("revert", help="compositional inverse of a series")
    p.add_argument("--gf", help="generating-function expression")
    _add_family_options(p)
    p.add_argument("--order", type=int, required=True, help="truncation order")
    _add_format(p)
    p.set_defaults(handler=_cmd_revert)

    p = sub.add_parser("hankel", help="Hankel transform of a sequence")
    p.add_argument("--seq", help="comma-separated integers, or - for stdin")
    p.add_argument("--gf", help="derive the sequence from an expression")
    _add_family_options(p)
    p.add_argument("--depth", type=int, help="transform depth (default: deepest available)")
    _add_format(p)
    p.set_defaults(handler=_cmd_hankel)

    p = sub.add_parser(
        "triple", help="Hankel transforms of a sequence and its two shifts"
    )
    p.add_argument("--seq", help="comma-separated integers, or - for stdin")
    p.add_argument("--gf", help="derive the sequence from an expression")
    _add_family_options(p)
    p.add_argument("--depth", type=int, help="transform depth (default: deepest available)")
    _add_format(p)
    p.set_defaults(handler=_cmd_triple)

    p = sub.add_parser("binomial", help="binomial transform of a sequence")
    p.add_argument("--seq", required=True, help="comma-separated integers, or - for stdin")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    _add_format(p)
    p.set_defaults(handler=_cmd_binomial)

    p = sub.add_parser("verify", help="verify one identity set at fixed parameters")
    p.add_argument(
        "--conjecture",
        required=True,
        choices=("4", "6", "8", "alpha_shift", "anchors"),
        help="which identity set to check",
    )
    p.add_argument("--alpha", type=int, help="family parameter alpha")
    p.add_argument("--beta", type=int, help="family parameter beta")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="check depth")
    p.add_argument(
        "--order",
        type=int,
        default=DEFAULT_SHIFT_ORDER,
        help="series order for alpha_shift",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("sweep", help="verify one identity set over a parameter grid")
    p.add_argument(
        "--conjecture",
        required=True,
        choices=("4", "6", "8", "prop9", "alpha_shift"),
        help="which identity set to sweep",
    )
    p.add_argument("--alpha-range", default="-5:5", help="inclusive range LO:HI")
    p.add_argument("--beta-range", help="inclusive range LO:HI")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="check depth")
    p.add_argument("--full", action="store_true", help="include every report in json output")
    _add_format(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("prop9", help="verify the scaled-Catalan factorization H = T*T^t")
    p.add_argument("--alpha", type=int, required=True, help="scale parameter")
    p.add_argument("--n", type=int, default=DEFAULT_DEPTH, help="matrix index")
    _add_format(p)
    p.set_defaults(handler=_cmd_prop9)

    p = sub.add_parser("oeis", help="identify a sequence prefix")
    p.add_argument("--seq", required=True, help="comma-separated integers, or - for stdin")
    p.add_argument(
        "--offline",
        action="store_true",
        help="consult only the cache and bundled fixtures",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_oeis)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
