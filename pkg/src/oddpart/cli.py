"""Command-line entry point: ``oddpart <command> ...``.

Exit codes: 0 when every check passes, 10 when the only problems are
documented table discrepancies or findings, 1 on a bound violation or an
internal error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import verify_table4
from .harness.campaigns import (
    DEFAULT_PAIRS,
    DEFAULT_SPACES,
    parse_pair,
    parse_space,
    scan_cor13,
    scan_prop21,
    scan_prop41,
    scan_thm12,
)
from .lie import LieSpec, as_witness, lemma31_witness, sweep_table3, verify_table
from .linrep import classical_constructions
from .numth import zsigmondy_primes
from .perm import format_generator_file, parse_generator_file
from .report import SCHEMA_VERSION, dumps
from .structure import composition_factors

EXIT_OK = 0
EXIT_DISCREPANCY = 10
EXIT_FAILURE = 1


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args):
    if args.table == "4":
        report = verify_table4(constructions=args.constructions)
    elif args.table == "3":
        report = sweep_table3()
    else:
        report = verify_table(int(args.table))
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.output)
    return report.exit_code()


def _split(text, parse):
    return [parse(part) for part in text.split(",") if part.strip()]


def _cmd_scan(args):
    if args.campaign == "prop41":
        report = scan_prop41(args.max_degree, reduce_conjugacy=args.reduce_conjugacy,
                             sample_degree8=args.sample, seed=args.seed)
    elif args.campaign == "thm12":
        spaces = _split(args.spaces, parse_space) if args.spaces else list(DEFAULT_SPACES)
        if args.semilinear and (2, 4) not in spaces:
            spaces.append((2, 4))
        report = scan_thm12(spaces, reduce_conjugacy=args.reduce_conjugacy)
    elif args.campaign == "prop21":
        spaces = _split(args.spaces, parse_space) if args.spaces else list(DEFAULT_SPACES)
        report = scan_prop21(spaces, alpha=not args.no_alpha)
    else:
        pairs = _split(args.pairs, parse_pair) if args.pairs else list(DEFAULT_PAIRS)
        report = scan_cor13(pairs)
    _emit(report.to_json(), args.output)
    return report.exit_code()


def _cmd_a_of(args):
    group = parse_generator_file(Path(args.file).read_text())
    _emit(dumps(composition_factors(group).to_dict()), args.output)
    return EXIT_OK


def _cmd_zsigmondy(args):
    witnesses = zsigmondy_primes(args.p, args.n, args.threshold)
    threshold = args.threshold if args.threshold is not None else args.n + 2
    payload = {"schema_version": SCHEMA_VERSION, "p": args.p, "n": args.n,
               "threshold": threshold, "witnesses": [w.to_dict() for w in witnesses]}
    _emit(dumps(payload), args.output)
    return EXIT_OK


def _cmd_lemma31(args):
    spec = LieSpec(args.family, args.n, args.p, args.f)
    result = lemma31_witness(spec)
    payload = {"schema_version": SCHEMA_VERSION, "spec": spec.to_dict(), "label": spec.label(),
               "result": result.to_dict()}
    _emit(dumps(payload), args.output)
    witness = as_witness(result)
    if witness is None or not witness.valid:
        return EXIT_FAILURE
    return EXIT_OK if witness is result else EXIT_DISCREPANCY


def _cmd_construct(args):
    params = tuple(int(x) for x in args.params.split(","))
    group = classical_constructions(args.name, params, args.action)
    notation = "images" if args.emit == "images" else "cycles"
    _emit(format_generator_file(group, notation), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddpart",
                                     description="Odd composition factor bounds toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", "-o", help="write the report here instead of stdout")

    verify = sub.add_parser("verify", help="reproduce an embedded table")
    verify.add_argument("what", choices=["tables"])
    verify.add_argument("--table", required=True, choices=["1", "2", "3", "4"])
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.add_argument("--constructions", action="store_true",
                        help="also build the order-only rows of table 4")
    add_output(verify)
    verify.set_defaults(func=_cmd_verify)

    scan = sub.add_parser("scan", help="run an exhaustive bound campaign")
    scan.add_argument("campaign", choices=["prop41", "thm12", "prop21", "cor13"])
    scan.add_argument("--max-degree", type=int, default=7)
    scan.add_argument("--sample", type=int, default=0,
                      help="random subgroups of S_8 to check in addition (prop41)")
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--spaces", help="comma-separated d:q list, e.g. 2:2,2:3")
    scan.add_argument("--pairs", help="comma-separated d:qxd:q list, e.g. 2:2x1:3")
    scan.add_argument("--semilinear", action="store_true",
                      help="add GammaL(2,4) acting on GF(2)^4 (thm12)")
    scan.add_argument("--reduce-conjugacy", action="store_true",
                      help="check one subgroup per conjugacy class, weighted by class size")
    scan.add_argument("--no-alpha", action="store_true", help="skip the alpha check (prop21)")
    add_output(scan)
    scan.set_defaults(func=_cmd_scan)

    a_of = sub.add_parser("a-of", help="composition factors of a permutation group")
    a_of.add_argument("--file", required=True, help="generator file")
    add_output(a_of)
    a_of.set_defaults(func=_cmd_a_of)

    zs = sub.add_parser("zsigmondy", help="Zsigmondy primes of p^n - 1")
    zs.add_argument("--p", type=int, required=True)
    zs.add_argument("--n", type=int, required=True)
    zs.add_argument("--threshold", type=int)
    add_output(zs)
    zs.set_defaults(func=_cmd_zsigmondy)

    lw = sub.add_parser("lemma31", help="witness primes for a simple group")
    lw.add_argument("--family", required=True)
    lw.add_argument("--n", type=int, required=True)
    lw.add_argument("--p", type=int, default=0)
    lw.add_argument("--f", type=int, default=0)
    add_output(lw)
    lw.set_defaults(func=_cmd_lemma31)

    con = sub.add_parser("construct", help="emit generators of a classical group")
    con.add_argument("--name", required=True)
    con.add_argument("--params", required=True, help="e.g. 2,7")
    con.add_argument("--action", default=None)
    con.add_argument("--emit", choices=["generators", "images"], default="generators")
    add_output(con)
    con.set_defaults(func=_cmd_construct)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"oddpart: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
