"""Command-line interface: ``admeans <command> ...``.

Exit codes: 0 success, 1 property violation (or an inverted suite that found
no refutation), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import AdMeansError
from .harness.generate import InstanceSpec
from .harness.io import MatrixFileError, read_matrix, to_matrix_dict, write_matrix
from .harness.suites import SUITE_NAMES, run_suite
from .linalg import ToleranceConfig
from .means import MeanKind, ad_mean
from .order import ad_sqrt, compare_extended_order, toeplitz_decompose
from .schur import parallel_sum, schur_complement

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_decompose(args, tol):
    parts = toeplitz_decompose(read_matrix(args.file))
    _emit({"real": to_matrix_dict(parts.real), "imag": to_matrix_dict(parts.imag)})
    return EXIT_OK


def cmd_compare(args, tol):
    rel = compare_extended_order(read_matrix(args.fileT), read_matrix(args.fileS), tol)
    _emit(rel.to_dict())
    return EXIT_OK


def cmd_mean(args, tol):
    M = ad_mean(MeanKind.parse(args.kind), read_matrix(args.fileT), read_matrix(args.fileS), tol)
    if args.out:
        write_matrix(args.out, M.matrix)
    else:
        _emit(to_matrix_dict(M.matrix))
    return EXIT_OK


def cmd_sqrt(args, tol):
    _emit(to_matrix_dict(ad_sqrt(read_matrix(args.fileT), tol).matrix))
    return EXIT_OK


def cmd_parallel_sum(args, tol):
    _emit(to_matrix_dict(parallel_sum(read_matrix(args.fileT), read_matrix(args.fileS), tol)))
    return EXIT_OK


def cmd_schur(args, tol):
    _emit(to_matrix_dict(schur_complement(read_matrix(args.file), args.split, tol)))
    return EXIT_OK


def _run(args, tol):
    spec = InstanceSpec(dim=args.dim, seed=args.seed, conditioning=args.conditioning,
                        count=args.count, min_dim=args.min_dim)
    report = run_suite(args.suite, spec, tol, use_oracle=args.oracle, workers=args.workers)
    print(report.summary(), file=sys.stderr)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(indent=2) + "\n")
    if args.json:
        print(report.to_json(indent=2))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _add_run_options(p, suites, default_dim):
    p.add_argument("--suite", required=True, choices=suites)
    p.add_argument("--dim", type=int, default=default_dim)
    p.add_argument("--min-dim", type=int, default=None,
                   help="cycle trial dimensions through [min-dim, dim]")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--conditioning", type=float, default=100.0)
    p.add_argument("--oracle", action="store_true",
                   help="re-evaluate violations at 40 significant digits")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", help="write the JSON report to this file")
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="admeans", description=__doc__.splitlines()[0])
    parser.add_argument("--tol", type=float, default=None,
                        help="relative equality tolerance (overrides $AD_MEANS_TOL)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="print the Toeplitz parts")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compare", help="compare two matrices in the extended order")
    p.add_argument("fileT")
    p.add_argument("fileS")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("mean", help="arithmetic, geometric or harmonic mean")
    p.add_argument("--kind", required=True, choices=["arith", "geo", "harm"])
    p.add_argument("fileT")
    p.add_argument("fileS")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("sqrt", help="principal accretive-dissipative square root")
    p.add_argument("fileT")
    p.set_defaults(func=cmd_sqrt)

    p = sub.add_parser("parallel-sum", help="(T^-1 + S^-1)^-1")
    p.add_argument("fileT")
    p.add_argument("fileS")
    p.set_defaults(func=cmd_parallel_sum)

    p = sub.add_parser("schur", help="Schur complement of the trailing block")
    p.add_argument("file")
    p.add_argument("--split", type=int, required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("verify", help="run a property suite")
    _add_run_options(p, SUITE_NAMES, default_dim=4)
    p.set_defaults(func=_run)

    p = sub.add_parser("fuzz", help="search for counterexamples to a conjectured inequality")
    _add_run_options(p, ["question42-survey"], default_dim=2)
    p.set_defaults(func=_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = ToleranceConfig.from_env(args.tol)
        return args.func(args, tol)
    except (AdMeansError, MatrixFileError, OSError, ValueError) as exc:
        print(f"admeans: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
