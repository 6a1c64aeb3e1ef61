"""Command-line entry point.

Exit codes: 0 ok, 1 usage or parse error, 2 singular matrix, 3 ``A*B != I``
(or a counterexample found by a sweep), 4 certificate rejected.
Machine-readable output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import (
    SingularReport,
    certificate_from_json,
    certificate_to_json,
    left_inverse,
    prove_two_sided,
    rank,
    solve_homogeneous,
    verify_certificate,
)
from .errors import DedekindError, MalformedCertificate, NotLeftInverse, ParseError
from .field import FieldSpec
from .matrix import format_matrix, read_matrix, write_matrix
from .oracle import exhaustive_dedekind_check, random_dedekind_check
from .shift import dedekind_counterexample_report

EXIT_OK, EXIT_USAGE, EXIT_SINGULAR, EXIT_NOT_INVERSE, EXIT_BAD_CERT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dedekind", description="Certified two-sided inverses over exact fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invert", help="invert a matrix file")
    p.add_argument("matrix")
    p.add_argument("-o", "--output")
    p.add_argument("--field", type=_field, help="override the file's field")

    p = sub.add_parser("certify", help="certify B*A = I from A*B = I")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--emit", help="write the certificate JSON here")
    p.add_argument("--field", type=_field)

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--field", type=_field)

    for name in ("solve", "rank"):
        p = sub.add_parser(name, help="kernel basis" if name == "solve" else "matrix rank")
        p.add_argument("matrix")
        p.add_argument("--field", type=_field)

    p = sub.add_parser("exhaust", help="sweep every n x n matrix over GF(p)")
    p.add_argument("--field", type=_field, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("random-check", help="certify random invertible matrices")
    p.add_argument("--field", type=_field, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("shift-demo", help="shift operators: BA = 1 but AB != 1")
    p.add_argument("--field", type=_field, required=True)
    p.add_argument("--max-index", type=_positive, required=True)
    return parser


def _cmd_invert(args) -> int:
    A = read_matrix(args.matrix, args.field)
    result = left_inverse(A)
    if isinstance(result, SingularReport):
        print(json.dumps({"singular": True, "witness": result.witness.literals()}))
        print(f"{args.matrix}: matrix is singular", file=sys.stderr)
        return EXIT_SINGULAR
    if args.output:
        write_matrix(args.output, result)
    else:
        sys.stdout.write(format_matrix(result))
    return EXIT_OK


def _cmd_certify(args) -> int:
    A = read_matrix(args.left, args.field)
    B = read_matrix(args.right, args.field)
    try:
        cert = prove_two_sided(A, B)
    except NotLeftInverse as exc:
        spec = A.spec
        print(f"A*B != I: entry ({exc.row},{exc.col}) is {spec.format(exc.got)}, "
              f"expected {spec.format(exc.expected)}", file=sys.stderr)
        return EXIT_NOT_INVERSE
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json(cert))
    print("BA=I confirmed")
    return EXIT_OK


def _cmd_verify(args) -> int:
    A = read_matrix(args.left, args.field)
    B = read_matrix(args.right, args.field)
    with open(args.cert, encoding="utf-8") as fh:
        text = fh.read()
    try:
        cert = certificate_from_json(text)
        ok = verify_certificate(cert, A, B)
    except json.JSONDecodeError as exc:
        raise ParseError(args.cert, exc.lineno, exc.colno, exc.msg) from None
    except MalformedCertificate as exc:
        print(f"{args.cert}: {exc}", file=sys.stderr)
        return EXIT_BAD_CERT
    print("certificate valid" if ok else "certificate rejected")
    return EXIT_OK if ok else EXIT_BAD_CERT


def _cmd_solve(args) -> int:
    A = read_matrix(args.matrix, args.field)
    for v in solve_homogeneous(A):
        print(" ".join(v.literals()))
    return EXIT_OK


def _cmd_rank(args) -> int:
    print(rank(read_matrix(args.matrix, args.field)))
    return EXIT_OK


def _cmd_exhaust(args) -> int:
    if not args.field.is_prime_field:
        raise UsageError("exhaust needs a prime field (gf<p>)")
    report = exhaustive_dedekind_check(args.field, args.n, jobs=args.jobs)
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_NOT_INVERSE


def _cmd_random_check(args) -> int:
    report = random_dedekind_check(args.field, args.n, args.trials, args.seed)
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_NOT_INVERSE


def _cmd_shift_demo(args) -> int:
    report = dedekind_counterexample_report(args.field, args.max_index)
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_NOT_INVERSE


COMMANDS = {
    "invert": _cmd_invert,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "rank": _cmd_rank,
    "exhaust": _cmd_exhaust,
    "random-check": _cmd_random_check,
    "shift-demo": _cmd_shift_demo,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DedekindError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
