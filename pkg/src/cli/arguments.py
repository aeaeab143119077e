"""Argument parser for the schubert-points command line."""

import argparse

from utils.constants import (
    CLAIM_DOMINANCE,
    FAMILIES,
    OUTPUT_FORMATS,
    SHAPE_CLAIMS,
    VERSION,
)

KINDS = ('row-strict', 'standard', 'points')
SIDES = ('springer', 'schubert', 'both')


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected integer, got: {value!r}") from e
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got: {n}")
    return n


def _add_format(parser: argparse.ArgumentParser):
    # None means: take the format from the settings file
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None,
                        help="output format (default from settings, else text)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="schubert-points",
        description="Springer fibers, Schubert points and Bruhat closure checks.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    p.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    enum = sub.add_parser("enumerate", help="list tableaux or Schubert points of a shape")
    enum.add_argument("--shape", required=True, help='partition, e.g. "2,2,1"')
    enum.add_argument("--kind", choices=KINDS, default="row-strict")
    _add_format(enum)

    point = sub.add_parser("schubert-point", help="Schubert point of a row-strict tableau")
    point.add_argument("--shape", required=True)
    point.add_argument("--tableau", required=True, help='rows separated by "/", e.g. "1,2/3,4/5"')
    point.add_argument("--monomial", action="store_true", help="also print the monomial")
    _add_format(point)

    poincare = sub.add_parser("poincare", help="Poincare polynomials of a shape")
    poincare.add_argument("--shape", required=True)
    poincare.add_argument("--side", choices=SIDES, default="both")
    _add_format(poincare)

    member = sub.add_parser("is-point", help="test whether a permutation is a Schubert point of a shape")
    member.add_argument("--shape", required=True)
    given = member.add_mutually_exclusive_group(required=True)
    given.add_argument("--word", default=None, help='word in simple reflections, e.g. "s3 s4 s3 s2"')
    given.add_argument("--one-line", default=None, dest="one_line", help='one-line notation, e.g. "1,5,2,4,3"')
    member.add_argument("--ideal", action="store_true", help="also print the lower Bruhat ideal")
    _add_format(member)

    delete = sub.add_parser("delete", help="delete one letter of a Schubert point and renormalise")
    delete.add_argument("--shape", required=True)
    delete.add_argument("--tableau", required=True)
    delete.add_argument("--string", type=_positive_int, required=True, dest="string_index",
                        help="index j of the string w_j")
    delete.add_argument("--pos", type=_positive_int, required=True,
                        help="position k of the letter inside w_j, from the left")
    delete.add_argument("--trace", action="store_true", help="two-column shaded-box trace")
    delete.add_argument("--png", default=None, help="write the trace as PNG (needs --trace)")
    _add_format(delete)

    verify = sub.add_parser("verify", help="check one claim for a shape")
    verify.add_argument("target", nargs="?", choices=(CLAIM_DOMINANCE,), default=None,
                        help="'dominance' compares --shape with --versus")
    verify.add_argument("--shape", required=True)
    verify.add_argument("--claim", choices=SHAPE_CLAIMS + (CLAIM_DOMINANCE,), default=None)
    verify.add_argument("--versus", default=None, help="smaller partition for the dominance claim")
    verify.add_argument("--output", default=None, help="also write the report to a file")
    _add_format(verify)

    scan = sub.add_parser("scan", help="theorem and closure checks over a family of shapes")
    scan.add_argument("--family", choices=FAMILIES, required=True)
    scan.add_argument("--max-n", type=_positive_int, required=True)
    scan.add_argument("--jobs", type=_positive_int, default=None,
                      help="worker processes (default from settings, else 1)")
    scan.add_argument("--output", default=None, help="write all reports to a file")
    _add_format(scan)

    return p
