"""
Subcommand handlers. Each returns the process exit code.
"""
import argparse
import json
from pathlib import Path
from typing import Any, List, Optional

from utils.constants import CLAIM_DOMINANCE, DEFAULT_FORMAT, JSON_INDENT
from utils.data_structures import VerificationReport
from utils.errors import ParseError
from utils.logging_config import get_logger
from utils.settings_manager import get_settings_manager
from shapes.partitions import parse_partition
from shapes.tableaux import enumerate_row_strict, enumerate_standard, parse_tableau
from springer.springer_fiber import ell_vector, springer_poincare
from schubert.schubert_points import is_schubert_point, monomial, schubert_point, schubert_point_set
from weyl.bruhat import union_ideal, union_poincare
from weyl.factorization import canonical_factorization, factorization_to_permutation, reduced_word
from weyl.permutations import parse_one_line, parse_word, word_to_permutation
from rewrite.star_rewriter import delete_and_normalize_run
from rewrite.two_column_trace import two_column_trace
from verify.report_writer import render_reports, write_report
from verify.scanner import scan
from verify.verifiers import check_dominance, run_check
from visualization.text_formatter import TextFormatter, format_permutation, render_trace_ascii
from visualization.trace_renderer import render_trace_png

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2


def resolve_format(args: argparse.Namespace) -> str:
    """--format flag, then the settings file, then the default."""
    if getattr(args, 'format', None):
        return args.format
    try:
        return get_settings_manager().get('format')
    except Exception as e:
        logger.warning(f"Cannot read format setting: {e}")
        return DEFAULT_FORMAT


def resolve_jobs(args: argparse.Namespace) -> int:
    if args.jobs:
        return args.jobs
    try:
        return get_settings_manager().get('jobs')
    except Exception as e:
        logger.warning(f"Cannot read jobs setting: {e}")
        return 1


def resolve_output(path: str) -> Path:
    """Relative report paths go into report_dir when one is configured."""
    output = Path(path)
    if output.is_absolute():
        return output
    try:
        report_dir = get_settings_manager().get('report_dir')
    except Exception as e:
        logger.warning(f"Cannot read report_dir setting: {e}")
        report_dir = None
    return Path(report_dir) / output if report_dir else output


def _print_json(data: Any):
    print(json.dumps(data, indent=JSON_INDENT, ensure_ascii=False))


def _verdict_code(reports: List[VerificationReport]) -> int:
    return EXIT_OK if all(report.holds for report in reports) else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    fmt = resolve_format(args)
    formatter = TextFormatter()
    if args.kind == 'points':
        points = schubert_point_set(shape)
        if fmt == 'json':
            _print_json([{'permutation': w.to_list(), 'word': list(reduced_word(w).letters),
                          'tableau': t.to_dict()} for w, t in points.items()])
        else:
            print(formatter.format_points(points))
        return EXIT_OK

    tableaux = enumerate_standard(shape) if args.kind == 'standard' else enumerate_row_strict(shape)
    if fmt == 'json':
        _print_json([t.to_dict() for t in tableaux])
    else:
        print(formatter.format_tableaux(tableaux))
    logger.info(f"enumerated {len(tableaux)} {args.kind} tableaux of ({shape})")
    return EXIT_OK


def cmd_schubert_point(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    tableau = parse_tableau(args.tableau, shape)
    w = schubert_point(tableau)
    ell = ell_vector(tableau)
    if resolve_format(args) == 'json':
        data = {'tableau': tableau.to_dict(), 'permutation': w.to_list(),
                'word': list(reduced_word(w).letters), 'ell_vector': ell.to_list()}
        if args.monomial:
            data['monomial'] = monomial(tableau).to_list()
        _print_json(data)
        return EXIT_OK
    print(f"{w}  {reduced_word(w)}")
    print(f"factorization {canonical_factorization(w)}  ell={ell}")
    if args.monomial:
        print(f"monomial {monomial(tableau)}")
    return EXIT_OK


def cmd_poincare(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    polys = {}
    if args.side in ('springer', 'both'):
        polys['springer'] = springer_poincare(shape)
    if args.side in ('schubert', 'both'):
        polys['schubert'] = union_poincare(schubert_point_set(shape))
    if resolve_format(args) == 'json':
        _print_json({'shape': shape.to_list(), **{k: p.to_list() for k, p in polys.items()}})
    else:
        for name, poly in polys.items():
            print(f"{name}: {poly}")
    if len(polys) == 2 and polys['springer'] != polys['schubert']:
        logger.warning(f"polynomials of ({shape}) differ")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_is_point(args: argparse.Namespace) -> int:
    """Exit 0 when the permutation is a point of the shape, 1 when it is not."""
    shape = parse_partition(args.shape)
    if args.word is not None:
        w = word_to_permutation(parse_word(args.word), shape.n)
    else:
        w = parse_one_line(args.one_line)
    found = is_schubert_point(w, shape)
    ideal = union_ideal([w]) if args.ideal else None

    if resolve_format(args) == 'json':
        data = {
            'shape': shape.to_list(),
            'permutation': w.to_list(),
            'word': list(reduced_word(w).letters),
            'is_schubert_point': found is not None,
            'tableau': found.to_dict() if found is not None else None,
        }
        if ideal is not None:
            data['ideal_size'] = len(ideal)
            data['ideal_poincare'] = union_poincare([w]).to_list()
        _print_json(data)
    else:
        print(format_permutation(w))
        print(f"Schubert point of ({shape}): {found}" if found is not None
              else f"not a Schubert point of ({shape})")
        if ideal is not None:
            print(f"ideal: {len(ideal)} elements  {union_poincare([w])}")
    return EXIT_OK if found is not None else EXIT_COUNTEREXAMPLE


def cmd_delete(args: argparse.Namespace) -> int:
    if args.png and not args.trace:
        raise ParseError("--png needs --trace")
    shape = parse_partition(args.shape)
    tableau = parse_tableau(args.tableau, shape)
    factorization = canonical_factorization(schubert_point(tableau))
    run = delete_and_normalize_run(factorization, args.string_index, args.pos)
    w = factorization_to_permutation(run.result)
    found = is_schubert_point(w, shape)
    steps = two_column_trace(tableau, args.string_index, args.pos) if args.trace else []
    if args.png:
        render_trace_png(steps, args.png)

    if resolve_format(args) == 'json':
        _print_json({
            'tableau': tableau.to_dict(),
            'original': list(run.original.lengths),
            'site': [run.string_index, run.position],
            'letter': run.letter,
            'cases': [step.case for step in run.steps],
            'termination': run.termination,
            'result': {'lengths': list(run.result.lengths), 'permutation': w.to_list(),
                       'word': list(run.result.word().letters)},
            'is_schubert_point': found is not None,
            'result_tableau': found.to_dict() if found is not None else None,
            'trace': [step.to_dict() for step in steps],
        })
    else:
        print(TextFormatter().format_run(run))
        print(f"{w}: " + (f"Schubert point of {found}" if found is not None else "not a Schubert point"))
        if args.trace:
            print()
            print(render_trace_ascii(steps))
    return EXIT_OK if found is not None else EXIT_COUNTEREXAMPLE


def cmd_verify(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    claim = CLAIM_DOMINANCE if args.target == CLAIM_DOMINANCE else args.claim
    if claim is None:
        raise ParseError("verify needs --claim or the 'dominance' subcommand")
    if claim == CLAIM_DOMINANCE:
        if not args.versus:
            raise ParseError("the dominance claim needs --versus")
        report = check_dominance(shape, parse_partition(args.versus))
    else:
        report = run_check(shape, claim)
    return _emit([report], args)


def cmd_scan(args: argparse.Namespace) -> int:
    reports = scan(args.family, args.max_n, resolve_jobs(args))
    return _emit(reports, args)


def _emit(reports: List[VerificationReport], args: argparse.Namespace) -> int:
    fmt = resolve_format(args)
    print(render_reports(reports, fmt))
    if args.output:
        write_report(reports, resolve_output(args.output), fmt)
    return _verdict_code(reports)


COMMANDS = {
    'enumerate': cmd_enumerate,
    'schubert-point': cmd_schubert_point,
    'poincare': cmd_poincare,
    'is-point': cmd_is_point,
    'delete': cmd_delete,
    'verify': cmd_verify,
    'scan': cmd_scan,
}


def run_command(args: argparse.Namespace) -> int:
    handler: Optional[Any] = COMMANDS.get(args.command)
    if handler is None:
        raise ParseError(f"unknown command: {args.command}")
    return handler(args)
