"""
Command line interface.

Exit codes: 0 success, 1 a verification failed or bounds are inconsistent, 2 usage error,
3 malformed data.
"""
import argparse
import logging
import sys
from pprint import pformat
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.factors import FACTORS, group_order, group_order_at
from ..bounds.engine import bound_set, corollary_pins, g5_block, hidden_lower_bounds
from ..bounds.reference import compare_bounds, pins_diff, reference_pins, verify_bounds, verify_pins
from ..catalog.characters import catalog_residual, d0, defect_zero_unipotents, series_types, unipotent_characters
from ..catalog.primes import classify_prime, dividing_factors, factor_value
from ..decomp.brauer import expanded_matrix, verify_relations
from ..decomp.matrix import (
    DecompMatrix,
    check_family_blocks,
    check_unitriangular,
    decomposition_matrix,
    dipper_embedding_diff,
)
from ..degrees.inequalities import verify_coefficients, verify_inequalities
from ..degrees.smallest import FAILS, INCONCLUSIVE, DegreeReport, verify_theorem
from ..errors import DataError, InconsistentBoundsError, VerificationError
from ..hecke.decomposition import HeckeDecompMatrix, verified_hecke_decomposition
from ..options import Data, Evaluation, Options, Report
from ..tables.loader import tables_root, validate_tables
from ..types import TABULATED_CASES, PrimeCase
from ..utils import catch_all_and_log, log_level
from .reports import Section, write

logger = logging.getLogger(__name__)

# (n, l) used by `selfcheck` for each tabulated case
REPRESENTATIVES: Dict[PrimeCase, Tuple[int, int]] = {
    PrimeCase.LINEAR: (1, 7),
    PrimeCase.PHI4: (2, 11),
    PrimeCase.PHI8P: (1, 13),
    PrimeCase.PHI8M: (1, 5),
    PrimeCase.ELL3: (1, 3),
}

HECKE_CHECKS = ((1, 7), (1, 3), (1, 13), (1, 5), (2, 31), (2, 11), (2, 41), (2, 5), (3, 127), (3, 5))

# (case, n, l) swept by `selfcheck` for the smallest Brauer degree; no l > 3 divides q^2+1 at n=1
SMALLEST_DEGREE_CHECKS: Tuple[Tuple[PrimeCase, int, int], ...] = (
    (PrimeCase.LINEAR, 1, 7),
    (PrimeCase.LINEAR, 2, 31),
    (PrimeCase.LINEAR, 3, 127),
    (PrimeCase.PHI4, 2, 11),
    (PrimeCase.PHI4, 3, 43),
    (PrimeCase.PHI8P, 1, 13),
    (PrimeCase.PHI8P, 2, 41),
    (PrimeCase.PHI8P, 3, 29),
    (PrimeCase.PHI8M, 1, 5),
    (PrimeCase.PHI8M, 2, 5),
    (PrimeCase.PHI8M, 3, 113),
    (PrimeCase.ELL3, 1, 3),
)

INTEGER_FACTORS = ('phi1t', 'phi4', 'phi8p', 'phi8m', 'phi12', 'phi24p', 'phi24m')


def _case(text: str) -> PrimeCase:
    try:
        case = PrimeCase.from_text(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e
    if case not in TABULATED_CASES:
        raise argparse.ArgumentTypeError(f'no decomposition matrix for case={text}')
    return case


def _resolve_case(args: argparse.Namespace) -> PrimeCase:
    """The case given by `--case`, checked against `--n --ell` when both are present"""
    if args.n is not None and args.ell is not None:
        found = classify_prime(args.n, args.ell).case
        if args.case is not None and args.case != found:
            raise ValueError(f'l={args.ell} at n={args.n} is in case {found.label}, not {args.case.label}')
        if found not in TABULATED_CASES:
            raise ValueError(f'no decomposition matrix for l={args.ell} at n={args.n} ({found.label})')
        return found
    if args.case is None:
        raise ValueError('either --case or both --n and --ell are required')
    return args.case


def _require_n_ell(args: argparse.Namespace) -> Tuple[PrimeCase, int, int]:
    if args.n is None or args.ell is None:
        raise ValueError(f'{args.command} needs --n and --ell')
    return _resolve_case(args), args.n, args.ell


def cmd_order(args: argparse.Namespace, options: Options) -> List[Section]:
    rows = [[name, FACTORS[name], factor_value(name, args.n)] for name in INTEGER_FACTORS]
    order = Section(
        'order',
        lines=[f'|G| = {group_order()}', f'|G| at n={args.n}: {group_order_at(args.n)}'],
        payload={'polynomial': group_order(), 'n': args.n, 'value': group_order_at(args.n)},
    )
    return [order, Section('factors', ('factor', 'polynomial', 'value'), rows)]


def cmd_degrees(args: argparse.Namespace, options: Options) -> List[Section]:
    rows = [[r.label, r.degree, r.degree_at(args.n), r.family, r.series] for r in unipotent_characters()]
    sections = [Section('unipotent degrees', ('character', 'degree', 'value', 'family', 'series'), rows)]
    sections.append(Section('d0', lines=[f'd0 = {d0(args.n)} at n={args.n}'], payload=d0(args.n)))
    if args.series:
        series_rows = [
            [s.gid, s.count, ' '.join(s.labels), ' '.join(str(d) for d in s.degrees)] for s in series_types().values()
        ]
        sections.append(Section('series types', ('type', 'count', 'characters', 'degrees'), series_rows))
    return sections


def cmd_classify(args: argparse.Namespace, options: Options) -> List[Section]:
    prime = classify_prime(args.n, args.ell)
    payload = prime.to_json()
    payload['dividing'] = list(dividing_factors(args.n, args.ell))
    lines = [str(prime)]
    if prime.case in TABULATED_CASES and prime.case != PrimeCase.ELL3:
        defect_zero = defect_zero_unipotents(args.n, args.ell)
        payload['defect_zero'] = defect_zero
        lines.append(f'defect zero unipotent characters: {" ".join(defect_zero)}')
    return [Section('classification', lines=lines, payload=payload)]


def _hecke_section(h: HeckeDecompMatrix) -> Section:
    rows = [[name] + [int(v) for v in h.matrix[i]] for i, name in enumerate(h.rows)]
    return Section('hecke', ['representation'] + list(h.columns), rows, lines=[f'case {h.case.label}'])


def cmd_hecke(args: argparse.Namespace, options: Options) -> List[Section]:
    return [_hecke_section(verified_hecke_decomposition(args.n, args.ell))]


def _matrix_section(m: DecompMatrix, title: str = 'decomposition matrix') -> Section:
    rows = [[r] + [m.entry(r, c) for c in m.columns] + [m.counts.get(r)] for r in m.rows]
    return Section(
        title,
        ['character'] + list(m.columns) + ['count'],
        rows,
        lines=[f'{m.source}, basic set of {m.basic_size} characters'],
    )


def cmd_matrix(args: argparse.Namespace, options: Options) -> List[Section]:
    case = _resolve_case(args)
    if args.expand_relations:
        m = verify_relations(case)
    else:
        m = decomposition_matrix(case)
    sections = [_matrix_section(m)]
    if case == PrimeCase.PHI4:
        sections.append(_matrix_section(g5_block(case).matrix, 'g5 block'))
    return sections


def _bounds_sections(case: PrimeCase, n: int, ell: int, n_max: int) -> List[Section]:
    bs = bound_set(case)
    rows = []
    for u in bs.unknowns:
        lo, hi = bs.interval_at(u, n, ell)
        candidates = bs.upper.get(u, [])
        rules = ', '.join(f'{c.rule}:{c.projective}' for c in candidates)
        rows.append([u, lo, hi, bs.hi(u), rules])
    comparisons = compare_bounds(case, ns=range(1, n_max + 1), bs=bs)
    cmp_rows = [[c.unknown, c.kind, c.derived, c.printed, c.verdict, c.detail] for c in comparisons]
    hidden_rows = [[h.row, h.column, h.expression, h.unknown, h.value] for h in hidden_lower_bounds(case, bs)]
    skipped_rows = [[s.unknown, s.projective, s.row, s.reason] for s in bs.skipped]
    return [
        Section(f'bounds at n={n} l={ell}', ('unknown', 'lo', 'hi', 'upper bound', 'rules'), rows, payload=bs),
        Section('printed bounds', ('unknown', 'kind', 'derived', 'printed', 'verdict', 'detail'), cmp_rows),
        Section('hidden lower bounds', ('row', 'column', 'expression', 'unknown', 'lower'), hidden_rows),
        Section('skipped rules', ('unknown', 'projective', 'row', 'reason'), skipped_rows),
    ]


def cmd_bounds(args: argparse.Namespace, options: Options) -> List[Section]:
    case, n, ell = _require_n_ell(args)
    return _bounds_sections(case, n, ell, options.evaluation.n_max)


def _pins_section(case: PrimeCase, n: int, ell: int) -> Section:
    pins = corollary_pins(case, n, ell)
    lines = []
    if any(pn == n and pl == ell for pn, pl, _ in reference_pins(case)):
        diff = pins_diff(case)
        lines.append('printed pins: ' + ('agree' if not diff else '; '.join(diff)))
    return Section(f'pins at n={n} l={ell}', ('unknown', 'value'), sorted(pins.items()), lines=lines, payload=pins)


def cmd_pins(args: argparse.Namespace, options: Options) -> List[Section]:
    case, n, ell = _require_n_ell(args)
    return [_pins_section(case, n, ell)]


def _degree_section(report: DegreeReport) -> Section:
    rows = [[c.column, c.status, c.exact, c.lower, c.exceeds(report.d0), c.method] for c in report.columns]
    lines = [f'd0 = {report.d0}', f'verdict: {report.verdict}']
    if report.unresolved:
        lines.append(f'unresolved: {" ".join(report.unresolved)}')
    lines.extend(report.diff)
    header = ('column', 'status', 'exact', 'lower bound', 'exceeds d0', 'method')
    return Section('smallest degree', header, rows, lines, report)


def cmd_verify_smallest_degree(args: argparse.Namespace, options: Options) -> List[Section]:
    case, n, ell = _require_n_ell(args)
    report = verify_theorem(case, n, ell)
    section = _degree_section(report)
    if report.verdict in (FAILS, INCONCLUSIVE):
        write([section], options.report)
        raise VerificationError(f'smallest degree for {case.label} n={n} l={ell} is {report.verdict}', report.unresolved)
    return [section]


def cmd_validate_tables(args: argparse.Namespace, options: Options) -> List[Section]:
    summary = validate_tables(tables_root(options.data), options.data.verify_checksums)
    rows = [[s['table'], s['id'], s['kind'], s['rows'], s['columns'], s['checksum']] for s in summary]
    failed = [str(s['table']) for s in summary if s['checksum'] is False]
    if failed:
        raise DataError(f'checksum mismatch for {", ".join(failed)}')
    return [Section('tables', ('table', 'id', 'kind', 'rows', 'columns', 'checksum'), rows)]


def selfcheck_probes(n_max: int) -> List[Tuple[str, Callable[[], object]]]:
    """
    Named checks run by `selfcheck`. A probe fails by raising or returning False.
    """
    probes: List[Tuple[str, Callable[[], object]]] = [
        ('tables', lambda: all(s['checksum'] is not False for s in validate_tables())),
        ('catalog sum of squares', lambda: not catalog_residual()),
        ('d0 at n=1', lambda: d0(1) == 64638),
    ]
    for n, ell in HECKE_CHECKS:
        probes.append((f'hecke n={n} l={ell}', lambda n=n, ell=ell: verified_hecke_decomposition(n, ell)))
    for case, (n, ell) in REPRESENTATIVES.items():
        probes.append((f'{case.label} unitriangular', lambda case=case: check_unitriangular(decomposition_matrix(case))))
        if case != PrimeCase.ELL3:
            probes.append((f'{case.label} family blocks', lambda case=case: check_family_blocks(decomposition_matrix(case))))
        probes.append(
            (
                f'{case.label} principal series',
                lambda case=case, n=n, ell=ell: not dipper_embedding_diff(
                    decomposition_matrix(case), verified_hecke_decomposition(n, ell)
                ),
            )
        )
        probes.append((f'{case.label} relations', lambda case=case: verify_relations(case)))
        probes.append(
            (f'{case.label} bounds', lambda case=case: verify_bounds(case, ns=range(1, n_max + 1)))
        )
        probes.append((f'{case.label} pins', lambda case=case: verify_pins(case) is None))
    for case, n, ell in SMALLEST_DEGREE_CHECKS:
        probes.append(
            (
                f'{case.label} smallest degree n={n} l={ell}',
                lambda case=case, n=n, ell=ell: verify_theorem(case, n, ell).verdict not in (FAILS, INCONCLUSIVE),
            )
        )
    probes.append(('Phi4 g5 block', lambda: not g5_block(PrimeCase.PHI4).diff))
    for case in (PrimeCase.PHI8P, PrimeCase.PHI8M):
        probes.append((f'{case.label} degree inequalities', lambda case=case: verify_inequalities(case)))
    probes.append(('Phi8p leading coefficients', lambda: verify_coefficients(PrimeCase.PHI8P)))
    return probes


def cmd_selfcheck(args: argparse.Namespace, options: Options) -> List[Section]:
    rows = []
    for name, probe in selfcheck_probes(options.evaluation.n_max):
        result = catch_all_and_log(probe)()
        ok = result is not None and result is not False
        rows.append([name, 'ok' if ok else 'FAILED'])
        logger.info(f'selfcheck {name}: {"ok" if ok else "FAILED"}')
    section = Section('selfcheck', ('check', 'status'), rows)
    failed = [r[0] for r in rows if r[1] != 'ok']
    if failed:
        write([section], options.report)
        raise VerificationError('selfcheck', failed)
    return [section]


def cmd_report(args: argparse.Namespace, options: Options) -> List[Section]:
    case, n, ell = _require_n_ell(args)
    sections = cmd_classify(args, options)
    sections.append(_hecke_section(verified_hecke_decomposition(n, ell)))
    sections.append(_matrix_section(expanded_matrix(case)))
    sections.extend(_bounds_sections(case, n, ell, options.evaluation.n_max))
    sections.append(_pins_section(case, n, ell))
    sections.append(_degree_section(verify_theorem(case, n, ell)))
    return sections


COMMANDS: Dict[str, Callable[[argparse.Namespace, Options], List[Section]]] = {
    'order': cmd_order,
    'degrees': cmd_degrees,
    'classify': cmd_classify,
    'hecke': cmd_hecke,
    'matrix': cmd_matrix,
    'bounds': cmd_bounds,
    'pins': cmd_pins,
    'verify-smallest-degree': cmd_verify_smallest_degree,
    'validate-tables': cmd_validate_tables,
    'selfcheck': cmd_selfcheck,
    'report': cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json', 'csv', 'markdown'], default='text', help='report format')
    common.add_argument('--out', default=None, help='write the report to this file instead of stdout')
    common.add_argument('--log-level', default=None, help='logging level, e.g. INFO (default: $REEDECOMP_LOG_LEVEL)')
    common.add_argument('--log-file', default=None, help='write the log to this file')

    parser = argparse.ArgumentParser(prog='reedecomp', description='Unipotent decomposition numbers of 2F4(q^2)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add(name: str, help: str, n: bool = False, ell: bool = False, case: bool = False) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help, parents=[common])
        if n:
            p.add_argument('--n', type=int, required=not case, help='q^2 = 2^(2n+1)')
        if ell:
            p.add_argument('--ell', type=int, required=not case, help='odd prime l')
        if case:
            p.add_argument('--case', type=_case, default=None, help='prime case: linear, phi4, phi8p, phi8m or ell3')
        return p

    add('order', 'order of the group', n=True)
    degrees = add('degrees', 'unipotent character degrees', n=True)
    degrees.add_argument('--series', action='store_true', help='also list the series types of characters')
    add('classify', 'classify a prime', n=True, ell=True)
    add('hecke', 'decomposition matrix of the Hecke algebra', n=True, ell=True)
    matrix = add('matrix', 'unipotent decomposition matrix', n=True, ell=True, case=True)
    matrix.add_argument('--expand-relations', action='store_true', help='recompute the relation rows')
    for name, help in (
        ('bounds', 'bounds on the unknown decomposition numbers'),
        ('pins', 'unknowns determined by their bounds'),
        ('verify-smallest-degree', 'smallest degree of a nontrivial Brauer character'),
        ('report', 'all of the above as one document'),
    ):
        add(name, help, n=True, ell=True, case=True)
    add('validate-tables', 'parse every table and verify the checksums')
    selfcheck = add('selfcheck', 'run every consistency check')
    selfcheck.add_argument('--n-max', type=int, default=None, help='largest n of the sweeps')
    return parser


def setup_logging(args: argparse.Namespace) -> None:
    level = logging.getLevelName(args.log_level.upper()) if args.log_level else log_level()
    if not isinstance(level, int):
        raise ValueError(f'unknown log level={args.log_level}')
    logging.basicConfig(
        filename=args.log_file,
        format='%(asctime)s %(levelname)s %(name)s %(message)s',
        level=level,
        filemode='w' if args.log_file else 'a',
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup_logging(args)
    except ValueError as e:
        parser.error(str(e))

    options = Options(
        evaluation=Evaluation(n_max=getattr(args, 'n_max', None)),
        data=Data(),
        report=Report(format=args.format, out=args.out),
    )
    logger.info(f'options=\n{pformat(options, indent=3)}')
    for name in ('n', 'ell', 'case'):
        if not hasattr(args, name):
            setattr(args, name, None)

    try:
        sections = COMMANDS[args.command](args, options)
    except (VerificationError, InconsistentBoundsError) as e:
        logger.error(str(e))
        print(str(e), file=sys.stderr)
        return 1
    except DataError as e:
        logger.error(str(e))
        print(f'data error: {e}', file=sys.stderr)
        return 3
    except ValueError as e:
        print(f'{parser.prog} {args.command}: error: {e}', file=sys.stderr)
        return 2

    text = write(sections, options.report)
    if options.report.out is None:
        sys.stdout.write(text)
    return 0


if __name__ == '__main__':
    sys.exit(main())
