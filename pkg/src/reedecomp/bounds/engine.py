"""
Bounds on the unknown decomposition numbers of a prime case.

Lower bounds come from the nonnegativity of the printed entries, conditional
on the existence of the characters of a relation row. Upper bounds come from
projective characters: if `Psi = sum_k m_k Phi_k` then
`(chi_i, Psi) = sum_k d(chi_i, phi_k) m_k` with nonnegative terms, so for an
unknown `u = d(chi_i, phi_j)`

    u * m_j <= (chi_i, Psi) - (known terms)

Three rules use this inequality: R1 when `m_j = 1`, R2 when `m_j` is another
polynomial in q (dividing, then rounding down to an integer), and R3 when
`m_j` still contains unknowns which are replaced by their bounds first.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..algebra.linear import DecompEntry, is_star
from ..algebra.mpoly import MPoly, mpoly_sum
from ..algebra.parse import CountExpr
from ..algebra.positivity import dominates, floor_bound, is_positive, rational_floor, sign_for_all_n
from ..algebra.qpoly import Q, QPoly
from ..algebra.qs2 import QS2
from ..decomp.brauer import compare_printed, expanded_matrix, hidden_cells
from ..decomp.matrix import DecompMatrix, decomposition_matrix, expand_relations
from ..errors import InconsistentBoundsError, InexactDivisionError
from ..tables.loader import RelationTable, find_tables, load_table, nonunipotent_table
from ..tables.relations import always_exists, relation_exists
from ..types import PrimeCase, TABULATED_CASES
from .projectives import Projective, case_projectives, find_projective, projective_multiplicities, projectives_of

logger = logging.getLogger(__name__)

# series types whose blocks carry unknowns in some case
_GIDS = tuple(f'g{i}' for i in range(2, 19))


@dataclass(frozen=True)
class LowerBound:
    unknown: str
    value: int
    row: str
    column: str
    source: str
    count: Optional[CountExpr] = None

    @property
    def conditional(self) -> bool:
        return self.count is not None

    def to_json(self) -> dict:
        return {
            'unknown': self.unknown,
            'value': self.value,
            'from': f'{self.source} ({self.row}, {self.column})',
            'count': self.count,
        }


@dataclass(frozen=True)
class UpperBound:
    unknown: str
    value: QPoly
    rule: str
    projective: str
    row: str
    columns: Tuple[str, ...]

    def to_json(self) -> dict:
        return {
            'unknown': self.unknown,
            'value': self.value,
            'rule': self.rule,
            'from': f'{self.projective} row {self.row} columns {",".join(self.columns)}',
        }


@dataclass(frozen=True)
class SkippedRule:
    unknown: str
    projective: str
    row: str
    reason: str

    def to_json(self) -> dict:
        return {'unknown': self.unknown, 'projective': self.projective, 'row': self.row, 'reason': self.reason}


@dataclass
class BoundSet:
    case: PrimeCase
    unknowns: Tuple[str, ...]
    lower: Dict[str, LowerBound] = field(default_factory=dict)
    conditional: Dict[str, List[LowerBound]] = field(default_factory=dict)
    upper: Dict[str, List[UpperBound]] = field(default_factory=dict)
    skipped: List[SkippedRule] = field(default_factory=list)

    def lo(self, unknown: str) -> int:
        """Unconditional lower bound"""
        b = self.lower.get(unknown)
        return b.value if b is not None else 0

    def lo_at(self, unknown: str, n: int, ell: int) -> int:
        value = self.lo(unknown)
        for b in self.conditional.get(unknown, []):
            assert b.count is not None
            if b.value > value and relation_exists(b.count, n, ell):
                value = b.value
        return value

    def hi(self, unknown: str) -> Optional[QPoly]:
        candidates = self.upper.get(unknown)
        return candidates[0].value if candidates else None

    def hi_at(self, unknown: str, n: int) -> Optional[QS2]:
        candidates = self.upper.get(unknown)
        if not candidates:
            return None
        return min(c.value.eval_at_q(n) for c in candidates)

    def interval_at(self, unknown: str, n: int, ell: int) -> Tuple[int, Optional[int]]:
        lo = self.lo_at(unknown, n, ell)
        hi = self.hi_at(unknown, n)
        hi_int = None if hi is None else hi.floor()
        if hi_int is not None and lo > hi_int:
            raise InconsistentBoundsError(unknown, lo, hi_int)
        return lo, hi_int

    def to_json(self) -> dict:
        return {
            'case': self.case.label,
            'unknowns': {
                u: {
                    'lower': self.lower.get(u),
                    'conditional': self.conditional.get(u, []),
                    'upper': self.upper.get(u, []),
                }
                for u in self.unknowns
            },
            'skipped': self.skipped,
        }


@dataclass(frozen=True)
class Block:
    """A matrix together with the projectives used to bound its unknowns"""

    name: str
    matrix: DecompMatrix
    projectives: Tuple[Projective, ...]


def case_blocks(case: PrimeCase) -> List[Block]:
    blocks = [Block('unipotent', decomposition_matrix(case), tuple(case_projectives(case)))]
    for gid in _GIDS:
        table = nonunipotent_table(gid, case)
        if table is None or not table.unknowns():
            continue
        scalars = [t for t in find_tables('scalar', case) if getattr(t, 'gid', None) == gid]
        blocks.append(Block(gid, DecompMatrix.from_table(table), tuple(projectives_of(scalars, case))))  # type: ignore
    return blocks


def _entry_lower(entry: DecompEntry, lows: Dict[str, int]) -> Optional[Tuple[str, int]]:
    """
    The bound `entry >= 0` gives on its only unknown with a positive coefficient
    """
    if entry.is_known() or entry.has_star():
        return None
    positive = [(k, v) for k, v in entry.terms if v > 0]
    if len(positive) != 1:
        return None
    name, p = positive[0]
    rest = -entry.const + sum(-v * lows.get(k, 0) for k, v in entry.terms if v < 0)
    return name, -((-rest) // p)


def lower_bounds(case: PrimeCase) -> Tuple[Dict[str, LowerBound], Dict[str, List[LowerBound]]]:
    cells = []
    for block in case_blocks(case):
        m = block.matrix
        for r in m.rows:
            count = m.counts.get(r)
            unconditional = count is None or always_exists(count, case)
            for c in m.columns:
                cells.append((r, c, m.entry(r, c), m.source, None if unconditional else count))

    lows: Dict[str, int] = {}
    best: Dict[str, LowerBound] = {}
    changed = True
    while changed:
        changed = False
        for r, c, e, source, count in cells:
            if count is not None:
                continue
            found = _entry_lower(e, lows)
            if found and found[1] > lows.get(found[0], 0):
                lows[found[0]] = found[1]
                best[found[0]] = LowerBound(found[0], found[1], r, c, source)
                changed = True

    conditional: Dict[str, List[LowerBound]] = {}
    for r, c, e, source, count in cells:
        if count is None:
            continue
        found = _entry_lower(e, lows)
        if not found or found[1] <= lows.get(found[0], 0):
            continue
        u, value = found
        existing = conditional.setdefault(u, [])
        same = [b for b in existing if b.count == count]
        if same and same[0].value >= value:
            continue
        existing[:] = [b for b in existing if b.count != count]
        existing.append(LowerBound(u, value, r, c, source, count))
    for u in conditional:
        conditional[u].sort(key=lambda b: b.value)
        logger.info(f'{case.label}: conditional lower bounds of {u}: {[(b.value, str(b.count)) for b in conditional[u]]}')
    return best, conditional


def _prune(candidates: List[UpperBound]) -> List[UpperBound]:
    kept: List[UpperBound] = []
    for c in candidates:
        if any(k.value == c.value for k in kept):
            continue
        kept.append(c)
    return [
        c for c in kept if not any(d is not c and d.value != c.value and dominates(d.value, c.value) for d in kept)
    ]


def _apply_rules(
    block: Block,
    projective: Projective,
    lows: Dict[str, int],
    upper: Dict[str, List[UpperBound]],
) -> Tuple[List[UpperBound], List[SkippedRule]]:
    m = block.matrix
    multiplicities = projective_multiplicities(projective, m)
    found: List[UpperBound] = []
    skipped: List[SkippedRule] = []
    for r in m.basic_set:
        groups: Dict[str, List[str]] = {}
        for c in m.columns:
            u = m.entry(r, c).single_unknown()
            if u is not None and not is_star(u):
                groups.setdefault(u, []).append(c)
        scalar = projective.scalar(r)
        for u, columns in groups.items():
            divisor = mpoly_sum(multiplicities[c] for c in columns)
            if not divisor:
                continue
            if not scalar.is_constant():
                skipped.append(SkippedRule(u, projective.name, r, 'scalar product is not a number'))
                continue
            numerator = scalar.constant()
            for c in m.columns:
                e = m.entry(r, c)
                if c not in columns and e.is_known() and e.const and multiplicities[c].is_constant():
                    numerator = numerator - multiplicities[c].constant() * e.const

            if divisor.is_constant():
                bound, rule, reason = _divide(numerator, divisor.constant())
            else:
                bound, rule, reason = _divide_by_bounded(numerator, divisor, lows, upper)
            if bound is None:
                skipped.append(SkippedRule(u, projective.name, r, reason))
                continue
            found.append(UpperBound(u, bound, rule, projective.name, r, tuple(columns)))
            logger.debug(f'{rule}: {u} <= {bound} from {projective.name} row {r}')
    return found, skipped


def _divide(numerator: QPoly, divisor: QPoly) -> Tuple[Optional[QPoly], str, str]:
    if not is_positive(divisor):
        return None, '', f'multiplicity {divisor} is not positive'
    try:
        quotient = numerator.exactdiv(divisor)
    except InexactDivisionError as e:
        return None, '', f'inexact division by {divisor}, remainder {e.remainder}'
    value, _ = floor_bound(quotient)
    return value, 'R1' if divisor == 1 else 'R2', ''


def _divide_by_bounded(
    numerator: QPoly, divisor: MPoly, lows: Dict[str, int], upper: Dict[str, List[UpperBound]]
) -> Tuple[Optional[QPoly], str, str]:
    if any(sum(e for _, e in m) > 1 for m, _ in divisor.items()):
        return None, '', f'multiplicity {divisor} is not linear in the unknowns'
    values: Dict[str, QPoly] = {}
    for v in divisor.variables:
        sign = sign_for_all_n(divisor.linear_coefficient(v))
        if sign == 1:
            values[v] = QPoly([lows.get(v, 0)])
        elif sign == -1:
            candidates = upper.get(v)
            if not candidates:
                return None, '', f'no upper bound for {v}'
            values[v] = candidates[0].value
        else:
            return None, '', f'coefficient of {v} in {divisor} has no constant sign'
    smallest = divisor.substitute(values)
    assert smallest.is_constant(), f'{divisor} still depends on unknowns'
    a_min = smallest.constant()
    if not is_positive(a_min):
        return None, '', f'smallest multiplicity {a_min} is not positive'
    try:
        value, _ = floor_bound(numerator.exactdiv(a_min))
    except InexactDivisionError:
        bound = rational_floor(numerator, a_min)
        if bound is None:
            return None, '', f'cannot round ({numerator}) / ({a_min})'
        value = bound
    return value, 'R3', ''


def upper_bounds(
    case: PrimeCase, lows: Optional[Dict[str, int]] = None, max_rounds: int = 10
) -> Tuple[Dict[str, List[UpperBound]], List[SkippedRule]]:
    if lows is None:
        best, _ = lower_bounds(case)
        lows = {u: b.value for u, b in best.items()}
    blocks = case_blocks(case)
    upper: Dict[str, List[UpperBound]] = {}
    skipped: Dict[Tuple[str, str, str], SkippedRule] = {}
    for round_index in range(max_rounds):
        seen = {(u, c.value) for u, cs in upper.items() for c in cs}
        added = False
        for block in blocks:
            for projective in block.projectives:
                found, missed = _apply_rules(block, projective, lows, upper)
                for s in missed:
                    skipped[(s.unknown, s.projective, s.row)] = s
                for b in found:
                    skipped.pop((b.unknown, b.projective, b.row), None)
                    if (b.unknown, b.value) not in seen:
                        upper.setdefault(b.unknown, []).append(b)
                        seen.add((b.unknown, b.value))
                        added = True
        upper = {u: _prune(cs) for u, cs in upper.items()}
        if not added:
            break
        logger.debug(f'{case.label}: upper bound round {round_index} added bounds')
    return upper, list(skipped.values())


def case_unknowns(case: PrimeCase) -> Tuple[str, ...]:
    names = set()
    for block in case_blocks(case):
        names.update(block.matrix.unknowns())
    return tuple(sorted(names))


@lru_cache(maxsize=None)
def bound_set(case: PrimeCase) -> BoundSet:
    if case not in TABULATED_CASES:
        raise ValueError(f'no decomposition matrix is tabulated for case {case.label}')
    best, conditional = lower_bounds(case)
    upper, skipped = upper_bounds(case, {u: b.value for u, b in best.items()})
    bs = BoundSet(case, case_unknowns(case), best, conditional, upper, skipped)
    logger.info(f'{case.label}: {len(bs.unknowns)} unknowns, {sum(len(v) for v in upper.values())} upper bounds')
    return bs


def corollary_pins(case: PrimeCase, n: int, ell: int, bs: Optional[BoundSet] = None) -> Dict[str, int]:
    """
    Unknowns whose lower and upper bound coincide at `(n, l)`
    """
    bs = bs or bound_set(case)
    pins = {}
    for u in bs.unknowns:
        lo, hi = bs.interval_at(u, n, ell)
        if hi is not None and lo == hi:
            pins[u] = lo
    logger.info(f'{case.label} n={n} l={ell}: pins {pins}')
    return pins


@dataclass(frozen=True)
class HiddenBound:
    row: str
    column: str
    expression: DecompEntry
    unknown: Optional[str]
    value: Optional[int]

    def to_json(self) -> dict:
        return {
            'cell': f'({self.row}, {self.column})',
            'expression': self.expression,
            'unknown': self.unknown,
            'lower': self.value,
        }


def hidden_lower_bounds(case: PrimeCase, bs: Optional[BoundSet] = None) -> List[HiddenBound]:
    """
    Constraints `expression >= 0` carried by the `*` cells of relation rows
    """
    bs = bs or bound_set(case)
    printed = decomposition_matrix(case)
    lows = {u: bs.lo(u) for u in bs.unknowns}
    out = []
    for cell in hidden_cells(expanded_matrix(case, printed), printed):
        found = _entry_lower(cell.expression, lows)
        if found is None:
            out.append(HiddenBound(cell.row, cell.column, cell.expression, None, None))
        else:
            out.append(HiddenBound(cell.row, cell.column, cell.expression, found[0], found[1]))
    return out


@dataclass(frozen=True)
class DerivedRule:
    """
    `-unknown >= rhs_times_q / q`, from the row `row` of the projective
    """

    unknown: str
    projective: str
    row: str
    divisor: QPoly
    rhs_times_q: MPoly

    def to_json(self) -> dict:
        return {
            'unknown': self.unknown,
            'projective': self.projective,
            'row': self.row,
            'divisor': self.divisor,
            'rhs_times_q': self.rhs_times_q,
        }


def derive_inequality(
    case: PrimeCase, projective: str, row: str, unknown: str, matrix: Optional[DecompMatrix] = None
) -> DerivedRule:
    """
    Solve `(row, Psi) = sum_k d(row, phi_k) m_k` for the unknown. The multiplicity
    of the projective cover of the row's own Brauer character is dropped, which
    turns the equation into `-unknown >= (rest - (row, Psi)) / M`.
    """
    m = matrix if matrix is not None else decomposition_matrix(case)
    psi = find_projective(case, projective)
    multiplicities = projective_multiplicities(psi, m)
    if row not in m.basic_set:
        raise ValueError(f'{row} is not in the basic set of {m.source}')
    diagonal = m.columns[m.basic_set.index(row)]
    columns = [c for c in m.columns if m.entry(row, c).single_unknown() == unknown]
    if not columns:
        raise ValueError(f'{unknown} does not occur in row {row} of {m.source}')
    divisor = mpoly_sum(multiplicities[c] for c in columns)
    if not divisor.is_constant() or not is_positive(divisor.constant()):
        raise ValueError(f'multiplicity {divisor} of {unknown} in {projective} is not a positive number')
    scalar = psi.scalar(row)
    if not scalar.is_constant():
        raise ValueError(f'({row}, {projective}) is not a number')
    rest = mpoly_sum(
        m.entry(row, c).to_mpoly() * multiplicities[c]
        for c in m.columns
        if c not in columns and c != diagonal and not m.entry(row, c).is_zero()
    )
    rhs_times_q = ((rest - scalar) * Q).exactdiv(divisor.constant())
    return DerivedRule(unknown, projective, row, divisor.constant(), rhs_times_q)


@dataclass(frozen=True)
class G5Block:
    matrix: DecompMatrix
    relations: RelationTable
    diff: Tuple[str, ...]
    projectives: Tuple[Projective, ...]
    lower: int
    upper: Optional[QPoly]


def g5_block(case: PrimeCase = PrimeCase.PHI4) -> G5Block:
    """
    The block of the series type g5 when l | q^2+1, with its unknown `ap`
    """
    table = nonunipotent_table('g5', case)
    if table is None or not table.unknowns():
        raise ValueError(f'the g5 block carries no unknown in case {case.label}')
    matrix = DecompMatrix.from_table(table)
    relations = load_table('D.3r', case)
    assert isinstance(relations, RelationTable), 'D.3r is not a relation table'
    expanded = expand_relations(matrix, relations.rows, relations.basic_set)
    diff = compare_printed(expanded, matrix)
    bs = bound_set(case)
    unknown = table.unknowns()[0]
    block = next(b for b in case_blocks(case) if b.name == 'g5')
    return G5Block(matrix, relations, tuple(diff), block.projectives, bs.lo(unknown), bs.hi(unknown))
