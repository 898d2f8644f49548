"""
Comparison of the derived bounds with the printed ones.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from ..algebra.positivity import dominates
from ..algebra.qpoly import QPoly
from ..errors import VerificationError
from ..tables.loader import ReferenceBound, TextTable, find_tables
from ..tables.relations import condition_disagreements
from ..types import PrimeCase
from .engine import BoundSet, bound_set, corollary_pins

logger = logging.getLogger(__name__)

EQUAL = 'equal'
SHARPER = 'sharper'
WEAKER = 'weaker'
INCOMPARABLE = 'incomparable'
MISSING = 'missing'
ENCODED_ONLY = 'encoded-only'
DISAGREE = 'disagree'

# verdicts that make a derivation wrong rather than incomplete
FAILING = (WEAKER, DISAGREE)


@dataclass(frozen=True)
class BoundComparison:
    unknown: str
    kind: str
    derived: Optional[object]
    printed: Optional[object]
    verdict: str
    detail: str = ''

    def to_json(self) -> dict:
        return {
            'unknown': self.unknown,
            'kind': self.kind,
            'derived': self.derived,
            'printed': self.printed,
            'verdict': self.verdict,
            'detail': self.detail,
        }


def reference_bounds(case: PrimeCase) -> List[ReferenceBound]:
    out: List[ReferenceBound] = []
    for table in find_tables('bounds', case):
        assert isinstance(table, TextTable)
        out.extend(table.bounds)
    return out


def reference_pins(case: PrimeCase) -> List[Tuple[int, int, Dict[str, int]]]:
    """Printed pins with the `(n, l)` they hold for"""
    out = []
    for table in find_tables('pins', case):
        assert isinstance(table, TextTable)
        out.append((int(table.headers['n']), int(table.headers['ell']), dict(table.pins)))
    return out


def _compare_lower(u: str, derived: int, printed: int) -> BoundComparison:
    if derived == printed:
        verdict = EQUAL
    else:
        verdict = SHARPER if derived > printed else WEAKER
    return BoundComparison(u, 'lower', derived, printed, verdict)


def _compare_upper(u: str, bs: BoundSet, printed: QPoly) -> BoundComparison:
    candidates = bs.upper.get(u, [])
    if not candidates:
        return BoundComparison(u, 'upper', None, printed, MISSING)
    for c in candidates:
        if c.value == printed:
            return BoundComparison(u, 'upper', c.value, printed, EQUAL, f'{c.rule} from {c.projective}')
    for c in candidates:
        if dominates(c.value, printed):
            return BoundComparison(u, 'upper', c.value, printed, SHARPER, f'{c.rule} from {c.projective}')
    if all(dominates(printed, c.value) for c in candidates):
        return BoundComparison(u, 'upper', candidates[0].value, printed, WEAKER)
    return BoundComparison(u, 'upper', [c.value for c in candidates], printed, INCOMPARABLE)


def compare_bounds(
    case: PrimeCase,
    ns: Iterable[int] = range(1, 61),
    ells: Optional[Sequence[int]] = None,
    bs: Optional[BoundSet] = None,
) -> List[BoundComparison]:
    """
    Compare each printed bound with the derived one.

    Conditional lower bounds are matched by value; the printed congruence
    condition is then checked against the existence of the relation row the
    derived bound came from, at every `(n, l)` of the case in `ns x ells`.
    """
    bs = bs or bound_set(case)
    ns = list(ns)
    if ells is None:
        ells = [int(p) for p in sympy.primerange(3, 200)]
    out = []
    for ref in reference_bounds(case):
        u = ref.unknown
        if u not in bs.unknowns:
            out.append(BoundComparison(u, 'lower', None, ref.lo, ENCODED_ONLY, 'unknown absent from the matrices'))
            continue
        printed_lo = int(ref.lo.constant().rat)
        if ref.condition is None:
            out.append(_compare_lower(u, bs.lo(u), printed_lo))
            if ref.hi is not None:
                out.append(_compare_upper(u, bs, ref.hi))
            continue
        matching = [b for b in bs.conditional.get(u, []) if b.value == printed_lo]
        if not matching:
            out.append(BoundComparison(u, 'conditional', None, f'{printed_lo} if {ref.condition}', MISSING))
            continue
        derived = matching[0]
        assert derived.count is not None
        mismatches = condition_disagreements(ref.condition, derived.count, case, ns, ells)
        detail = ', '.join(f'(n={n}, l={ell})' for n, ell in mismatches[:10])
        out.append(
            BoundComparison(
                u,
                'conditional',
                f'{derived.value} if {derived.count} > 0',
                f'{printed_lo} if {ref.condition}',
                DISAGREE if mismatches else EQUAL,
                detail,
            )
        )
    for c in out:
        if c.verdict in FAILING:
            logger.error(f'{case.label}: {c.kind} bound of {c.unknown} is {c.verdict}: {c.derived} vs {c.printed}')
        elif c.verdict == MISSING:
            logger.warning(f'{case.label}: no derived {c.kind} bound of {c.unknown}, printed {c.printed}')
    return out


def verify_bounds(case: PrimeCase, **kwargs) -> List[BoundComparison]:
    comparisons = compare_bounds(case, **kwargs)
    failing = [
        f'{c.kind} {c.unknown}: {c.verdict} {c.derived} vs {c.printed} {c.detail}'
        for c in comparisons
        if c.verdict in FAILING
    ]
    if failing:
        raise VerificationError(f'bounds of case {case.label}', failing)
    return comparisons


def pins_diff(case: PrimeCase, bs: Optional[BoundSet] = None) -> List[str]:
    """
    Differences between the derived and the printed pinned values
    """
    diff = []
    for n, ell, printed in reference_pins(case):
        derived = corollary_pins(case, n, ell, bs)
        for u in sorted(set(derived) | set(printed)):
            if derived.get(u) != printed.get(u):
                diff.append(f'n={n} l={ell} {u}: derived={derived.get(u)} printed={printed.get(u)}')
    return diff


def verify_pins(case: PrimeCase) -> None:
    diff = pins_diff(case)
    if diff:
        raise VerificationError(f'pins of case {case.label}', diff)
