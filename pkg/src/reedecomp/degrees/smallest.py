"""
Smallest degree of a nontrivial Brauer character.

Every Brauer degree is a polynomial in q and the unknowns. A lower bound is
obtained by expanding it into monomials and replacing the unknowns of a
monomial by their lower bounds when its coefficient is positive and by their
upper bounds otherwise. For n = 1 the signs are those of the coefficients at
q = 2 sqrt(2); for n >= 2 the coefficients are compared as polynomials, which
proves the bound for every n >= 2 at once.

Some degrees are differences `K + m * P` with `K < 0`, which substitution
alone cannot bound from below; for those the positivity of the degree forces
a lower bound on the integer `m`.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ..algebra.mpoly import MPoly
from ..algebra.positivity import is_positive, sign_for_all_n
from ..algebra.qpoly import QPoly
from ..algebra.qs2 import QS2
from ..bounds.engine import BoundSet, bound_set, corollary_pins
from ..bounds.reference import reference_bounds
from ..catalog.characters import d0, unipotent_char
from ..catalog.primes import classify_prime
from ..decomp.matrix import brauer_degrees, decomposition_matrix
from ..types import PrimeCase
from .inequalities import TOP_COLUMN, apply_rules, degree_table, inequality_set, printed_rules

logger = logging.getLogger(__name__)

SMALLEST = ('phi2', 'phi3')
TRIVIAL = 'phi1'

HOLDS = 'holds'
FAILS = 'fails'
INCONCLUSIVE = 'inconclusive'
PARTIAL = 'partial'


@dataclass(frozen=True)
class DegreeBound:
    value: QS2
    method: str
    # lower bound valid for every n >= 2, when one was proven
    symbolic: Optional[QPoly] = None


@dataclass(frozen=True)
class ColumnDegree:
    column: str
    exact: Optional[int]
    lower: Optional[QS2]
    method: str

    @property
    def status(self) -> str:
        if self.exact is not None:
            return 'exact'
        return 'bounded' if self.lower is not None else 'unbounded'

    def equals(self, value: int) -> bool:
        return self.exact == value

    def exceeds(self, value: int) -> bool:
        if self.exact is not None:
            return self.exact > value
        return self.lower is not None and self.lower > value

    def to_json(self) -> dict:
        return {
            'column': self.column,
            'status': self.status,
            'exact': self.exact,
            'lower': self.lower,
            'method': self.method,
        }


@dataclass
class DegreeReport:
    case: PrimeCase
    n: int
    ell: int
    d0: int
    columns: List[ColumnDegree] = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    unresolved: List[str] = field(default_factory=list)
    pins: Dict[str, int] = field(default_factory=dict)
    diff: List[str] = field(default_factory=list)

    def column(self, label: str) -> ColumnDegree:
        for c in self.columns:
            if c.column == label:
                return c
        raise ValueError(f'no column {label} in the report')

    def to_json(self) -> dict:
        return {
            'case': self.case.label,
            'n': self.n,
            'ell': self.ell,
            'd0': self.d0,
            'verdict': self.verdict,
            'unresolved': self.unresolved,
            'pins': self.pins,
            'columns': self.columns,
            'diff': self.diff,
        }


def _reference_hi(case: PrimeCase) -> Dict[str, QPoly]:
    return {b.unknown: b.hi for b in reference_bounds(case) if b.hi is not None and b.condition is None}


def _hi_at(u: str, n: int, bs: BoundSet, fallback: Mapping[str, QPoly]) -> Optional[int]:
    hi = bs.hi_at(u, n)
    if hi is None and u in fallback:
        logger.warning(f'{bs.case.label}: no derived upper bound for {u}, using the printed one')
        hi = fallback[u].eval_at_q(n)
    return None if hi is None else hi.floor()


def _numeric_bound(
    degree: MPoly, n: int, ell: int, bs: BoundSet, pins: Mapping[str, int], fallback: Mapping[str, QPoly]
) -> Optional[QS2]:
    values = degree.substitute({u: v for u, v in pins.items()}).evaluate_q(n)
    total = QS2()
    for monomial, c in values.items():
        coefficient = c.constant()
        term = coefficient
        for u, e in monomial:
            if coefficient.sign() > 0:
                bound: Optional[int] = bs.lo_at(u, n, ell)
            else:
                bound = _hi_at(u, n, bs, fallback)
                if bound is None:
                    logger.info(f'{bs.case.label}: {u} has no upper bound, monomial {monomial} cannot be bounded')
                    return None
            term = term * bound**e
        total = total + term
        logger.debug(f'{monomial}: coefficient={coefficient} contributes {term}')
    return total


def _symbolic_bound(degree: MPoly, bs: BoundSet, fallback: Mapping[str, QPoly]) -> Optional[QPoly]:
    """
    Lower bound polynomial valid for every n >= 2, using unconditional bounds only
    """
    total = QPoly()
    for monomial, c in degree.items():
        parts = [c]
        if sign_for_all_n(c, n_from=2) is None:
            parts = [QPoly.monomial(x, k) for k, x in enumerate(c.coeffs) if x]
        for part in parts:
            sign = sign_for_all_n(part, n_from=2)
            if sign is None:
                return None
            term = part
            for u, e in monomial:
                if sign > 0:
                    bound = QPoly([bs.lo(u)])
                else:
                    hi = bs.hi(u)
                    if hi is None:
                        hi = fallback.get(u)
                    if hi is None:
                        return None
                    bound = hi
                term = term * bound**e
            total = total + term
    return total


def _positivity_bound(
    degree: MPoly, n: int, ell: int, bs: BoundSet, pins: Mapping[str, int], fallback: Mapping[str, QPoly]
) -> Optional[QS2]:
    """
    A Brauer degree is a positive integer. When at `n` it reads `K + m * P` with
    `m` an integer combination of the unknowns, `m > -K / P` and so
    `m >= floor(-K / P) + 1`.
    """
    values = degree.substitute(dict(pins)).evaluate_q(n)
    const = values.constant().constant()
    weights: Dict[str, QS2] = {}
    for monomial, c in values.items():
        if not monomial:
            continue
        if len(monomial) != 1 or monomial[0][1] != 1:
            return None
        weights[monomial[0][0]] = c.constant()
    if not weights:
        return None
    unit = min(w.abs() for w in weights.values())
    factors = {u: w / unit for u, w in weights.items()}
    if not all(f.is_integer() for f in factors.values()):
        return None

    smallest = (-const / unit).floor() + 1
    by_bounds: Optional[int] = 0
    for u, f in sorted(factors.items()):
        k = int(f.rat)
        if k > 0:
            by_bounds = None if by_bounds is None else by_bounds + k * bs.lo_at(u, n, ell)
            continue
        hi = _hi_at(u, n, bs, fallback)
        by_bounds = None if by_bounds is None or hi is None else by_bounds + k * hi
    if by_bounds is not None:
        smallest = max(smallest, by_bounds)
    logger.debug(f'{bs.case.label} n={n}: degree {const} + {unit} * m with m >= {smallest}')
    return const + unit * smallest


def lower_bound_deg(
    column: str, case: PrimeCase, n: int, ell: int, bs: Optional[BoundSet] = None
) -> Tuple[Optional[DegreeBound], MPoly]:
    """
    Lower bound for the degree of the Brauer character `column` at `(n, l)`.

    For phi21 the bound is computed both on the degree itself and on the degree
    with the inequalities of `inequality_set` applied; the larger one is kept.
    When neither proves the degree positive, its integrality is used as well
    (see `_positivity_bound`).

    Returns:
        the bound (None when some needed upper bound is missing) and the symbolic degree
    """
    bs = bs or bound_set(case)
    degree = brauer_degrees(decomposition_matrix(case))[column]
    fallback = _reference_hi(case)
    pins = corollary_pins(case, n, ell, bs) if n == 1 else {}
    variants = [('direct', degree)]
    if column == TOP_COLUMN and printed_rules(case):
        variants.append(('inequalities', apply_rules(degree, inequality_set(case, degree))))

    d0_poly = unipotent_char(2).degree
    best: Optional[DegreeBound] = None
    for name, poly in variants:
        found: Optional[DegreeBound] = None
        if n >= 2:
            symbolic = _symbolic_bound(poly, bs, fallback)
            if symbolic is not None and is_positive(symbolic - d0_poly, n_from=2):
                found = DegreeBound(symbolic.eval_at_q(n), f'{name}, symbolic', symbolic)
        if found is None:
            value = _numeric_bound(poly, n, ell, bs, pins, fallback)
            if value is not None:
                found = DegreeBound(value, f'{name}, n={n}')
        if found is not None and (best is None or found.value > best.value):
            best = found
    if best is None or best.value.sign() <= 0:
        positive = _positivity_bound(degree, n, ell, bs, pins, fallback)
        if positive is not None and (best is None or positive > best.value):
            best = DegreeBound(positive, f'positivity, n={n}')
    if best is not None:
        logger.info(f'{case.label} n={n} l={ell}: deg({column}) >= {best.value} ({best.method})')
    return best, degree


def interval_degrees(
    case: PrimeCase, n: int, ell: int, bs: Optional[BoundSet] = None
) -> Dict[str, Tuple[QS2, Optional[QS2]]]:
    """
    `[lo, hi]` for every Brauer degree by interval evaluation; `hi` is None when unbounded
    """
    bs = bs or bound_set(case)
    out = {}
    for column, degree in brauer_degrees(decomposition_matrix(case)).items():
        lo: Optional[QS2] = QS2()
        hi: Optional[QS2] = QS2()
        for monomial, c in degree.evaluate_q(n).items():
            coefficient = c.constant()
            at_lo = coefficient
            at_hi: Optional[QS2] = coefficient
            for u, e in monomial:
                u_hi = bs.hi_at(u, n)
                at_lo = at_lo * bs.lo_at(u, n, ell) ** e
                at_hi = None if at_hi is None or u_hi is None else at_hi * u_hi.floor() ** e
            # unknowns are nonnegative, so a monomial is monotone in each of them
            small, large = (at_lo, at_hi) if coefficient.sign() > 0 else (at_hi, at_lo)
            lo = None if lo is None or small is None else lo + small
            hi = None if hi is None or large is None else hi + large
        out[column] = (QS2() if lo is None else max(lo, QS2()), hi)
    return out


def verify_theorem(case: PrimeCase, n: int, ell: int) -> DegreeReport:
    """
    Compare every nontrivial Brauer degree with d0, the smallest nontrivial ordinary degree.

    The smallest degree is d0 exactly when phi2 and phi3 attain it and every
    other column exceeds it. For l = 3 two columns are left open in general
    and the report is partial.
    """
    found_case = classify_prime(n, ell).case
    if found_case != case:
        raise ValueError(f'l={ell} at n={n} is in case {found_case.label}, not {case.label}')
    bs = bound_set(case)
    report = DegreeReport(case, n, ell, d0(n))
    if n == 1:
        report.pins = corollary_pins(case, n, ell, bs)
    for column in decomposition_matrix(case).columns:
        if column == TRIVIAL:
            continue
        bound, degree = lower_bound_deg(column, case, n, ell, bs)
        if degree.is_constant():
            value = degree.constant().eval_at_q(n)
            assert value.is_integer(), f'deg({column}) = {value} at n={n}'
            report.columns.append(ColumnDegree(column, int(value.rat), None, 'exact'))
        else:
            report.columns.append(
                ColumnDegree(column, None, bound.value if bound else None, bound.method if bound else 'no bound')
            )

    table = degree_table(case)
    if table is not None and n == 1:
        top = report.column(TOP_COLUMN)
        if top.lower is not None and top.lower != table.bound_n1:
            report.diff.append(f'{TOP_COLUMN}: derived lower bound={top.lower} printed={table.bound_n1}')
            logger.warning(report.diff[-1])

    equal = {c.column for c in report.columns if c.equals(report.d0)}
    below = [c.column for c in report.columns if c.exact is not None and c.exact < report.d0]
    open_columns = [c.column for c in report.columns if c.column not in SMALLEST and not c.exceeds(report.d0)]
    report.unresolved = open_columns
    if case == PrimeCase.ELL3:
        report.verdict = PARTIAL
    elif below or equal - set(SMALLEST) or not equal >= set(SMALLEST):
        report.verdict = FAILS
    elif open_columns:
        report.verdict = INCONCLUSIVE
    else:
        report.verdict = HOLDS
    logger.info(f'{case.label} n={n} l={ell}: smallest degree {report.verdict}, unresolved={open_columns}')
    return report
