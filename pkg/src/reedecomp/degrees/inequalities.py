"""
Inequalities used to bound the degree of phi21 from below.

The degree of phi21 is a polynomial in q whose leading coefficients contain
unknowns with a negative sign, so replacing them by their upper bounds gives
a bound far too weak. Instead, each such unknown `u` is eliminated with an
inequality `-c*u >= R` derived from a projective character, where `c` is the
absolute value of the coefficient of `u*q^p` in the degree.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.mpoly import MPoly
from ..algebra.qpoly import QPoly
from ..algebra.qs2 import QS2
from ..bounds.engine import DerivedRule, derive_inequality
from ..decomp.matrix import brauer_degrees, decomposition_matrix
from ..errors import VerificationError
from ..tables.loader import DegreeTable, PrintedRule, TextTable, find_tables
from ..types import PrimeCase

logger = logging.getLogger(__name__)

TOP_COLUMN = 'phi21'


@dataclass(frozen=True)
class DegreeRule:
    """
    Parameters:
        derived: `-unknown >= rhs_times_q / q` from the projective
        power: exponent `p` of the term `c * unknown * q^p` it replaces
        weight: `|c|`
        printed: the printed form of the rule, if any
    """

    derived: DerivedRule
    power: int
    weight: QS2
    printed: Optional[PrintedRule] = None

    @property
    def unknown(self) -> str:
        return self.derived.unknown

    @property
    def rhs_times_q(self) -> MPoly:
        """`q` times the right hand side of `-weight * unknown >= rhs`"""
        return self.derived.rhs_times_q * self.weight

    def to_json(self) -> dict:
        return {
            'unknown': self.unknown,
            'projective': self.derived.projective,
            'row': self.derived.row,
            'power': self.power,
            'weight': self.weight,
            'rhs_times_q': self.rhs_times_q,
        }


def top_degree(case: PrimeCase) -> MPoly:
    return brauer_degrees(decomposition_matrix(case))[TOP_COLUMN]


def printed_rules(case: PrimeCase) -> List[PrintedRule]:
    out: List[PrintedRule] = []
    for table in find_tables('rules', case):
        assert isinstance(table, TextTable)
        out.extend(table.rules)
    return out


def rule_power(degree: MPoly, unknown: str) -> Tuple[int, QS2]:
    """
    The highest power of q at which `unknown` occurs linearly with a negative coefficient
    """
    for p in range(degree.q_degree(), -1, -1):
        c = degree.q_coefficient(p).linear_coefficient(unknown).constant()
        if c.sign() < 0:
            return p, c
    raise ValueError(f'{unknown} has no negative coefficient in {degree}')


def inequality_set(case: PrimeCase, degree: Optional[MPoly] = None) -> List[DegreeRule]:
    if degree is None:
        degree = top_degree(case)
    rules = []
    for printed in printed_rules(case):
        derived = derive_inequality(case, printed.projective, printed.row, printed.unknown)
        p, c = rule_power(degree, printed.unknown)
        rule = DegreeRule(derived, p, -c, printed)
        logger.info(f'{case.label}: -{rule.weight}*{rule.unknown} >= ({rule.rhs_times_q})/q at q^{p}')
        rules.append(rule)
    return rules


def inequality_set_phi8p() -> List[DegreeRule]:
    return inequality_set(PrimeCase.PHI8P)


def rules_diff(rules: List[DegreeRule]) -> List[str]:
    diff = []
    for rule in rules:
        printed = rule.printed
        if printed is None:
            continue
        if printed.weight is not None and rule.weight != printed.weight:
            diff.append(f'{rule.unknown}: weight derived={rule.weight} printed={printed.weight}')
        if printed.rhs_times_q is not None and rule.rhs_times_q != printed.rhs_times_q:
            delta = rule.rhs_times_q - printed.rhs_times_q
            diff.append(f'{rule.unknown}: q*rhs derived - printed = {delta}')
    return diff


def verify_inequalities(case: PrimeCase) -> List[DegreeRule]:
    rules = inequality_set(case)
    diff = rules_diff(rules)
    if diff:
        raise VerificationError(f'degree inequalities of case {case.label}', diff)
    return rules


def apply_rules(degree: MPoly, rules: List[DegreeRule]) -> MPoly:
    """
    Replace every term `-weight * u * q^p` by `weight * R * q^p`, a lower bound for it
    """
    result = degree
    for rule in rules:
        monomial = ((rule.unknown, 1),)
        c = degree.coefficient(monomial).coeff(rule.power)
        assert c == -rule.weight, f'coefficient of {rule.unknown}*q^{rule.power} is {c}, expected {-rule.weight}'
        result = result.remove_q_term(monomial, rule.power)
    for rule in rules:
        result = result + rule.rhs_times_q * QPoly.monomial(1, rule.power - 1)
    return result


def degree_table(case: PrimeCase) -> Optional[DegreeTable]:
    found = find_tables('degree', case)
    return found[0] if found else None  # type: ignore


def coefficient_diff(case: PrimeCase, degree: Optional[MPoly] = None) -> List[str]:
    """
    Differences between the computed and the printed leading coefficients of deg(phi21)
    """
    table = degree_table(case)
    if table is None:
        return []
    if degree is None:
        degree = top_degree(case)
    diff = []
    for k, printed in sorted(table.coefficients.items(), reverse=True):
        if printed is None:
            continue
        computed = degree.q_coefficient(k)
        if computed != printed:
            diff.append(f'q^{k}: computed={computed} printed={printed} difference={computed - printed}')
    return diff


def verify_coefficients(case: PrimeCase) -> Dict[int, MPoly]:
    degree = top_degree(case)
    diff = coefficient_diff(case, degree)
    if diff:
        raise VerificationError(f'leading coefficients of deg({TOP_COLUMN}) in case {case.label}', diff)
    table = degree_table(case)
    keys = sorted(table.coefficients, reverse=True) if table else []
    return {k: degree.q_coefficient(k) for k in keys}
