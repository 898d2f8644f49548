"""
Relations of non-unipotent characters with respect to a basic set, and the
existence conditions attached to them.

A relation row holds only if the family of characters it describes is not
empty, i.e. if its count polynomial in `L = l^f` is positive.
"""
import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..algebra.parse import CountExpr
from ..catalog.primes import classify_prime
from ..types import PrimeCase

logger = logging.getLogger(__name__)

# smallest value of L = l^f in each case
MINIMAL_L = {
    PrimeCase.LINEAR: 7,
    PrimeCase.PHI4: 11,
    PrimeCase.PHI8P: 5,
    PrimeCase.PHI8M: 5,
    PrimeCase.ELL3: 3,
}


@dataclass(frozen=True)
class RelationRow:
    """
    `label` restricted to l-regular classes equals `sum_j coefficients[j] * basic[j]`
    """

    label: str
    coefficients: Tuple[int, ...]
    count: CountExpr

    def to_json(self) -> dict:
        return {'label': self.label, 'coefficients': list(self.coefficients), 'count': self.count}


def l_power(n: int, ell: int) -> int:
    return ell ** classify_prime(n, ell).f


def count_positive(count: CountExpr, big_l: int) -> bool:
    return count.evaluate(big_l) > 0


def relation_exists(count: CountExpr, n: int, ell: int) -> bool:
    """
    Whether the characters counted by `count` exist for `(n, l)`
    """
    exists = count_positive(count, l_power(n, ell))
    logger.debug(f'count {count} at n={n} l={ell}: exists={exists}')
    return exists


def always_exists(count: CountExpr, case: PrimeCase) -> bool:
    """
    True when the count is positive for every admissible L of the case.

    Counts are polynomials of degree <= 2 with real roots below the minimal L
    when they are positive there, which is checked on the odd values up to 999.
    """
    if count.expr.is_number:
        return count.evaluate(1) > 0
    start = MINIMAL_L[case]
    return all(count_positive(count, big_l) for big_l in range(start, 1000, 2))


_CLAUSE = re.compile(r'^(ell|n)\s*(!=|=|%)\s*(.+)$')


@dataclass(frozen=True)
class Condition:
    """
    A disjunction of clauses `ell!=K`, `ell=K` and `n%M=r1,r2` written with `;`
    """

    text: str

    def clauses(self) -> List[Tuple[str, str, str]]:
        out = []
        for part in self.text.split(';'):
            m = _CLAUSE.match(part.strip())
            if m is None:
                raise ValueError(f'malformed condition clause={part!r} in {self.text!r}')
            out.append((m.group(1), m.group(2), m.group(3)))
        return out

    def holds(self, n: int, ell: int) -> bool:
        for var, op, rhs in self.clauses():
            if var == 'ell' and op == '!=' and ell != int(rhs):
                return True
            if var == 'ell' and op == '=' and ell == int(rhs):
                return True
            if var == 'n' and op == '%':
                modulus, residues = rhs.split('=')
                if n % int(modulus) in {int(r) for r in residues.split(',')}:
                    return True
        return False

    def __str__(self) -> str:
        return self.text

    def to_json(self) -> str:
        return self.text


def condition_disagreements(
    condition: Condition, count: CountExpr, case: PrimeCase, ns: Iterable[int], ells: Sequence[int]
) -> List[Tuple[int, int]]:
    """
    The `(n, l)` of the case where a congruence condition and the count positivity differ
    """
    mismatches = []
    for n in ns:
        for ell in ells:
            if classify_prime(n, ell).case != case:
                continue
            if condition.holds(n, ell) != relation_exists(count, n, ell):
                mismatches.append((n, ell))
    return mismatches
