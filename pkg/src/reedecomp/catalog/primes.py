"""
Position of an odd prime with respect to the factorisation of |2F4(q^2)|.

For `l > 3` dividing |G|, `l` divides exactly one of the factors
q^2-1, q^2+1, q^2+r2*q+1, q^2-r2*q+1, q^4-q^2+1, phi24' and phi24''.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import sympy

from ..algebra.factors import FACTORS
from ..types import PrimeCase

logger = logging.getLogger(__name__)

# tested in this order, the first dividing factor decides the case
_TABULATED_FACTORS = (
    ('phi1t', PrimeCase.LINEAR),
    ('phi4', PrimeCase.PHI4),
    ('phi8p', PrimeCase.PHI8P),
    ('phi8m', PrimeCase.PHI8M),
)
_CYCLIC_FACTORS = ('phi12', 'phi24p', 'phi24m')


@dataclass(frozen=True)
class PrimeClass:
    """
    Parameters:
        case: the prime case
        f: l-adic valuation of the factor divided by `l`
        factor: name of that factor in `FACTORS`, `None` if `l` does not divide |G|
    """

    case: PrimeCase
    f: int
    factor: Optional[str]

    def __str__(self) -> str:
        return f'{self.case.label} f={self.f}'

    def to_json(self) -> dict:
        return {'case': self.case.label, 'f': self.f, 'factor': self.factor}


def ell_part(value: int, ell: int) -> Tuple[int, int]:
    """
    Returns:
        the l-adic valuation `v` of `value` and the l-part `l^v`
    """
    if value == 0:
        raise ValueError('the l-part of 0 is undefined')
    value = abs(value)
    v = 0
    while value % ell == 0:
        value //= ell
        v += 1
    return v, ell**v


@lru_cache(maxsize=None)
def factor_value(name: str, n: int) -> int:
    value = FACTORS[name].eval_at_q(n)
    assert value.is_integer(), f'factor {name} is not an integer at n={n}: {value}'
    return int(value.rat)


def check_ell(ell: int) -> None:
    if ell % 2 == 0 or not sympy.isprime(ell):
        raise ValueError(f'l must be an odd prime, got={ell}')


@lru_cache(maxsize=4096)
def classify_prime(n: int, ell: int) -> PrimeClass:
    if n < 1:
        raise ValueError(f'n must be >= 1, got={n}')
    check_ell(ell)
    if ell == 3:
        # q^2 = 2^(2n+1) = 2 mod 3, hence 3 | q^2+1
        f, _ = ell_part(factor_value('phi4', n), 3)
        return PrimeClass(PrimeCase.ELL3, f, 'phi4')

    for name, case in _TABULATED_FACTORS:
        f, _ = ell_part(factor_value(name, n), ell)
        if f:
            return PrimeClass(case, f, name)
    for name in _CYCLIC_FACTORS:
        f, _ = ell_part(factor_value(name, n), ell)
        if f:
            return PrimeClass(PrimeCase.CYCLIC, f, name)
    return PrimeClass(PrimeCase.NONE, 0, None)


def dividing_factors(n: int, ell: int) -> Tuple[str, ...]:
    """All factors of |G| divisible by `l` at `n`"""
    names = [name for name, _ in _TABULATED_FACTORS] + list(_CYCLIC_FACTORS)
    return tuple(name for name in names if factor_value(name, n) % ell == 0)


def primes_for_case(n: int, case: PrimeCase, limit: int = 10**6) -> Tuple[int, ...]:
    """
    Odd primes `l <= limit` of the given case at `n`, smallest first
    """
    if case == PrimeCase.ELL3:
        return (3,)
    names = [name for name, c in _TABULATED_FACTORS if c == case]
    if case == PrimeCase.CYCLIC:
        names = list(_CYCLIC_FACTORS)
    found = set()
    for name in names:
        for p in sympy.primefactors(factor_value(name, n)):
            if 3 < p <= limit and classify_prime(n, p).case == case:
                found.add(int(p))
    return tuple(sorted(found))
