"""
Cyclotomic factors over Q(sqrt 2) of the order of the Ree groups 2F4(q^2).
"""
from typing import Dict

from .qpoly import QPoly
from .qs2 import R2

PHI1 = QPoly([-1, 1])
PHI2 = QPoly([1, 1])
PHI4 = QPoly([1, 0, 1])
PHI8P = QPoly([1, R2, 1])
PHI8M = QPoly([1, -R2, 1])
PHI12 = QPoly([1, 0, -1, 0, 1])
PHI24P = QPoly([1, R2, 1, R2, 1])
PHI24M = QPoly([1, -R2, 1, -R2, 1])

# products of the above that appear in character degrees
PHI1T = PHI1 * PHI2  # q^2 - 1
PHI8 = PHI8P * PHI8M  # q^4 + 1
PHI24 = PHI24P * PHI24M  # q^8 - q^4 + 1

FACTORS: Dict[str, QPoly] = {
    'phi1': PHI1,
    'phi2': PHI2,
    'phi4': PHI4,
    'phi8p': PHI8P,
    'phi8m': PHI8M,
    'phi12': PHI12,
    'phi24p': PHI24P,
    'phi24m': PHI24M,
    'phi1t': PHI1T,
    'phi8': PHI8,
    'phi24': PHI24,
}


def group_order() -> QPoly:
    """
    |G| = q^24 phi1^2 phi2^2 phi4^2 phi8'^2 phi8''^2 phi12 phi24' phi24''
    """
    return (
        QPoly.monomial(1, 24)
        * PHI1**2
        * PHI2**2
        * PHI4**2
        * PHI8P**2
        * PHI8M**2
        * PHI12
        * PHI24P
        * PHI24M
    )


def group_order_at(n: int) -> int:
    value = group_order().eval_at_q(n)
    assert value.is_integer(), f'|G| is not an integer at n={n}'
    return int(value.rat)
