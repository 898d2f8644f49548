"""
Sign decisions for QPoly valued expressions over all q^2 = 2^(2n+1), n >= n_from.

A polynomial `p` of degree `d > 0` has the sign of its leading coefficient for
every real `q` above the Cauchy bound `B = 1 + max_i |a_i| / |a_d|`. Since
`q^2 = 2^(2n+1)` grows geometrically, only finitely many `n` remain and those
are checked exactly.
"""
import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

from .qpoly import QPoly
from .qs2 import QS2

logger = logging.getLogger(__name__)


def _abs_upper(x: QS2, digits: int) -> Fraction:
    lo, hi = x.enclosure(digits)
    return max(abs(lo), abs(hi))


def _abs_lower(x: QS2, digits: int) -> Fraction:
    assert x, 'zero has no positive lower bound'
    while True:
        lo, hi = x.enclosure(digits)
        if lo > 0 or hi < 0:
            return min(abs(lo), abs(hi))
        digits *= 2


def cauchy_bound(p: QPoly, digits: int = 8) -> Fraction:
    assert p.degree >= 1, f'constant polynomial has no Cauchy bound: {p}'
    lead = _abs_lower(p.lead(), digits)
    return 1 + max(_abs_upper(c, digits) for c in p.coeffs[:-1]) / lead


def sign_for_all_n(p: QPoly, n_from: int = 1, digits: int = 8) -> Optional[int]:
    """
    The common sign of `p(q)` for all `n >= n_from`.

    Returns:
        +1 or -1 when `p` has that strict sign for every such `n`, 0 for the zero
        polynomial and `None` when the sign changes or `p` vanishes somewhere.
    """
    if not p:
        return 0
    if p.is_constant():
        return p.constant().sign()
    s = p.lead().sign()
    bound = cauchy_bound(p, digits)
    n = n_from
    # q > B  <=>  2^(2n+1) > B^2
    while Fraction(2 ** (2 * n + 1)) <= bound * bound:
        if p.eval_at_q(n).sign() != s:
            logger.debug(f'sign of {p} differs from its leading sign at n={n}')
            return None
        n += 1
    return s


def is_positive(p: QPoly, n_from: int = 1) -> bool:
    return sign_for_all_n(p, n_from) == 1


def is_nonnegative(p: QPoly, n_from: int = 1) -> bool:
    return sign_for_all_n(p, n_from) in (0, 1)


def dominates(smaller: QPoly, larger: QPoly, n_from: int = 1) -> bool:
    """`smaller(q) <= larger(q)` for all n >= n_from"""
    return is_nonnegative(larger - smaller, n_from)


def is_integer_valued(p: QPoly, n_from: int = 1, count: int = 12) -> bool:
    return all(p.eval_at_q(n).is_integer() for n in range(n_from, n_from + count))


def floor_bound(p: QPoly, n_from: int = 1, count: int = 12) -> Tuple[QPoly, bool]:
    """
    Replace an upper bound of an integer unknown by its integer part.

    `p` is shifted by the constant fractional part `c` of `p(n_from)` when
    `p - c` is integer-valued, in which case `floor(p(q)) = p(q) - c` for all n.

    Returns:
        the floored polynomial and whether the shift succeeded
    """
    v = p.eval_at_q(n_from)
    if not v.is_rational():
        return p, False
    c = v.rat - math.floor(v.rat)
    shifted = p - c
    if is_integer_valued(shifted, n_from, count):
        return shifted, True
    return p, False


def rational_floor(numerator: QPoly, denominator: QPoly, n_from: int = 1, count: int = 12) -> Optional[QPoly]:
    """
    Integer upper bound for `numerator / denominator` when the quotient is not a polynomial.

    Writes `numerator = Qt * denominator + Rm` with a constant `Rm >= 0` and a
    denominator with nonnegative coefficients, so that `f = Rm / denominator` is
    decreasing in q and `f <= f(n_from)`. Then
    `floor(N/D) <= Qt - c + floor(c + f(n_from))` where `c` is the constant
    fractional part of `Qt`.

    Returns:
        the bound, or `None` if the shape of the division does not allow the argument
    """
    if not is_positive(denominator, n_from):
        return None
    if any(c.sign() < 0 for c in denominator.coeffs):
        return None
    quotient, remainder = divmod(numerator, denominator)
    if not remainder.is_constant() or remainder.constant().sign() < 0:
        return None
    floored, ok = floor_bound(quotient, n_from, count)
    if not ok:
        return None
    c = quotient.eval_at_q(n_from).rat - floored.eval_at_q(n_from).rat
    f_max = remainder.constant() / denominator.eval_at_q(n_from)
    return floored + (f_max + c).floor()
