"""
Exact arithmetic in the real quadratic field Q(sqrt 2).

Elements are written `rat + irr * r2` with `r2 = sqrt(2)`. All comparisons are
exact: the sign of an element is decided without floating point.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

Rational = Union[int, Fraction]

# 8 digit enclosure of sqrt(2), used for quick magnitude estimates
SQRT2_LO = Fraction(141421356, 10**8)
SQRT2_HI = Fraction(141421357, 10**8)


def sqrt2_enclosure(digits: int) -> Tuple[Fraction, Fraction]:
    """
    Return rationals `lo < sqrt(2) < hi` with `hi - lo = 10^-digits`
    """
    scale = 10**digits
    s = math.isqrt(2 * scale * scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QS2:
    rat: Fraction = Fraction(0)
    irr: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'rat', Fraction(self.rat))
        object.__setattr__(self, 'irr', Fraction(self.irr))

    @staticmethod
    def coerce(value: Union['QS2', Rational]) -> 'QS2':
        if isinstance(value, QS2):
            return value
        if isinstance(value, (int, Fraction)):
            return QS2(Fraction(value))
        raise TypeError(f'cannot convert {value!r} to QS2')

    @staticmethod
    def sqrt2() -> 'QS2':
        return QS2(Fraction(0), Fraction(1))

    # ring operations
    def __add__(self, other: Union['QS2', Rational]) -> 'QS2':
        if not isinstance(other, (QS2, int, Fraction)):
            return NotImplemented
        o = QS2.coerce(other)
        return QS2(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __neg__(self) -> 'QS2':
        return QS2(-self.rat, -self.irr)

    def __sub__(self, other: Union['QS2', Rational]) -> 'QS2':
        if not isinstance(other, (QS2, int, Fraction)):
            return NotImplemented
        return self + (-QS2.coerce(other))

    def __rsub__(self, other: Rational) -> 'QS2':
        return QS2.coerce(other) - self

    def __mul__(self, other: Union['QS2', Rational]) -> 'QS2':
        if not isinstance(other, (QS2, int, Fraction)):
            return NotImplemented
        o = QS2.coerce(other)
        return QS2(self.rat * o.rat + 2 * self.irr * o.irr, self.rat * o.irr + self.irr * o.rat)

    __rmul__ = __mul__

    def conj(self) -> 'QS2':
        return QS2(self.rat, -self.irr)

    def norm(self) -> Fraction:
        return self.rat * self.rat - 2 * self.irr * self.irr

    def inverse(self) -> 'QS2':
        n = self.norm()
        if n == 0:
            # the norm only vanishes at 0 since sqrt(2) is irrational
            raise ZeroDivisionError('division by zero in Q(sqrt 2)')
        c = self.conj()
        return QS2(c.rat / n, c.irr / n)

    def __truediv__(self, other: Union['QS2', Rational]) -> 'QS2':
        if not isinstance(other, (QS2, int, Fraction)):
            return NotImplemented
        return self * QS2.coerce(other).inverse()

    def __rtruediv__(self, other: Rational) -> 'QS2':
        return QS2.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> 'QS2':
        assert k >= 0, f'negative power={k}'
        result = QS2(Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # order
    def sign(self) -> int:
        sr, si = _sign(self.rat), _sign(self.irr)
        if si == 0 or sr == si:
            return sr if sr != 0 else si
        if sr == 0:
            return si
        # opposite signs: compare |rat| with |irr| * sqrt(2) through squares
        return sr if self.rat * self.rat > 2 * self.irr * self.irr else si

    def __bool__(self) -> bool:
        return self.rat != 0 or self.irr != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        if isinstance(other, QS2):
            return self.rat == other.rat and self.irr == other.irr
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rat, self.irr))

    def __lt__(self, other: Union['QS2', Rational]) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Union['QS2', Rational]) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Union['QS2', Rational]) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Union['QS2', Rational]) -> bool:
        return (self - other).sign() >= 0

    def abs(self) -> 'QS2':
        return -self if self.sign() < 0 else self

    # conversions
    def is_rational(self) -> bool:
        return self.irr == 0

    def is_integer(self) -> bool:
        return self.irr == 0 and self.rat.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.irr != 0:
            raise ValueError(f'{self} is irrational')
        return self.rat

    def enclosure(self, digits: int = 8) -> Tuple[Fraction, Fraction]:
        """
        Rational interval containing the value
        """
        if self.irr == 0:
            return self.rat, self.rat
        lo, hi = sqrt2_enclosure(digits)
        a, b = self.rat + self.irr * lo, self.rat + self.irr * hi
        return (a, b) if a <= b else (b, a)

    def floor(self) -> int:
        if self.irr == 0:
            return math.floor(self.rat)
        lo, _ = self.enclosure(30)
        k = math.floor(lo)
        while (self - k).sign() < 0:
            k -= 1
        while (self - (k + 1)).sign() >= 0:
            k += 1
        return k

    def ceil(self) -> int:
        return -((-self).floor())

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * math.sqrt(2)

    def __str__(self) -> str:
        if self.irr == 0:
            return str(self.rat)
        if self.irr == 1:
            irr = 'r2'
        elif self.irr == -1:
            irr = '-r2'
        else:
            irr = f'{self.irr}*r2'
        if self.rat == 0:
            return irr
        if irr.startswith('-'):
            return f'{self.rat}{irr}'
        return f'{self.rat}+{irr}'

    def __repr__(self) -> str:
        return f'QS2({self})'

    def to_json(self) -> str:
        return str(self)


ZERO = QS2()
ONE = QS2(Fraction(1))
R2 = QS2.sqrt2()
