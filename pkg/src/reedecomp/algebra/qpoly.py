"""
Univariate polynomials in `q` with coefficients in Q(sqrt 2).

Throughout the package `q` stands for the positive real number with
`q^2 = 2^(2n+1)`, i.e. `q = 2^n * sqrt(2)`.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from ..errors import InexactDivisionError
from .qs2 import QS2, Rational

Scalar = Union[QS2, int, Fraction]


@lru_cache(maxsize=None)
def q_value(n: int) -> QS2:
    """
    The value of `q = 2^n * sqrt(2)`
    """
    assert n >= 0, f'n must be >= 0, got={n}'
    return QS2(Fraction(0), Fraction(2**n))


def q_power(n: int, k: int) -> QS2:
    # q^k = 2^(nk) * sqrt(2)^k
    base = Fraction(2 ** (n * k) * 2 ** (k // 2))
    if k % 2:
        return QS2(Fraction(0), base)
    return QS2(base)


class QPoly:
    """
    Dense polynomial `c_0 + c_1 q + ... + c_d q^d`, normalized so that the
    leading coefficient is nonzero. The zero polynomial has no coefficients.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs: List[QS2] = [QS2.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[QS2, ...] = tuple(cs)

    @staticmethod
    def coerce(value: Union['QPoly', Scalar]) -> 'QPoly':
        if isinstance(value, QPoly):
            return value
        return QPoly([value])

    @staticmethod
    def q() -> 'QPoly':
        return QPoly([0, 1])

    @staticmethod
    def monomial(coefficient: Scalar, k: int) -> 'QPoly':
        return QPoly([0] * k + [coefficient])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def lead(self) -> QS2:
        assert self.coeffs, 'zero polynomial has no leading coefficient'
        return self.coeffs[-1]

    def coeff(self, k: int) -> QS2:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QS2()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> QS2:
        return self.coeff(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QS2, int, Fraction)):
            other = QPoly.coerce(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union['QPoly', Scalar]) -> 'QPoly':
        if not isinstance(other, (QPoly, QS2, int, Fraction)):
            return NotImplemented
        o = QPoly.coerce(other)
        size = max(len(self.coeffs), len(o.coeffs))
        return QPoly(self.coeff(k) + o.coeff(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> 'QPoly':
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: Union['QPoly', Scalar]) -> 'QPoly':
        if not isinstance(other, (QPoly, QS2, int, Fraction)):
            return NotImplemented
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> 'QPoly':
        return QPoly.coerce(other) - self

    def __mul__(self, other: Union['QPoly', Scalar]) -> 'QPoly':
        if not isinstance(other, (QPoly, QS2, int, Fraction)):
            return NotImplemented
        o = QPoly.coerce(other)
        if not self.coeffs or not o.coeffs:
            return QPoly()
        out = [QS2()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'QPoly':
        assert k >= 0, f'negative power={k}'
        result = QPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, factor: Scalar) -> 'QPoly':
        f = QS2.coerce(factor)
        return QPoly(c * f for c in self.coeffs)

    def shift(self, k: int) -> 'QPoly':
        """multiply by q^k, k >= 0"""
        assert k >= 0, f'negative shift={k}'
        if not self.coeffs:
            return self
        return QPoly([0] * k + list(self.coeffs))

    def conj(self) -> 'QPoly':
        return QPoly(c.conj() for c in self.coeffs)

    def __divmod__(self, other: Union['QPoly', Scalar]) -> Tuple['QPoly', 'QPoly']:
        d = QPoly.coerce(other)
        if not d:
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self.coeffs)
        quotient = [QS2()] * max(len(remainder) - len(d.coeffs) + 1, 0)
        inv_lead = d.lead().inverse()
        for k in range(len(quotient) - 1, -1, -1):
            c = remainder[k + d.degree] * inv_lead
            quotient[k] = c
            if c:
                for j, b in enumerate(d.coeffs):
                    remainder[k + j] = remainder[k + j] - c * b
        return QPoly(quotient), QPoly(remainder[: max(d.degree, 0)])

    def exactdiv(self, other: Union['QPoly', Scalar]) -> 'QPoly':
        quotient, remainder = divmod(self, other)
        if remainder:
            raise InexactDivisionError(self, other, remainder)
        return quotient

    def __truediv__(self, other: Scalar) -> 'QPoly':
        if isinstance(other, QPoly):
            return self.exactdiv(other)
        return self.scale(QS2.coerce(other).inverse())

    def evaluate(self, x: Scalar) -> QS2:
        v = QS2()
        xv = QS2.coerce(x)
        for c in reversed(self.coeffs):
            v = v * xv + c
        return v

    def eval_at_q(self, n: int) -> QS2:
        return sum((c * q_power(n, k) for k, c in enumerate(self.coeffs) if c), QS2())

    def values(self, ns: Sequence[int]) -> List[QS2]:
        return [self.eval_at_q(n) for n in ns]

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        parts: List[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            parts.append(_term(c, k))
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith('-') else '+' + p
        return text

    def __repr__(self) -> str:
        return f'QPoly({self})'

    def to_json(self) -> str:
        return str(self)


def _term(c: QS2, k: int) -> str:
    if k == 0:
        return str(c)
    power = 'q' if k == 1 else f'q^{k}'
    if c == 1:
        return power
    if c == -1:
        return '-' + power
    text = str(c)
    if c.rat != 0 and c.irr != 0:
        text = f'({text})'
    return f'{text}*{power}'


def as_rational(value: Union[QS2, QPoly, Rational]) -> Fraction:
    if isinstance(value, QPoly):
        assert value.is_constant(), f'{value} is not constant'
        value = value.constant()
    return QS2.coerce(value).as_fraction()


Q = QPoly.q()
