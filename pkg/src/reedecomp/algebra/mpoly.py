"""
Polynomials in named nonnegative integer unknowns with QPoly coefficients.
"""
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..types import Monomial
from .qpoly import QPoly, Scalar
from .qs2 import QS2

Coefficient = Union[QPoly, Scalar]

ONE_MONOMIAL: Monomial = ()


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps: Dict[str, int] = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def monomial_str(m: Monomial) -> str:
    return '*'.join(name if e == 1 else f'{name}^{e}' for name, e in m)


class MPoly:
    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None) -> None:
        self.terms: Dict[Monomial, QPoly] = {}
        for m, c in (terms or {}).items():
            p = QPoly.coerce(c)
            if p:
                self.terms[tuple(sorted(m))] = p

    @staticmethod
    def coerce(value: Union['MPoly', Coefficient]) -> 'MPoly':
        if isinstance(value, MPoly):
            return value
        return MPoly({ONE_MONOMIAL: QPoly.coerce(value)})

    @staticmethod
    def var(name: str) -> 'MPoly':
        return MPoly({((name, 1),): QPoly([1])})

    @staticmethod
    def linear(constant: Coefficient, coefficients: Mapping[str, Coefficient]) -> 'MPoly':
        terms: Dict[Monomial, Coefficient] = {ONE_MONOMIAL: constant}
        for name, c in coefficients.items():
            terms[((name, 1),)] = c
        return MPoly(terms)

    @property
    def variables(self) -> List[str]:
        return sorted({name for m in self.terms for name, _ in m})

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self.terms)

    def constant(self) -> QPoly:
        return self.terms.get(ONE_MONOMIAL, QPoly())

    def coefficient(self, monomial: Monomial) -> QPoly:
        return self.terms.get(tuple(sorted(monomial)), QPoly())

    def linear_coefficient(self, name: str) -> QPoly:
        return self.coefficient(((name, 1),))

    def items(self) -> Iterator[Tuple[Monomial, QPoly]]:
        for m in sorted(self.terms):
            yield m, self.terms[m]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QPoly, QS2, int, Fraction)):
            other = MPoly.coerce(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __add__(self, other: Union['MPoly', Coefficient]) -> 'MPoly':
        if not isinstance(other, (MPoly, QPoly, QS2, int, Fraction)):
            return NotImplemented
        o = MPoly.coerce(other)
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return MPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> 'MPoly':
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union['MPoly', Coefficient]) -> 'MPoly':
        if not isinstance(other, (MPoly, QPoly, QS2, int, Fraction)):
            return NotImplemented
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other: Coefficient) -> 'MPoly':
        return MPoly.coerce(other) - self

    def __mul__(self, other: Union['MPoly', Coefficient]) -> 'MPoly':
        if not isinstance(other, (MPoly, QPoly, QS2, int, Fraction)):
            return NotImplemented
        o = MPoly.coerce(other)
        terms: Dict[Monomial, QPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                terms[m] = terms[m] + c if m in terms else c
        return MPoly(terms)

    __rmul__ = __mul__

    def exactdiv(self, divisor: Union[QPoly, Scalar]) -> 'MPoly':
        return MPoly({m: c.exactdiv(divisor) for m, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[QPoly], Coefficient]) -> 'MPoly':
        return MPoly({m: fn(c) for m, c in self.terms.items()})

    def substitute(self, values: Mapping[str, Union['MPoly', Coefficient]]) -> 'MPoly':
        """
        Replace the unknowns listed in `values`; others are kept symbolic
        """
        result = MPoly()
        for m, c in self.terms.items():
            term = MPoly({ONE_MONOMIAL: c})
            kept: List[Tuple[str, int]] = []
            for name, e in m:
                if name in values:
                    term = term * MPoly.coerce(values[name]) ** e
                else:
                    kept.append((name, e))
            if kept:
                term = term * MPoly({tuple(kept): QPoly([1])})
            result = result + term
        return result

    def __pow__(self, k: int) -> 'MPoly':
        assert k >= 0, f'negative power={k}'
        result = MPoly.coerce(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate_q(self, n: int) -> 'MPoly':
        """
        Substitute q = 2^n sqrt(2); the coefficients become constants
        """
        return MPoly({m: QPoly([c.eval_at_q(n)]) for m, c in self.terms.items()})

    def q_coefficient(self, k: int) -> 'MPoly':
        """
        Coefficient of q^k, as a polynomial in the unknowns only
        """
        return MPoly({m: QPoly([c.coeff(k)]) for m, c in self.terms.items()})

    def q_degree(self) -> int:
        return max((c.degree for c in self.terms.values()), default=-1)

    def remove_q_term(self, monomial: Monomial, k: int) -> 'MPoly':
        c = self.coefficient(monomial)
        return self - MPoly({monomial: QPoly.monomial(c.coeff(k), k)})

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts: List[str] = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0])):
            if m == ONE_MONOMIAL:
                parts.append(str(c))
                continue
            mono = monomial_str(m)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append('-' + mono)
            elif len([x for x in c.coeffs if x]) == 1 and (c.lead().rat == 0 or c.lead().irr == 0):
                parts.append(f'{c}*{mono}')
            else:
                parts.append(f'({c})*{mono}')
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith('-') else '+' + p
        return text

    def __repr__(self) -> str:
        return f'MPoly({self})'

    def to_json(self) -> str:
        return str(self)


def mpoly_sum(items: Iterable[MPoly]) -> MPoly:
    total = MPoly()
    for item in items:
        total = total + item
    return total
