"""
Text to exact objects, through sympy.

Cells of the bundled tables and the command line accept the same syntax:
`q` is the group parameter, `r2` is sqrt(2), `^` or `**` is a power and the
factor names `phi1 phi2 phi4 phi8p phi8m phi12 phi24p phi24m phi1t phi8 phi24`
expand to their polynomials in q. In relation counts `L` stands for l^f.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import sympy

from .linear import DecompEntry
from .mpoly import MPoly
from .qpoly import QPoly
from .qs2 import QS2

Q_SYMBOL = sympy.Symbol('q', positive=True)
L_SYMBOL = sympy.Symbol('L', positive=True)
SQRT2 = sympy.sqrt(2)


def _factor_locals() -> Dict[str, sympy.Expr]:
    q, r2 = Q_SYMBOL, SQRT2
    phi = {
        'phi1': q - 1,
        'phi2': q + 1,
        'phi4': q**2 + 1,
        'phi8p': q**2 + r2 * q + 1,
        'phi8m': q**2 - r2 * q + 1,
        'phi12': q**4 - q**2 + 1,
        'phi24p': q**4 + r2 * q**3 + q**2 + r2 * q + 1,
        'phi24m': q**4 - r2 * q**3 + q**2 - r2 * q + 1,
        'phi1t': q**2 - 1,
        'phi8': q**4 + 1,
        'phi24': q**8 - q**4 + 1,
    }
    return {'q': q, 'r2': r2, 'L': L_SYMBOL, **phi}


_LOCALS = _factor_locals()


@lru_cache(maxsize=4096)
def sympify_text(text: str) -> sympy.Expr:
    try:
        return sympy.sympify(text.replace('^', '**'), locals=dict(_LOCALS))
    except (sympy.SympifyError, SyntaxError, TypeError) as e:
        raise ValueError(f'cannot parse expression={text!r}') from e


def _split(coefficient: sympy.Expr) -> QS2:
    c = sympy.expand(coefficient)
    irr = c.coeff(SQRT2)
    rat = sympy.expand(c - irr * SQRT2)
    if not (rat.is_Rational and irr.is_Rational):
        raise ValueError(f'coefficient {coefficient} is not in Q(sqrt 2)')
    return QS2(Fraction(int(rat.p), int(rat.q)), Fraction(int(irr.p), int(irr.q)))


def _unknowns(expr: sympy.Expr) -> Tuple[sympy.Symbol, ...]:
    return tuple(sorted((s for s in expr.free_symbols if s not in (Q_SYMBOL, L_SYMBOL)), key=str))


def expr_to_qpoly(expr: sympy.Expr) -> QPoly:
    expr = sympy.expand(expr)
    if _unknowns(expr) or L_SYMBOL in expr.free_symbols:
        raise ValueError(f'{expr} is not a polynomial in q alone')
    if Q_SYMBOL not in expr.free_symbols:
        return QPoly([_split(expr)])
    try:
        poly = sympy.Poly(expr, Q_SYMBOL)
    except sympy.PolynomialError as e:
        raise ValueError(f'{expr} is not a polynomial in q') from e
    coeffs = [_split(c) for c in reversed(poly.all_coeffs())]
    return QPoly(coeffs)


def parse_qpoly(text: str) -> QPoly:
    """
    >>> str(parse_qpoly('(q^2+r2*q)/4'))
    '1/4*q^2+1/4*r2*q'
    """
    return expr_to_qpoly(sympify_text(text))


def parse_mpoly(text: str, q_shift: int = 0) -> MPoly:
    """
    Polynomial in unknowns and q. `q_shift` multiplies the expression by q^q_shift
    first, which turns a Laurent term such as `r2*x/q` into a polynomial one.
    """
    expr = sympy.expand(sympify_text(text) * Q_SYMBOL**q_shift)
    gens = _unknowns(expr)
    if not gens:
        return MPoly.coerce(expr_to_qpoly(expr))
    try:
        poly = sympy.Poly(expr, *gens)
    except sympy.PolynomialError as e:
        raise ValueError(f'{text} is not polynomial in its unknowns') from e
    terms = {}
    for exps, coefficient in poly.terms():
        monomial = tuple((str(g), e) for g, e in zip(gens, exps) if e)
        terms[monomial] = expr_to_qpoly(sympy.sympify(coefficient))
    return MPoly(terms)


def parse_entry(text: str) -> DecompEntry:
    """
    A decomposition number: integer linear combination of unknowns, e.g. `4-3*a+d`
    """
    if text == '.':
        return DecompEntry()
    expr = sympy.expand(sympify_text(text))
    if Q_SYMBOL in expr.free_symbols or L_SYMBOL in expr.free_symbols:
        raise ValueError(f'decomposition number {text!r} must not depend on q or L')
    gens = _unknowns(expr)
    if not gens:
        if not expr.is_Integer:
            raise ValueError(f'decomposition number {text!r} is not an integer')
        return DecompEntry(int(expr))
    poly = sympy.Poly(expr, *gens)
    const = 0
    terms: Dict[str, int] = {}
    for exps, coefficient in poly.terms():
        if not sympy.sympify(coefficient).is_Integer:
            raise ValueError(f'non-integer coefficient in {text!r}')
        if sum(exps) == 0:
            const = int(coefficient)
        elif sum(exps) == 1:
            terms[str(gens[exps.index(1)])] = int(coefficient)
        else:
            raise ValueError(f'decomposition number {text!r} is not linear')
    return DecompEntry.make(const, terms)


class CountExpr:
    """
    Number of characters in a family of non-unipotent characters, as a polynomial in L = l^f
    """

    def __init__(self, text: str) -> None:
        self.text = text
        expr = sympify_text(text)
        if expr.free_symbols - {L_SYMBOL}:
            raise ValueError(f'count {text!r} may only depend on L')
        self.expr = sympy.expand(expr)

    def evaluate(self, big_l: int) -> Fraction:
        value = sympy.Rational(self.expr.subs(L_SYMBOL, big_l))
        return Fraction(int(value.p), int(value.q))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountExpr):
            return NotImplemented
        return sympy.expand(self.expr - other.expr) == 0

    def __hash__(self) -> int:
        return hash(str(self.expr))

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f'CountExpr({self.text})'

    def to_json(self) -> str:
        return self.text
