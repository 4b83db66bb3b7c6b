# language=rst
"""Exact coefficients in the ring ℚ[λ, β].

Every deformed relation carries coefficients that are polynomials in the two deformation
parameters. They are sympy sparse polynomials over ``QQ``; the helpers below only add the
coercions, the specialization to rational points and the canonical rendering used in reports.

>>> render(mul(BETA - LAM / 2, BETA - LAM / 2))
'1·β^2 - 1·λ·β + 1/4·λ^2'
>>> render_rational(specialize(BETA - LAM / 2, 2, 1))
'0'
"""
from fractions import Fraction
from typing import Dict, Tuple, Union

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

__all__ = ['RING', 'LAM', 'BETA', 'ZERO', 'ONE', 'ParamScalar', 'Rational', 'scalar', 'to_qq',
           'add', 'mul', 'specialize', 'render', 'terms', 'is_constant', 'constant_value',
           'render_rational', 'param_degree']

RING, LAM, BETA = ring('lam,beta', QQ)
ZERO = RING.zero
ONE = RING.one

ParamScalar = PolyElement
Rational = type(QQ(1))


def to_qq(value) -> Rational:
    """Coerce an int, Fraction, ``'p/q'`` string or QQ element to a QQ element."""
    if isinstance(value, bool):
        raise TypeError('Booleans are not rational parameters.')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            fraction = Fraction(value.strip())
        except ValueError:
            raise ValueError(f'{value!r} is not a rational number of the form p/q.') from None
        return QQ(fraction.numerator, fraction.denominator)
    if isinstance(value, PolyElement):
        if not value.is_ground:
            raise ValueError(f'{render(value)} depends on the parameters.')
        return constant_value(value)
    if QQ.of_type(value):
        return value
    raise TypeError(f'Cannot read {value!r} as a rational number.')


def scalar(value) -> ParamScalar:
    """Coerce a number or a polynomial of the coefficient ring to a ring element."""
    if isinstance(value, PolyElement):
        if value.ring != RING:
            raise TypeError('Polynomial belongs to another ring.')
        return value
    return RING(to_qq(value))


def add(a, b) -> ParamScalar:
    return scalar(a) + scalar(b)


def mul(a, b) -> ParamScalar:
    return scalar(a) * scalar(b)


def specialize(a, lam0, beta0) -> Rational:
    """Evaluate at ``λ = lam0``, ``β = beta0``; the result is an exact rational."""
    a = scalar(a)
    if not a:
        return QQ.zero
    return QQ.convert(a(to_qq(lam0), to_qq(beta0)))


def terms(a) -> Dict[Tuple[int, int], Rational]:
    """Map from ``(deg λ, deg β)`` to the non zero coefficient."""
    return dict(scalar(a))


def is_constant(a) -> bool:
    return scalar(a).is_ground


def constant_value(a) -> Rational:
    return scalar(a).get((0, 0), QQ.zero)


def param_degree(a) -> int:
    """Total degree in λ and β; zero for constants and for the zero polynomial."""
    a = scalar(a)
    return max((sum(monom) for monom in a), default=0)


def render_rational(q) -> str:
    q = to_qq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f'{q.numerator}/{q.denominator}'


def _render_monomial(coefficient, monom) -> str:
    parts = [render_rational(abs(coefficient))]
    for name, exponent in zip(('λ', 'β'), monom):
        if exponent == 1:
            parts.append(name)
        elif exponent > 1:
            parts.append(f'{name}^{exponent}')
    return '·'.join(parts)


def render(a: Union[ParamScalar, int, Fraction, str]) -> str:
    """Canonical text form, terms sorted by ``(deg λ, deg β)`` lexicographically."""
    a = scalar(a)
    if not a:
        return '0'
    out = []
    for monom in sorted(a):
        coefficient = a[monom]
        text = _render_monomial(coefficient, monom)
        if not out:
            out.append(text if coefficient > 0 else f'-{text}')
        else:
            out.append(f' + {text}' if coefficient > 0 else f' - {text}')
    return ''.join(out)
