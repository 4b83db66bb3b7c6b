# language=rst
"""PBW normal forms in ``U(g)`` and in the current algebras ``U(g[u])``, ``U(g[v])``.

Letters are integers ``s * dim + index`` where ``index`` is a position in the ordered basis of
:class:`~ddca_verify.liealg.ChevalleyFrame` and ``s`` the current degree, so the PBW order is
by current degree, then by basis position. A monomial is a non decreasing tuple of letters and
an element maps monomials to coefficients in ℚ[λ, β].

>>> from ddca_verify.liealg import frame_for
>>> U = enveloping(frame_for('A', 3))
>>> e12, e21 = U.E(1, 2), U.E(2, 1)
>>> (e12 * e21 - e21 * e12) == U.H_ab(1, 2)
True
"""
import logging
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import ConfigurationError, DegreeCapError
from .helpers import compositions
from .liealg import ChevalleyFrame, LieElement, dual_bases
from .rootsys import Vector
from .scalarring import ONE, RING, ZERO, ParamScalar, is_constant, render, render_rational, scalar, specialize

__all__ = ['UEAlgebra', 'UEElement', 'enveloping', 'multiply', 'sym2', 'sym3', 'sym_triple', 'casimir',
           'omega', 'nu', 'omega0', 'check_casimir', 'check_omega_forms', 'check_nu', 'check_omega0_weight',
           'check_m_identity', 'check_mpq', 'check_mu', 'check_sxbxa', 'm_identity_sides', 'mpq_sides',
           'mu_sides', 'sxbxa_sides', 'nu_commutator_formula', 'nu_closed_forms',
           'dual_star']

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Operand = Union[Sequence[int], LieElement]

CURRENTS = (None, 'u', 'v')


def _accumulate(target: dict, key, value):
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class UEAlgebra:
    # language=rst prefix="    "
    """Enveloping algebra of ``g`` (``current=None``) or of ``g[u]``/``g[v]`` truncated at ``smax``.

    The truncation is never silent: a bracket that would produce a current degree above
    ``smax`` raises :class:`~ddca_verify.exceptions.DegreeCapError`.
    """

    def __init__(self, frame: ChevalleyFrame, current: Optional[str] = None, smax: int = 4):
        if current not in CURRENTS:
            raise ConfigurationError(f'current must be one of {CURRENTS}, got {current!r}.')
        if smax < 0:
            raise ConfigurationError('smax must be non negative.')
        self.frame = frame
        self.current = current
        self.smax = smax if current else 0
        self.dim = frame.dim
        self._letter_products: Dict[Tuple[Monomial, int], Dict[Monomial, object]] = {}

    @property
    def tag(self) -> str:
        label = self.frame.rs.label
        return f'U({label})' if self.current is None else f'U({label}[{self.current}])'

    # letters

    def letter(self, index: int, s: int = 0) -> int:
        if s < 0:
            raise ValueError('Current degrees are non negative.')
        if s > self.smax:
            raise DegreeCapError(s, self.smax)
        return s * self.dim + index

    def split(self, letter: int) -> Tuple[int, int]:
        """``(basis index, current degree)`` of a letter."""
        s, index = divmod(letter, self.dim)
        return index, s

    def letter_label(self, letter: int) -> str:
        index, s = self.split(letter)
        label = self.frame.label(index)
        if not s:
            return label
        return f'{label}({self.current})' if s == 1 else f'{label}({self.current}^{s})'

    def _bracket_letters(self, y: int, x: int):
        iy, sy = self.split(y)
        ix, sx = self.split(x)
        pairs = self.frame.bracket_coords(iy, ix)
        if not pairs:
            return ()
        s = sy + sx
        if s > self.smax:
            raise DegreeCapError(s, self.smax)
        return tuple((s * self.dim + k, c) for k, c in pairs)

    # straightening

    def _times_letter(self, m: Monomial, x: int) -> Dict[Monomial, object]:
        """Normal form of ``m·x`` for a normal monomial ``m``, with rational coefficients."""
        key = (m, x)
        cached = self._letter_products.get(key)
        if cached is not None:
            return cached
        if not m or m[-1] <= x:
            result = {m + (x,): QQ.one}
        else:
            head, y = m[:-1], m[-1]
            result = {}
            # m·x = head·x·y + head·[y, x]
            for mono, c in self._times_letter(head, x).items():
                for mono2, c2 in self._times_letter(mono, y).items():
                    _accumulate(result, mono2, c * c2)
            for z, c in self._bracket_letters(y, x):
                for mono2, c2 in self._times_letter(head, z).items():
                    _accumulate(result, mono2, c * c2)
        self._letter_products[key] = result
        return result

    def _times_monomial(self, m1: Monomial, m2: Monomial) -> Dict[Monomial, object]:
        current = {m1: QQ.one}
        for x in m2:
            following = {}
            for mono, c in current.items():
                for mono2, c2 in self._times_letter(mono, x).items():
                    _accumulate(following, mono2, c * c2)
            current = following
        return current

    # construction

    def element(self, terms: Optional[dict] = None) -> 'UEElement':
        return UEElement(self, {tuple(m): scalar(c) for m, c in (terms or {}).items()})

    def zero(self) -> 'UEElement':
        return UEElement(self, {})

    def one(self) -> 'UEElement':
        return UEElement(self, {(): ONE})

    def scalar(self, c) -> 'UEElement':
        return UEElement(self, {(): scalar(c)})

    def basis_element(self, index: int, s: int = 0) -> 'UEElement':
        return UEElement(self, {(self.letter(index, s),): ONE})

    def lie(self, x: Union[LieElement, dict], s: int = 0) -> 'UEElement':
        """Embed ``x ⊗ t^s`` (``t`` the current variable) as a degree one element."""
        coords = x.coords() if isinstance(x, LieElement) else x
        return UEElement(self, {(self.letter(k, s),): RING(v) for k, v in coords.items()})

    def X(self, root: Sequence[int], s: int = 0) -> 'UEElement':
        return self.basis_element(self.frame.root_index[tuple(root)], s)

    def H(self, i: int, s: int = 0) -> 'UEElement':
        return self.basis_element(self.frame.cartan_index[i - 1], s)

    def E(self, a: int, b: int, s: int = 0) -> 'UEElement':
        return self.lie(self.frame.E(a, b), s)

    def H_ab(self, a: int, b: int, s: int = 0) -> 'UEElement':
        return self.lie(self.frame.H_ab(a, b), s)

    def render_monomial(self, m: Monomial) -> str:
        if not m:
            return '1'
        parts, i = [], 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            label = self.letter_label(m[i])
            parts.append(label if j - i == 1 else f'{label}^{j - i}')
            i = j
        return '·'.join(parts)

    def __repr__(self):
        return f'UEAlgebra({self.tag}, smax={self.smax})'


class UEElement:
    """Element of a :class:`UEAlgebra` in PBW normal form."""
    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: UEAlgebra, terms: Dict[Monomial, ParamScalar]):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other: 'UEElement'):
        if not isinstance(other, UEElement):
            raise TypeError(f'Expected a UEElement, got {type(other).__name__}.')
        if other.algebra is not self.algebra:
            raise ValueError(f'Elements of {self.algebra.tag} and {other.algebra.tag} cannot be combined.')

    def __add__(self, other: 'UEElement') -> 'UEElement':
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(terms, m, c)
        return UEElement(self.algebra, terms)

    def __sub__(self, other: 'UEElement') -> 'UEElement':
        return self + (-other)

    def __neg__(self) -> 'UEElement':
        return UEElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> 'UEElement':
        if isinstance(other, UEElement):
            return multiply(self, other)
        c = scalar(other)
        return UEElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other) -> 'UEElement':
        c = scalar(other)
        return UEElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __truediv__(self, other) -> 'UEElement':
        c = scalar(other)
        if not c.is_ground or not c:
            raise ZeroDivisionError('Division is only defined by non zero rationals.')
        inverse = QQ.one / c.get((0, 0))
        return UEElement(self.algebra, {m: v * inverse for m, v in self.terms.items()})

    def commutator(self, other: 'UEElement') -> 'UEElement':
        """``[self, other] = self·other - other·self``."""
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, UEElement) or other.algebra is not self.algebra:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Maximal length of a monomial, ``-1`` for zero."""
        return max((len(m) for m in self.terms), default=-1)

    def current_degrees(self) -> set:
        """Total current degree of each monomial."""
        return {sum(self.algebra.split(x)[1] for x in m) for m in self.terms}

    def coefficient(self, monomial: Iterable[int]) -> ParamScalar:
        return self.terms.get(tuple(monomial), ZERO)

    def specialize(self, lam0, beta0) -> 'UEElement':
        return UEElement(self.algebra, {m: RING(specialize(c, lam0, beta0)) for m, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return '0'
        out = []
        for m in sorted(self.terms):
            c = self.terms[m]
            if is_constant(c):
                text = render_rational(c.get((0, 0), QQ.zero))
            else:
                text = f'({render(c)})'
            out.append(f'{text}·{self.algebra.render_monomial(m)}')
        return ' + '.join(out)

    def __repr__(self):
        return f'UEElement({self.render()})'


@lru_cache(maxsize=None)
def enveloping(frame: ChevalleyFrame, current: Optional[str] = None, smax: int = 4) -> UEAlgebra:
    """Shared algebra per frame, current variable and cap, so memoized products are reused."""
    return UEAlgebra(frame, current, smax)


def _algebra(obj) -> UEAlgebra:
    if isinstance(obj, UEAlgebra):
        return obj
    if isinstance(obj, ChevalleyFrame):
        return enveloping(obj)
    raise TypeError(f'Expected a ChevalleyFrame or a UEAlgebra, got {type(obj).__name__}.')


def multiply(a: UEElement, b: UEElement) -> UEElement:
    """PBW normal form of ``a·b``."""
    a._check(b)
    algebra = a.algebra
    terms: Dict[Monomial, ParamScalar] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c12 = c1 * c2
            for m, q in algebra._times_monomial(m1, m2).items():
                _accumulate(terms, m, c12 * q)
    return UEElement(algebra, terms)


def sym2(a: UEElement, b: UEElement) -> UEElement:
    """``S(a, b) = ab + ba``."""
    return a * b + b * a


def sym3(z1: UEElement, z2: UEElement, z3: UEElement) -> UEElement:
    """``{z1, z2, z3}``: the sum over the six orderings, divided by 24."""
    total = z1.algebra.zero()
    for x, y, z in permutations((z1, z2, z3)):
        total = total + x * y * z
    return total * QQ(1, 24)


def sym_triple(x: UEElement, y: UEElement, z: UEElement) -> UEElement:
    """``S(x, y, z) = S(S(x, y), z) + S(S(x, z), y) + S(S(y, z), x)``."""
    return sym2(sym2(x, y), z) + sym2(sym2(x, z), y) + sym2(sym2(y, z), x)


# named elements

def _neg(root: Sequence[int]) -> Vector:
    return tuple(-a for a in root)


def casimir(obj) -> UEElement:
    # language=rst prefix="    "
    """``Ω = Σ_{α>0} S(X_α⁺, X_α⁻) + Σ_i h̃^i h̃_i``."""
    U = _algebra(obj)
    frame = U.frame
    total = U.zero()
    for root in frame.rs.positive_roots:
        total = total + sym2(U.X(root), U.X(_neg(root)))
    lower, upper = dual_bases(frame)
    for h, h_dual in zip(lower, upper):
        total = total + U.lie(h_dual) * U.lie(h)
    return total


def _simple(U: UEAlgebra, i: int, sign: int) -> Vector:
    alpha = U.frame.rs.simple_roots[i - 1]
    return alpha if sign > 0 else _neg(alpha)


def omega(obj, i: int, sign: int = 1, form: str = 'w1') -> UEElement:
    # language=rst prefix="    "
    """``ω_i^±`` in U(g).

    ``form='w1'``: ``±¼ Σ_{α>0} S([X_i^±, X_α^±], X_α^∓) - ¼ S(X_i^±, H_i)``;
    ``form='w2'``: ``∓¼ Σ_{α>0} S([X_i^±, X_α^∓], X_α^±)``.
    """
    U = _algebra(obj)
    frame = U.frame
    if sign not in (1, -1):
        raise ValueError('sign must be +1 or -1.')
    xi = frame.X(_simple(U, i, sign))
    total = U.zero()
    for root in frame.rs.positive_roots:
        same = root if sign > 0 else _neg(root)
        if form == 'w1':
            total = total + sym2(U.lie(xi.bracket(frame.X(same))), U.X(_neg(same)))
        elif form == 'w2':
            total = total + sym2(U.lie(xi.bracket(frame.X(_neg(same)))), U.X(same))
        else:
            raise ValueError(f'Unknown form {form!r}; expected w1 or w2.')
    if form == 'w1':
        return total * QQ(sign, 4) - sym2(U.lie(xi), U.H(i)) * QQ(1, 4)
    return total * QQ(-sign, 4)


def nu(obj, i: int, closed: bool = False) -> UEElement:
    # language=rst prefix="    "
    """``ν_i = [ω_i⁺, X_i⁻]``, or with ``closed=True`` the sum
    ``¼ Σ_{α>0} (α_i, α) S(X_α⁺, X_α⁻) - H_i²/2``."""
    U = _algebra(obj)
    rs = U.frame.rs
    if not closed:
        return omega(U, i, 1).commutator(U.X(_simple(U, i, -1)))
    alpha_i = rs.simple_roots[i - 1]
    total = U.zero()
    for root in rs.positive_roots:
        c = rs.pairing(alpha_i, root)
        if c:
            total = total + sym2(U.X(root), U.X(_neg(root))) * c
    h = U.H(i)
    return total * QQ(1, 4) - h * h * QQ(1, 2)


def omega0(obj) -> UEElement:
    """``ω₀⁺ = -[ω_k⁻, X_{θ-α_k}⁻]`` for the special node ``k``."""
    U = _algebra(obj)
    rs = U.frame.rs
    if rs.special_node is None:
        raise ConfigurationError(f'ω₀⁺ is only defined outside type A, not for {rs.label}.')
    k = rs.special_node
    rest = tuple(a - b for a, b in zip(rs.highest_root, rs.simple_roots[k - 1]))
    return -omega(U, k, -1).commutator(U.X(_neg(rest)))


def dual_star(obj, k: int) -> UEElement:
    """``H_k^* = Σ_{i≤k} E_ii - (k/n) Σ E_ii`` in U(sl_n)."""
    U = _algebra(obj)
    total = U.zero()
    for i in range(1, k + 1):
        total = total + U.E(i, i)
    return total


# identity checks

def check_casimir(obj) -> bool:
    """``[Ω, x] = 0`` for every basis element ``x``."""
    U = _algebra(obj)
    omega_ = casimir(U)
    return all(not omega_.commutator(U.basis_element(k)) for k in range(U.dim))


def check_omega_forms(obj) -> bool:
    """Both expressions of ``ω_i^±`` agree for every ``i`` and sign."""
    U = _algebra(obj)
    return all(omega(U, i, sign, 'w1') == omega(U, i, sign, 'w2')
               for i in range(1, U.frame.rs.rank + 1) for sign in (1, -1))


def check_nu(obj) -> bool:
    U = _algebra(obj)
    return all(nu(U, i) == nu(U, i, closed=True) for i in range(1, U.frame.rs.rank + 1))


def check_omega0_weight(obj) -> bool:
    """``[H_j, ω₀⁺] = -(α_j, θ) ω₀⁺`` for every ``j``."""
    U = _algebra(obj)
    rs = U.frame.rs
    w0 = omega0(U)
    return all(U.H(j).commutator(w0) == w0 * (-rs.pairing(rs.simple_roots[j - 1], rs.highest_root))
               for j in range(1, rs.rank + 1))


def _operand(frame: ChevalleyFrame, x: Operand) -> Tuple[LieElement, Optional[Vector]]:
    """A root gives its root vector; a Lie element stands for itself with a zero pairing factor."""
    if isinstance(x, LieElement):
        return x, None
    return frame.X(x), tuple(x)


def _pair(frame: ChevalleyFrame, a: Optional[Vector], b: Optional[Vector]):
    if a is None or b is None:
        return QQ.zero
    return frame.rs.pairing(a, b)


def m_identity_sides(obj, beta1: Operand, beta2: Operand, gamma: Operand) -> Tuple[UEElement, UEElement]:
    # language=rst prefix="    "
    """Both sides of

    ``Σ_α [S([X₁, X_α], [X_{-α}, X₂]), X_γ] - Σ_α S([[X₁, X_γ], X_α], [X_{-α}, X₂])
    - Σ_α S([X₁, X_α], [X_{-α}, [X₂, X_γ]])
    = -(γ, β₂) S([X₁, X_γ], X₂) - (γ, β₁) S(X₁, [X₂, X_γ])``

    summing over all roots. Any operand may be a Lie element of the Cartan subalgebra, in which
    case the pairings involving it are zero.
    """
    U = _algebra(obj)
    frame = U.frame
    x1, r1 = _operand(frame, beta1)
    x2, r2 = _operand(frame, beta2)
    xg, rg = _operand(frame, gamma)
    xg_u = U.lie(xg)
    lhs = U.zero()
    for alpha in frame.rs.roots:
        xa, xma = frame.X(alpha), frame.X(_neg(alpha))
        right = U.lie(xma.bracket(x2))
        lhs = lhs + sym2(U.lie(x1.bracket(xa)), right).commutator(xg_u)
        lhs = lhs - sym2(U.lie(x1.bracket(xg).bracket(xa)), right)
        lhs = lhs - sym2(U.lie(x1.bracket(xa)), U.lie(xma.bracket(x2.bracket(xg))))
    rhs = sym2(U.lie(x1.bracket(xg)), U.lie(x2)) * (-_pair(frame, rg, r2)) \
        + sym2(U.lie(x1), U.lie(x2.bracket(xg))) * (-_pair(frame, rg, r1))
    return lhs, rhs


def check_m_identity(obj, beta1: Operand, beta2: Operand, gamma: Operand) -> bool:
    lhs, rhs = m_identity_sides(obj, beta1, beta2, gamma)
    return lhs == rhs


def _current(obj, smax: int) -> UEAlgebra:
    if isinstance(obj, UEAlgebra):
        if obj.current is None:
            raise ConfigurationError(f'{obj.tag} has no current variable.')
        return obj
    return enveloping(obj, 'u', smax)


def mpq_sides(obj, beta1: Operand, beta2: Operand, gamma: Operand, p: int, q: int,
              smax: int = 4) -> Tuple[UEElement, UEElement]:
    """The current-algebra form of the previous identity with ``X_α(u^p)`` and ``X_{-α}(u^q)``."""
    U = _current(obj, smax)
    frame = U.frame
    x1, r1 = _operand(frame, beta1)
    x2, r2 = _operand(frame, beta2)
    xg, rg = _operand(frame, gamma)
    lhs, rhs = U.zero(), U.zero()
    for alpha in frame.rs.roots:
        xa, xma = frame.X(alpha), frame.X(_neg(alpha))
        lhs = lhs + sym2(U.lie(x1.bracket(xa), p), U.lie(xma.bracket(x2), q)).commutator(U.lie(xg))
        rhs = rhs + sym2(U.lie(x1.bracket(xg).bracket(xa), p), U.lie(xma.bracket(x2), q))
        rhs = rhs + sym2(U.lie(x1.bracket(xa), p), U.lie(xma.bracket(x2.bracket(xg)), q))
    rhs = rhs - sym2(U.lie(x1.bracket(xg), p), U.lie(x2, q)) * _pair(frame, rg, r2)
    rhs = rhs - sym2(U.lie(x1, p), U.lie(x2.bracket(xg), q)) * _pair(frame, rg, r1)
    return lhs, rhs


def check_mpq(obj, beta1: Operand, beta2: Operand, gamma: Operand, p: int, q: int, smax: int = 4) -> bool:
    lhs, rhs = mpq_sides(obj, beta1, beta2, gamma, p, q, smax)
    return lhs == rhs


def mu_sides(obj, beta1: Operand, beta2: Operand, gamma: Operand, s: int,
             smax: int = 4) -> Tuple[UEElement, UEElement]:
    """The identity obtained by bracketing the sum over ``p + q = s - 1`` with ``X_γ(u)``."""
    U = _current(obj, smax)
    frame = U.frame
    x1, r1 = _operand(frame, beta1)
    x2, r2 = _operand(frame, beta2)
    xg, rg = _operand(frame, gamma)
    xg_u = U.lie(xg, 1)
    x1g, x2g = x1.bracket(xg), x2.bracket(xg)
    lhs, rhs = U.zero(), U.zero()
    for alpha in frame.rs.roots:
        xa, xma = frame.X(alpha), frame.X(_neg(alpha))
        left, right = x1.bracket(xa), xma.bracket(x2)
        for p, q in compositions(s - 1):
            lhs = lhs + sym2(U.lie(left, p), U.lie(right, q)).commutator(xg_u)
        for p, q in compositions(s):
            rhs = rhs + sym2(U.lie(x1g.bracket(xa), p), U.lie(right, q))
            rhs = rhs + sym2(U.lie(left, p), U.lie(xma.bracket(x2g), q))
        rhs = rhs - sym2(U.lie(left.bracket(xg)), U.lie(right, s))
        rhs = rhs - sym2(U.lie(left, s), U.lie(right.bracket(xg)))
    c2, c1 = _pair(frame, rg, r2), _pair(frame, rg, r1)
    for p, q in compositions(s):
        rhs = rhs - sym2(U.lie(x1g, p), U.lie(x2, q)) * c2
        rhs = rhs - sym2(U.lie(x1, p), U.lie(x2g, q)) * c1
    return lhs, rhs


def check_mu(obj, beta1: Operand, beta2: Operand, gamma: Operand, s: int, smax: int = 4) -> bool:
    lhs, rhs = mu_sides(obj, beta1, beta2, gamma, s, smax)
    return lhs == rhs


@lru_cache(maxsize=None)
def _full_duals(frame: ChevalleyFrame):
    """Dual basis of the whole ordered basis under the invariant form, as coordinate dicts."""
    dim = frame.dim
    gram = DomainMatrix([[frame.form_coords(i, j) for j in range(dim)] for i in range(dim)], (dim, dim), QQ)
    inverse = gram.inv().to_dok()
    duals = [{} for _ in range(dim)]
    for (i, j), value in inverse.items():
        if value:
            duals[i][j] = value
    return tuple(duals)


def sxbxa_sides(obj, beta1: Operand, beta2: Operand) -> Tuple[UEElement, UEElement]:
    # language=rst prefix="    "
    """``Σ_α S([X₁, X_α], [X_{-α}, X₂])`` against the multiplication image of the Casimir tensor.

    The right hand side is ``m([[X₁⊗1, Ω], 1⊗X₂] + [[1⊗X₁, Ω], X₂⊗1])`` minus the same
    expression for the Cartan part of ``Ω``, with ``Ω = Σ_a x_a ⊗ x^a`` over the full basis and
    its dual.
    """
    U = _algebra(obj)
    frame = U.frame
    x1, _ = _operand(frame, beta1)
    x2, _ = _operand(frame, beta2)
    lhs = U.zero()
    for alpha in frame.rs.roots:
        lhs = lhs + sym2(U.lie(x1.bracket(frame.X(alpha))), U.lie(frame.X(_neg(alpha)).bracket(x2)))

    def tensor_image(pairs):
        total = U.zero()
        for low, up in pairs:
            total = total + U.lie(x1.bracket(low)) * U.lie(up.bracket(x2))
            total = total + U.lie(low.bracket(x2)) * U.lie(x1.bracket(up))
        return total

    full = [(frame.basis[a], frame.element(dual)) for a, dual in enumerate(_full_duals(frame))]
    lower, upper = dual_bases(frame)
    rhs = tensor_image(full) - tensor_image(list(zip(upper, lower)))
    return lhs, rhs


def check_sxbxa(obj, beta1: Operand, beta2: Operand) -> bool:
    lhs, rhs = sxbxa_sides(obj, beta1, beta2)
    return lhs == rhs


def _nu_closed_forms(U: UEAlgebra, i: int, j: int) -> Tuple[UEElement, UEElement]:
    n = U.frame.size
    E = U.E
    braces = U.zero()
    for l in range(1, n + 1):
        braces = braces - sym3(E(l, i), E(i, j + 1), E(j + 1, l)) \
            + sym3(E(i, l), E(l, j + 1), E(j + 1, i)) \
            + sym3(E(l, i + 1), E(i + 1, j + 1), E(j + 1, l)) \
            - sym3(E(i + 1, l), E(l, j + 1), E(j + 1, i + 1)) \
            + sym3(E(l, i), E(i, j), E(j, l)) \
            - sym3(E(i, l), E(l, j), E(j, i)) \
            - sym3(E(l, i + 1), E(i + 1, j), E(j, l)) \
            + sym3(E(i + 1, l), E(l, j), E(j, i + 1))
    triples = U.zero()
    for k in range(1, n + 1):
        triples = triples + sym_triple(E(k, i), E(i, j + 1), E(j + 1, k)) \
            - sym_triple(E(i, k), E(k, j + 1), E(j + 1, i)) \
            - sym_triple(E(k, i + 1), E(i + 1, j + 1), E(j + 1, k)) \
            + sym_triple(E(i + 1, k), E(k, j + 1), E(j + 1, i + 1)) \
            - sym_triple(E(k, i), E(i, j), E(j, k)) \
            + sym_triple(E(i, k), E(k, j), E(j, i))
    if j != i + 1:
        triples = triples + _nu_last_pair(U, i, j)
    return braces, triples * QQ(-1, 48)


def _nu_last_pair(U: UEAlgebra, i: int, j: int) -> UEElement:
    """The last two summands of the triple form, left out for ``j = i + 1``, where they cancel."""
    E = U.E
    total = U.zero()
    for k in range(1, U.frame.size + 1):
        total = total + sym_triple(E(k, i + 1), E(i + 1, j), E(j, k)) - sym_triple(E(i + 1, k), E(k, j), E(j, i + 1))
    return total


def nu_closed_forms(obj, i: int, j: int) -> Tuple[UEElement, UEElement]:
    """The two closed forms of ``[ν_i, ν_j]``: the brace sums and the symmetrized triples."""
    U = _algebra(obj)
    if U.frame.kind != 'sl':
        raise ConfigurationError('The ν commutator formula is stated for sl_n.')
    return _nu_closed_forms(U, i, j)


def nu_commutator_formula(obj, i: int, j: int) -> bool:
    # language=rst prefix="    "
    """Compare ``[ν_i, ν_j]`` computed in U(sl_n) with its two closed forms.

    Diagonal units ``E_aa`` are read through the traceless projection ``E_aa - I/n``, which is
    a Lie algebra map ``gl_n → sl_n``. For ``j = i + 1`` the second closed form drops its last
    two summands, so their cancellation is checked as well.
    """
    U = _algebra(obj)
    if U.frame.kind != 'sl':
        raise ConfigurationError('The ν commutator formula is stated for sl_n.')
    if i == j:
        raise ValueError('i and j must differ.')
    direct = nu(U, i, closed=True).commutator(nu(U, j, closed=True))
    braces, triples = _nu_closed_forms(U, i, j)
    logger.debug('[ν_%d, ν_%d] has %d terms', i, j, len(direct.terms))
    if j == i + 1 and _nu_last_pair(U, i, j) != U.zero():
        logger.debug('the dropped summands of [ν_%d, ν_%d] do not cancel', i, j)
        return False
    return direct == braces and direct == triples
