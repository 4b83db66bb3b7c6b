# language=rst
"""Matrix realizations of the classical simple Lie algebras and their Chevalley frames.

Every algebra is realized in its defining representation:

* type ``A``: ``sl_n``,
* type ``B``: ``so_{2N+1}``, type ``D``: ``so_{2N}``, both preserving the antidiagonal form,
* type ``C``: ``sp_{2N}``, preserving the skew antidiagonal form.

Brackets are matrix commutators and the invariant form is a fixed multiple of the trace form,
chosen so that the form induced on roots is the one of :mod:`ddca_verify.rootsys`.

The basis used everywhere else is ordered as negative root vectors by decreasing height, then
``H_1, ..., H_N``, then positive root vectors by increasing height. The position of an element
in that list is its index in PBW monomials.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, sqrt
from sympy.polys.matrices import DomainMatrix

from .exceptions import InvariantViolation
from .rootsys import RootSystem, Vector, build
from .scalarring import Rational, render_rational

__all__ = ['LieElement', 'ChevalleyFrame', 'realize', 'bracket', 'weyl_op', 'dual_bases',
           'longest_word', 'word_to', 'frame_for', 'apply_word']

logger = logging.getLogger(__name__)

Coords = Dict[int, Rational]


def _unit(m: int, r: int, c: int, value=1, domain=QQ) -> DomainMatrix:
    return DomainMatrix.from_dok({(r - 1, c - 1): domain(value)}, (m, m), domain)


def _dok(matrix: DomainMatrix) -> dict:
    return {k: v for k, v in matrix.to_dok().items() if v}


def _unify(a: DomainMatrix, b: DomainMatrix) -> Tuple[DomainMatrix, DomainMatrix]:
    if a.domain == b.domain:
        return a, b
    domain = a.domain.unify(b.domain)
    return a.convert_to(domain), b.convert_to(domain)


def _coerce(domain, c):
    if isinstance(c, int) or QQ.of_type(c):
        return domain.convert_from(QQ.convert(c), QQ)
    return domain.convert(c)


def _trace(matrix: DomainMatrix):
    domain = matrix.domain
    total = domain.zero
    for (r, c), value in matrix.to_dok().items():
        if r == c:
            total += value
    return total


@dataclass(eq=False)
class LieElement:
    """Exact element of a matrix-realized Lie algebra, tied to its frame."""
    frame: 'ChevalleyFrame'
    matrix: DomainMatrix

    def _check(self, other: 'LieElement'):
        if not isinstance(other, LieElement):
            raise TypeError(f'Expected a LieElement, got {type(other).__name__}.')
        if other.frame is not self.frame:
            raise ValueError('Lie elements belong to different realizations.')

    def __add__(self, other: 'LieElement') -> 'LieElement':
        self._check(other)
        a, b = _unify(self.matrix, other.matrix)
        return LieElement(self.frame, a + b)

    def __sub__(self, other: 'LieElement') -> 'LieElement':
        self._check(other)
        a, b = _unify(self.matrix, other.matrix)
        return LieElement(self.frame, a - b)

    def __neg__(self) -> 'LieElement':
        return LieElement(self.frame, -self.matrix)

    def __mul__(self, c) -> 'LieElement':
        domain = self.matrix.domain
        return LieElement(self.frame, self.matrix * _coerce(domain, c))

    __rmul__ = __mul__

    def __truediv__(self, c) -> 'LieElement':
        domain = self.matrix.domain
        return LieElement(self.frame, self.matrix * (domain.one / _coerce(domain, c)))

    def __eq__(self, other):
        if not isinstance(other, LieElement) or other.frame is not self.frame:
            return NotImplemented
        a, b = _unify(self.matrix, other.matrix)
        return _dok(a) == _dok(b)

    def __hash__(self):
        return id(self)

    def __bool__(self):
        return bool(_dok(self.matrix))

    def bracket(self, other: 'LieElement') -> 'LieElement':
        self._check(other)
        a, b = _unify(self.matrix, other.matrix)
        return LieElement(self.frame, a * b - b * a)

    def symmetric_product(self, other: 'LieElement') -> 'LieElement':
        """Traceless part of ``xy + yx`` in ``sl_n``."""
        self._check(other)
        if self.frame.kind != 'sl':
            raise ValueError('The symmetric product is only defined in type A.')
        a, b = _unify(self.matrix, other.matrix)
        product = a * b + b * a
        m = self.frame.size
        shift = _trace(product) / m
        entries = dict(product.to_dok())
        for c in range(m):
            value = entries.get((c, c), product.domain.zero) - shift
            if value:
                entries[(c, c)] = value
            else:
                entries.pop((c, c), None)
        return LieElement(self.frame, DomainMatrix.from_dok(entries, (m, m), product.domain))

    def form(self, other: 'LieElement'):
        """Invariant form ``κ·tr(xy)``."""
        self._check(other)
        a, b = _unify(self.matrix, other.matrix)
        return _coerce(a.domain, self.frame.kappa) * _trace(a * b)

    def coords(self) -> Coords:
        return self.frame.coordinates(self)

    def in_algebra(self) -> bool:
        return self.frame.contains(self.matrix)

    def __repr__(self):
        return f'LieElement({self.frame.render(self.coords())})'


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Matrix commutator ``xy - yx``."""
    return x.bracket(y)


class ChevalleyFrame:
    # language=rst prefix="    "
    """Normalized root vectors and Cartan elements of one realized algebra.

    Root vectors satisfy ``(X_α⁺, X_α⁻) = 1`` and ``H_α = [X_α⁺, X_α⁻]``. Outside type ``A``
    the pair ``X_{θ-α_k}^±`` is rescaled so that ``X_θ⁻ = [X_k⁻, X_{θ-α_k}⁻]``.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.kind = {'A': 'sl', 'B': 'so', 'C': 'sp', 'D': 'so'}[rs.dynkin_type]
        self.size = rs.rank + 1 if rs.dynkin_type == 'A' else \
            2 * rs.rank + 1 if rs.dynkin_type == 'B' else 2 * rs.rank
        self.J = self._antidiagonal()
        e, f = self._chevalley_generators()
        self.kappa = self._solve_kappa(e, f)
        self.root_vectors: Dict[Vector, LieElement] = {}
        self._build_root_vectors(e, f)
        if rs.dynkin_type != 'A':
            self._rescale_theta_pair()

        self.basis: List[LieElement] = []
        self.basis_weights: List[Optional[Vector]] = []
        self.root_index: Dict[Vector, int] = {}
        negatives = rs.roots[:len(rs.positive_roots)]
        for root in negatives:
            self.root_index[root] = len(self.basis)
            self.basis.append(self.root_vectors[root])
            self.basis_weights.append(root)
        self.cartan_index = []
        for i in range(1, rs.rank + 1):
            self.cartan_index.append(len(self.basis))
            self.basis.append(self.H(i))
            self.basis_weights.append(None)
        for root in rs.positive_roots:
            self.root_index[root] = len(self.basis)
            self.basis.append(self.root_vectors[root])
            self.basis_weights.append(root)
        self.dim = len(self.basis)

        self._positions = {}
        for root, index in self.root_index.items():
            (pos, value), *_ = sorted(_dok(self.basis[index].matrix).items())
            self._positions[index] = (pos, value)
        self._duals = None
        self._check()
        logger.debug('Realized %s as %s_%d, κ=%s, dim=%d', rs.label, self.kind, self.size,
                     render_rational(self.kappa), self.dim)

    # construction

    def _antidiagonal(self) -> Optional[DomainMatrix]:
        m = self.size
        if self.kind == 'sl':
            return None
        entries = {}
        for r in range(1, m + 1):
            sign = 1 if self.kind == 'so' or r <= m // 2 else -1
            entries[(r - 1, m - r)] = QQ(sign)
        return DomainMatrix.from_dok(entries, (m, m), QQ)

    def _chevalley_generators(self):
        m, rank = self.size, self.rs.rank
        e = []
        for i in range(1, rank + 1):
            if self.kind == 'sl':
                x = _unit(m, i, i + 1)
            elif i < rank or self.rs.dynkin_type == 'B':
                x = _unit(m, i, i + 1) - _unit(m, m - i, m + 1 - i)
            elif self.rs.dynkin_type == 'C':
                x = _unit(m, rank, rank + 1)
            else:
                x = _unit(m, rank - 1, rank + 1) - _unit(m, rank, rank + 2)
            e.append(x)
        f = [x.transpose() for x in e]
        return e, f

    def _solve_kappa(self, e, f) -> Rational:
        values = set()
        for i, (x, y) in enumerate(zip(e, f), start=1):
            h = x * y - y * x
            hx = h * x - x * h
            (pos, value), *_ = sorted(_dok(x).items())
            eigen = hx.to_dok().get(pos, QQ.zero) / value
            alpha = self.rs.simple_roots[i - 1]
            values.add(eigen / (_trace(x * y) * self.rs.pairing(alpha, alpha)))
        if len(values) != 1:
            raise InvariantViolation(f'{self.rs.label}: trace form is not a multiple of the root form.')
        return values.pop()

    def _paired(self, plus: DomainMatrix, minus: DomainMatrix) -> DomainMatrix:
        return minus * (QQ.one / (self.kappa * _trace(plus * minus)))

    def _build_root_vectors(self, e, f):
        rs, m = self.rs, self.size
        if rs.dynkin_type == 'A':
            for a in range(1, m + 1):
                for b in range(1, m + 1):
                    if a != b:
                        self.root_vectors[rs.eps(a, b)] = LieElement(self, _unit(m, a, b))
            return

        plus = {alpha: e[i] for i, alpha in enumerate(rs.simple_roots)}
        minus = {alpha: f[i] for i, alpha in enumerate(rs.simple_roots)}
        for root in rs.positive_roots:
            if root in plus:
                continue
            for i, alpha in enumerate(rs.simple_roots):
                lower = tuple(a - b for a, b in zip(root, alpha))
                if lower in plus:
                    plus[root] = e[i] * plus[lower] - plus[lower] * e[i]
                    minus[root] = f[i] * minus[lower] - minus[lower] * f[i]
                    break
            else:
                raise InvariantViolation(f'{rs.label}: no simple root leads to {root}.')
        for root in rs.positive_roots:
            x, y = plus[root], self._paired(plus[root], minus[root])
            negative = tuple(-a for a in root)
            self.root_vectors[root] = LieElement(self, x)
            self.root_vectors[negative] = LieElement(self, y)

    def _rescale_theta_pair(self):
        rs = self.rs
        k = rs.special_node
        theta = rs.highest_root
        alpha_k = rs.simple_roots[k - 1]
        rest = tuple(a - b for a, b in zip(theta, alpha_k))
        minus_theta = self.X(tuple(-a for a in theta))
        product = self.X(tuple(-a for a in alpha_k)).bracket(self.X(tuple(-a for a in rest)))
        (pos, value), *_ = sorted(_dok(minus_theta.matrix).items())
        c = product.matrix.to_dok().get(pos, QQ.zero) / value
        if not c:
            raise InvariantViolation(f'{rs.label}: [X_k⁻, X_(θ-α_k)⁻] vanishes.')
        self.root_vectors[rest] = self.root_vectors[rest] * c
        negative = tuple(-a for a in rest)
        self.root_vectors[negative] = self.root_vectors[negative] / c

    def _check(self):
        for root in self.rs.positive_roots:
            plus, minus = self.X(root), self.X(tuple(-a for a in root))
            if plus.form(minus) != 1:
                raise InvariantViolation(f'{self.rs.label}: (X⁺, X⁻) != 1 for {root}.')
        for i in range(1, self.rs.rank + 1):
            alpha = self.rs.simple_roots[i - 1]
            h = self.H(i)
            x = self.X(alpha)
            if h.bracket(x) != x * self.rs.pairing(alpha, alpha):
                raise InvariantViolation(f'{self.rs.label}: [H_i, X_i] != (α_i, α_i) X_i.')

    # accessors

    def X(self, root: Sequence[int]) -> LieElement:
        """Root vector ``X_α`` (``X_α = X_{-α}⁻`` for a negative root)."""
        return self.root_vectors[tuple(root)]

    def H(self, i: int) -> LieElement:
        alpha = self.rs.simple_roots[i - 1]
        return self.H_root(alpha)

    def H_root(self, root: Sequence[int]) -> LieElement:
        """``[X_α, X_{-α}]``, which is ``H_α`` for a positive root."""
        root = tuple(root)
        return self.X(root).bracket(self.X(tuple(-a for a in root)))

    def E(self, a: int, b: int) -> LieElement:
        """Matrix unit ``E_ab`` of ``sl_n``; diagonal units are projected to their traceless part."""
        if self.kind != 'sl':
            raise ValueError('Matrix units are only available in type A.')
        if a != b:
            return self.X(self.rs.eps(a, b))
        m = self.size
        entries = {(c, c): QQ(-1, m) for c in range(m)}
        entries[(a - 1, a - 1)] += 1
        return LieElement(self, DomainMatrix.from_dok(entries, (m, m), QQ))

    def H_ab(self, a: int, b: int) -> LieElement:
        """``E_aa - E_bb`` in type A."""
        return self.E(a, a) - self.E(b, b)

    def zero(self) -> LieElement:
        return LieElement(self, DomainMatrix.zeros((self.size, self.size), QQ))

    def element(self, coords: Coords) -> LieElement:
        out = self.zero()
        for index, value in coords.items():
            out = out + self.basis[index] * value
        return out

    def contains(self, matrix: DomainMatrix) -> bool:
        if self.kind == 'sl':
            return not _trace(matrix)
        a, j = _unify(matrix, self.J)
        return not _dok(a.transpose() * j + j * a)

    @property
    def dual_cartan(self) -> List[LieElement]:
        if self._duals is None:
            self._duals = dual_bases(self)[1]
        return self._duals

    def coordinates(self, x: LieElement) -> Coords:
        """Coordinates of ``x`` in the ordered basis, zero entries omitted."""
        entries = x.matrix.to_dok()
        out = {}
        for index, ((r, c), value) in self._positions.items():
            coefficient = entries.get((r, c))
            if coefficient:
                out[index] = coefficient / _coerce(x.matrix.domain, value)
        for index, dual in zip(self.cartan_index, self.dual_cartan):
            coefficient = x.form(dual)
            if coefficient:
                out[index] = coefficient
        return dict(sorted(out.items()))

    @lru_cache(maxsize=None)
    def bracket_coords(self, i: int, j: int) -> Tuple[Tuple[int, Rational], ...]:
        """Structure constants of ``[basis_i, basis_j]`` as sorted ``(index, coefficient)`` pairs."""
        if i == j:
            return ()
        if j < i:
            return tuple((k, -v) for k, v in self.bracket_coords(j, i))
        return tuple(self.basis[i].bracket(self.basis[j]).coords().items())

    def form_coords(self, i: int, j: int) -> Rational:
        return self.basis[i].form(self.basis[j])

    def weight(self, index: int) -> Vector:
        w = self.basis_weights[index]
        return self.rs.zero() if w is None else w

    def label(self, index: int) -> str:
        w = self.basis_weights[index]
        if w is None:
            return f'H{self.cartan_index.index(index) + 1}'
        if self.kind == 'sl':
            a = w.index(1) + 1
            b = w.index(-1) + 1
            return f'E{a}{b}'
        return 'X(' + ','.join(str(c) for c in w) + ')'

    def render(self, coords: Coords) -> str:
        if not coords:
            return '0'
        return ' + '.join(f'{render_rational(v)}·{self.label(k)}' for k, v in sorted(coords.items()))

    def __repr__(self):
        return f'ChevalleyFrame({self.rs.label})'


@lru_cache(maxsize=None)
def realize(rs: RootSystem) -> ChevalleyFrame:
    """Chevalley frame of the algebra with root system ``rs`` (cached per system)."""
    return ChevalleyFrame(rs)


def frame_for(dynkin_type: str, rank: int) -> ChevalleyFrame:
    return realize(build(dynkin_type, rank))


def dual_bases(frame: ChevalleyFrame) -> Tuple[List[LieElement], List[LieElement]]:
    # language=rst prefix="    "
    """Cartan bases ``h̃_i = H_i`` and ``h̃^i`` with ``(h̃^i, h̃_j) = δ_ij``."""
    lower = [frame.H(i) for i in range(1, frame.rs.rank + 1)]
    rank = len(lower)
    gram = DomainMatrix([[x.form(y) for y in lower] for x in lower], (rank, rank), QQ)
    inverse = gram.inv().to_dok()
    upper = []
    for i in range(rank):
        out = frame.zero()
        for j in range(rank):
            value = inverse.get((i, j))
            if value:
                out = out + lower[j] * value
        upper.append(out)
    return lower, upper


def _exp_ad(y: LieElement, x: LieElement, sign=1) -> LieElement:
    total, term, k = x, x, 0
    while True:
        k += 1
        term = y.bracket(term) * (sign * QQ(1, k))
        if not term:
            return total
        total = total + term


@lru_cache(maxsize=None)
def _sqrt_field():
    return QQ.algebraic_field(sqrt(2))


def weyl_op(i: int, x: LieElement, rational: bool = False) -> LieElement:
    # language=rst prefix="    "
    """Apply ``s_i = exp(ad f̃_i) exp(-ad ẽ_i) exp(ad f̃_i)`` to ``x``.

    With ``ẽ_i = √(2/(α_i, α_i)) X_i⁺`` and ``f̃_i = √(2/(α_i, α_i)) X_i⁻``, computed in ``ℚ(√2)``
    when the square root is irrational. With ``rational=True`` the lift uses ``ẽ_i = X_i⁺`` and
    ``f̃_i = (2/(α_i, α_i)) X_i⁻`` instead, which keeps everything over ℚ and still satisfies
    ``[ẽ_i, f̃_i] = α_i^∨``.
    """
    frame = x.frame
    alpha = frame.rs.simple_roots[i - 1]
    scale = QQ(2) / frame.rs.pairing(alpha, alpha)
    plus, minus = frame.X(alpha), frame.X(tuple(-a for a in alpha))
    if rational:
        e, f = plus, minus * scale
    elif scale == 1:
        e, f = plus, minus
    else:
        field = _sqrt_field()
        root = field.from_sympy(sqrt(int(scale.numerator)) / sqrt(int(scale.denominator)))
        e = LieElement(frame, plus.matrix.convert_to(field) * root)
        f = LieElement(frame, minus.matrix.convert_to(field) * root)
    return _exp_ad(f, _exp_ad(e, _exp_ad(f, x), sign=-1))


def longest_word(rs: RootSystem) -> Tuple[int, ...]:
    """Reduced word of ``w₀``: extend ``w`` by the smallest ``s_i`` with ``w(α_i) > 0``."""
    word: List[int] = []

    def apply(x):
        for j in reversed(word):
            x = rs.reflect(j, x)
        return x

    while True:
        for i, alpha in enumerate(rs.simple_roots, start=1):
            if rs.is_positive(apply(alpha)):
                word.append(i)
                break
        else:
            return tuple(word)


def word_to(rs: RootSystem, source: Sequence[int], target: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """A shortest word ``w`` with ``w(source) = target``, or ``None`` when the roots lie in different orbits."""
    source, target = tuple(source), tuple(target)
    paths = {source: ()}
    frontier = [source]
    while frontier and target not in paths:
        step = []
        for x in frontier:
            for i in range(1, rs.rank + 1):
                y = rs.reflect(i, x)
                if y not in paths:
                    paths[y] = (i,) + paths[x]
                    step.append(y)
        frontier = step
    return paths.get(target)


def apply_word(word: Sequence[int], x: LieElement, rational: bool = False) -> LieElement:
    """``s_{i_1} ... s_{i_k}(x)``: the last letter acts first."""
    for i in reversed(word):
        x = weyl_op(i, x, rational=rational)
    return x
