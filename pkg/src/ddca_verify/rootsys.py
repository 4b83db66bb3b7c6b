# language=rst
"""Root systems of the classical types with their affine Cartan data.

Type ``A`` lives in the ε-model: vectors of length ``n = rank + 1`` with ``(ε_a, ε_b) = δ_ab``.
Types ``B``, ``C`` and ``D`` use coordinates in the basis of simple roots, with the invariant
form normalised by ``(θ, θ) = 2``.

>>> rs = build('B', 3)
>>> rs.highest_root, rs.special_node
((1, 2, 2), 2)
"""
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Tuple

from sympy import QQ

from .exceptions import ConfigurationError, InvariantViolation
from .scalarring import Rational, render_rational

__all__ = ['RootSystem', 'RootString', 'build', 'Vector', 'DYNKIN_TYPES']

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

DYNKIN_TYPES = ('A', 'B', 'C', 'D')


class RootString(NamedTuple):
    sum_is_root: bool
    string: Tuple[Vector, ...]


def _as_int(q) -> int:
    if q.denominator != 1:
        raise InvariantViolation(f'Expected an integer, got {render_rational(q)}.')
    return int(q.numerator)


def _add(x: Vector, y: Vector, m: int = 1) -> Vector:
    return tuple(a + m * b for a, b in zip(x, y))


def _neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


@dataclass(frozen=True)
class RootSystem:
    # language=rst prefix="    "
    """Finite root system of rank ``rank`` with the data of the extended node.

    ``gram`` is the matrix of ``(·, ·)`` in model coordinates, ``cartan[i][j]`` is
    ``2(α_i, α_j)/(α_i, α_i)`` and ``symmetrizers[i]`` is ``(α_i, α_i)/2``, so that
    ``d_i c_ij`` is symmetric. Simple indices are 1-based in every public method.
    """
    dynkin_type: str
    rank: int
    gram: Tuple[Tuple[Rational, ...], ...]
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    cartan: Tuple[Tuple[int, ...], ...] = field(default=())
    symmetrizers: Tuple[Rational, ...] = field(default=())
    highest_root: Vector = field(default=())
    affine_row: Tuple[int, ...] = field(default=())
    d0: Rational = QQ(1)
    special_node: Optional[int] = None

    @property
    def label(self) -> str:
        return f'{self.dynkin_type}{self.rank}'

    @property
    def dim(self) -> int:
        """Length of model vectors."""
        return len(self.gram)

    @property
    def n(self) -> int:
        """Size of the defining matrices in type A."""
        if self.dynkin_type != 'A':
            raise ValueError(f'{self.label} has no ε-model.')
        return self.rank + 1

    @cached_property
    def roots(self) -> Tuple[Vector, ...]:
        """All roots: negative roots by decreasing height, then positive roots by height."""
        return tuple(_neg(x) for x in reversed(self.positive_roots)) + self.positive_roots

    def pairing(self, x, y) -> Rational:
        total = QQ.zero
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.gram[i]
            for j, yj in enumerate(y):
                if yj:
                    total += row[j] * xi * yj
        return total

    def cartan_integer(self, x: Vector, i: int) -> int:
        """``2(x, α_i)/(α_i, α_i)``."""
        alpha = self.simple_roots[i - 1]
        return _as_int(2 * self.pairing(x, alpha) / self.pairing(alpha, alpha))

    def simple_coords(self, x: Vector) -> Vector:
        if self.dynkin_type == 'A':
            out, running = [], 0
            for v in x[:-1]:
                running += v
                out.append(running)
            return tuple(out)
        return tuple(x)

    def height(self, x: Vector) -> int:
        return sum(self.simple_coords(x))

    def is_root(self, x: Vector) -> bool:
        return tuple(x) in self._root_set

    def is_positive(self, x: Vector) -> bool:
        return tuple(x) in self._positive_set

    @cached_property
    def _root_set(self):
        return frozenset(self.roots)

    @cached_property
    def _positive_set(self):
        return frozenset(self.positive_roots)

    def zero(self) -> Vector:
        return (0,) * self.dim

    def root_string_ops(self, alpha: Vector, beta: Vector) -> RootString:
        """Whether ``α + β`` is a root, and the roots ``β + mα`` in increasing ``m``."""
        alpha, beta = tuple(alpha), tuple(beta)
        if not self.is_root(alpha) or not self.is_root(beta):
            raise ValueError('root_string_ops expects two roots.')
        lower = beta
        while self.is_root(_add(lower, alpha, -1)):
            lower = _add(lower, alpha, -1)
        string = []
        current = lower
        while self.is_root(current):
            string.append(current)
            current = _add(current, alpha)
        return RootString(self.is_root(_add(alpha, beta)), tuple(string))

    def reflect(self, i: int, x: Vector) -> Vector:
        """Simple reflection ``s_i(x) = x - <x, α_i^∨> α_i``."""
        return _add(tuple(x), self.simple_roots[i - 1], -self.cartan_integer(x, i))

    def epsilon(self, a: int, b: Optional[int] = None, sign: int = 1) -> Vector:
        """``ε_a`` or ``ε_a + sign·ε_b`` in type A (1-based)."""
        v = [0] * self.n
        v[a - 1] += 1
        if b is not None:
            v[b - 1] += sign
        return tuple(v)

    def eps(self, a: int, b: int) -> Vector:
        """The root ``ε_ab = ε_a - ε_b``."""
        return self.epsilon(a, b, -1)

    def to_json(self) -> str:
        """Canonical JSON document describing the system."""
        doc = {
            'type': self.dynkin_type,
            'rank': self.rank,
            'cartan': [list(row) for row in self.cartan],
            'symmetrizers': [render_rational(d) for d in self.symmetrizers],
            'affine_row': list(self.affine_row),
            'd0': render_rational(self.d0),
            'special_node': self.special_node,
            'highest_root': list(self.highest_root),
            'positive_roots': [list(x) for x in self.positive_roots],
        }
        return json.dumps(doc, sort_keys=True, separators=(',', ':'))


def _epsilon_simple_roots(dynkin_type: str, rank: int) -> Tuple[List[List[int]], Rational]:
    """Bourbaki simple roots in ε-coordinates and the scale of ``(ε_i, ε_i)``."""
    def e(*pairs):
        v = [0] * rank
        for index, value in pairs:
            v[index] += value
        return v

    simple = [e((i, 1), (i + 1, -1)) for i in range(rank - 1)]
    if dynkin_type == 'B':
        return simple + [e((rank - 1, 1))], QQ(1)
    if dynkin_type == 'C':
        return simple + [e((rank - 1, 2))], QQ(1, 2)
    return simple + [e((rank - 2, 1), (rank - 1, 1))], QQ(1)


def _gram(dynkin_type: str, rank: int):
    if dynkin_type == 'A':
        size = rank + 1
        return tuple(tuple(QQ(int(i == j)) for j in range(size)) for i in range(size))
    simple, scale = _epsilon_simple_roots(dynkin_type, rank)
    return tuple(
        tuple(scale * sum(a * b for a, b in zip(x, y)) for y in simple) for x in simple)


def _simple_roots(dynkin_type: str, rank: int) -> Tuple[Vector, ...]:
    if dynkin_type == 'A':
        size = rank + 1
        return tuple(tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(size))
                     for i in range(rank))
    return tuple(tuple(int(k == i) for k in range(rank)) for i in range(rank))


def _closure(partial: RootSystem) -> Tuple[Vector, ...]:
    """Positive roots by the string rule, processed in increasing height."""
    found: Dict[Vector, None] = {alpha: None for alpha in partial.simple_roots}
    layer = list(partial.simple_roots)
    while layer:
        next_layer = []
        for beta in layer:
            for i, alpha in enumerate(partial.simple_roots, start=1):
                if beta == alpha:
                    continue
                p = 0
                while _add(beta, alpha, -(p + 1)) in found:
                    p += 1
                q = p - partial.cartan_integer(beta, i)
                candidate = _add(beta, alpha)
                if q > 0 and candidate not in found:
                    found[candidate] = None
                    next_layer.append(candidate)
        layer = next_layer
    return tuple(sorted(found, key=lambda x: (partial.height(x), partial.simple_coords(x))))


def build(dynkin_type: str, rank: int) -> RootSystem:
    # language=rst prefix="    "
    """Build the root system of type ``dynkin_type`` and rank ``rank``.

    :raises ConfigurationError: for rank below 3 or a type outside A, B, C, D.
    """
    dynkin_type = str(dynkin_type).upper()
    if dynkin_type not in DYNKIN_TYPES:
        raise ConfigurationError(f'Unsupported Dynkin type {dynkin_type!r}; expected one of {DYNKIN_TYPES}.')
    if rank < 3:
        raise ConfigurationError(f'Rank {rank} is not supported: the deformed algebras need rank at least 3.')
    if dynkin_type == 'D' and rank < 4:
        raise ConfigurationError('Type D needs rank at least 4.')

    gram = _gram(dynkin_type, rank)
    simple = _simple_roots(dynkin_type, rank)
    partial = RootSystem(dynkin_type, rank, gram, simple, ())
    positive = _closure(partial)
    theta = positive[-1]

    cartan = tuple(tuple(partial.cartan_integer(aj, i) for aj in simple) for i in range(1, rank + 1))
    symmetrizers = tuple(partial.pairing(a, a) / 2 for a in simple)
    affine_row = tuple(_as_int(-partial.pairing(theta, a)) for a in simple)
    special = None
    if dynkin_type != 'A':
        nodes = [j for j, c in enumerate(affine_row, start=1) if c]
        if len(nodes) != 1:
            raise InvariantViolation(f'{dynkin_type}{rank}: expected one node attached to the affine node.')
        special = nodes[0]

    rs = RootSystem(dynkin_type, rank, gram, simple, positive, cartan, symmetrizers, theta,
                    affine_row, QQ(1), special)
    _check(rs)
    logger.debug('Built %s with %d positive roots, θ=%s', rs.label, len(positive), theta)
    return rs


def _check(rs: RootSystem):
    if rs.pairing(rs.highest_root, rs.highest_root) != 2:
        raise InvariantViolation(f'{rs.label}: (θ, θ) must be 2.')
    for i in range(rs.rank):
        for j in range(rs.rank):
            if rs.symmetrizers[i] * rs.cartan[i][j] != rs.symmetrizers[j] * rs.cartan[j][i]:
                raise InvariantViolation(f'{rs.label}: d_i c_ij is not symmetric.')
    for alpha in rs.simple_roots:
        if rs.is_root(_add(rs.highest_root, alpha)):
            raise InvariantViolation(f'{rs.label}: θ + α is a root.')
