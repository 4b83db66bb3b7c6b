# language=rst
"""Defining relations, named elements and closed forms.

:func:`new_algebra` builds a :class:`~ddca_verify.ddca.rewriting.DdcaAlgebra` whose knowledge
base holds the defining relations of one of three presentations:

``general``
    ``D(g)``: relation ``[K(X_β₁), Q(X_β₂)]`` for root vectors with ``β₁ ≠ -β₂`` and the
    opaque symbols ``B(β)`` standing for the excluded brackets.
``two-parameter``
    ``D_{λ,β}(sl_n)``: the same relation with the extra ``(β - λ/2)`` term and the opaque
    symbols ``W_ab``.
``kac-moody``
    no ``K``/``Q`` relation at all; the relations of the Kac-Moody style presentation enter
    as rows of a solve.

The remaining functions build the elements the verification scripts talk about.

>>> from ddca_verify.liealg import frame_for
>>> alg = new_algebra(frame_for('A', 3), 'two-parameter')
>>> f = alg.frame
>>> lhs = alg.bracket(alg.K(f.E(1, 2)), alg.Q(f.E(2, 3)))
>>> lhs == kq_rhs(alg, f.rs.eps(1, 2), f.rs.eps(2, 3))
True
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..exceptions import ConfigurationError
from ..helpers import compositions
from ..liealg import ChevalleyFrame, LieElement
from ..rootsys import Vector
from ..scalarring import BETA, LAM, RING
from ..uea import nu, omega, omega0
from .element import DdcaElement
from .kb import Family, Identity, KnowledgeBase, Provenance
from .rewriting import DdcaAlgebra
from .symbols import K, Q, Symbol, SymbolClass, atom, opaque

__all__ = ['MODES', 'new_algebra', 'neg', 'operand', 'sum_S', 'kq_rhs', 'excluded_symbol', 'excluded_value',
           'p_from_kq', 'p_from_excluded', 'c_element', 'hh_closed', 'z_element', 'z_closed', 'z_total',
           'omega_lift', 'nu_lift', 'omega0_lift', 'x_one', 'h_one', 'eps_pair', 'matrix_unit_root',
           'roots_spanning']

logger = logging.getLogger(__name__)

MODES = ('general', 'two-parameter', 'kac-moody')

Operand = Union[Sequence[int], LieElement]

SHIFT = BETA - LAM / 2


def neg(root: Sequence[int]) -> Vector:
    return tuple(-a for a in root)


def operand(frame: ChevalleyFrame, x: Operand) -> Tuple[LieElement, Optional[Vector]]:
    """A root stands for its root vector; a Lie element stands for itself and has no root."""
    if isinstance(x, LieElement):
        return x, None
    return frame.X(x), tuple(x)


def matrix_unit_root(root: Sequence[int]) -> Tuple[int, int]:
    """``(a, b)`` for the type ``A`` root ``ε_a - ε_b``."""
    root = list(root)
    return root.index(1) + 1, root.index(-1) + 1


def eps_pair(frame: ChevalleyFrame, x: Vector, y: Vector):
    return frame.rs.pairing(x, y)


# sums

def sum_S(alg: DdcaAlgebra, x: Operand, y: Operand, s: int = 1, side: str = 'u') -> DdcaElement:
    # language=rst prefix="    "
    """``Σ_{α∈Δ} Σ_{p+q=s-1} S([x, X_α](t^p), [X_{-α}, y](t^q))`` with ``t = u`` or ``v``.

    For ``s = 1`` this is the quadratic sum of the defining relations; in type ``A`` the sum
    over roots is the sum over ``i ≠ j`` of the matrix units ``E_ij``.
    """
    frame = alg.frame
    lx, _ = operand(frame, x)
    ly, _ = operand(frame, y)
    total = alg.zero()
    for alpha in frame.rs.roots:
        left = lx.bracket(frame.X(alpha))
        if not left:
            continue
        right = frame.X(neg(alpha)).bracket(ly)
        if not right:
            continue
        for p, q in compositions(s - 1):
            total = total + alg.S(alg.cur(side, left, p), alg.cur(side, right, q))
    return total


def kq_rhs(alg: DdcaAlgebra, x: Operand, y: Operand) -> DdcaElement:
    # language=rst prefix="    "
    """Right hand side of the ``[K(x), Q(y)]`` relation for operands ``x`` and ``y``.

    ``P([x, y]) + λ/4 Σ_α S([x, X_α], [X_{-α}, y])``, minus ``(β₁, β₂)λ/4 S(x, y)`` when both
    operands are roots, plus ``(β - λ/2)`` times the traceless part of ``xy + yx`` in the
    two-parameter algebra. With one Cartan operand this is the derived form of the relation; two
    Cartan operands are not covered by any closed form.
    """
    frame = alg.frame
    lx, rx = operand(frame, x)
    ly, ry = operand(frame, y)
    out = alg.P(lx.bracket(ly)) + sum_S(alg, lx, ly) * (LAM / 4)
    if rx is not None and ry is not None:
        c = frame.rs.pairing(rx, ry)
        if c:
            out = out - alg.S(alg.lie(lx), alg.lie(ly)) * (LAM * c / 4)
    if alg.kb.mode == 'two-parameter':
        out = out + alg.lie(lx.symmetric_product(ly)) * SHIFT
    return out


# excluded pairs

def excluded_symbol(alg: DdcaAlgebra, root: Sequence[int]) -> Symbol:
    """``B(β)`` for ``D(g)``, ``W_ab`` for the two-parameter algebra."""
    if alg.kb.mode == 'two-parameter':
        return opaque('W', matrix_unit_root(root))
    return opaque('B', tuple(root))


def excluded_value(alg: DdcaAlgebra, root: Sequence[int]) -> DdcaElement:
    """``P(H_β) + (β, β)λ/4 S(X_β, X_{-β}) + λ/4 Σ + B(β)``, the value of ``[K(X_β), Q(X_{-β})]``."""
    frame = alg.frame
    root = tuple(root)
    x, y = frame.X(root), frame.X(neg(root))
    out = alg.P(frame.H_root(root)) + sum_S(alg, x, y) * (LAM / 4)
    out = out + alg.S(alg.lie(x), alg.lie(y)) * (LAM * frame.rs.pairing(root, root) / 4)
    return out + alg.symbol(excluded_symbol(alg, root))


def p_from_kq(alg: DdcaAlgebra, r1: Sequence[int], r2: Sequence[int]) -> DdcaElement:
    """``P([X_β₁, X_β₂])`` written through the held bracket ``⟦K(X_β₁), Q(X_β₂)⟧``."""
    frame = alg.frame
    x, y = frame.X(r1), frame.X(r2)
    rest = kq_rhs(alg, r1, r2) - alg.P(x.bracket(y))
    return alg.held(alg.K(x), alg.Q(y)) - rest


def p_from_excluded(alg: DdcaAlgebra, root: Sequence[int]) -> DdcaElement:
    """``P(H_β)`` written through ``⟦K(X_β), Q(X_{-β})⟧`` and the excluded symbol."""
    frame = alg.frame
    root = tuple(root)
    rest = excluded_value(alg, root) - alg.P(frame.H_root(root))
    return alg.held(alg.K(frame.X(root)), alg.Q(frame.X(neg(root)))) - rest


# named elements

def c_element(alg: DdcaAlgebra, r1: Sequence[int], r2: Sequence[int], hold: bool = False) -> DdcaElement:
    """``C(β₁, β₂) = [K(H_β₁), Q(H_β₂)] - λ/4 Σ_α S([H_β₁, X_α], [X_{-α}, H_β₂])``."""
    frame = alg.frame
    h1, h2 = frame.H_root(r1), frame.H_root(r2)
    make = alg.held if hold else alg.bracket
    return make(alg.K(h1), alg.Q(h2)) - sum_S(alg, h1, h2) * (LAM / 4)


def hh_closed(alg: DdcaAlgebra, r1: Sequence[int], r2: Sequence[int]) -> DdcaElement:
    """``λ/2 Σ_{α>0} (β₁, α)(β₂, α) S(X_α, X_{-α})``."""
    frame = alg.frame
    rs = frame.rs
    total = alg.zero()
    for alpha in rs.positive_roots:
        c = rs.pairing(r1, alpha) * rs.pairing(r2, alpha)
        if c:
            total = total + alg.S(alg.lie(frame.X(alpha)), alg.lie(frame.X(neg(alpha)))) * c
    return total * (LAM / 2)


def _h_ab(frame: ChevalleyFrame, a: int, b: int) -> LieElement:
    n = frame.size
    return frame.H_ab((a - 1) % n + 1, (b - 1) % n + 1)


def z_element(alg: DdcaAlgebra, a: int, b: int, c: int = None, d: int = None, hold: bool = False,
              s: int = 1) -> DdcaElement:
    # language=rst prefix="    "
    """``Z_{ab,cd}(s) = [K(H_ab), H_cd(u^s)] - λ/4 Σ_{p+q=s-1} Σ_α S(...)`` in type ``A``.

    ``c, d`` default to ``a, b``; ``s = 1`` is the element ``Z_{ab,cd}`` of the two-parameter
    algebra. Indices are read modulo ``n``.
    """
    frame = alg.frame
    c, d = (a, b) if c is None else (c, d)
    h1, h2 = _h_ab(frame, a, b), _h_ab(frame, c, d)
    make = alg.held if hold else alg.bracket
    return make(alg.K(h1), alg.cur('u', h2, s)) - sum_S(alg, h1, h2, s) * (LAM / 4)


def z_closed(alg: DdcaAlgebra, a: int, b: int, c: int, d: int, via_second: bool = False) -> DdcaElement:
    """``(ε_ab, ε_cd) W_ab + (β - λ/2)(ε_a + ε_b, ε_cd) H_ab`` or its mirror through ``W_cd``."""
    frame = alg.frame
    rs = frame.rs
    if via_second:
        a, b, c, d = c, d, a, b
    w = alg.symbol(opaque('W', (a, b)))
    out = w * rs.pairing(rs.eps(a, b), rs.eps(c, d))
    c_shift = rs.pairing(rs.epsilon(a, b), rs.eps(c, d))
    if c_shift:
        out = out + alg.lie(frame.H_ab(a, b)) * (SHIFT * c_shift)
    return out


def z_total(alg: DdcaAlgebra, hold: bool = False, s: int = 1) -> DdcaElement:
    """``Z(s) = Z_12(s) + Z_23(s) + ... + Z_n1(s)``."""
    n = alg.frame.size
    total = alg.zero()
    for a in range(1, n + 1):
        total = total + z_element(alg, a, a % n + 1, hold=hold, s=s)
    return total


def omega_lift(alg: DdcaAlgebra, i: int, sign: int) -> DdcaElement:
    return alg.lift(omega(alg.frame, i, sign))


def nu_lift(alg: DdcaAlgebra, i: int) -> DdcaElement:
    return alg.lift(nu(alg.frame, i, closed=True))


def omega0_lift(alg: DdcaAlgebra) -> DdcaElement:
    return alg.lift(omega0(alg.frame))


def x_one(alg: DdcaAlgebra, i: int, sign: int) -> DdcaElement:
    """Image ``P(X_i^±) - λω_i^±`` of the Yangian generator ``X_{i,1}^±``."""
    frame = alg.frame
    alpha = frame.rs.simple_roots[i - 1]
    root = alpha if sign > 0 else neg(alpha)
    return alg.P(frame.X(root)) - omega_lift(alg, i, sign) * LAM


def h_one(alg: DdcaAlgebra, i: int) -> DdcaElement:
    """Image ``P(H_i) - λν_i`` of the Yangian generator ``H_{i,1}``."""
    return alg.P(alg.frame.H(i)) - nu_lift(alg, i) * LAM


# knowledge base seeding

def _kq_rule(alg: DdcaAlgebra, x: Symbol, y: Symbol) -> Optional[DdcaElement]:
    frame = alg.frame
    r1, r2 = frame.basis_weights[x.index], frame.basis_weights[y.index]
    if r1 is None or r2 is None or r1 == neg(r2):
        return None
    return kq_rhs(alg, r1, r2)


def _cartan_split(frame: ChevalleyFrame, index: int, avoid: Vector) -> Optional[List[Tuple[Vector, object]]]:
    """``H = Σ c [X_γ, X_-γ]`` for the Cartan basis element at ``index`` with every ``γ ≠ ±avoid``."""
    rs = frame.rs
    i = frame.cartan_index.index(index)
    alpha = rs.simple_roots[i]
    banned = (tuple(avoid), neg(avoid))
    if alpha not in banned:
        return [(alpha, 1)]
    theta = rs.highest_root
    if theta in banned:
        return None
    k = frame.H_root(theta).coords()
    lead = k.get(index)
    if not lead:
        return None
    split = [(theta, 1 / lead)]
    for j, t in enumerate(frame.cartan_index):
        if j != i and k.get(t):
            split.append((rs.simple_roots[j], -k[t] / lead))
    return split


def _cartan_rule(alg: DdcaAlgebra, x: Symbol, y: Symbol) -> Optional[DdcaElement]:
    # language=rst prefix="    "
    """Jacobi through ``H = [X_γ, X_-γ]`` when exactly one operand is a Cartan element.

    ``[K([X_γ, X_-γ]), Q(Y)] = [K(X_γ), [X_-γ, Q(Y)]] - [X_-γ, [K(X_γ), Q(Y)]]`` and
    ``[K(X), Q([X_γ, X_-γ])] = [[K(X), Q(X_γ)], X_-γ] + [Q(X_γ), [K(X), X_-γ]]``; with ``γ`` away from
    the root of the other operand every bracket on the right is a root vector pair.
    """
    frame = alg.frame
    r1, r2 = frame.basis_weights[x.index], frame.basis_weights[y.index]
    if (r1 is None) == (r2 is None):
        return None
    split = _cartan_split(frame, x.index if r1 is None else y.index, r2 if r1 is None else r1)
    if split is None:
        return None
    total = alg.zero()
    for gamma, c in split:
        plus, minus = frame.X(gamma), alg.lie(frame.X(neg(gamma)))
        if r1 is None:
            k, q = alg.K(plus), alg.symbol(y)
            term = alg.bracket(k, alg.bracket(minus, q)) - alg.bracket(minus, alg.bracket(k, q))
        else:
            k, q = alg.symbol(x), alg.Q(plus)
            term = alg.bracket(alg.bracket(k, q), minus) + alg.bracket(q, alg.bracket(k, minus))
        total = total + term * RING(c)
    return total


def _seed_common(kb: KnowledgeBase):
    kb.register(Identity('current-homomorphisms', 'defining relations', Provenance.DEFINING,
                         statement='x ↦ x, x⊗v ↦ K(x), x⊗u ↦ Q(x) extend to U(g[v]) and U(g[u])'))
    kb.register(Identity('p-equivariance', 'defining relations', Provenance.DEFINING,
                         statement='P(x) is linear and [P(x), y] = P([x, y])'))


def _seed_kq(alg: DdcaAlgebra):
    kb = alg.kb
    two = kb.mode == 'two-parameter'
    name = 'kq-two-parameter' if two else 'kq-roots'
    identity = Identity(name, 'two-parameter relations' if two else 'defining relations', Provenance.DEFINING,
                        statement='[K(X_β₁), Q(X_β₂)] for root vectors, β₁ ≠ -β₂')
    kb.add_family(Family(name, (SymbolClass.CUR_V, 1, SymbolClass.CUR_U, 1), 10, _kq_rule, identity))
    jacobi = Identity('kq-cartan-jacobi', 'K and Q of a Cartan element', Provenance.DERIVED,
                      statement='[K(h), Q(x)] and [K(x), Q(h)] through h = [X_γ, X_-γ] and the Jacobi identity')
    kb.add_family(Family(jacobi.name, (SymbolClass.CUR_V, 1, SymbolClass.CUR_U, 1), 5, _cartan_rule, jacobi))

    frame = alg.frame
    letter = 'W' if two else 'B'
    identity = Identity(f'{letter}-definition', 'definition of W' if two else 'definition of B', Provenance.DEFINING,
                        statement=f'[K(X_β), Q(X_-β)] = P(H_β) + (β,β)λ/4 S(X_β, X_-β) + λ/4 Σ + {letter}(β)')
    for root in frame.rs.roots:
        x, y = frame.root_index[root], frame.root_index[neg(root)]
        kb.add_substitution(atom(K(x), Q(y)), excluded_value(alg, root), identity, bump=False)
    kb.register(identity, bump=True)


def new_algebra(frame: ChevalleyFrame, mode: str = 'general', smax: int = 4) -> DdcaAlgebra:
    """A rewriting context whose knowledge base holds the defining relations of ``mode``."""
    if mode not in MODES:
        raise ConfigurationError(f'Unknown presentation {mode!r}; expected one of {MODES}.')
    if mode == 'two-parameter' and frame.kind != 'sl':
        raise ConfigurationError(f'The two-parameter algebra is defined for sl_n, not {frame.rs.label}.')
    if mode == 'kac-moody' and frame.rs.special_node is None:
        raise ConfigurationError(f'The Kac-Moody style presentation excludes type A, got {frame.rs.label}.')
    kb = KnowledgeBase(mode)
    alg = DdcaAlgebra(frame, kb, smax)
    _seed_common(kb)
    if mode != 'kac-moody':
        _seed_kq(alg)
    logger.info('seeded %s knowledge base for %s: %d identities', mode, frame.rs.label, len(kb.log))
    return alg


def roots_spanning(frame: ChevalleyFrame, avoid: Iterable[Sequence[int]] = ()) -> List[Vector]:
    """Simple roots and ``θ`` minus ``avoid`` and its negatives: their coroots still span ``h``."""
    rs = frame.rs
    banned = set()
    for r in avoid:
        banned.add(tuple(r))
        banned.add(neg(r))
    return [r for r in tuple(rs.simple_roots) + (rs.highest_root,) if r not in banned]
