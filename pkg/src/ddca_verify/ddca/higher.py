# language=rst
"""Currents of higher degree in ``D_{λ,β}(sl_n)``: ``P_s``, ``W_ab(s)`` and ``Z(s)``.

For ``s ≥ 2`` the element ``P_s(E_n1)`` is *defined* through the bracket
``[K(E_{n,n-1}), E_{n-1,1}(u^s)]``; the relation

``[K(x), y(u^s)] = P_s([x, y]) + λ/4 Σ_α Σ_{p+q=s-1} S([x, X_α](u^p), [X_-α, y](u^q))
- (β₁, β₂)λ/4 Σ_{p+q=s-1} S(x(u^p), y(u^q)) + s(β - λ/2)(xy + yx)₀(u^{s-1})``

then holds for every pair except the excluded ones ``(E_ab, E_ba)`` and pairs of Cartan
elements, which is what the ``higher-degree`` suite replays. For ``s = 1`` it is the defining
relation and for ``s = 0`` it reads ``[K(x), y] = K([x, y])``.

>>> from ddca_verify.liealg import frame_for
>>> from ddca_verify.ddca.seeds import new_algebra
>>> alg = new_algebra(frame_for('A', 3), 'two-parameter')
>>> f = alg.frame
>>> higher_rhs(alg, f.rs.eps(1, 2), f.rs.eps(2, 3), 1) == kq_rhs(alg, f.rs.eps(1, 2), f.rs.eps(2, 3))
True
>>> contraction_constant(f) == 48
True
"""
from math import comb
from typing import Iterator, List, Optional, Tuple

from sympy import QQ

from ..exceptions import ConfigurationError, DegreeCapError, VerificationFailed
from ..helpers import compositions
from ..liealg import ChevalleyFrame, LieElement
from ..scalarring import LAM, ParamScalar, specialize
from .element import DdcaElement
from .rewriting import DdcaAlgebra
from .seeds import SHIFT, Operand, kq_rhs, operand, sum_S, z_total
from .symbols import K, Symbol, atom, cur, opaque

__all__ = ['higher_rhs', 'ps_rest', 'definition_atom', 'excluded_atom', 'w_symbol', 'w_value', 'is_excluded',
           'known_pairs', 'known_atoms', 'commuting_atoms', 'basis_operand', 'degree_atoms', 'build_Z',
           'z_closed_s', 'w12_current', 'kz_cartan_rhs', 'contraction', 'contraction_constant', 'criterion_scalar',
           'specializations', 'specialized', 'extract_multiple']

def _S_sum(alg: DdcaAlgebra, x: LieElement, y: LieElement, total: int, side: str = 'u') -> DdcaElement:
    """``Σ_{p+q=total} S(x(t^p), y(t^q))``."""
    out = alg.zero()
    for p, q in compositions(total):
        out = out + alg.S(alg.cur(side, x, p), alg.cur(side, y, q))
    return out


def higher_rhs(alg: DdcaAlgebra, x: Operand, y: Operand, s: int) -> DdcaElement:
    # language=rst prefix="    "
    """Right hand side of ``[K(x), y(u^s)]``.

    A root stands for its root vector; the ``(β₁, β₂)`` term only enters when both operands are
    roots, and the ``(β - λ/2)`` term only in the two-parameter algebra.
    """
    if s < 0:
        raise ValueError('Current degrees are non negative.')
    frame = alg.frame
    lx, rx = operand(frame, x)
    ly, ry = operand(frame, y)
    if s == 0:
        return alg.K(lx.bracket(ly))
    out = alg.Ps(lx.bracket(ly), s) + sum_S(alg, lx, ly, s) * (LAM / 4)
    if rx is not None and ry is not None:
        c = frame.rs.pairing(rx, ry)
        if c:
            out = out - _S_sum(alg, lx, ly, s - 1) * (LAM * c / 4)
    if alg.kb.mode == 'two-parameter':
        out = out + alg.cur('u', lx.symmetric_product(ly), s - 1) * (SHIFT * s)
    return out


def ps_rest(alg: DdcaAlgebra, s: int) -> DdcaElement:
    """``[K(E_{n,n-1}), E_{n-1,1}(u^s)] - P_s(E_n1)``: the terms that define ``P_s(E_n1)``."""
    frame = alg.frame
    n = frame.size
    x, y = frame.rs.eps(n, n - 1), frame.rs.eps(n - 1, 1)
    return higher_rhs(alg, x, y, s) - alg.Ps(frame.E(n, 1), s)


def definition_atom(alg: DdcaAlgebra, s: int) -> Symbol:
    """The atom ``[K(E_{n,n-1}), E_{n-1,1}(u^s)]`` that ``P_s(E_n1)`` is read off."""
    frame = alg.frame
    n = frame.size
    index = frame.root_index
    return atom(K(index[frame.rs.eps(n, n - 1)]), cur('u', index[frame.rs.eps(n - 1, 1)], s))


def excluded_atom(alg: DdcaAlgebra, a: int, b: int, s: int) -> Symbol:
    index = alg.frame.root_index
    rs = alg.frame.rs
    return atom(K(index[rs.eps(a, b)]), cur('u', index[rs.eps(b, a)], s))


def w_symbol(a: int, b: int, s: int = 1) -> Symbol:
    """``W_ab`` for ``s = 1`` and ``W_ab(s)`` otherwise."""
    if s == 1:
        return opaque('W', (a, b))
    return opaque('W', (a, b, s), (s, 1))


def w_value(alg: DdcaAlgebra, a: int, b: int, s: int) -> DdcaElement:
    # language=rst prefix="    "
    """``W_ab(s) = [K(E_ab), E_ba(u^s)] - P_s(H_ab) - λ/4 Σ - λ/2 Σ_{p+q=s-1} S(E_ab(u^p), E_ba(u^q))``.

    The ``(β - λ/2)`` term of the relation is left inside ``W_ab(s)``.
    """
    frame = alg.frame
    x, y = frame.E(a, b), frame.E(b, a)
    rest = alg.Ps(frame.H_ab(a, b), s) + sum_S(alg, x, y, s) * (LAM / 4) + _S_sum(alg, x, y, s - 1) * (LAM / 2)
    return alg.symbol(excluded_atom(alg, a, b, s)) - rest


def is_excluded(frame: ChevalleyFrame, i: int, j: int) -> bool:
    """Pairs of basis positions no closed form covers: two Cartan elements or ``(X_β, X_-β)``."""
    wi, wj = frame.basis_weights[i], frame.basis_weights[j]
    if wi is None or wj is None:
        return wi is None and wj is None
    return all(a == -b for a, b in zip(wi, wj))


def known_pairs(frame: ChevalleyFrame) -> Iterator[Tuple[int, int]]:
    for i in range(frame.dim):
        for j in range(frame.dim):
            if not is_excluded(frame, i, j):
                yield i, j


def basis_operand(frame: ChevalleyFrame, index: int) -> Operand:
    """The root of a root vector, the Lie element itself for a Cartan basis element."""
    w = frame.basis_weights[index]
    return w if w is not None else frame.basis[index]


def known_atoms(alg: DdcaAlgebra, s: int) -> List[Symbol]:
    """The atoms ``[K(x), y(u^s)]`` a closed form covers."""
    return [atom(K(i), cur('u', j, s)) for i, j in known_pairs(alg.frame)]


def commuting_atoms(alg: DdcaAlgebra, s: int) -> List[Symbol]:
    """The atoms ``[K(X_β₁), X_β₂(u^s)]`` for commuting root vectors."""
    frame = alg.frame
    return [atom(K(i), cur('u', j, s)) for i, j in known_pairs(frame)
            if frame.basis_weights[i] is not None and frame.basis_weights[j] is not None
            and not frame.bracket_coords(i, j)]


def degree_atoms(alg: DdcaAlgebra, s: int) -> List[Symbol]:
    # language=rst prefix="    "
    """Every atom ``[K(x), y(u^s)]`` ordered for elimination.

    Commuting pairs come first, then the other pairs with a closed form, pairs of Cartan
    elements, the excluded pairs with ``(E_12, E_21)`` last among them, and finally the atom
    defining ``P_s(E_n1)``.
    """
    frame = alg.frame
    last = definition_atom(alg, s)
    excluded12 = excluded_atom(alg, 1, 2, s)
    commuting, others, cartan, excluded = [], [], [], []
    for i in range(frame.dim):
        for j in range(frame.dim):
            sym = atom(K(i), cur('u', j, s))
            if sym in (last, excluded12):
                continue
            wi, wj = frame.basis_weights[i], frame.basis_weights[j]
            if wi is None and wj is None:
                cartan.append(sym)
            elif is_excluded(frame, i, j):
                excluded.append(sym)
            elif not frame.bracket_coords(i, j):
                commuting.append(sym)
            else:
                others.append(sym)
    return commuting + others + cartan + excluded + [excluded12, last]


def build_Z(alg: DdcaAlgebra, s: int, side: str = 'u', hold: bool = True) -> DdcaElement:
    # language=rst prefix="    "
    """``Z(s) = Σ_a Z_{a,a+1}(s)`` for ``side='u'`` and ``Z̃(s)`` for ``side='v'``.

    ``Z̃_{ab}(s) = [Q(H_ab), H_ab(v^s)] + λ/4 Σ_α Σ_{p+q=s-1} S([H_ab, X_α](v^p), [X_-α, H_ab](v^q))``.
    With ``hold`` the commutators stay unevaluated.
    """
    if side not in ('u', 'v'):
        raise ValueError(f'side must be u or v, got {side!r}.')
    if s > alg.smax:
        raise DegreeCapError(s, alg.smax)
    if side == 'u':
        return z_total(alg, hold, s)
    frame = alg.frame
    n = frame.size
    make = alg.held if hold else alg.bracket
    total = alg.zero()
    for a in range(1, n + 1):
        h = frame.H_ab(a, a % n + 1)
        total = total + make(alg.Q(h), alg.cur('v', h, s)) + sum_S(alg, h, h, s, side='v') * (LAM / 4)
    return total


def z_closed_s(alg: DdcaAlgebra, a: int, b: int, c: int, d: int, s: int, via_second: bool = False) -> DdcaElement:
    """``(ε_ab, ε_cd) W_ab(s) + s(β - λ/2)(ε_a + ε_b, ε_cd) H_ab(u^{s-1})`` or its mirror through ``W_cd(s)``."""
    frame = alg.frame
    rs = frame.rs
    if via_second:
        a, b, c, d = c, d, a, b
    out = alg.symbol(w_symbol(a, b, s)) * rs.pairing(rs.eps(a, b), rs.eps(c, d))
    c_shift = rs.pairing(rs.epsilon(a, b), rs.eps(c, d))
    if c_shift:
        out = out + alg.cur('u', frame.H_ab(a, b), s - 1) * (SHIFT * s * c_shift)
    return out


def w12_current(alg: DdcaAlgebra, x: Operand, s: int) -> DdcaElement:
    """``[W_12, x(u^s)] = (β - λ/2)[E_11 + E_22, x](u^s)``."""
    frame = alg.frame
    lx, _ = operand(frame, x)
    e = frame.E(1, 1) + frame.E(2, 2)
    return alg.cur('u', e.bracket(lx), s) * SHIFT


def kz_cartan_rhs(alg: DdcaAlgebra, a: int, b: int, c: int, d: int, s: int) -> DdcaElement:
    # language=rst prefix="    "
    """``[K(H_cd), Z_ab(s)]`` for distinct ``a, b, c, d`` and ``s ≥ 2``:

    ``-C(s, 2)nλ² H_cd(u^{s-2}) + λs(β - λ/2) Σ_{p+q=s-2} (-S(E_ac, E_ca) + S(E_ad, E_da)
    - S(E_bc, E_cb) + S(E_bd, E_db))`` with the currents ``(u^p)``, ``(u^q)``.
    """
    frame = alg.frame
    E = frame.E
    n = frame.size
    out = alg.cur('u', frame.H_ab(c, d), s - 2) * (-comb(s, 2) * n * LAM ** 2)
    sums = alg.zero()
    for sign, (i, j) in ((-1, (a, c)), (1, (a, d)), (-1, (b, c)), (1, (b, d))):
        sums = sums + _S_sum(alg, E(i, j), E(j, i), s - 2) * sign
    return out + sums * (LAM * SHIFT * s)


def contraction(frame: ChevalleyFrame, a: int, b: int, c: int, d: int) -> LieElement:
    # language=rst prefix="    "
    """``Σ_{i≠j, k≠l} ((ε_ab, ε_ij)(ε_cd, ε_ij)(ε_ab, ε_kl) - (ε_ab, ε_ij)²(ε_cd, ε_kl))
    ([E_kl, E_ji], [E_lk, E_ij]) H_kl``, the coefficient of ``λ²`` collected in
    ``[K(H_cd), Z_ab(s)]``."""
    rs = frame.rs
    n = frame.size
    E = frame.E
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    total = frame.zero()
    for i, j in pairs:
        f_ab, f_cd = rs.pairing(rs.eps(a, b), rs.eps(i, j)), rs.pairing(rs.eps(c, d), rs.eps(i, j))
        if not f_ab:
            continue
        for k, l in pairs:
            coefficient = f_ab * f_cd * rs.pairing(rs.eps(a, b), rs.eps(k, l)) - f_ab ** 2 * rs.pairing(
                rs.eps(c, d), rs.eps(k, l))
            if not coefficient:
                continue
            form = E(k, l).bracket(E(j, i)).form(E(l, k).bracket(E(i, j)))
            if form:
                total = total + frame.H_ab(k, l) * (coefficient * form)
    return total


def contraction_constant(frame: ChevalleyFrame):
    """The rational ``c`` with ``contraction(1, 2, 3, 4) = c·H_34``."""
    if frame.kind != 'sl' or frame.size < 4:
        raise ConfigurationError(f'The contraction needs sl_n with n >= 4, not {frame.rs.label}.')
    value = contraction(frame, 1, 2, 3, 4)
    h = frame.H_ab(3, 4)
    ratio = value.form(h) / h.form(h)
    if value != h * ratio:
        raise VerificationFailed(f'The contraction is not a multiple of H_34: {value!r}.')
    return ratio


def criterion_scalar(n: int, s: int) -> ParamScalar:
    """``(16(β - λ/2)² - n²λ²)·C(s, 2)``."""
    if n < 4 or s < 2:
        raise ConfigurationError(f'The criterion is stated for n >= 4 and s >= 2, got n={n}, s={s}.')
    return (SHIFT ** 2 * 16 - LAM ** 2 * (n * n)) * comb(s, 2)


def specializations(n: int, lam0=4) -> List[Tuple[object, object]]:
    """The two points ``nλ = ±4(β - λ/2)`` with ``λ = lam0``."""
    lam0 = QQ(lam0)
    return [(lam0, lam0 / 2 + sign * n * lam0 / 4) for sign in (1, -1)]


def extract_multiple(e: DdcaElement, target: DdcaElement) -> Optional[ParamScalar]:
    """The scalar ``c`` with ``e = c·target``, or ``None`` when ``e`` is not such a multiple."""
    alg = e.algebra
    e, target = alg.current(e), alg.current(target)
    if not target.terms:
        raise ValueError('The target of extract_multiple must not vanish.')
    word = min(target.terms)
    t = target.terms[word]
    if not t.is_ground:
        raise ValueError('The target of extract_multiple must have rational coefficients.')
    c = e.coefficient(word) * (QQ.one / t.get((0, 0)))
    if e != target * c:
        return None
    return c


def specialized(value: ParamScalar, lam0, beta0):
    return specialize(value, lam0, beta0)

