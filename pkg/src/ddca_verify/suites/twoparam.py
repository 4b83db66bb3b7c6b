# language=rst
"""The two-parameter algebra ``D_{λ,β}(sl_n)``.

``w-relations`` solves the brackets ``[K(H_i), Q(H_j)]`` and every ``W_ab`` except ``W_12``,
``z-lie`` derives how ``Z_ab`` and ``W_ab`` act on ``sl_n`` and registers the bracket of ``W_12``
with Lie letters, ``z-central`` proves that ``Z = Z_12 + Z_23 + ... + Z_n1`` is central, and
``yangian-relations`` checks that ``X``, ``P(X) - λω`` satisfy the relations of the Yangian that
do not involve ``[P(H_i), P(H_j)]``.
"""
from typing import Iterator, List

from ..ddca.kb import Family
from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, compare, expand, register, saturate
from ..ddca.seeds import SHIFT, h_one, neg, x_one, z_closed, z_element, z_total
from ..ddca.symbols import K, Q, Symbol, SymbolClass, WKind, atom, opaque
from ..scalarring import LAM
from .base import BaseScript, BaseSuite
from .cartan import KqCartan, KqCartanAuto
from .central import CbRelation

__all__ = ['TwoParameterSuite', 'WRelations', 'ZLie', 'ZCentral', 'YangianRelations', 'w_symbols', 'W12',
           'w_lie_family', 'ordered_pairs', 'simple_generators']

W12 = opaque('W', (1, 2))


def ordered_pairs(n: int, strict: bool = False):
    """``(a, b)`` with ``a ≠ b``, or ``a < b`` when ``strict``."""
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b and (not strict or a < b):
                yield a, b


def w_symbols(alg: DdcaAlgebra) -> List[Symbol]:
    """Every ``W_ab``, with ``W_12`` last."""
    n = alg.frame.size
    return [opaque('W', pair) for pair in ordered_pairs(n) if pair != (1, 2)] + [W12]


def simple_generators(alg: DdcaAlgebra):
    """``E_{i,i+1}`` and ``E_{i+1,i}`` for every ``i``."""
    frame = alg.frame
    out = []
    for alpha in frame.rs.simple_roots:
        out += [frame.X(alpha), frame.X(neg(alpha))]
    return out


def ze_value(alg: DdcaAlgebra, a: int, b: int, c: int, d: int):
    """``2(β - λ/2)(ε_ab, ε_cd)(ε_c + ε_d, ε_ab) E_cd``, the bracket ``[Z_ab, E_cd]``."""
    rs = alg.frame.rs
    coefficient = rs.pairing(rs.eps(a, b), rs.eps(c, d)) * rs.pairing(rs.epsilon(c, d), rs.eps(a, b))
    return alg.lie(alg.frame.E(c, d)) * (SHIFT * 2 * coefficient)


class WRelations(CbRelation):
    # language=rst prefix="    "
    """``Z_{ab,cd}`` through ``W_ab`` and the differences ``W_ab - W_cd``.

    The rows are those of ``cb-relation``: the ``K``/``Q`` relation of a Cartan element and a
    root vector, bracketed with the opposite root vector. Here the excluded brackets are the
    ``W_ab``, and all of them but ``W_12`` get solved.
    """
    name = 'w-relations'
    anchor = 'Z and W in the two-parameter algebra'
    description = 'Z_{ab,cd} = (ε_ab, ε_cd) W_ab + (β - λ/2)(ε_a + ε_b, ε_cd) H_ab and W_ab - W_cd'
    modes = ('two-parameter',)
    requires = ('kq-cartan',)

    def unknowns(self, alg: DdcaAlgebra):
        return w_symbols(alg)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        for a, b in ordered_pairs(n, strict=True):
            for c, d in ordered_pairs(n, strict=True):
                z = z_element(alg, a, b, c, d)
                label = f'Z({a}{b},{c}{d})'
                yield f'{label} through W({a}{b})', z, z_closed(alg, a, b, c, d)
                yield f'{label} through W({c}{d})', z, z_closed(alg, a, b, c, d, via_second=True)
        for a, b in ordered_pairs(n):
            yield f'Z({a}{b}) = 2W({a}{b})', z_element(alg, a, b), alg.opaque('W', (a, b)) * 2
            for c, d in ordered_pairs(n):
                shift = alg.lie(frame.H_ab(a, c) + frame.H_ab(b, d)) * SHIFT
                w = alg.opaque('W', (a, b)) - alg.opaque('W', (c, d))
                yield f'W({a}{b}) - W({c}{d})', w, shift
                yield f'Z({a}{b}) - Z({c}{d})', z_element(alg, a, b) - z_element(alg, c, d), shift * 2


def _w_lie_rule(alg: DdcaAlgebra, x: Symbol, y: Symbol):
    if x != W12:
        return None
    return alg.bracket(z_element(alg, 1, 2, hold=True), alg.symbol(y)) / 2


def w_lie_family(alg: DdcaAlgebra) -> Family:
    return Family('w-lie', (SymbolClass.W, 0, SymbolClass.LIE, 0), 5, _w_lie_rule)


class ZLie(BaseScript):
    name = 'z-lie'
    anchor = 'Z against sl_n'
    description = '[Z_ab, E_cd] = 2(β - λ/2)(ε_ab, ε_cd)(ε_c + ε_d, ε_ab) E_cd; W_12 acts as Z_12/2'
    modes = ('two-parameter',)
    requires = ('kq-cartan', 'kq-cartan-auto', 'w-relations')

    def held_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        for a, b in ordered_pairs(n, strict=True):
            z = z_element(alg, a, b, hold=True)
            for c, d in ordered_pairs(n):
                e = alg.lie(frame.E(c, d))
                yield Check(f'[Z({a}{b}), E({c}{d})]', alg.bracket(z, e), ze_value(alg, a, b, c, d), (z, e))
            for i in range(1, frame.rs.rank + 1):
                yield f'[Z({a}{b}), H{i}]', alg.bracket(z, alg.lie(frame.H(i))), alg.zero()

    def w_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        for a, b in ordered_pairs(n):
            w = alg.opaque('W', (a, b))
            for c, d in ordered_pairs(n):
                yield f'[W({a}{b}), E({c}{d})]', alg.bracket(w, alg.lie(frame.E(c, d))), ze_value(alg, a, b, c, d) / 2

    def value(self, alg: DdcaAlgebra):
        return [
            compare(self.held_checks),
            register('w-lie', family=w_lie_family, statement='[W_12, X] = [Z_12, X]/2 for X in sl_n'),
            compare(self.w_checks),
        ]


def _w_atoms(alg: DdcaAlgebra):
    dim = alg.frame.dim
    return [atom(K(i), W12) for i in range(dim)] + [atom(W12, Q(i)) for i in range(dim)]


class ZCentral(BaseScript):
    # language=rst prefix="    "
    """``Z`` is central.

    ``[K(H_cd), Z_ab] = 0`` for distinct indices and ``Z_12`` differs from every ``Z_{a,a+1}``
    by an element of ``h``, so ``[K(H_34), Z_12 - ⟦Z_12⟧] = 2[K(H_34), W_12]`` vanishes. Bracketing
    with ``sl_n`` spreads this to every ``[K(X), W_12]``; the ``Q`` side is the same argument.
    """
    name = 'z-central'
    anchor = 'Z is central'
    description = '[Z, X] = [Z, K(X)] = [Z, Q(X)] = 0 for every X in sl_n'
    modes = ('two-parameter',)
    requires = ('w-relations', 'z-lie')

    def lie_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        z = z_total(alg, hold=True)
        for e in simple_generators(alg):
            yield f'[Z, {frame.render(e.coords())}]', alg.bracket(z, alg.lie(e)), alg.zero()
        for a, b in ordered_pairs(n, strict=True):
            for c, d in ordered_pairs(n, strict=True):
                if {a, b} & {c, d}:
                    continue
                k = alg.K(frame.H_ab(c, d))
                yield f'[K(H{c}{d}), Z({a}{b})]', alg.bracket(k, z_element(alg, a, b, hold=True)), alg.zero()
        for i in range(1, frame.rs.rank + 1):
            k = alg.K(frame.H(i))
            for a, b in ordered_pairs(n, strict=True):
                difference = z_element(alg, a, b) - z_element(alg, 1, 2)
                yield f'[Z({a}{b}) - Z(12), K(H{i})]', alg.bracket(difference, k), alg.zero()

    def seeds(self, side: str):
        def build(alg: DdcaAlgebra):
            frame = alg.frame
            current = alg.K if side == 'K' else alg.Q
            z = z_element(alg, 1, 2) - z_element(alg, 1, 2, hold=True)
            yield f'[{side}(H34), Z(12) - ⟦Z(12)⟧]', alg.bracket(current(frame.H_ab(3, 4)), z)
        return build

    def centrality_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        z = z_total(alg)
        for index in range(frame.dim):
            label = frame.label(index)
            yield f'[Z, {label}]', alg.bracket(z, alg.lie(index)), alg.zero()
            yield Check(f'[Z, K({label})]', alg.bracket(z, alg.K(index)), alg.zero(), (z, alg.K(index)))
            yield f'[Z, Q({label})]', alg.bracket(z, alg.Q(index)), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [
            compare(self.lie_checks),
            expand('k-rows', self.seeds('K')),
            expand('q-rows', self.seeds('Q')),
            saturate('k-rows', 'q-rows', generators=simple_generators, solves=_w_atoms),
            compare(self.centrality_checks),
        ]


class YangianRelations(BaseScript):
    # language=rst prefix="    "
    """Relations of the Yangian for ``X_{i,0} = X_i``, ``H_{i,0} = H_i``,
    ``X_{i,1} = P(X_i) - λω_i`` and ``H_{i,1} = P(H_i) - λν_i``.

    Only ``[P(x), y] = P([x, y])`` and identities in ``U(sl_n)`` enter. The remaining relation
    ``[H_{i,1}, H_{j,1}] = 0`` is the subject of the ``p-brackets`` suite.
    """
    name = 'yangian-relations'
    anchor = 'X and P(X) satisfy the Yangian relations'
    description = 'weights, exchange, raising-lowering and Serre relations of X_{i,r}, H_{i,r}'
    requires = ('p-equivariance',)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        rank = rs.rank
        x = {(i, s): alg.lie(frame.X(rs.simple_roots[i - 1] if s > 0 else neg(rs.simple_roots[i - 1])))
             for i in range(1, rank + 1) for s in (1, -1)}
        h = {i: alg.lie(frame.H(i)) for i in range(1, rank + 1)}
        x1 = {(i, s): x_one(alg, i, s) for i in range(1, rank + 1) for s in (1, -1)}
        h1 = {i: h_one(alg, i) for i in range(1, rank + 1)}
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                c = rs.pairing(rs.simple_roots[i - 1], rs.simple_roots[j - 1])
                yield f'[H{i}, H{j},1]', alg.bracket(h[i], h1[j]), alg.zero()
                for s in (1, -1):
                    sign = '+' if s > 0 else '-'
                    yield f'[H{i}, X{j}{sign}]', alg.bracket(h[i], x[j, s]), x[j, s] * (s * c)
                    yield f'[H{i}, X{j},1{sign}]', alg.bracket(h[i], x1[j, s]), x1[j, s] * (s * c)
                    exchange = alg.bracket(x1[i, s], x[j, s]) - alg.bracket(x[i, s], x1[j, s])
                    yield f'exchange X{i}{sign}, X{j}{sign}', exchange, alg.S(x[i, s], x[j, s]) * (LAM * s * c / 2)
                    exchange = alg.bracket(h1[i], x[j, s]) - alg.bracket(h[i], x1[j, s])
                    yield f'exchange H{i}, X{j}{sign}', exchange, alg.S(h[i], x[j, s]) * (LAM * s * c / 2)
                delta = 1 if i == j else 0
                yield f'[X{i}+, X{j}-]', alg.bracket(x[i, 1], x[j, -1]), h[i] * delta
                yield f'[X{i},1+, X{j}-]', alg.bracket(x1[i, 1], x[j, -1]), h1[i] * delta
                yield f'[X{i}+, X{j},1-]', alg.bracket(x[i, 1], x1[j, -1]), h1[i] * delta
                if i != j:
                    for s in (1, -1):
                        e = x[j, s]
                        for _ in range(1 - int(rs.cartan[i - 1][j - 1])):
                            e = alg.bracket(x[i, s], e)
                        yield f'Serre X{i}, X{j} ({"+" if s > 0 else "-"})', e, alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class TwoParameterSuite(BaseSuite):
    name = 'two-parameter'
    anchor = 'central element and Yangian of the two-parameter algebra'
    mode = 'two-parameter'
    dynkin_types = ('A',)
    min_rank = 3
    scripts = [KqCartan, KqCartanAuto, WRelations, ZLie, ZCentral, YangianRelations]
