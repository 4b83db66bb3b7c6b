# language=rst
"""Brackets of ``P`` with ``K``, ``Q``, ``W_12`` and ``P`` in ``D_{λ,β}(sl_n)``.

Every row here states ``[z, P(y) - p] = 0`` where ``p`` is ``P(y)`` written through a held
bracket ``⟦K(X_β₁), Q(X_β₂)⟧`` (or ``⟦K(X_β), Q(X_-β)⟧`` and ``W``). Bracketing with ``z``
unfolds the held bracket by the Jacobi identity; the rows are only formed when one of the two
inner brackets lands in ``[K(x), K(y)]`` or ``[Q(x), Q(y)]`` with commuting ``x, y``, so no
current of degree two appears. The solved brackets lead to the value of ``[P(H_i), P(H_j)]``,
the last relation of the Yangian.
"""
import logging
from typing import Iterator, List

from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, compare, expand, saturate, solve, symmetry
from ..ddca.seeds import SHIFT, h_one, neg, nu_lift, p_from_excluded, p_from_kq
from ..ddca.symbols import K, P, Q, atom
from ..scalarring import LAM
from ..uea import enveloping, nu, nu_closed_forms
from .base import BaseScript, BaseSuite
from .cartan import KqCartan, KqCartanAuto, kq_identity
from .twoparam import W12, WRelations, ZCentral, ZLie, ordered_pairs, simple_generators

__all__ = ['PBracketSuite', 'NuCommutators', 'KpCommuting', 'Pkpq', 'PW', 'PBrackets', 'commuting_pairs',
           'far_bracket', 'pkpq_identity']

logger = logging.getLogger(__name__)


def commuting_pairs(n: int):
    """``((a, b), (c, d))`` with ``[E_ab, E_cd] = 0`` and ``(a, b) ≠ (c, d)``."""
    for a, b in ordered_pairs(n):
        for c, d in ordered_pairs(n):
            if b != c and d != a and (a, b) != (c, d):
                yield (a, b), (c, d)


def _commutes(frame, root, index: int) -> bool:
    return not frame.X(root).bracket(frame.basis[index])


def kp_value(alg: DdcaAlgebra, side: str, a: int, b: int, c: int, d: int):
    """``∓λ/4 (S(C(E_ad), E_cb) + S(C(E_cb), E_ad))`` with ``C = K`` (sign -) or ``Q`` (sign +)."""
    E = alg.frame.E
    current, sign = (alg.K, -1) if side == 'K' else (alg.Q, 1)
    total = alg.S(current(E(a, d)), alg.lie(E(c, b))) + alg.S(current(E(c, b)), alg.lie(E(a, d)))
    return total * (LAM * sign / 4)


class NuCommutators(BaseScript):
    name = 'nu-commutators'
    anchor = 'the commutator of ν_i and ν_j'
    description = '[ν_i, ν_j] equals both of its closed forms in U(sl_n)'

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        U = enveloping(alg.frame)
        rank = alg.frame.rs.rank
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if i == j:
                    continue
                direct = alg.lift(nu(U, i, closed=True).commutator(nu(U, j, closed=True)))
                braces, triples = nu_closed_forms(U, i, j)
                yield f'[ν{i}, ν{j}] brace sums', direct, alg.lift(braces)
                yield f'[ν{i}, ν{j}] symmetrized triples', direct, alg.lift(triples)

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class KpCommuting(BaseScript):
    # language=rst prefix="    "
    """``[K(E_ab), P(E_cd)]`` and ``[Q(E_ab), P(E_cd)]`` for commuting matrix units.

    Rows come from ``P(H_β)`` through the excluded bracket and from ``P(X_β₁ + β₂)`` through
    every splitting into two roots, bracketed with ``K(x)`` and ``Q(x)``; one round of brackets
    with the simple root vectors follows before the solve.
    """
    name = 'kp-commuting'
    anchor = 'K and Q against P of a commuting matrix unit'
    description = '[K(E_ab), P(E_cd)] = -λ/4 (S(K(E_ad), E_cb) + S(K(E_cb), E_ad)) when [E_ab, E_cd] = 0'
    modes = ('two-parameter',)
    requires = ('z-central',)
    slow = True

    def excluded_rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for root in frame.rs.roots:
            identity = alg.P(frame.H_root(root)) - p_from_excluded(alg, root)
            for index in range(frame.dim):
                label = frame.label(index)
                if _commutes(frame, root, index):
                    yield f'[K({label}), P(H{root})]', alg.bracket(alg.K(index), identity)
                if _commutes(frame, neg(root), index):
                    yield f'[Q({label}), P(H{root})]', alg.bracket(alg.Q(index), identity)

    def split_rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        for r1 in rs.roots:
            for r2 in rs.roots:
                if r1 == neg(r2) or not rs.is_root(tuple(a + b for a, b in zip(r1, r2))):
                    continue
                identity = alg.P(frame.X(r1).bracket(frame.X(r2))) - p_from_kq(alg, r1, r2)
                for index in range(frame.dim):
                    label = frame.label(index)
                    if _commutes(frame, r1, index):
                        yield f'[K({label}), P{r1}{r2}]', alg.bracket(alg.K(index), identity)
                    if _commutes(frame, r2, index):
                        yield f'[Q({label}), P{r1}{r2}]', alg.bracket(alg.Q(index), identity)

    def unknowns(self, alg: DdcaAlgebra) -> List:
        frame = alg.frame
        index = frame.root_index
        eps = frame.rs.eps
        out = []
        for (a, b), (c, d) in commuting_pairs(frame.size):
            x, y = index[eps(a, b)], index[eps(c, d)]
            out += [atom(K(x), P(y)), atom(P(y), Q(x))]
        return out

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        E = alg.frame.E
        for (a, b), (c, d) in commuting_pairs(alg.frame.size):
            p = alg.P(E(c, d))
            for side, current in (('K', alg.K), ('Q', alg.Q)):
                lhs = current(E(a, b))
                yield Check(f'[{side}(E{a}{b}), P(E{c}{d})]', alg.bracket(lhs, p), kp_value(alg, side, a, b, c, d),
                            (lhs, p))

    def value(self, alg: DdcaAlgebra):
        return [
            expand('excluded-rows', self.excluded_rows),
            expand('split-rows', self.split_rows),
            saturate('excluded-rows', 'split-rows', generators=simple_generators, solves=self.unknowns, max_rounds=1),
            compare(self.checks),
        ]


def pkpq_identity(alg: DdcaAlgebra, i: int):
    # language=rst prefix="    "
    """``⟦P(H_i), K(E)⟧ + ½⟦P(H_{i+1}), K(E)⟧`` minus its value, ``E = E_{i+1,i+2}``.

    The value is ``(β - λ/2) K(E) + λ/4 (S(K(E_{i+1,i}), E_{i,i+2}) + S(E_{i+1,i}, K(E_{i,i+2})))
    + λ/8 Σ_{p ≠ i+1, i+2} (S(K(E_{p,i+2}), E_{i+1,p}) + S(K(E_{i+1,p}), E_{p,i+2}))``.
    """
    frame = alg.frame
    E = frame.E
    k = alg.K(E(i + 1, i + 2))
    lhs = alg.held(alg.P(frame.H(i)), k) + alg.held(alg.P(frame.H(i + 1)), k) / 2
    rhs = k * SHIFT
    near = alg.S(alg.K(E(i + 1, i)), alg.lie(E(i, i + 2))) + alg.S(alg.lie(E(i + 1, i)), alg.K(E(i, i + 2)))
    rhs = rhs + near * (LAM / 4)
    for p in range(1, frame.size + 1):
        if p in (i + 1, i + 2):
            continue
        pair = alg.S(alg.K(E(p, i + 2)), alg.lie(E(i + 1, p))) + alg.S(alg.K(E(i + 1, p)), alg.lie(E(p, i + 2)))
        rhs = rhs + pair * (LAM / 8)
    return lhs - rhs


def pkpq_q_identity(alg: DdcaAlgebra, i: int):
    """The transposed identity for ``[P(H_i), Q(E_{i+2,i+1})]``, written out directly."""
    frame = alg.frame
    E = frame.E
    q = alg.Q(E(i + 2, i + 1))
    lhs = alg.held(alg.P(frame.H(i)), q) + alg.held(alg.P(frame.H(i + 1)), q) / 2
    rhs = -q * SHIFT
    near = alg.S(alg.Q(E(i, i + 1)), alg.lie(E(i + 2, i))) + alg.S(alg.lie(E(i, i + 1)), alg.Q(E(i + 2, i)))
    rhs = rhs - near * (LAM / 4)
    for p in range(1, frame.size + 1):
        if p in (i + 1, i + 2):
            continue
        pair = alg.S(alg.Q(E(i + 2, p)), alg.lie(E(p, i + 1))) + alg.S(alg.Q(E(p, i + 1)), alg.lie(E(i + 2, p)))
        rhs = rhs - pair * (LAM / 8)
    return lhs - rhs


class Pkpq(BaseScript):
    name = 'pkpq'
    anchor = 'P(H_i) against K(E_{i+1,i+2}) and Q(E_{i+2,i+1})'
    description = '[P(H_i) + P(H_{i+1})/2, K(E_{i+1,i+2})] in closed form, and its transpose'
    modes = ('two-parameter',)
    requires = ('kp-commuting',)
    slow = True

    def identities(self, alg: DdcaAlgebra) -> Iterator:
        for i in range(1, alg.frame.size - 1):
            yield f'K side, i={i}', pkpq_identity(alg, i)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        for label, e in ws['k-side']:
            yield label, e, alg.zero()
        for (label, image), i in zip(ws['q-side'], range(1, alg.frame.size - 1)):
            yield label, image, alg.zero()
            yield f'{label} is the transposed identity', image, -pkpq_q_identity(alg, i)

    def value(self, alg: DdcaAlgebra):
        return [
            expand('k-side', self.identities),
            symmetry('q-side', 'k-side', 'anti'),
            compare(self.checks),
        ]


class PW(BaseScript):
    name = 'p-w'
    anchor = 'P of a Cartan element against W'
    description = '[P(h), W_ab] = 0 for h in the Cartan subalgebra'
    modes = ('two-parameter',)
    requires = ('z-central',)
    slow = True

    def rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        w = alg.symbol(W12)
        for i, alpha in enumerate(frame.rs.simple_roots, start=1):
            identity = alg.P(frame.H_root(alpha)) - p_from_excluded(alg, alpha)
            yield f'[P(H{i}), W(12)]', alg.bracket(identity, w)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for i in range(1, frame.rs.rank + 1):
            p = alg.P(frame.H(i))
            for a, b in ordered_pairs(frame.size):
                yield f'[P(H{i}), W({a}{b})]', alg.bracket(p, alg.opaque('W', (a, b))), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [
            expand('rows', self.rows),
            solve('rows', solves=lambda a: [atom(P(c), W12) for c in a.frame.cartan_index]),
            compare(self.checks),
        ]


def far_bracket(alg: DdcaAlgebra, i: int, j: int):
    # language=rst prefix="    "
    """``[P(X_i⁺), P(X_j⁺)]`` for ``|i - j| > 1``:

    ``λ²/16 S(Σ_k S(E_{k,j+1}, E_{ik}), E_{j,i+1}) - λ²/16 S(Σ_l S(E_{jl}, E_{l,i+1}), E_{i,j+1})``.
    """
    frame = alg.frame
    n = frame.size

    def e(a, b):
        return alg.lie(frame.E(a, b))

    first = sum((alg.S(e(k, j + 1), e(i, k)) for k in range(1, n + 1)), alg.zero())
    second = sum((alg.S(e(j, m), e(m, i + 1)) for m in range(1, n + 1)), alg.zero())
    return (alg.S(first, e(j, i + 1)) - alg.S(second, e(i, j + 1))) * (LAM * LAM / 16)


class PBrackets(BaseScript):
    # language=rst prefix="    "
    """``[P(H_i), P(H_j)] + λ²[ν_i, ν_j] = 0``.

    For ``|i - j| > 1`` the rows bracket ``P(H_i)`` with ``P(H_j)`` written through
    ``⟦K(X_j⁺), Q(X_j⁻)⟧``, and ``P(X_j⁺)`` with the ``K``/``Q`` relation of ``X_i⁺`` and ``H_i``,
    which yields ``[P(X_i⁺), P(X_j⁺)]``. For ``j = i + 1`` the row brackets
    ``P(H_i) + P(H_{i+1})/2`` instead, whose brackets with ``K(E_{i+1,i+2})`` and
    ``Q(E_{i+2,i+1})`` are known in closed form.
    """
    name = 'p-brackets'
    anchor = 'P(H_i) against P(H_j)'
    description = '[P(H_i), P(H_j)] = -λ²[ν_i, ν_j] and [H_{i,1}, H_{j,1}] = 0'
    modes = ('two-parameter',)
    requires = ('pkpq', 'p-w')
    slow = True

    def rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        rank = rs.rank
        for i in range(1, rank + 1):
            for j in range(i + 1, rank + 1):
                alpha_j = rs.simple_roots[j - 1]
                identity = alg.P(frame.H(j)) - p_from_excluded(alg, alpha_j)
                if j - i > 1:
                    left = alg.P(frame.H(i))
                    yield f'[P(H{i}), P(H{j})]', alg.bracket(left, identity)
                    for a, b in ((i, j), (j, i)):
                        root = rs.simple_roots[a - 1]
                        relation = kq_identity(alg, root, frame.H(a))
                        yield f'[P(X{a}+), P(X{b}+)]', alg.bracket(relation, alg.P(frame.X(rs.simple_roots[b - 1])))
                else:
                    left = alg.P(frame.H(i)) + alg.P(frame.H(i + 1)) / 2
                    yield f'[P(H{i}) + P(H{i + 1})/2, P(H{j})]', alg.bracket(left, identity)

    def unknowns(self, alg: DdcaAlgebra) -> List:
        frame = alg.frame
        rs = frame.rs
        cartan = frame.cartan_index
        out = [atom(P(x), P(y)) for x in cartan for y in cartan if x < y]
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                if abs(i - j) > 1:
                    x = frame.root_index[rs.simple_roots[i - 1]]
                    y = frame.root_index[rs.simple_roots[j - 1]]
                    if x < y:
                        out.append(atom(P(x), P(y)))
        return out

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        rank = rs.rank
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if i == j:
                    continue
                nus = alg.bracket(nu_lift(alg, i), nu_lift(alg, j)) * (LAM * LAM)
                if abs(i - j) > 1:
                    xi = alg.P(frame.X(rs.simple_roots[i - 1]))
                    xj = alg.P(frame.X(rs.simple_roots[j - 1]))
                    closed = far_bracket(alg, i, j)
                    yield Check(f'[P(X{i}+), P(X{j}+)]', alg.bracket(xi, xj), closed, (xi, xj))
                    lowered = alg.bracket(alg.bracket(closed, alg.lie(frame.X(neg(rs.simple_roots[j - 1])))),
                                          alg.lie(frame.X(neg(rs.simple_roots[i - 1]))))
                    yield f'[[[P(X{i}+), P(X{j}+)], X{j}-], X{i}-]', lowered, -nus
                yield f'[P(H{i}), P(H{j})] + λ²[ν{i}, ν{j}]', alg.bracket(alg.P(frame.H(i)), alg.P(frame.H(j))), -nus
                yield f'[H{i},1, H{j},1]', alg.bracket(h_one(alg, i), h_one(alg, j)), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [
            expand('rows', self.rows),
            solve('rows', solves=self.unknowns),
            compare(self.checks),
        ]


class PBracketSuite(BaseSuite):
    name = 'p-brackets'
    anchor = 'the brackets [P(H_i), P(H_j)]'
    mode = 'two-parameter'
    dynkin_types = ('A',)
    min_rank = 3
    scripts = [KqCartan, KqCartanAuto, WRelations, ZLie, ZCentral, NuCommutators, KpCommuting, Pkpq, PW, PBrackets]
