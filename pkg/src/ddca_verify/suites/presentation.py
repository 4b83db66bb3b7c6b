# language=rst
"""The two presentations of the deformed double current algebra of ``g`` outside type ``A``.

The map ``φ`` sends the Kac-Moody style generators to

* ``X_{i,0}^± ↦ X_i^±``, ``H_{i,0} ↦ H_i``, ``X_{i,1}^± ↦ Q(X_i^±)``, ``H_{i,1} ↦ Q(H_i)``,
* ``X_{0,0}^+ ↦ K(X_θ⁻)`` and ``X_{0,1}^+ ↦ P(X_θ⁻) - λω₀⁺``.

``phi-relations`` checks that the images satisfy the relations which involve ``X_{0,r}^+``.
``psi-relations`` goes the other way: starting from the ``K``/``Q`` relation for the pairs
``(-θ, ±α_i)`` only, it recovers the relation for every pair of roots ``β₁ ≠ -β₂`` through
brackets with ``g`` and Tits lifts of Weyl group elements, stage by stage.
"""
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from ..ddca.kb import Family
from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, ad, compare, expand, register, solve, weyl
from ..ddca.seeds import kq_rhs, neg, nu_lift, omega0_lift, omega_lift, p_from_kq
from ..ddca.symbols import K, P, Q, SymbolClass, atom
from ..liealg import LieElement, longest_word, word_to
from ..rootsys import Vector
from ..scalarring import LAM
from .base import BaseScript, BaseSuite
from .cartan import KqCartan, KqCartanAuto, kq_identity, root_label

__all__ = ['PresentationSuite', 'KacMoodySuite', 'PhiRelations', 'PsiRelations', 'phi_images',
           'kq_relation_family']

logger = logging.getLogger(__name__)


def _theta_minus(alg: DdcaAlgebra) -> Vector:
    return neg(alg.frame.rs.highest_root)


def phi_images(alg: DdcaAlgebra) -> dict:
    """``φ(X_{0,0}^+)`` and ``φ(X_{0,1}^+)``."""
    x = alg.frame.X(_theta_minus(alg))
    return {'X00': alg.K(x), 'X01': alg.P(x) - omega0_lift(alg) * LAM}


class PhiRelations(BaseScript):
    # language=rst prefix="    "
    """The images under ``φ`` of the relations involving ``X_{0,0}^+`` and ``X_{0,1}^+``.

    The only bracket the defining relations do not give directly is ``[K(X_θ⁻), P(X_θ⁻)]``.
    It comes from writing ``P(X_θ⁻)`` through ``⟦K(X_k⁻), Q(X_{θ-α_k}⁻)⟧`` and bracketing with
    ``K(X_θ⁻)``, which commutes with ``K(X_k⁻)``.
    """
    name = 'phi-relations'
    anchor = 'φ respects the relations of the Kac-Moody style presentation'
    description = 'images of the relations involving X_{0,0}^+ and X_{0,1}^+ hold'
    modes = ('general',)
    requires = ('kq-cartan', 'kq-cartan-auto')

    def rows(self, alg: DdcaAlgebra) -> Iterator:
        rs = alg.frame.rs
        k = rs.special_node
        alpha_k = rs.simple_roots[k - 1]
        rest = tuple(a - b for a, b in zip(rs.highest_root, alpha_k))
        theta = _theta_minus(alg)
        identity = alg.P(alg.frame.X(theta)) - p_from_kq(alg, neg(alpha_k), neg(rest))
        yield '[K(X_θ-), P(X_θ-)]', alg.bracket(alg.K(alg.frame.X(theta)), identity)

    def unknowns(self, alg: DdcaAlgebra):
        index = alg.frame.root_index[_theta_minus(alg)]
        return [atom(K(index), P(index))]

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        k = rs.special_node
        theta = rs.highest_root
        alpha_k = rs.simple_roots[k - 1]
        d0c0k = -rs.pairing(theta, alpha_k)
        d0 = rs.pairing(theta, theta) / 2
        x_theta = alg.lie(frame.X(neg(theta)))
        images = phi_images(alg)
        x00, x01 = images['X00'], images['X01']
        omega0 = omega0_lift(alg)

        def e(i, sign):
            alpha = rs.simple_roots[i - 1]
            return alg.lie(frame.X(alpha if sign > 0 else neg(alpha)))

        yield Check('[ω0+, K(X_θ-)]', alg.bracket(omega0, x00), x00 * x_theta * (-rs.pairing(theta, alpha_k)),
                    (omega0, x00))
        p = alg.P(frame.X(neg(theta)))
        yield Check('[P(X_θ-), K(X_θ-)]', alg.bracket(p, x00),
                    x00 * x_theta * (LAM * (rs.pairing(theta, theta) - rs.pairing(alpha_k, theta))), (p, x00))
        for j in range(1, rs.rank + 1):
            h = alg.lie(frame.H(j))
            c = rs.pairing(rs.simple_roots[j - 1], theta)
            yield f'[H{j}, ω0+]', alg.bracket(h, omega0), omega0 * (-c)
            yield f'[H{j}, X01]', alg.bracket(h, x01), x01 * (-c)

        q_k, h_k = alg.Q(frame.X(alpha_k)), alg.lie(frame.H(k))
        yield ('first relation',
               alg.bracket(q_k, x00) - alg.bracket(e(k, 1), x01),
               alg.S(e(k, 1), x_theta) * (LAM * d0c0k / 2) + alg.bracket(omega_lift(alg, k, 1), x_theta) * LAM
               + alg.bracket(e(k, 1), omega0) * LAM)
        yield ('second relation',
               alg.bracket(alg.Q(frame.H(k)), x00) - alg.bracket(h_k, x01),
               alg.S(h_k, x_theta) * (LAM * d0c0k / 2) + omega0 * (LAM * d0c0k)
               + alg.bracket(nu_lift(alg, k), x_theta) * LAM)
        yield 'third relation, X00 against X_k-', alg.bracket(x00, e(k, -1)), alg.zero()
        yield 'third relation, X01 against X_k-', alg.bracket(x01, e(k, -1)), alg.bracket(e(k, -1), omega0) * LAM
        yield 'third relation, X01 against X00', alg.bracket(x01, x00), x00 * x_theta * (LAM * (2 * d0))
        for i in range(1, rs.rank + 1):
            if i == k:
                continue
            for sign, tag in ((1, '+'), (-1, '-')):
                alpha = rs.simple_roots[i - 1]
                q = alg.Q(frame.X(alpha if sign > 0 else neg(alpha)))
                yield (f'fourth relation, X00 against X{i},1{tag}', alg.bracket(x00, q),
                       alg.bracket(x_theta, omega_lift(alg, i, sign)) * LAM)
                yield (f'fourth relation, X01 against X{i},0{tag}', alg.bracket(x01, e(i, sign)),
                       -alg.bracket(omega0, e(i, sign)) * LAM)
                yield f'[P(X_θ-), X{i}{tag}]', alg.bracket(p, e(i, sign)), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [
            expand('rows', self.rows),
            solve('rows', solves=self.unknowns),
            compare(self.checks),
        ]


def _is_cartan(x) -> bool:
    return isinstance(x[0], str)


def _name(x) -> str:
    return f'H{root_label(x[1])}' if _is_cartan(x) else f'X{root_label(x)}'


def _is_long(rs, root: Vector) -> bool:
    return rs.pairing(root, root) == rs.pairing(rs.highest_root, rs.highest_root)


def _descent(rs, start: Vector) -> List[Tuple[int, List[Tuple[Vector, Vector, int]]]]:
    """Moves ``(β, β + α_j, j)`` reaching the positive roots below ``start`` and the negative roots below ``-α_i``."""
    levels = []
    theta = rs.highest_root
    for known, heights in (({tuple(start)}, range(rs.height(start) - 1, 0, -1)),
                           ({neg(a) for a in rs.simple_roots}, range(-2, -rs.height(theta) - 1, -1))):
        for height in heights:
            moves = []
            for beta in rs.roots:
                if rs.height(beta) != height:
                    continue
                for j, alpha in enumerate(rs.simple_roots, start=1):
                    source = tuple(a + b for a, b in zip(beta, alpha))
                    if source in known:
                        moves.append((beta, source, j))
                        break
            known |= {beta for beta, _, _ in moves}
            if moves:
                levels.append((height, moves))
    return levels


def _root_pair_rule(alg: DdcaAlgebra, x, y):
    frame = alg.frame
    r1, r2 = frame.basis_weights[x.index], frame.basis_weights[y.index]
    if r1 is None or r2 is None or r1 == neg(r2):
        return None
    return kq_rhs(alg, r1, r2)


def kq_relation_family(alg: DdcaAlgebra) -> Family:
    return Family('kq-relation', (SymbolClass.CUR_V, 1, SymbolClass.CUR_U, 1), 10, _root_pair_rule)


class PsiRelations(BaseScript):
    # language=rst prefix="    "
    """The ``K``/``Q`` relation for all root pairs from the pairs ``(-θ, ±α_i)``.

    Each stage is its own group of steps, so a failure names the stage it happened in:

    ``seeds``
        the relation for ``β₁ = -θ`` and ``β₂ = ±α_i``, images of defining relations;
    ``top``
        the seeds moved by the Tits lift of ``w₀``: the relation for ``(θ, ±α_i)``;
    ``theta-cartan``
        ``[top(θ, -α_i), X_θ⁻]`` gives ``[K(H_θ), Q(X_i⁻)]``;
    ``theta-minus-alpha``
        ``[X_θ⁺, seeds]`` together with ``theta-cartan`` gives ``[K(X_θ⁻), Q(X_{θ-α_k})]``;
    ``descent``
        lowering ``X_{θ-α_k}`` and ``X_i⁻`` by ``ad(X_j⁻)`` gives ``[K(X_θ⁻), Q(X_β)]`` for every
        ``β ≠ θ``, one root height at a time;
    ``long``
        Tits lifts of ``w`` with ``w(-θ) = β₁`` move the descent to every long ``β₁``;
    ``cartan-theta``
        ``[X_θ⁺, ·]`` and ``[·, X_θ⁻]`` of long relations give ``[K(H_θ), Q(X_β)]`` for ``β ≠ ±θ``;
    ``cartan-long``
        its Tits lifts give ``[K(H_γ), Q(X_β)]`` for long ``γ`` and ``β ≠ ±γ``;
    ``short``
        ``[·, X_η]`` of ``cartan-long`` with a long ``γ``, ``(γ, η) ≠ 0`` and ``γ ≠ ±β, ±(β + η)``
        gives the relation for short ``η``.

    The last step registers the relation for every pair ``β₁ ≠ -β₂`` as a rule.
    """
    name = 'psi-relations'
    anchor = 'the K/Q relation for every pair of roots'
    description = '[K(X_β₁), Q(X_β₂)] = P([X_β₁, X_β₂]) - (β₁,β₂)λ/4 S(X_β₁, X_β₂) + λ/4 Σ for β₁ ≠ -β₂'
    modes = ('kac-moody',)
    slow = True

    def __init__(self):
        self.moves: Dict[str, List[Tuple[str, LieElement]]] = {}

    def identities(self, stage: str, pairs: Sequence[Tuple]):
        """``⟦K(x), Q(X_β)⟧`` minus its right hand side for each ``(x, β)``; ``x`` is a root or ``('H', γ)``."""
        def build(alg: DdcaAlgebra) -> Iterator:
            frame = alg.frame
            for x, y in pairs:
                yield f'{stage}{_name(x)}{_name(y)}', kq_identity(alg, frame.H_root(x[1]) if _is_cartan(x) else x, y)
        return build

    def moving(self, alg: DdcaAlgebra, label: str) -> Iterator:
        yield from self.moves[label]

    def moved(self, stage: str, moves: Sequence[Tuple[Tuple, LieElement]], side: str) -> list:
        """Bracket the identity of each pair with its Lie element; the results land in ``stage``."""
        pairs = []
        for pair, x in moves:
            label = f'{stage}{_name(pair[0])}{_name(pair[1])}'
            if label not in self.moves:
                self.moves[label] = []
                pairs.append(pair)
            self.moves[label].append((f'by{len(self.moves[label])}', x))
        return [expand(f'{stage}-source', self.identities(stage, pairs)),
                ad(stage, f'{stage}-source', self.moving, side=side, anchor=stage)]

    def atoms(self, pairs: Sequence[Tuple[Vector, Vector]]):
        def atoms(alg: DdcaAlgebra):
            index = alg.frame.root_index
            return [atom(K(index[r1]), Q(index[r2])) for r1, r2 in pairs]
        return atoms

    def checks(self, pairs: Sequence[Tuple]):
        def checks(alg: DdcaAlgebra, ws) -> Iterator:
            frame = alg.frame
            for x, y in pairs:
                if _is_cartan(x):
                    lx = operand = frame.H_root(x[1])
                else:
                    lx, operand = frame.X(x), x
                k, q = alg.K(lx), alg.Q(frame.X(y))
                yield Check(f'[K({_name(x)}), Q({_name(y)})]', alg.bracket(k, q), kq_rhs(alg, operand, y), (k, q))
        return checks

    def value(self, alg: DdcaAlgebra):
        self.moves.clear()
        frame = alg.frame
        rs = frame.rs
        theta = rs.highest_root
        low = neg(theta)
        x_plus, x_minus = frame.X(theta), frame.X(low)
        simple = [r for alpha in rs.simple_roots for r in (alpha, neg(alpha))]
        roots = rs.roots

        seeds = [(low, r) for r in simple]
        top = [(theta, r) for r in simple]
        steps = [
            expand('seeds', self.identities('seeds', seeds)),
            solve('seeds', solves=self.atoms(seeds), anchor='seeds'),
            weyl('top', 'seeds', longest_word(rs), anchor='top'),
            solve('top', solves=self.atoms(top), anchor='top'),
            compare(self.checks(top), anchor='top'),
        ]

        lowered = [(theta, neg(alpha)) for alpha in rs.simple_roots]
        steps += self.moved('theta-cartan', [(pair, x_minus) for pair in lowered], 'right')
        steps += [
            solve('theta-cartan', anchor='theta-cartan'),
            compare(self.checks([(('H', theta), y) for _, y in lowered]), anchor='theta-cartan'),
        ]

        rest = tuple(a - b for a, b in zip(theta, rs.simple_roots[rs.special_node - 1]))
        steps += self.moved('theta-minus-alpha', [(pair, x_plus) for pair in seeds], 'left')
        steps += [
            solve('theta-minus-alpha', solves=self.atoms([(low, rest)]), anchor='theta-minus-alpha'),
            compare(self.checks([(low, rest)]), anchor='theta-minus-alpha'),
        ]

        for height, moves in _descent(rs, rest):
            stage = f'descent{height}'
            targets = [(low, beta) for beta, _, _ in moves]
            steps += self.moved(stage, [((low, source), frame.X(neg(rs.simple_roots[j - 1])))
                                        for _, source, j in moves], 'left')
            steps += [
                solve(stage, solves=self.atoms(targets), anchor='descent'),
                compare(self.checks(targets), anchor='descent'),
            ]

        steps.append(expand('below', self.identities('below', [(low, beta) for beta in roots if beta != theta])))
        for beta1 in roots:
            if beta1 == low or not _is_long(rs, beta1):
                continue
            stage = f'long{root_label(beta1)}'
            pairs = [(beta1, beta2) for beta2 in roots if beta2 != neg(beta1)]
            steps += [
                weyl(stage, 'below', word_to(rs, low, beta1), anchor='long'),
                solve(stage, solves=self.atoms(pairs), anchor='long'),
                compare(self.checks(pairs), anchor='long'),
            ]

        others = [beta for beta in roots if beta not in (theta, low)]
        cartan_theta = [(('H', theta), beta) for beta in others]
        steps += self.moved('cartan-theta-up', [((low, b), x_plus) for b in others if rs.is_positive(b)], 'left')
        steps += self.moved('cartan-theta-down', [((theta, b), x_minus) for b in others if not rs.is_positive(b)],
                            'right')
        steps += [
            solve('cartan-theta-up', 'cartan-theta-down', anchor='cartan-theta'),
            compare(self.checks(cartan_theta), anchor='cartan-theta'),
            expand('cartan-theta', self.identities('cartan-theta', cartan_theta)),
        ]

        for gamma in rs.positive_roots:
            if gamma == theta or not _is_long(rs, gamma):
                continue
            stage = f'cartan{root_label(gamma)}'
            steps += [
                weyl(stage, 'cartan-theta', word_to(rs, theta, gamma), anchor='cartan-long'),
                solve(stage, anchor='cartan-long'),
                compare(self.checks([(('H', gamma), beta) for beta in roots if beta not in (gamma, neg(gamma))]),
                        anchor='cartan-long'),
            ]

        short, moves = [], []
        for eta in roots:
            if _is_long(rs, eta):
                continue
            for beta in roots:
                if beta == neg(eta):
                    continue
                short.append((eta, beta))
                total = tuple(a + b for a, b in zip(beta, eta))
                for gamma in rs.positive_roots:
                    if _is_long(rs, gamma) and rs.pairing(gamma, eta) and \
                            gamma not in (beta, neg(beta), total, neg(total)):
                        moves.append(((('H', gamma), beta), frame.X(eta)))
        if short:
            steps += self.moved('short', moves, 'right')
            steps += [
                solve('short', solves=self.atoms(short), anchor='short'),
                compare(self.checks(short), anchor='short'),
            ]

        pairs = [(r1, r2) for r1 in roots for r2 in roots if r1 != neg(r2)]
        return steps + [
            compare(self.checks(pairs)),
            register('kq-relation', family=kq_relation_family, statement=self.description),
        ]


class PresentationSuite(BaseSuite):
    name = 'presentation'
    anchor = 'the map φ is a homomorphism'
    mode = 'general'
    dynkin_types = ('B', 'C', 'D')
    min_rank = 3
    scripts = [KqCartan, KqCartanAuto, PhiRelations]


class KacMoodySuite(BaseSuite):
    name = 'kac-moody'
    anchor = 'the inverse map ψ'
    mode = 'kac-moody'
    dynkin_types = ('B', 'C', 'D')
    min_rank = 3
    scripts = [PsiRelations]
