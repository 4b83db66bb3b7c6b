# language=rst
"""Checks on the machinery every other suite relies on.

``identities``
    identities of ``U(g)`` the defining relations are built from: centrality of the Casimir
    element, the two forms of ``ω_i^±``, the closed form of ``ν_i``, the weight of ``ω₀⁺``, the
    identity expressing ``Σ_α S([X₁, X_α], [X_{-α}, X₂])`` through the Casimir tensor, the
    identity bracketing that sum with ``X_γ`` and its two current algebra forms, and for
    ``sl_n`` the commutators ``[ν_i, ν_j]``.
``engine``
    associativity and the Jacobi identity of the PBW arithmetic on random triples,
    ``ad``-derivation, agreement of the two swap orders of the rewriter, coherence of the
    automorphism ``K ↦ -Q, Q ↦ K`` with the defining relations and the degeneration at
    ``λ = β = 0``. The termination and grading counters of every rewrite and the number of
    comparisons recomputed along both swap orders are added to the report; a broken invariant
    aborts the run instead.

Random samples come from a seeded generator, so two runs of the same config replay the same
triples.
"""
import logging
from random import Random
from typing import Iterator, List, Tuple

from ..ddca import symbols
from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, ScriptResult, compare
from ..ddca.seeds import kq_rhs, neg
from ..ddca.symbols import Symbol
from ..ddca.symmetries import apply_symmetry
from ..rootsys import Vector
from ..uea import (UEAlgebra, UEElement, casimir, enveloping, m_identity_sides, mpq_sides, mu_sides, nu, omega,
                   omega0, sxbxa_sides)
from .base import BaseScript, BaseSuite, SuiteConfig, SuiteReport
from .p_brackets import NuCommutators

__all__ = ['IdentitySuite', 'EngineSuite', 'UgIdentities', 'MIdentities', 'PbwProperties', 'RewriterProperties',
           'SymmetryCoherence', 'Degeneration', 'SEED', 'random_word', 'random_letters']

logger = logging.getLogger(__name__)

SEED = 20240611


def random_word(rng: Random, U: UEAlgebra, length: int, budget: int = 0) -> UEElement:
    """A product of ``length`` basis letters whose current degrees add up to at most ``budget``."""
    word = U.one()
    for _ in range(length):
        s = rng.randint(0, budget) if U.current else 0
        budget -= s
        word = word * U.basis_element(rng.randrange(U.dim), s)
    return word


def random_letters(rng: Random, alg: DdcaAlgebra, side: str, length: int, budget: int) -> List[Symbol]:
    """Lie letters and currents of one side, with current degrees adding up to at most ``budget``."""
    letters = []
    for _ in range(length):
        s = rng.randint(0, min(budget, 2))
        budget -= s
        index = rng.randrange(alg.frame.dim)
        letters.append(symbols.cur(side, index, s) if s else symbols.lie(index))
    return letters


def _triple_label(kind: str, number: int) -> str:
    return f'{kind} #{number}'


class UgIdentities(BaseScript):
    name = 'ug-identities'
    anchor = 'identities in U(g)'
    description = '[Ω, x] = 0, both forms of ω_i^±, ν_i = [ω_i⁺, X_i⁻] and the weight of ω₀⁺'

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        U = enveloping(frame)
        omega_ = casimir(U)
        for index in range(frame.dim):
            yield Check(f'[Ω, {frame.label(index)}]', alg.lift(omega_.commutator(U.basis_element(index))), alg.zero())
        for i in range(1, rs.rank + 1):
            for sign in (1, -1):
                mark = '+' if sign > 0 else '-'
                yield f'ω{i}{mark}, both forms', alg.lift(omega(U, i, sign, 'w1')), alg.lift(omega(U, i, sign, 'w2'))
            yield f'ν{i} = [ω{i}+, X{i}-]', alg.lift(nu(U, i)), alg.lift(nu(U, i, closed=True))
        if rs.special_node is not None:
            w0 = omega0(U)
            for j in range(1, rs.rank + 1):
                weight = -rs.pairing(rs.simple_roots[j - 1], rs.highest_root)
                yield f'[H{j}, ω0+]', alg.lift(U.H(j).commutator(w0)), alg.lift(w0 * weight)

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class MIdentities(BaseScript):
    # language=rst prefix="    "
    """The identity for ``[Σ_α S([X₁, X_α], [X_{-α}, X₂]), X_γ]`` and its relatives.

    Checked on a fixed triple of simple roots and ``samples`` random root triples, on the same
    triples with the first operand replaced by a Cartan element, on the current algebra forms
    with ``(p, q)`` and with a degree ``s`` sum, and through the Casimir tensor.
    """
    name = 'm-identities'
    anchor = 'the quadratic sums and the Casimir tensor'
    description = 'the bracket of the quadratic sum with X_γ, its current forms and the Casimir tensor form'
    samples = 12

    def triples(self, alg: DdcaAlgebra) -> List[Tuple[Vector, Vector, Vector]]:
        rs = alg.frame.rs
        rng = Random(SEED)
        roots = list(rs.roots)
        out = [tuple(rs.simple_roots[:3])]
        out += [tuple(rng.choice(roots) for _ in range(3)) for _ in range(self.samples)]
        return out

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        U = enveloping(frame)
        Uu = enveloping(frame, 'u', alg.smax)
        h = frame.H(1)
        for number, (b1, b2, g) in enumerate(self.triples(alg)):
            lhs, rhs = m_identity_sides(U, b1, b2, g)
            yield _triple_label('bracket with X_γ', number), alg.lift(lhs - rhs), alg.zero()
            lhs, rhs = m_identity_sides(U, h, b2, g)
            yield _triple_label('bracket with X_γ, H1 first', number), alg.lift(lhs - rhs), alg.zero()
            if number < 3:
                lhs, rhs = mpq_sides(Uu, b1, b2, g, 1, 0)
                yield _triple_label('currents (u, 1)', number), alg.lift(lhs - rhs), alg.zero()
                if alg.smax >= 3:
                    lhs, rhs = mu_sides(Uu, b1, b2, g, 2)
                    yield _triple_label('degree 2 sum', number), alg.lift(lhs - rhs), alg.zero()
            lhs, rhs = sxbxa_sides(U, b1, b2)
            yield _triple_label('Casimir tensor', number), alg.lift(lhs - rhs), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class PbwProperties(BaseScript):
    # language=rst prefix="    "
    """Associativity, the Jacobi identity and ``ad``-derivation of PBW arithmetic.

    ``triples`` random triples of words in ``U(g)`` and, with a degree budget of ``smax``, in
    ``U(g[u])``.
    """
    name = 'pbw-properties'
    anchor = 'PBW arithmetic'
    description = '(ab)c = a(bc), the Jacobi identity and [x, ab] = [x, a]b + a[x, b]'
    triples = 200

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rng = Random(SEED)
        U = enveloping(frame)
        Uu = enveloping(frame, 'u', alg.smax)
        for number in range(self.triples):
            algebra = U if number % 2 else Uu
            a, b, c = (random_word(rng, algebra, rng.randint(1, 2), alg.smax // 3) for _ in range(3))
            yield _triple_label('associativity', number), alg.lift((a * b) * c - a * (b * c)), alg.zero()
            jacobi = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) + c.commutator(a.commutator(b))
            yield _triple_label('Jacobi', number), alg.lift(jacobi), alg.zero()
            x = algebra.basis_element(rng.randrange(frame.dim))
            derivation = x.commutator(a * b) - x.commutator(a) * b - a * x.commutator(b)
            yield _triple_label('ad-derivation', number), alg.lift(derivation), alg.zero()
            yield _triple_label('unit', number), alg.lift(algebra.one() * a - a), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class RewriterProperties(BaseScript):
    # language=rst prefix="    "
    """The rewriter on random words of one current side.

    Words in Lie letters and ``u``-currents (or ``v``-currents) only meet the homomorphism
    rules, so both swap orders, both association orders and the Jacobi identity of letters must
    agree exactly.
    """
    name = 'rewriter-properties'
    anchor = 'normal forms of words'
    description = 'leftmost and rightmost swap orders agree; products associate; letters satisfy Jacobi'
    words = 60

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        rng = Random(SEED + 1)
        budget = alg.smax // 2
        for number in range(self.words):
            side = 'u' if number % 2 else 'v'
            letters = random_letters(rng, alg, side, rng.randint(2, 4), budget)
            yield (_triple_label(f'swap orders ({side})', number), alg.product(letters, 'leftmost'),
                   alg.product(letters, 'rightmost'))
            a, b, c = (alg.symbol(letter) for letter in random_letters(rng, alg, side, 3, budget))
            yield _triple_label(f'associativity ({side})', number), (a * b) * c, a * (b * c)
            jacobi = alg.bracket(a, alg.bracket(b, c)) + alg.bracket(b, alg.bracket(c, a)) \
                + alg.bracket(c, alg.bracket(a, b))
            yield _triple_label(f'Jacobi ({side})', number), jacobi, alg.zero()
        frame = alg.frame
        for index in range(frame.dim):
            p = alg.P(index)
            x, y = (alg.lie(rng.randrange(frame.dim)) for _ in range(2))
            jacobi = alg.bracket(x, alg.bracket(y, p)) + alg.bracket(y, alg.bracket(p, x)) \
                + alg.bracket(p, alg.bracket(x, y))
            yield f'Jacobi for P({frame.label(index)})', jacobi, alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


def _root_pairs(alg: DdcaAlgebra) -> Iterator[Tuple[Vector, Vector]]:
    roots = alg.frame.rs.roots
    for r1 in roots:
        for r2 in roots:
            if r1 != neg(r2):
                yield r1, r2


class SymmetryCoherence(BaseScript):
    # language=rst prefix="    "
    """The automorphism ``K ↦ -Q, Q ↦ K, P ↦ -P`` maps the defining relation to itself.

    Its square is ``-1`` on ``K`` and ``Q``, the identity on ``sl_n`` and ``P``, and
    ``(-1)^s`` on currents of degree ``s``.
    """
    name = 'symmetry-coherence'
    anchor = 'the automorphism exchanging K and Q'
    description = 'auto([K(X), Q(Y)] - rhs) = 0 and the action of auto²'
    modes = ('general', 'two-parameter')

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for r1, r2 in _root_pairs(alg):
            i, j = frame.root_index[r1], frame.root_index[r2]
            a, b = apply_symmetry(alg, alg.K(i), 'auto'), apply_symmetry(alg, alg.Q(j), 'auto')
            yield Check(f'auto [K({frame.label(i)}), Q({frame.label(j)})]', alg.bracket(a, b),
                        apply_symmetry(alg, kq_rhs(alg, r1, r2), 'auto'), (a, b))
        for index in range(frame.dim):
            label = frame.label(index)
            for make, sign, name in ((alg.K, -1, 'K'), (alg.Q, -1, 'Q'), (alg.lie, 1, ''), (alg.P, 1, 'P')):
                e = make(index)
                twice = apply_symmetry(alg, apply_symmetry(alg, e, 'auto'), 'auto')
                yield f'auto² {name}({label})' if name else f'auto² {label}', twice, e * sign
            for s in range(2, alg.smax + 1):
                e = alg.cur('u', index, s)
                twice = apply_symmetry(alg, apply_symmetry(alg, e, 'auto'), 'auto')
                yield f'auto² {label}(u^{s})', twice, e * (-1) ** s

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class Degeneration(BaseScript):
    name = 'degeneration'
    anchor = 'the undeformed double current algebra'
    description = '[K(X_β₁), Q(X_β₂)] = P([X_β₁, X_β₂]) at λ = β = 0'
    modes = ('general', 'two-parameter')

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for r1, r2 in _root_pairs(alg):
            i, j = frame.root_index[r1], frame.root_index[r2]
            lhs = alg.bracket(alg.K(i), alg.Q(j)).specialize(0, 0)
            rhs = alg.P(frame.X(r1).bracket(frame.X(r2)))
            yield f'[K({frame.label(i)}), Q({frame.label(j)})] at 0', lhs, rhs

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class IdentitySuite(BaseSuite):
    name = 'identities'
    anchor = 'identities in U(g) behind the defining relations'
    scripts = [UgIdentities, MIdentities]

    def script_list(self, config: SuiteConfig) -> List[BaseScript]:
        scripts = super().script_list(config)
        if config.dynkin_type == 'A':
            scripts.append(NuCommutators())
        return scripts


class EngineSuite(BaseSuite):
    name = 'engine'
    anchor = 'the rewriting engine'
    scripts = [PbwProperties, RewriterProperties, SymmetryCoherence, Degeneration]

    def extras(self, alg: DdcaAlgebra, config: SuiteConfig, report: SuiteReport):
        stats = alg.stats
        report.values['termination checks'] = stats['weight_checks']
        report.values['grading checks'] = stats['grade_checks']
        report.values['swaps'] = stats['swaps']
        report.values['swap order checks'] = sum(result.confluence_checks for result in report.results
                                                  if isinstance(result, ScriptResult))
