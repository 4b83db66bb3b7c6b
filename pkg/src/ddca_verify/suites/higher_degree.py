# language=rst
"""Currents of higher degree and the centrality criterion for ``Z(s)``.

For every degree ``s`` from 2 to ``smax`` the suite replays, on one algebra:

``ps-definition-s``
    brackets the relation of degree ``s - 1`` with ``Q(h)``, solves for the brackets
    ``[K(x), y(u^s)]``, checks that ``[K(E_{n,n-1}), E_{n-1,1}(u^s)]`` minus its known terms is a
    lowest weight vector killed by the Serre operators, and defines ``P_s`` from it;
``higher-relation-s``
    checks the relation of degree ``s`` for every pair a closed form covers;
``w-relations-s``, ``z-lie-s``, ``z-commutes-s``
    ``Z(s)`` through ``W_ab(s)``, its brackets with ``sl_n`` and with ``U(sl_n[u])``;
``k-z-s``
    ``[K(X), Z(s)] = (16(β - λ/2)² - n²λ²)·C(s, 2)·X(u^{s-2})``;
``z-tilde-s``
    ``Z̃(s) = -auto(Z(s))``.

For every degree whose ``k-z-s`` ran, the multiple extracted from ``[K(H_34), Z(s)]`` is added to
the report together with its values at the zeros ``nλ = ±4(β - λ/2)``. Nothing is reported for a
skipped degree.
"""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..ddca.higher import (basis_operand, build_Z, commuting_atoms, contraction_constant, criterion_scalar,
                           definition_atom, degree_atoms, excluded_atom, extract_multiple, higher_rhs, known_atoms,
                           known_pairs, kz_cartan_rhs, ps_rest, specializations, w12_current, w_symbol, w_value,
                           z_closed_s)
from ..ddca.kb import Family, Provenance
from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, ScriptResult, compare, expand, register, run_script, saturate, solve
from ..ddca.seeds import SHIFT, sum_S, z_element, z_total
from ..ddca.symbols import K, Q, Symbol, SymbolClass, atom, cur
from ..ddca.symmetries import apply_symmetry
from ..helpers import instantiate
from ..liealg import ChevalleyFrame
from ..scalarring import LAM, ParamScalar, render, render_rational, specialize
from .base import BaseScript, BaseSuite, SuiteConfig, SuiteReport
from .cartan import KqCartan, KqCartanAuto
from .twoparam import W12, WRelations, ZCentral, ZLie, ordered_pairs, simple_generators

__all__ = ['HigherDegreeSuite', 'WCurrents', 'PsDefinition', 'HigherRelation', 'WRelationsS', 'ZLieS',
           'ZCommutes', 'KZ', 'ZTilde', 'base_scripts', 'degree_scripts', 'ps_prerequisites', 'define_Ps',
           'extracted_criterion', 'cartan_current_atoms']

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _split_table(frame: ChevalleyFrame) -> Dict[int, Tuple[int, int, object]]:
    """For every basis position ``j`` one pair with ``[basis[a], basis[b]] = c·basis[j]``."""
    table = {}
    for a in range(frame.dim):
        for b in range(frame.dim):
            coords = frame.bracket_coords(a, b)
            if len(coords) == 1 and coords[0][0] not in table:
                j, c = coords[0]
                table[j] = (a, b, c)
    return table


@lru_cache(maxsize=None)
def _known(frame: ChevalleyFrame) -> FrozenSet[Tuple[int, int]]:
    return frozenset(known_pairs(frame))


def cartan_current_atoms(alg: DdcaAlgebra, s: int) -> List[Symbol]:
    """The atoms ``[K(H_i), H_j(u^s)]``."""
    cartan = alg.frame.cartan_index
    return [atom(K(i), cur('u', j, s)) for i in cartan for j in cartan]


def _w_current_rule(alg: DdcaAlgebra, x: Symbol, y: Symbol):
    if x != W12 or y.degree < 2:
        return None
    a, b, c = _split_table(alg.frame)[y.index]
    split = alg.held(alg.Q(a), alg.cur('u', b, y.degree - 1))
    return alg.bracket(alg.symbol(W12), split) / c


def w_current_family(alg: DdcaAlgebra) -> Family:
    return Family('w-currents', (SymbolClass.W, 0, SymbolClass.CUR_U, None), 5, _w_current_rule)


class WCurrents(BaseScript):
    # language=rst prefix="    "
    """Brackets of ``W_12`` with currents of every degree.

    ``y(u^s)`` is ``[Q(a), b(u^{s-1})]/c`` for a suitable pair of basis elements, and
    ``[W_12, Q(X)]`` is known once ``z-central`` ran, so the registered family unfolds every
    ``[W_12, y(u^s)]`` by the Jacobi identity. The splits and the degree one brackets are checked
    before the family is registered.
    """
    name = 'w-currents'
    anchor = 'W_12 against the currents'
    description = '[W_12, x(u^s)] = (β - λ/2)[E_11 + E_22, x](u^s)'
    modes = ('two-parameter',)
    requires = ('z-central',)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        w = alg.symbol(W12)
        for s in range(1, min(alg.smax, 3) + 1):
            for index in range(frame.dim):
                lhs = alg.bracket(w, alg.cur('u', index, s))
                yield f'[W(12), {frame.label(index)}(u^{s})]', lhs, w12_current(alg, frame.basis[index], s)

    def split_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        """``y(u^s) = [Q(a), b(u^{s-1})]/c`` for the split the family uses, and ``[W_12, Q(X)]`` before it."""
        frame = alg.frame
        w = alg.symbol(W12)
        for index in range(frame.dim):
            rhs = w12_current(alg, frame.basis[index], 1)
            yield f'[W(12), Q({frame.label(index)})]', alg.bracket(w, alg.Q(index)), rhs
        for s in range(2, alg.smax + 1):
            for index, (a, b, c) in sorted(_split_table(frame).items()):
                split = alg.bracket(alg.Q(a), alg.cur('u', b, s - 1)) / c
                yield f'{frame.label(index)}(u^{s}) split', split, alg.cur('u', index, s)

    def value(self, alg: DdcaAlgebra):
        return [
            compare(self.split_checks),
            register('w-currents', family=w_current_family,
                     statement='[W_12, y(u^s)] through y(u^s) = [Q(a), b(u^{s-1})]/c'),
            compare(self.checks),
        ]


class DegreeScript(BaseScript):
    """A script written for one current degree ``s``; the degree is part of its name."""
    base_name = ''
    modes = ('two-parameter',)

    def __init__(self, s: int):
        if s < 2:
            raise ValueError(f'Higher degree scripts start at s = 2, got {s}.')
        self.s = s
        self.name = f'{self.base_name}-{s}'


class PsDefinition(DegreeScript):
    # language=rst prefix="    "
    """Existence of ``P_s``.

    The rows are ``[Q(h), ⟦K(x), y(u^{s-1})⟧ - [K(x), y(u^{s-1})]]`` for Cartan ``h`` and every
    pair of the previous degree with a closed form; they fix the brackets of commuting root
    vectors with four distinct indices. Two rounds of :meth:`lowered_rows` carry these to the
    commuting pairs sharing an index and then to ``[K(x), x(u^s)]``.

    ``D = [K(E_{n,n-1}), E_{n-1,1}(u^s)]`` minus its known terms is then checked to be a lowest
    weight vector with ``ad(E_{i,i+1})^{1+(θ,α_i)} D = 0``, so ``D`` generates a copy of ``sl_n``
    and ``P_s`` is defined by ``P_s(E_n1) = D``. Saturating that definition under ``sl_n`` fixes
    every bracket a closed form covers.
    """
    base_name = 'ps-definition'
    anchor = 'existence of P_s'
    description = 'P_s(E_n1) = [K(E_{n,n-1}), E_{n-1,1}(u^s)] - ... generates a copy of sl_n'
    slow = True

    def __init__(self, s: int):
        super().__init__(s)
        previous = 'z-central' if s == 2 else f'higher-relation-{s - 1}'
        self.requires = ('w-currents', previous)

    def q_rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for i, j in known_pairs(frame):
            k, y = alg.K(i), alg.cur('u', j, self.s - 1)
            zero = alg.held(k, y) - alg.bracket(k, y)
            for h in frame.cartan_index:
                yield f'[Q({frame.label(h)}), rel({frame.label(i)},{frame.label(j)})]', alg.bracket(alg.Q(h), zero)

    def lowered_rows(self, alg: DdcaAlgebra) -> Iterator:
        # language=rst prefix="        "
        """``[⟦K(x), y'(u^s)⟧ - [K(x), y'(u^s)], g]`` for every commuting bracket still unsolved.

        ``g`` commutes with ``x`` and ``[y', g]`` is a multiple of ``y``, where ``[K(x), y'(u^s)]`` is
        already solved; the row then fixes ``[K(x), y(u^s)]``. Pairs with four distinct indices
        come out of the ``Q(h)`` rows, the others follow in two rounds.
        """
        frame = alg.frame
        s = self.s
        subs = alg.kb.substitutions
        solved = [sym for sym in commuting_atoms(alg, s) if sym in subs]
        for sym in commuting_atoms(alg, s):
            if sym in subs:
                continue
            i, j = sym.args[0].index, sym.args[1].index
            row = self._lowering(alg, i, j, solved)
            if row is not None:
                yield f'lowered({frame.label(i)},{frame.label(j)})', row

    def _lowering(self, alg: DdcaAlgebra, i: int, j: int, solved):
        frame = alg.frame
        for known in solved:
            k, y = known.args
            if k.index != i:
                continue
            for g in range(frame.dim):
                if frame.bracket_coords(i, g):
                    continue
                coords = frame.bracket_coords(y.index, g)
                if len(coords) == 1 and coords[0][0] == j:
                    identity = alg.held(alg.K(i), alg.symbol(y)) - alg.symbol(known)
                    return alg.bracket(identity, alg.lie(g))
        return None

    def commuting_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for sym in commuting_atoms(alg, self.s):
            i, j = sym.args[0].index, sym.args[1].index
            rhs = higher_rhs(alg, basis_operand(frame, i), basis_operand(frame, j), self.s)
            yield f'[K({frame.label(i)}), {frame.label(j)}(u^{self.s})]', alg.symbol(sym), rhs

    def candidate(self, alg: DdcaAlgebra):
        return alg.symbol(definition_atom(alg, self.s)) - ps_rest(alg, self.s)

    def lowest_weight_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        d = self.candidate(alg)
        for e in range(2, frame.size + 1):
            for f in range(1, e):
                yield f'[E({e}{f}), D]', alg.bracket(alg.lie(frame.E(e, f)), d), alg.zero()

    def serre_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        d = self.candidate(alg)
        for i, alpha in enumerate(rs.simple_roots, start=1):
            power = 1 + int(rs.pairing(rs.highest_root, alpha))
            e = d
            for _ in range(power):
                e = alg.bracket(alg.lie(frame.E(i, i + 1)), e)
            yield f'ad(E({i}{i + 1}))^{power} D', e, alg.zero()

    def definition(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        n = frame.size
        rhs = higher_rhs(alg, frame.rs.eps(n, n - 1), frame.rs.eps(n - 1, 1), self.s)
        yield f'P{self.s}(E({n}1))', alg.symbol(definition_atom(alg, self.s)) - rhs

    def value(self, alg: DdcaAlgebra):
        s = self.s
        return [
            expand('q-rows', self.q_rows),
            solve('q-rows', prefer_last=lambda a: degree_atoms(a, s)),
            expand('shared-index', self.lowered_rows),
            solve('shared-index', prefer_last=lambda a: degree_atoms(a, s)),
            expand('same-unit', self.lowered_rows),
            solve('same-unit', prefer_last=lambda a: degree_atoms(a, s), solves=lambda a: commuting_atoms(a, s)),
            compare(self.commuting_checks),
            compare(self.lowest_weight_checks),
            compare(self.serre_checks),
            register(f'ps-module-{s}', ps_degree=s, provenance=Provenance.DEFINING,
                     statement=f'P_{s}(E_n1) = D and X ↦ P_{s}(X) is the map of sl_n-modules sending E_n1 to D'),
            expand('definition', self.definition),
            saturate('definition', generators=simple_generators, prefer_last=lambda a: degree_atoms(a, s),
                     solves=lambda a: known_atoms(a, s)),
        ]


def _higher_rule(s: int):
    def rule(alg: DdcaAlgebra, x: Symbol, y: Symbol):
        frame = alg.frame
        if x.degree != 1 or y.degree != s or (x.index, y.index) not in _known(frame):
            return None
        return higher_rhs(alg, basis_operand(frame, x.index), basis_operand(frame, y.index), s)
    return rule


def higher_family(s: int) -> Family:
    return Family(f'kq-degree-{s}', (SymbolClass.CUR_V, 1, SymbolClass.CUR_U, s), 10, _higher_rule(s))


class HigherRelation(DegreeScript):
    base_name = 'higher-relation'
    anchor = 'the relation of degree s'
    description = '[K(x), y(u^s)] = P_s([x, y]) + λ/4 Σ S(...) - (β₁, β₂)λ/4 Σ S(...) + s(β - λ/2)(xy + yx)₀(u^{s-1})'

    def __init__(self, s: int):
        super().__init__(s)
        self.requires = (f'ps-definition-{s}',)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        s = self.s
        for i, j in known_pairs(frame):
            k, y = alg.K(i), alg.cur('u', j, s)
            rhs = higher_rhs(alg, basis_operand(frame, i), basis_operand(frame, j), s)
            yield Check(f'[K({frame.label(i)}), {frame.label(j)}(u^{s})]', alg.bracket(k, y), rhs, (k, y))

    def compact_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        """The bracket ``[K(E_{n-1,1}), E_{n,n-1}(u^s)]`` written out by hand."""
        frame = alg.frame
        E = frame.E
        n = frame.size
        s = self.s
        x, y = E(n - 1, 1), E(n, n - 1)
        rhs = -alg.Ps(E(n, 1), s) + alg.cur('u', E(n, 1), s - 1) * (SHIFT * s) + sum_S(alg, x, y, s) * (LAM / 4)
        for p in range(s):
            rhs = rhs + alg.S(alg.cur('u', x, p), alg.cur('u', y, s - 1 - p)) * (LAM / 4)
        yield f'[K(E({n - 1}1)), E({n}{n - 1})(u^{s})]', alg.bracket(alg.K(x), alg.cur('u', y, s)), rhs

    def value(self, alg: DdcaAlgebra):
        s = self.s
        return [
            compare(self.checks),
            compare(self.compact_checks),
            register(f'kq-degree-{s}', family=lambda a: higher_family(s),
                     statement=f'[K(x), y(u^{s})] for every pair except (E_ab, E_ba) and pairs of Cartan elements'),
        ]


class WRelationsS(DegreeScript):
    # language=rst prefix="    "
    """``Z_{ab,cd}(s)`` through ``W_ab(s)``.

    ``W_ab(s)`` is defined from the excluded bracket ``[K(E_ab), E_ba(u^s)]``. The rows are the
    relation of degree ``s`` for a Cartan element and a root vector, bracketed with the opposite
    root vector; they solve the brackets of Cartan elements and every excluded bracket except
    ``[K(E_12), E_21(u^s)]``.
    """
    base_name = 'w-relations'
    anchor = 'Z(s) and W(s)'
    description = 'Z_{ab,cd}(s) = (ε_ab, ε_cd) W_ab(s) + s(β - λ/2)(ε_a + ε_b, ε_cd) H_ab(u^{s-1})'

    def __init__(self, s: int):
        super().__init__(s)
        self.requires = (f'higher-relation-{s}',)

    def definitions(self, alg: DdcaAlgebra):
        return {w_symbol(a, b, self.s): w_value(alg, a, b, self.s) for a, b in ordered_pairs(alg.frame.size)}

    def rows(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for i in frame.cartan_index:
            for root in frame.rs.roots:
                lowered = frame.root_index[tuple(-c for c in root)]
                k, y = alg.K(i), alg.cur('u', lowered, self.s)
                zero = alg.held(k, y) - alg.bracket(k, y)
                label = f'[{frame.label(frame.root_index[root])}, rel({frame.label(i)},{frame.label(lowered)})]'
                yield label, alg.bracket(alg.lie(frame.X(root)), zero)

    def unknowns(self, alg: DdcaAlgebra) -> List[Symbol]:
        """Brackets of Cartan elements, then the excluded brackets with ``(E_12, E_21)`` last."""
        s = self.s
        excluded = [excluded_atom(alg, a, b, s) for a, b in ordered_pairs(alg.frame.size) if (a, b) != (1, 2)]
        return cartan_current_atoms(alg, s) + excluded + [excluded_atom(alg, 1, 2, s)]

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        s = self.s
        for a, b in ordered_pairs(n, strict=True):
            for c, d in ordered_pairs(n, strict=True):
                z = z_element(alg, a, b, c, d, s=s)
                label = f'Z({a}{b},{c}{d})({s})'
                yield f'{label} through W({a}{b})', z, z_closed_s(alg, a, b, c, d, s)
                yield f'{label} through W({c}{d})', z, z_closed_s(alg, a, b, c, d, s, via_second=True)
        for a, b in ordered_pairs(n):
            w_ab = alg.symbol(w_symbol(a, b, s))
            yield f'Z({a}{b})({s}) = 2W({a}{b})({s})', z_element(alg, a, b, s=s), w_ab * 2
            for c, d in ordered_pairs(n):
                shift = alg.cur('u', frame.H_ab(a, c) + frame.H_ab(b, d), s - 1) * (SHIFT * s)
                yield f'W({a}{b})({s}) - W({c}{d})({s})', w_ab - alg.symbol(w_symbol(c, d, s)), shift
                difference = z_element(alg, a, b, s=s) - z_element(alg, c, d, s=s)
                yield f'Z({a}{b})({s}) - Z({c}{d})({s})', difference, shift * 2

    def value(self, alg: DdcaAlgebra):
        s = self.s
        return [
            register(f'w-definition-{s}', substitutions=self.definitions, provenance=Provenance.DEFINING,
                     statement=f'W_ab({s}) = [K(E_ab), E_ba(u^{s})] - P_{s}(H_ab) - λ/4 Σ - λ/2 Σ S(E_ab, E_ba)'),
            expand('relations', self.rows),
            solve('relations', prefer_last=self.unknowns, solves=lambda a: self.unknowns(a)[:-1]),
            compare(self.checks),
        ]


def ze_value_s(alg: DdcaAlgebra, a: int, b: int, c: int, d: int, s: int):
    """``2s(β - λ/2)(ε_ab, ε_cd)(ε_ab, ε_c + ε_d) E_cd(u^{s-1})``, the bracket ``[Z_ab(s), E_cd]``."""
    rs = alg.frame.rs
    coefficient = rs.pairing(rs.eps(a, b), rs.eps(c, d)) * rs.pairing(rs.eps(a, b), rs.epsilon(c, d))
    return alg.cur('u', alg.frame.E(c, d), s - 1) * (SHIFT * (2 * s * coefficient))


class ZLieS(DegreeScript):
    base_name = 'z-lie'
    anchor = 'Z(s) against sl_n'
    description = '[Z_ab(s), E_cd] = 2s(β - λ/2)(ε_ab, ε_cd)(ε_ab, ε_c + ε_d) E_cd(u^{s-1}) and [Z(s), X] = 0'

    def __init__(self, s: int):
        super().__init__(s)
        self.requires = (f'w-relations-{s}',)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        s = self.s
        for a, b in ordered_pairs(n, strict=True):
            z = z_element(alg, a, b, hold=True, s=s)
            for c, d in ordered_pairs(n):
                e = alg.lie(frame.E(c, d))
                yield Check(f'[Z({a}{b})({s}), E({c}{d})]', alg.bracket(z, e), ze_value_s(alg, a, b, c, d, s), (z, e))
        z = z_total(alg, hold=True, s=s)
        for e in simple_generators(alg):
            yield f'[Z({s}), {frame.render(e.coords())}]', alg.bracket(z, alg.lie(e)), alg.zero()
        for i in range(1, frame.rs.rank + 1):
            yield f'[Z({s}), H{i}]', alg.bracket(z, alg.lie(frame.H(i))), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


def _nested_atoms(side: str, s: int):
    def atoms(alg: DdcaAlgebra) -> List[Symbol]:
        excluded = excluded_atom(alg, 1, 2, s)
        if side == 'Q':
            return [atom(excluded, Q(i)) for i in range(alg.frame.dim)]
        return [atom(K(i), excluded) for i in range(alg.frame.dim)]
    return atoms


class ZCommutes(DegreeScript):
    # language=rst prefix="    "
    """``Z(s)`` commutes with ``U(sl_n[u])``.

    ``[Q(H_cd), Z_ab(s)] = 0`` for distinct indices, computed on the held form of ``Z_ab(s)``.
    Comparing it with the solved form gives ``[Q(H_34), [K(E_12), E_21(u^s)]]``; bracketing
    with ``sl_n`` spreads this to every ``[Q(X), [K(E_12), E_21(u^s)]]``.
    """
    base_name = 'z-commutes'
    anchor = 'Z(s) commutes with U(sl_n[u])'
    description = '[Z(s), X] = [Z(s), Q(X)] = 0 for every X in sl_n'

    def __init__(self, s: int):
        super().__init__(s)
        self.requires = (f'z-lie-{s}',)

    def held_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        s = self.s
        for a, b in ordered_pairs(n, strict=True):
            z = z_element(alg, a, b, hold=True, s=s)
            for c, d in ordered_pairs(n, strict=True):
                if {a, b} & {c, d}:
                    continue
                yield f'[Q(H{c}{d}), Z({a}{b})({s})]', alg.bracket(alg.Q(frame.H_ab(c, d)), z), alg.zero()

    def seeds(self, alg: DdcaAlgebra) -> Iterator:
        s = self.s
        z = z_element(alg, 1, 2, s=s) - z_element(alg, 1, 2, hold=True, s=s)
        yield f'[Q(H34), Z(12)({s}) - ⟦Z(12)({s})⟧]', alg.bracket(alg.Q(alg.frame.H_ab(3, 4)), z)

    def centrality_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        z = z_total(alg, s=self.s)
        for index in range(frame.dim):
            label = frame.label(index)
            yield f'[Z({self.s}), {label}]', alg.bracket(z, alg.lie(index)), alg.zero()
            yield Check(f'[Z({self.s}), Q({label})]', alg.bracket(z, alg.Q(index)), alg.zero(), (z, alg.Q(index)))

    def value(self, alg: DdcaAlgebra):
        return [
            compare(self.held_checks),
            expand('rows', self.seeds),
            saturate('rows', generators=simple_generators, solves=_nested_atoms('Q', self.s)),
            compare(self.centrality_checks),
        ]


class KZ(DegreeScript):
    # language=rst prefix="    "
    """``[K(X), Z(s)]`` and the centrality criterion.

    ``[K(H_cd), Z_ab(s)]`` for distinct indices has a closed form with a ``λ²`` term and a
    ``λ(β - λ/2)`` term; summing over ``Z(s) = Σ_a Z_{a,a+1}(s)`` leaves
    ``(16(β - λ/2)² - n²λ²)·C(s, 2)·X(u^{s-2})``.
    """
    base_name = 'k-z'
    anchor = 'K against Z(s)'
    description = '[K(X), Z(s)] = (16(β - λ/2)² - n²λ²)·C(s, 2)·X(u^{s-2})'
    slow = True

    def __init__(self, s: int):
        super().__init__(s)
        self.requires = (f'z-commutes-{s}',)

    def seeds(self, alg: DdcaAlgebra) -> Iterator:
        s = self.s
        z = z_element(alg, 1, 2, s=s) - z_element(alg, 1, 2, hold=True, s=s)
        yield f'[K(H34), Z(12)({s}) - ⟦Z(12)({s})⟧]', alg.bracket(alg.K(alg.frame.H_ab(3, 4)), z)

    def kz_cartan_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        n = frame.size
        s = self.s
        for a, b in ordered_pairs(n, strict=True):
            z = z_element(alg, a, b, hold=True, s=s)
            for c, d in ordered_pairs(n, strict=True):
                if {a, b} & {c, d}:
                    continue
                k = alg.K(frame.H_ab(c, d))
                rhs = kz_cartan_rhs(alg, a, b, c, d, s)
                yield Check(f'[K(H{c}{d}), Z({a}{b})({s})]', alg.bracket(k, z), rhs, (k, z))

    def criterion_checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        s = self.s
        scalar = criterion_scalar(frame.size, s)
        z = z_total(alg, s=s)
        for index in range(frame.dim):
            lhs = alg.bracket(alg.K(index), z)
            yield f'[K({frame.label(index)}), Z({s})]', lhs, alg.cur('u', index, s - 2) * scalar

    def value(self, alg: DdcaAlgebra):
        return [
            expand('rows', self.seeds),
            saturate('rows', generators=simple_generators, solves=_nested_atoms('K', self.s)),
            compare(self.kz_cartan_checks),
            compare(self.criterion_checks),
        ]


class ZTilde(DegreeScript):
    base_name = 'z-tilde'
    anchor = 'Z(s) and its mirror'
    description = 'Z̃(s) = -auto(Z(s)), so the two families of central candidates are exchanged'

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        s = self.s
        z = build_Z(alg, s, 'u')
        z_tilde = build_Z(alg, s, 'v')
        yield f'Z̃({s}) = -auto(Z({s}))', z_tilde, -apply_symmetry(alg, z, 'auto')
        yield f'auto(Z̃({s})) = (-1)^{s} Z({s})', apply_symmetry(alg, z_tilde, 'auto'), z * (-1) ** s

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks, release=False)]


BASE = [KqCartan, KqCartanAuto, WRelations, ZLie, ZCentral, WCurrents]


def extracted_criterion(alg: DdcaAlgebra, s: int) -> Optional[ParamScalar]:
    """The multiple ``c`` with ``[K(H_34), Z(s)] = c·H_34(u^{s-2})``, or ``None`` when the bracket is not one."""
    h = alg.frame.H_ab(3, 4)
    return extract_multiple(alg.bracket(alg.K(h), z_total(alg, s=s)), alg.cur('u', h, s - 2))


def base_scripts() -> List[BaseScript]:
    return instantiate(BASE)


def degree_scripts(s: int) -> List[DegreeScript]:
    return [script(s) for script in (PsDefinition, HigherRelation, WRelationsS, ZLieS, ZCommutes, KZ, ZTilde)]


def ps_prerequisites(s: int) -> List[BaseScript]:
    """Every script the relation of degree ``s`` rests on, in replay order."""
    scripts = base_scripts()
    for t in range(2, s + 1):
        scripts += [PsDefinition(t), HigherRelation(t)]
    return scripts


def define_Ps(alg: DdcaAlgebra, s: int, confluence: int = 0):
    # language=rst prefix="    "
    """Replay everything the relation of degree ``s`` rests on, then the relation itself.

    Scripts whose identity is already registered are not replayed. Raises
    :class:`~ddca_verify.exceptions.VerificationFailed` at the first comparison that does not
    vanish.
    """
    scripts = ps_prerequisites(s)
    order = [script.name for script in scripts]
    for script in scripts:
        if alg.kb.has(script.name):
            continue
        result = run_script(script(alg), alg, order, confluence)
        if not result.passed:
            result.raise_()
    logger.info('P_%d defined on %s', s, alg.frame.rs.label)


class HigherDegreeSuite(BaseSuite):
    name = 'higher-degree'
    anchor = 'higher degree currents and the center'
    mode = 'two-parameter'
    dynkin_types = ('A',)
    min_rank = 3
    scripts = BASE

    def script_list(self, config: SuiteConfig) -> List[BaseScript]:
        scripts = base_scripts()
        for s in range(2, config.smax + 1):
            scripts += degree_scripts(s)
        return scripts

    def extras(self, alg: DdcaAlgebra, config: SuiteConfig, report: SuiteReport):
        n = config.n
        report.values['contraction'] = render_rational(contraction_constant(alg.frame))
        points = specializations(n) + list(config.specializations)
        ran = {result.script for result in report.results if isinstance(result, ScriptResult) and result.passed}
        for s in range(2, config.smax + 1):
            if f'k-z-{s}' not in ran:
                continue
            value = extracted_criterion(alg, s)
            if value is None:
                continue
            report.values[f'criterion({s})'] = render(value)
            for lam0, beta0 in points:
                key = f'criterion({s}) at λ={render_rational(lam0)}, β={render_rational(beta0)}'
                report.values[key] = render_rational(specialize(value, lam0, beta0))
