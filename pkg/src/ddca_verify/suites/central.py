# language=rst
"""The central element ``C(β)`` of ``D(g)``.

``C(β₁, β₂) = [K(H_β₁), Q(H_β₂)] - λ/4 Σ_α S([H_β₁, X_α], [X_-α, H_β₂])`` and the opaque
symbols ``B(β)`` standing for the excluded brackets ``[K(X_β), Q(X_-β)]`` satisfy
``C(β₁, β₂) = (β₁, β₂) B(β₂) = C(β₂, β₁)``, and ``C(β)/(β, β)`` does not depend on ``β``. The
suite derives these relations, checks that ``C(β)`` commutes with ``g`` and with ``K(H_γ)``,
``Q(H_γ)`` for ``γ`` orthogonal to ``β``, and registers the resulting centrality of ``B``.
"""
from typing import Iterator, List

from ..ddca.kb import Family
from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, ad, compare, expand, register, solve
from ..ddca.seeds import c_element, excluded_symbol
from ..ddca.symbols import K, Q, SymbolClass, WKind, atom
from .base import BaseScript, BaseSuite
from .cartan import KqCartan, KqCartanAuto, KqOrthogonal, kq_identity, root_label

__all__ = ['CentralSuite', 'CbRelation', 'CLie', 'CCartan', 'BCentral', 'b_symbols', 'hh_atoms']


def b_symbols(alg: DdcaAlgebra):
    """Every ``B(β)``, with ``B(θ)`` last."""
    rs = alg.frame.rs
    theta = rs.highest_root
    return [excluded_symbol(alg, r) for r in rs.roots if r != theta] + [excluded_symbol(alg, theta)]


def hh_atoms(alg: DdcaAlgebra):
    cartan = alg.frame.cartan_index
    return [atom(K(i), Q(j)) for i in cartan for j in cartan]


class CbRelation(BaseScript):
    name = 'cb-relation'
    anchor = 'C against the excluded brackets'
    description = 'C(β₁, β₂) = (β₁, β₂) B(β₂) = C(β₂, β₁) and C(α)/(α, α) = C(β)/(β, β)'
    modes = ('general',)
    requires = ('kq-cartan',)

    def __init__(self):
        self.raising = {}

    def relations(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for i, alpha in enumerate(frame.rs.simple_roots, start=1):
            for root in frame.rs.roots:
                label = f'rel(H{i}){root_label(tuple(-c for c in root))}'
                self.raising[label] = root
                yield label, kq_identity(alg, frame.H_root(alpha), tuple(-c for c in root))

    def raise_(self, alg: DdcaAlgebra, label: str) -> Iterator:
        yield 'X_β₂', alg.frame.X(self.raising[label])

    def unknowns(self, alg: DdcaAlgebra):
        """The excluded symbols, the one kept free last."""
        return b_symbols(alg)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        rs = alg.frame.rs
        for r1 in rs.positive_roots:
            for r2 in rs.roots:
                label = f'{root_label(r1)},{root_label(r2)}'
                c12 = c_element(alg, r1, r2)
                yield f'C{label} = (β₁,β₂)B(β₂)', c12, alg.symbol(excluded_symbol(alg, r2)) * rs.pairing(r1, r2)
                yield f'C{label} = C(β₂,β₁)', c12, c_element(alg, r2, r1)
        theta = rs.highest_root
        reference = c_element(alg, theta, theta) / rs.pairing(theta, theta)
        for root in rs.roots:
            yield f'C{root_label(root)}/(β,β)', c_element(alg, root, root) / rs.pairing(root, root), reference

    def value(self, alg: DdcaAlgebra):
        return [
            expand('relations', self.relations),
            ad('rows', 'relations', self.raise_, side='left'),
            solve('rows', prefer_last=self.unknowns, solves=lambda a: hh_atoms(a) + self.unknowns(a)[:-1]),
            compare(self.checks),
        ]


class CLie(BaseScript):
    name = 'c-lie'
    anchor = 'C commutes with g'
    description = '[C(β), X] = 0 for every X in g'
    modes = ('general',)
    requires = ('kq-cartan', 'kq-cartan-auto')

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for root in frame.rs.positive_roots:
            c = c_element(alg, root, root, hold=True)
            for index in range(frame.dim):
                x = alg.lie(index)
                yield Check(f'[C{root_label(root)}, {frame.label(index)}]', alg.bracket(c, x), alg.zero(), (c, x))

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class CCartan(BaseScript):
    name = 'c-cartan'
    anchor = 'C commutes with K and Q of orthogonal Cartan elements'
    description = '[C(β), K(H_γ)] = 0 = [C(β), Q(H_γ)] for (β, γ) = 0'
    modes = ('general',)
    requires = ('cb-relation',)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        rs = frame.rs
        for beta in rs.positive_roots:
            c = c_element(alg, beta, beta, hold=True)
            for gamma in rs.positive_roots:
                if rs.pairing(beta, gamma):
                    continue
                h = frame.H_root(gamma)
                label = f'C{root_label(beta)}, H{root_label(gamma)}'
                yield f'[{label}] with K', alg.bracket(c, alg.K(h)), alg.zero()
                yield f'[{label}] with Q', alg.bracket(c, alg.Q(h)), alg.zero()

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


def _b_rule(alg: DdcaAlgebra, x, y):
    for sym in (x, y):
        if sym.cls == SymbolClass.W and sym.index == WKind.OPAQUE and sym.args[0] == 'B':
            return alg.zero()
    return None


def b_central_family(alg: DdcaAlgebra) -> List[Family]:
    keys = ((SymbolClass.CUR_V, None, SymbolClass.W, 0), (SymbolClass.P, None, SymbolClass.W, 0),
            (SymbolClass.W, 0, SymbolClass.W, 0), (SymbolClass.W, 0, SymbolClass.LIE, 0),
            (SymbolClass.W, 0, SymbolClass.CUR_U, None))
    return [Family(f'b-central{key}', key, 5, _b_rule) for key in keys]


class BCentral(BaseScript):
    # language=rst prefix="    "
    """Register that ``B(θ)`` is central.

    ``C(θ)`` commutes with ``g`` and with ``K(H_γ)``, ``Q(H_γ)`` for one ``γ ⊥ θ``; every ``K(X)``
    and ``Q(X)`` is reached from those by brackets with ``g``. The registered family encodes that
    closure step, which is an argument rather than a computation.
    """
    name = 'b-central'
    anchor = 'C is central'
    description = 'B(θ) commutes with every generator'
    modes = ('general',)
    requires = ('cb-relation', 'c-lie', 'c-cartan')

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        theta = frame.rs.highest_root
        c = c_element(alg, theta, theta)
        for index in range(frame.dim):
            label = frame.label(index)
            yield f'[C(θ), K({label})]', alg.bracket(c, alg.K(index)), alg.zero()
            yield f'[C(θ), Q({label})]', alg.bracket(c, alg.Q(index)), alg.zero()

    def value(self, alg: DdcaAlgebra):
        steps = [register(f'b-central:{i}', family=lambda a, i=i: b_central_family(a)[i],
                          statement='[B(θ), Y] = 0 for every generator Y')
                 for i in range(len(b_central_family(alg)))]
        return steps + [compare(self.checks)]


class CentralSuite(BaseSuite):
    name = 'central'
    anchor = 'a central element of D(g)'
    mode = 'general'
    dynkin_types = ('B', 'C', 'D')
    scripts = [KqCartan, KqCartanAuto, KqOrthogonal, CbRelation, CLie, CCartan, BCentral]
