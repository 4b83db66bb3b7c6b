# language=rst
"""Relations between ``K``/``Q`` of a Cartan element and of a root vector.

``kq-cartan`` brackets the ``K``/``Q`` relation with ``X_{-β₁}`` and checks that the resulting
rows vanish once ``[K(h), Q(X_β)]`` expands through ``h = [X_γ, X_-γ]``; ``kq-cartan-auto`` moves
the result through the automorphism exchanging the two currents; ``kq-orthogonal`` derives
``[K(H_β₁), Q(H_β₂)]`` for orthogonal roots. The same scripts serve the two-parameter algebra,
where the ``K``/``Q`` relation carries the extra ``(β - λ/2)`` term.
"""
from typing import Dict, Iterator, Tuple

from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import Check, ad, compare, expand, symmetry
from ..ddca.seeds import hh_closed, kq_rhs, neg, roots_spanning, sum_S
from ..rootsys import Vector
from ..scalarring import LAM
from .base import BaseScript, BaseSuite

__all__ = ['CartanSuite', 'KqCartan', 'KqCartanAuto', 'KqOrthogonal', 'root_label', 'kq_identity',
           'vanishing']


def root_label(root: Vector) -> str:
    return '(' + ','.join(str(c) for c in root) + ')'


def kq_identity(alg: DdcaAlgebra, x, y):
    """``⟦K(x), Q(y)⟧`` minus the right hand side of its relation: an element equal to zero."""
    frame = alg.frame
    lx = frame.X(x) if isinstance(x, tuple) else x
    ly = frame.X(y) if isinstance(y, tuple) else y
    return alg.held(alg.K(lx), alg.Q(ly)) - kq_rhs(alg, x, y)


def vanishing(source: str):
    """Checks that every element of the workspace list ``source`` normalizes to zero."""
    def rows(alg: DdcaAlgebra, ws) -> Iterator:
        for label, e in ws[source]:
            yield label, e, alg.zero()
    return rows


class KqCartan(BaseScript):
    name = 'kq-cartan'
    anchor = 'K of a Cartan element against Q of a root vector'
    description = '[K(h), Q(X_β)] = P([h, X_β]) + λ/4 Σ S([h, X_α], [X_-α, X_β])'
    modes = ('general', 'two-parameter')

    def __init__(self):
        self.pairs: Dict[str, Tuple[Vector, Vector]] = {}

    def relations(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for r2 in frame.rs.roots:
            for r1 in roots_spanning(frame, [r2]):
                label = f'rel{root_label(r1)}{root_label(r2)}'
                self.pairs[label] = (r1, r2)
                yield label, kq_identity(alg, r1, r2)

    def lower(self, alg: DdcaAlgebra, label: str) -> Iterator:
        r1, _ = self.pairs[label]
        yield 'X_-β₁', alg.frame.X(neg(r1))

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for i in range(1, frame.rs.rank + 1):
            h = frame.H(i)
            for root in frame.rs.roots:
                k, q = alg.K(h), alg.Q(frame.X(root))
                yield Check(f'[K(H{i}), Q(X{root_label(root)})]', alg.bracket(k, q), kq_rhs(alg, h, root), (k, q))

    def value(self, alg: DdcaAlgebra):
        return [
            expand('relations', self.relations),
            ad('rows', 'relations', self.lower),
            compare(vanishing('rows')),
            compare(self.checks),
        ]


class KqCartanAuto(BaseScript):
    name = 'kq-cartan-auto'
    anchor = 'K of a root vector against Q of a Cartan element'
    description = '[K(X_β), Q(h)] = P([X_β, h]) + λ/4 Σ S([X_β, X_α], [X_-α, h])'
    modes = ('general', 'two-parameter')
    requires = ('kq-cartan',)

    def relations(self, alg: DdcaAlgebra) -> Iterator:
        frame = alg.frame
        for i in range(1, frame.rs.rank + 1):
            for root in frame.rs.roots:
                yield f'rel(H{i}){root_label(root)}', kq_identity(alg, frame.H(i), root)

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for root in frame.rs.roots:
            for i in range(1, frame.rs.rank + 1):
                h = frame.H(i)
                k, q = alg.K(frame.X(root)), alg.Q(h)
                yield Check(f'[K(X{root_label(root)}), Q(H{i})]', alg.bracket(k, q), kq_rhs(alg, root, h), (k, q))

    def value(self, alg: DdcaAlgebra):
        return [
            expand('relations', self.relations),
            symmetry('images', 'relations', 'auto'),
            compare(vanishing('images')),
            compare(self.checks),
        ]


class KqOrthogonal(BaseScript):
    name = 'kq-orthogonal'
    anchor = 'K and Q of orthogonal Cartan elements'
    description = '[K(H_β₁), Q(H_β₂)] = λ/2 Σ_{α>0} (β₁, α)(β₂, α) S(X_α, X_-α) for (β₁, β₂) = 0'
    modes = ('general',)
    requires = ('kq-cartan',)

    def orthogonal(self, alg: DdcaAlgebra) -> Iterator[Tuple[Vector, Vector]]:
        rs = alg.frame.rs
        for r1 in rs.positive_roots:
            for r2 in rs.positive_roots:
                if r1 != r2 and not rs.pairing(r1, r2):
                    yield r1, r2

    def checks(self, alg: DdcaAlgebra, ws) -> Iterator:
        frame = alg.frame
        for r1, r2 in self.orthogonal(alg):
            h1, h2 = frame.H_root(r1), frame.H_root(r2)
            label = f'{root_label(r1)}⊥{root_label(r2)}'
            lowered = alg.bracket(kq_identity(alg, h1, r2), alg.lie(frame.X(neg(r2))))
            yield f'[rel(H, X), X_-β₂] {label}', lowered, alg.bracket(alg.K(h1), alg.Q(h2)) - hh_closed(alg, r1, r2)
            yield f'closed form {label}', hh_closed(alg, r1, r2), sum_S(alg, h1, h2) * (LAM / 4)

    def value(self, alg: DdcaAlgebra):
        return [compare(self.checks)]


class CartanSuite(BaseSuite):
    name = 'cartan'
    anchor = 'relations with one or two Cartan arguments'
    mode = 'general'
    dynkin_types = ('B', 'C', 'D')
    scripts = [KqCartan, KqCartanAuto, KqOrthogonal]
