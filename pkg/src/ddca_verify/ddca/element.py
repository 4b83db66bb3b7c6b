"""Elements of the deformed double current algebra as normal-ordered words with ℚ[λ, β] coefficients."""
from typing import Dict, Iterable, Set

from sympy import QQ

from ..scalarring import RING, ZERO, ParamScalar, is_constant, render, render_rational, scalar, specialize
from ..uea import _accumulate
from .symbols import Symbol, Word, is_unknown, kind, render_word, word_grade, WKind

__all__ = ['DdcaElement']


class DdcaElement:
    # language=rst prefix="    "
    """Linear combination of normal words.

    ``generation`` records the knowledge base generation the words were normalized against;
    :meth:`DdcaAlgebra.current <ddca_verify.ddca.rewriting.DdcaAlgebra.current>` re-normalizes
    stale elements before they are combined with fresh ones.
    """
    __slots__ = ('algebra', 'terms', 'generation')

    def __init__(self, algebra, terms: Dict[Word, ParamScalar], generation: int = None):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}
        self.generation = algebra.kb.generation if generation is None else generation

    def _check(self, other: 'DdcaElement'):
        if not isinstance(other, DdcaElement):
            raise TypeError(f'Expected a DdcaElement, got {type(other).__name__}.')
        if other.algebra is not self.algebra:
            raise ValueError('Elements of different algebras cannot be combined.')

    def __add__(self, other: 'DdcaElement') -> 'DdcaElement':
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(terms, w, c)
        return DdcaElement(self.algebra, terms, min(self.generation, other.generation))

    def __sub__(self, other: 'DdcaElement') -> 'DdcaElement':
        return self + (-other)

    def __neg__(self) -> 'DdcaElement':
        return DdcaElement(self.algebra, {w: -c for w, c in self.terms.items()}, self.generation)

    def __mul__(self, other) -> 'DdcaElement':
        if isinstance(other, DdcaElement):
            return self.algebra.multiply(self, other)
        c = scalar(other)
        return DdcaElement(self.algebra, {w: v * c for w, v in self.terms.items()}, self.generation)

    def __rmul__(self, other) -> 'DdcaElement':
        c = scalar(other)
        return DdcaElement(self.algebra, {w: c * v for w, v in self.terms.items()}, self.generation)

    def __truediv__(self, other) -> 'DdcaElement':
        c = scalar(other)
        if not c.is_ground or not c:
            raise ZeroDivisionError('Division is only defined by non zero rationals.')
        inverse = QQ.one / c.get((0, 0))
        return DdcaElement(self.algebra, {w: v * inverse for w, v in self.terms.items()}, self.generation)

    def commutator(self, other: 'DdcaElement') -> 'DdcaElement':
        return self.algebra.bracket(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.algebra.current(self).terms
        if not isinstance(other, DdcaElement) or other.algebra is not self.algebra:
            return NotImplemented
        return not (self - other)

    __hash__ = None

    def __bool__(self):
        return bool(self.algebra.current(self).terms)

    def coefficient(self, word: Iterable[Symbol]) -> ParamScalar:
        return self.terms.get(tuple(word), ZERO)

    def symbols(self) -> Set[Symbol]:
        return {sym for word in self.terms for sym in word}

    def atoms(self) -> Set[Symbol]:
        """Bracket atoms left in the element, the pairs the knowledge base could not resolve."""
        return {sym for sym in self.symbols() if kind(sym) == WKind.ATOM}

    def unknowns(self) -> Set[Symbol]:
        return {sym for sym in self.symbols() if is_unknown(sym)}

    def grades(self) -> Set[tuple]:
        """Bigrade of each term, with ``λ`` and ``β`` counted in degree ``(1, 1)``."""
        out = set()
        for word, c in self.terms.items():
            u, v = word_grade(word)
            for monom in c:
                d = sum(monom)
                out.add((u + d, v + d))
        return out

    def specialize(self, lam0, beta0) -> 'DdcaElement':
        return DdcaElement(self.algebra, {w: RING(specialize(c, lam0, beta0)) for w, c in self.terms.items()},
                           self.generation)

    def render(self) -> str:
        if not self.terms:
            return '0'
        frame = self.algebra.frame
        out = []
        for word in sorted(self.terms):
            c = self.terms[word]
            text = render_rational(c.get((0, 0), QQ.zero)) if is_constant(c) else f'({render(c)})'
            out.append(f'{text}·{render_word(word, frame)}')
        return ' + '.join(out)

    def __repr__(self):
        return f'DdcaElement({self.render()})'
