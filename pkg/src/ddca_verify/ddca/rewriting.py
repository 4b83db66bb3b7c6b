# language=rst
"""Normal forms in the deformed double current algebra.

:class:`DdcaAlgebra` multiplies words by the straightening rule of :mod:`ddca_verify.uea`: an
out of order pair ``y·x`` becomes ``x·y + [y, x]``. The bracket of two symbols is looked up, in
this order,

#. through a substitution registered for either symbol or for their bracket atom;
#. by unfolding a held bracket with the Jacobi identity;
#. by the structure constants of ``g`` when a Lie letter meets a Lie letter or a symbol of a
   ``g``-module class (currents, ``P`` and the registered ``P_s``);
#. by the homomorphism rule of the two current algebras;
#. by the families of the knowledge base, most specific first;
#. by the Jacobi identity when a bracket atom meets a Lie letter;
#. through the definition of an opaque symbol.

A pair no rule covers becomes a bracket atom, so normalization always terminates and a zero
difference is a proof. Every computed bracket is checked against the bigrading and against the
termination weight of :func:`~ddca_verify.ddca.symbols.weight`.

>>> from ddca_verify.liealg import frame_for
>>> alg = DdcaAlgebra(frame_for('A', 3))
>>> f = alg.frame
>>> alg.bracket(alg.K(f.E(1, 2)), alg.lie(f.E(2, 3))) == alg.K(f.E(1, 3))
True
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..exceptions import ConfigurationError, DegreeCapError, InvariantViolation
from ..liealg import ChevalleyFrame, LieElement
from ..scalarring import ONE, RING, ParamScalar, scalar
from ..uea import UEElement, _accumulate
from .element import DdcaElement
from .kb import KnowledgeBase
from .symbols import Symbol, SymbolClass, Word, WKind, atom, cur, grade, held as held_symbol, kind, opaque, \
    render_word, weight, word_grade, word_weight
from . import symbols

__all__ = ['DdcaAlgebra', 'IrreducibleReport', 'STRATEGIES']

logger = logging.getLogger(__name__)

Terms = Dict[Word, ParamScalar]
Operand = Union[LieElement, dict, int]

STRATEGIES = ('leftmost', 'rightmost')
MODULE_CLASSES = (SymbolClass.CUR_U, SymbolClass.CUR_V, SymbolClass.P, SymbolClass.P_S)


@dataclass
class IrreducibleReport:
    # language=rst prefix="    "
    """Normal form that still contains bracket atoms, with the first unresolved pair."""
    element: DdcaElement
    atoms: Tuple[Symbol, ...]

    @property
    def first_pair(self) -> Tuple[Symbol, Symbol]:
        return self.atoms[0].args

    def render(self) -> str:
        frame = self.element.algebra.frame
        pairs = ', '.join(symbols.label(a, frame) for a in self.atoms[:5])
        more = f' (+{len(self.atoms) - 5} more)' if len(self.atoms) > 5 else ''
        return f'no rule for {pairs}{more}'


def _scaled(terms: Terms, c) -> Terms:
    return {w: v * c for w, v in terms.items()}


def _add_into(target: Terms, terms: Terms, c=None):
    for w, v in terms.items():
        _accumulate(target, w, v if c is None else v * c)


class DdcaAlgebra:
    # language=rst prefix="    "
    """Rewriting context: a frame, a knowledge base and a current degree cap.

    Products and brackets are memoized per knowledge base generation; registering anything in
    the knowledge base invalidates them.
    """

    def __init__(self, frame: ChevalleyFrame, kb: Optional[KnowledgeBase] = None, smax: int = 4):
        if smax < 1:
            raise ConfigurationError('smax must be at least 1: K and Q live in current degree one.')
        self.frame = frame
        self.kb = kb if kb is not None else KnowledgeBase()
        self.smax = smax
        self.dim = frame.dim
        self.stats = Counter()
        self._generation = None
        self._products: Dict[Tuple[Word, Symbol], Terms] = {}
        self._left_products: Dict[Tuple[Symbol, Word], Terms] = {}
        self._brackets: Dict[Tuple[Symbol, Symbol], Terms] = {}
        self._letters: Dict[Symbol, Terms] = {}
        self._active = set()

    def _sync(self):
        if self._generation != self.kb.generation:
            self._products.clear()
            self._left_products.clear()
            self._brackets.clear()
            self._letters.clear()
            self._generation = self.kb.generation

    # construction

    def element(self, terms: Optional[dict] = None) -> DdcaElement:
        return DdcaElement(self, {tuple(w): scalar(c) for w, c in (terms or {}).items()}, generation=-1)

    def zero(self) -> DdcaElement:
        return DdcaElement(self, {})

    def one(self) -> DdcaElement:
        return DdcaElement(self, {(): ONE})

    def scalar(self, c) -> DdcaElement:
        return DdcaElement(self, {(): scalar(c)})

    def symbol(self, sym: Symbol) -> DdcaElement:
        """The element named by one symbol, with any registered substitution applied."""
        self._sync()
        return DdcaElement(self, self._letter_terms(sym))

    def _coords(self, x: Operand) -> dict:
        if isinstance(x, LieElement):
            return x.coords()
        if isinstance(x, int):
            return {x: 1}
        return dict(x)

    def _linear(self, make, x: Operand) -> DdcaElement:
        self._sync()
        terms: Terms = {}
        for k, v in self._coords(x).items():
            _add_into(terms, self._letter_terms(make(k)), RING(v))
        return DdcaElement(self, terms)

    def lie(self, x: Operand) -> DdcaElement:
        return self._linear(symbols.lie, x)

    def cur(self, side: str, x: Operand, s: int) -> DdcaElement:
        """``x(u^s)`` or ``x(v^s)``."""
        if s > self.smax:
            raise DegreeCapError(s, self.smax)
        return self._linear(lambda k: cur(side, k, s), x)

    def K(self, x: Operand) -> DdcaElement:
        return self.cur('v', x, 1)

    def Q(self, x: Operand) -> DdcaElement:
        return self.cur('u', x, 1)

    def P(self, x: Operand) -> DdcaElement:
        return self._linear(symbols.P, x)

    def Ps(self, x: Operand, s: int) -> DdcaElement:
        if s > self.smax:
            raise DegreeCapError(s, self.smax)
        return self._linear(lambda k: symbols.Ps(k, s), x)

    def opaque(self, name: str, key: Sequence = (), grade_=(1, 1)) -> DdcaElement:
        return self.symbol(opaque(name, key, grade_))

    def S(self, a: DdcaElement, b: DdcaElement) -> DdcaElement:
        """``S(a, b) = ab + ba``."""
        return a * b + b * a

    def lift(self, ue: UEElement) -> DdcaElement:
        """Image of an element of ``U(g)``, ``U(g[u])`` or ``U(g[v])``."""
        side = ue.algebra.current
        total = self.zero()
        for monomial, c in ue.terms.items():
            word = self.one()
            for letter in monomial:
                index, s = ue.algebra.split(letter)
                word = word * (self.lie(index) if not s else self.cur(side, index, s))
            total = total + word * c
        return total

    def held(self, a: DdcaElement, b: DdcaElement) -> DdcaElement:
        # language=rst prefix="    "
        """The commutator ``[a, b]`` kept unevaluated.

        Bilinear: pairs of single letters become held symbols, every other pair of words is
        evaluated. Bracketing a held symbol with anything unfolds it by the Jacobi identity;
        :meth:`release` evaluates all held symbols of an element.
        """
        a, b = self.current(a), self.current(b)
        terms: Terms = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                c = c1 * c2
                if len(w1) == 1 and len(w2) == 1:
                    x, y = w1[0], w2[0]
                    if x == y:
                        continue
                    if x < y:
                        _accumulate(terms, (held_symbol(x, y),), c)
                    else:
                        _accumulate(terms, (held_symbol(y, x),), -c)
                else:
                    _add_into(terms, self._commutator_terms({w1: ONE}, {w2: ONE}), c)
        return DdcaElement(self, terms)

    # element arithmetic

    def current(self, e: DdcaElement) -> DdcaElement:
        """``e`` normalized against the present knowledge base."""
        self._sync()
        if e.generation == self.kb.generation:
            return e
        return self.refresh(e)

    def refresh(self, e: DdcaElement) -> DdcaElement:
        self._sync()
        terms: Terms = {}
        for word, c in e.terms.items():
            _add_into(terms, self._word_terms(word), c)
        return DdcaElement(self, terms)

    normalize = current

    def multiply(self, a: DdcaElement, b: DdcaElement) -> DdcaElement:
        a, b = self.current(a), self.current(b)
        return DdcaElement(self, self._mul_terms(a.terms, b.terms))

    def bracket(self, a: DdcaElement, b: DdcaElement) -> DdcaElement:
        """``[a, b] = ab - ba`` in normal form."""
        a, b = self.current(a), self.current(b)
        return DdcaElement(self, self._commutator_terms(a.terms, b.terms))

    def release(self, e: DdcaElement) -> DdcaElement:
        """Evaluate every held bracket of ``e``."""
        e = self.current(e)
        if not any(kind(sym) == WKind.HELD for word in e.terms for sym in word):
            return e
        terms: Terms = {}
        for word, c in e.terms.items():
            product: Terms = {(): ONE}
            for sym in word:
                product = self._mul_terms(product, self._released(sym))
            _add_into(terms, product, c)
        return DdcaElement(self, terms)

    def _released(self, sym: Symbol) -> Terms:
        if kind(sym) != WKind.HELD:
            return self._letter_terms(sym)
        x, y = sym.args
        return self._commutator_terms(self._released(x), self._released(y))

    def irreducible(self, e: DdcaElement) -> Optional[IrreducibleReport]:
        """Report on the bracket atoms left in ``e``, or ``None`` when there are none."""
        e = self.current(e)
        atoms = e.atoms()
        if not atoms:
            return None
        return IrreducibleReport(e, tuple(sorted(atoms)))

    def product(self, letters: Sequence[Symbol], strategy: str = 'leftmost') -> DdcaElement:
        # language=rst prefix="    "
        """Normal form of a product of letters along one of two swap orders.

        ``leftmost`` appends letters one by one, moving each new letter left past its neighbours;
        ``rightmost`` prepends them, moving each new letter right. Both must agree.
        """
        if strategy not in STRATEGIES:
            raise ConfigurationError(f'Unknown strategy {strategy!r}; expected one of {STRATEGIES}.')
        self._sync()
        terms: Terms = {(): ONE}
        if strategy == 'leftmost':
            for sym in letters:
                terms = self._mul_terms(terms, self._letter_terms(sym))
        else:
            for sym in reversed(letters):
                following: Terms = {}
                for w, c in self._letter_terms(sym).items():
                    for w2, c2 in terms.items():
                        _add_into(following, self._left_word(w, w2), c * c2)
                terms = following
        return DdcaElement(self, terms)

    # straightening

    def _letter_terms(self, sym: Symbol) -> Terms:
        value = self.kb.substitutions.get(sym)
        if value is None:
            return {(sym,): ONE}
        cached = self._letters.get(sym)
        if cached is None:
            cached = {}
            for word, c in value.terms.items():
                _add_into(cached, self._word_terms(word), c)
            self._letters[sym] = cached
        return cached

    def _word_terms(self, word: Word) -> Terms:
        terms: Terms = {(): ONE}
        for sym in word:
            terms = self._mul_terms(terms, self._letter_terms(sym))
        return terms

    def _times_letter(self, m: Word, x: Symbol) -> Terms:
        """Normal form of ``m·x`` for a normal word ``m`` and a letter without substitution."""
        key = (m, x)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        if not m or m[-1] <= x:
            result = {m + (x,): ONE}
        else:
            self.stats['swaps'] += 1
            head, y = m[:-1], m[-1]
            result = {}
            # m·x = head·x·y + head·[y, x]
            for mono, c in self._times_letter(head, x).items():
                _add_into(result, self._times_letter(mono, y), c)
            for word, c in self._bracket_terms(y, x).items():
                _add_into(result, self._times_word(head, word), c)
        self._products[key] = result
        return result

    def _times_word(self, m1: Word, m2: Word) -> Terms:
        current = {m1: ONE}
        for x in m2:
            following: Terms = {}
            for mono, c in current.items():
                _add_into(following, self._times_letter(mono, x), c)
            current = following
        return current

    def _letter_times(self, y: Symbol, m: Word) -> Terms:
        """Normal form of ``y·m``, moving ``y`` to the right."""
        key = (y, m)
        cached = self._left_products.get(key)
        if cached is not None:
            return cached
        if not m or y <= m[0]:
            result = {(y,) + m: ONE}
        else:
            self.stats['swaps'] += 1
            z, tail = m[0], m[1:]
            result = {}
            # y·z·tail = z·(y·tail) + [y, z]·tail
            for word, c in self._letter_times(y, tail).items():
                _add_into(result, self._letter_times(z, word), c)
            for word, c in self._bracket_terms(y, z).items():
                _add_into(result, self._left_word(word, tail), c)
        self._left_products[key] = result
        return result

    def _left_word(self, m1: Word, m2: Word) -> Terms:
        current = {m2: ONE}
        for y in reversed(m1):
            following: Terms = {}
            for mono, c in current.items():
                _add_into(following, self._letter_times(y, mono), c)
            current = following
        return current

    def _mul_terms(self, a: Terms, b: Terms) -> Terms:
        out: Terms = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                _add_into(out, self._times_word(w1, w2), c1 * c2)
        return out

    def _commutator_terms(self, a: Terms, b: Terms) -> Terms:
        out = self._mul_terms(a, b)
        _add_into(out, self._mul_terms(b, a), -ONE)
        return out

    # brackets of symbols

    def bracket_symbols(self, x: Symbol, y: Symbol) -> DdcaElement:
        self._sync()
        return DdcaElement(self, self._bracket_terms(x, y))

    def _bracket_terms(self, x: Symbol, y: Symbol) -> Terms:
        if x == y:
            return {}
        if x < y:
            return self._bracket_sorted(x, y)
        return _scaled(self._bracket_sorted(y, x), -ONE)

    def _bracket_sorted(self, x: Symbol, y: Symbol) -> Terms:
        key = (x, y)
        cached = self._brackets.get(key)
        if cached is not None:
            return cached
        if key in self._active:
            self.stats['guarded'] += 1
            return self._letter_terms(atom(x, y))
        self._active.add(key)
        try:
            result = self._compute(x, y)
        finally:
            self._active.discard(key)
        result = self._solve_self_reference(x, y, result)
        self._check(x, y, result)
        self.stats['brackets'] += 1
        self._brackets[key] = result
        return result

    def _solve_self_reference(self, x: Symbol, y: Symbol, result: Terms) -> Terms:
        """``[x, y] = R + c[x, y]`` with ``c ≠ 1`` a rational gives ``[x, y] = R/(1 - c)``."""
        a = atom(x, y)
        c = result.get((a,))
        if c is None or not c.is_ground or c == ONE:
            return result
        if any(a in word for word in result if word != (a,)):
            return result
        inverse = ONE / (ONE - c)
        return {w: v * inverse for w, v in result.items() if w != (a,)}

    def _compute(self, x: Symbol, y: Symbol) -> Terms:
        kb = self.kb
        if x in kb.substitutions or y in kb.substitutions:
            return self._commutator_terms(self._letter_terms(x), self._letter_terms(y))
        if kind(x) == WKind.HELD:
            return self._unfold(x, y)
        if kind(y) == WKind.HELD:
            return _scaled(self._unfold(y, x), -ONE)
        a = atom(x, y)
        if a in kb.substitutions:
            return self._letter_terms(a)
        if x.cls == SymbolClass.LIE or y.cls == SymbolClass.LIE:
            value = self._adjoint(x, y)
            if value is not None:
                return value
        if x.cls == y.cls and x.cls in (SymbolClass.CUR_U, SymbolClass.CUR_V):
            return self._current_bracket(x, y)
        for family in kb.families_for(x, y):
            value = family.rule(self, x, y)
            if value is not None:
                self.stats[f'family:{family.name}'] += 1
                return dict(self.current(value).terms)
        if kind(x) == WKind.ATOM and y.cls == SymbolClass.LIE:
            return self._jacobi(x, y)
        for o, z, sign in ((x, y, ONE), (y, x, -ONE)):
            definition = kb.definitions.get(o)
            if definition is not None:
                definition = self.current(definition)
                return _scaled(self._commutator_terms(definition.terms, self._letter_terms(z)), sign)
        self.stats['atoms'] += 1
        return self._letter_terms(a)

    def _unfold(self, h: Symbol, z: Symbol) -> Terms:
        """``[[h1, h2], z] = [h1, [h2, z]] - [h2, [h1, z]]``."""
        h1, h2 = h.args
        self.stats['unfolds'] += 1
        out = self._commutator_terms(self._letter_terms(h1), self._bracket_terms(h2, z))
        _add_into(out, self._commutator_terms(self._letter_terms(h2), self._bracket_terms(h1, z)), -ONE)
        return out

    def _jacobi(self, a: Symbol, z: Symbol) -> Terms:
        """``[[p, q], z] = [p, [q, z]] + [[p, z], q]`` for an atom ``[p, q]`` and a Lie letter ``z``."""
        p, q = a.args
        out = self._commutator_terms(self._letter_terms(p), self._bracket_terms(q, z))
        _add_into(out, self._commutator_terms(self._bracket_terms(p, z), self._letter_terms(q)))
        return out

    def _adjoint(self, x: Symbol, y: Symbol) -> Optional[Terms]:
        """``[a(t), b] = [a, b](t)`` when one side is a Lie letter and the other lies in a ``g``-module."""
        if x.cls == y.cls == SymbolClass.LIE:
            target = x
        elif x.cls == SymbolClass.LIE and y.cls in MODULE_CLASSES:
            target = y
        elif y.cls == SymbolClass.LIE and x.cls in MODULE_CLASSES:
            target = x
        else:
            return None
        if target.cls == SymbolClass.P_S and target.degree not in self.kb.ps_degrees:
            return None
        out: Terms = {}
        for k, c in self.frame.bracket_coords(x.index, y.index):
            _add_into(out, self._letter_terms(Symbol(target.cls, target.degree, k)), RING(c))
        return out

    def _current_bracket(self, x: Symbol, y: Symbol) -> Terms:
        s = x.degree + y.degree
        if s > self.smax:
            raise DegreeCapError(s, self.smax)
        side = 'u' if x.cls == SymbolClass.CUR_U else 'v'
        out: Terms = {}
        for k, c in self.frame.bracket_coords(x.index, y.index):
            _add_into(out, self._letter_terms(cur(side, k, s)), RING(c))
        return out

    def _check(self, x: Symbol, y: Symbol, result: Terms):
        limit = weight(x) + weight(y)
        gx, gy = grade(x), grade(y)
        target = (gx[0] + gy[0], gx[1] + gy[1])
        for word, c in result.items():
            self.stats['weight_checks'] += 1
            if word_weight(word) >= limit:
                raise InvariantViolation(f'[{symbols.label(x, self.frame)}, {symbols.label(y, self.frame)}] '
                                         f'produced {render_word(word, self.frame)}, which does not decrease '
                                         f'the termination weight.')
            u, v = word_grade(word)
            for monom in c:
                self.stats['grade_checks'] += 1
                d = sum(monom)
                if (u + d, v + d) != target:
                    raise InvariantViolation(f'[{symbols.label(x, self.frame)}, {symbols.label(y, self.frame)}] '
                                             f'produced {render_word(word, self.frame)} of grade {(u + d, v + d)}, '
                                             f'expected {target}.')

    def __repr__(self):
        return f'DdcaAlgebra({self.frame.rs.label}, smax={self.smax}, {self.kb!r})'
