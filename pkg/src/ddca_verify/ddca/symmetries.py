# language=rst
"""The automorphism exchanging the two current algebras, the transpose anti-automorphism of
type ``A`` and Weyl group transport.

``auto`` fixes ``g`` and sends ``K(x) ↦ -Q(x)``, ``Q(x) ↦ K(x)``, ``P(x) ↦ -P(x)``; on higher
currents it sends ``x(u^s) ↦ x(v^s)`` and ``x(v^s) ↦ (-1)^s x(u^s)``, the values forced by the
current algebra homomorphisms. ``anti`` exists for ``sl_n``: it reverses words and sends ``x ↦ xᵗ``,
``K(x) ↦ Q(xᵗ)``, ``Q(x) ↦ K(xᵗ)``, ``P(x) ↦ P(xᵗ)``.

Other symbols, such as ``P_s(x)`` or opaque symbols, are mapped by the
:class:`~ddca_verify.ddca.kb.SymmetryExtension` objects registered in the knowledge base.
"""
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from ..exceptions import SymmetryDomainError
from ..liealg import ChevalleyFrame, apply_word
from ..scalarring import ONE, RING
from .element import DdcaElement
from .symbols import Symbol, SymbolClass, WKind

__all__ = ['SYMMETRIES', 'apply_symmetry', 'symbol_image', 'transport', 'transpose_index']

SYMMETRIES = ('auto', 'anti')


@lru_cache(maxsize=None)
def _transpose_table(frame: ChevalleyFrame) -> Tuple[int, ...]:
    if frame.kind != 'sl':
        raise SymmetryDomainError(f'The transpose anti-automorphism is defined for sl_n, not {frame.rs.label}.')
    table = []
    for index, w in enumerate(frame.basis_weights):
        if w is None:
            table.append(index)
        else:
            table.append(frame.root_index[tuple(-a for a in w)])
    return tuple(table)


def transpose_index(frame: ChevalleyFrame, index: int) -> int:
    """Basis position of ``xᵗ`` for the basis element at ``index``."""
    return _transpose_table(frame)[index]


def symbol_image(algebra, sym: Symbol, which: str) -> DdcaElement:
    if which not in SYMMETRIES:
        raise ValueError(f'Unknown symmetry {which!r}; expected one of {SYMMETRIES}.')
    cls = sym.cls
    anti = which == 'anti'
    index = transpose_index(algebra.frame, sym.index) if anti and cls != SymbolClass.W else sym.index
    if cls == SymbolClass.LIE:
        return algebra.lie(index)
    if cls == SymbolClass.CUR_U:
        return algebra.cur('v', index, sym.degree)
    if cls == SymbolClass.CUR_V:
        if anti:
            return algebra.cur('u', index, sym.degree)
        sign = -ONE if sym.degree % 2 else ONE
        return algebra.cur('u', index, sym.degree) * sign
    if cls == SymbolClass.P:
        return algebra.P(index) if anti else -algebra.P(index)
    if cls == SymbolClass.W and sym.index in (WKind.ATOM, WKind.HELD):
        a, b = (symbol_image(algebra, s, which) for s in sym.args)
        if anti:
            a, b = b, a
        if sym.index == WKind.ATOM:
            return algebra.bracket(a, b)
        return algebra.held(a, b)
    for extension in algebra.kb.extensions_for(which, sym):
        image = extension.image(algebra, sym)
        if image is not None:
            return image
    raise SymmetryDomainError(f'{which} is not defined on {sym}; register a SymmetryExtension for it with '
                              f'KnowledgeBase.add_symmetry_extension first.')


def apply_symmetry(algebra, e: DdcaElement, which: str = 'auto') -> DdcaElement:
    """Image of ``e``; the anti-automorphism reverses the order of every word."""
    e = algebra.current(e)
    total = algebra.zero()
    for word, c in e.terms.items():
        letters = reversed(word) if which == 'anti' else word
        product = algebra.one()
        for sym in letters:
            product = product * symbol_image(algebra, sym, which)
        total = total + product * c
    return total


@lru_cache(maxsize=None)
def _tits_table(frame: ChevalleyFrame, word: Tuple[int, ...]) -> Tuple[Dict[int, object], ...]:
    return tuple(apply_word(word, frame.basis[k], rational=True).coords() for k in range(frame.dim))


def _transport_symbol(algebra, sym: Symbol, word: Tuple[int, ...]) -> DdcaElement:
    if sym.cls == SymbolClass.W:
        if sym.index == WKind.OPAQUE:
            raise SymmetryDomainError(f'Weyl transport is not defined on the opaque symbol {sym.args[0]}.')
        a, b = (_transport_symbol(algebra, s, word) for s in sym.args)
        return algebra.bracket(a, b) if sym.index == WKind.ATOM else algebra.held(a, b)
    coords = _tits_table(algebra.frame, word)[sym.index]
    return algebra.element({(Symbol(sym.cls, sym.degree, k),): RING(v) for k, v in coords.items()})


def transport(algebra, e: DdcaElement, word: Sequence[int]) -> DdcaElement:
    # language=rst prefix="    "
    """Apply the rational Tits lift of the Weyl group element ``s_{i_1}⋯s_{i_k}`` letter by letter.

    The lift is an automorphism of ``g`` acting on every ``g``-module class through the same
    matrix, so it maps identities to identities.
    """
    word = tuple(word)
    e = algebra.current(e)
    total = algebra.zero()
    for w, c in e.terms.items():
        product = algebra.one()
        for sym in w:
            product = product * _transport_symbol(algebra, sym, word)
        total = total + product * c
    return total
