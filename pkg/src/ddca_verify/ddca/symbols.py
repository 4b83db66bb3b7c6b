# language=rst
"""Generator symbols of the deformed double current algebra.

A symbol is a small named tuple, so words (tuples of symbols) sort by class first. The class
order is the canonical word order: ``X(v^s)`` letters, then ``P`` and ``P_s``, then the class
``W`` symbols, then Lie letters, then ``X(u^s)`` letters.

Class ``W`` holds three kinds of symbols:

* opaque symbols, named elements such as ``W_ab`` or ``B(β)``;
* bracket atoms ``[x, y]`` for pairs with no rule in the knowledge base;
* held brackets ``⟦x, y⟧``, commutators kept unevaluated until something is bracketed with them.
"""
from enum import IntEnum
from typing import NamedTuple, Sequence, Tuple

__all__ = ['SymbolClass', 'WKind', 'Symbol', 'Word', 'lie', 'cur', 'K', 'Q', 'P', 'Ps', 'opaque', 'atom',
           'held', 'grade', 'weight', 'word_grade', 'word_weight', 'is_unknown', 'is_w', 'kind', 'label',
           'render_word']

Grade = Tuple[int, int]


class SymbolClass(IntEnum):
    CUR_V = 0
    P = 1
    P_S = 2
    W = 3
    LIE = 4
    CUR_U = 5


class WKind(IntEnum):
    OPAQUE = 0
    ATOM = 1
    HELD = 2


class Symbol(NamedTuple):
    # language=rst prefix="    "
    """``cls`` and ``degree`` locate the letter, ``index`` is a basis position (or a
    :class:`WKind` for class ``W``) and ``args`` carries the payload of ``W`` symbols."""
    cls: int
    degree: int
    index: int
    args: tuple = ()


Word = Tuple[Symbol, ...]


def lie(index: int) -> Symbol:
    return Symbol(SymbolClass.LIE, 0, index)


def cur(side: str, index: int, s: int) -> Symbol:
    """``x(u^s)`` or ``x(v^s)``; degree zero is the Lie letter itself."""
    if s < 0:
        raise ValueError('Current degrees are non negative.')
    if not s:
        return lie(index)
    if side == 'u':
        return Symbol(SymbolClass.CUR_U, s, index)
    if side == 'v':
        return Symbol(SymbolClass.CUR_V, s, index)
    raise ValueError(f'side must be u or v, got {side!r}.')


def K(index: int) -> Symbol:
    return cur('v', index, 1)


def Q(index: int) -> Symbol:
    return cur('u', index, 1)


def P(index: int) -> Symbol:
    return Symbol(SymbolClass.P, 1, index)


def Ps(index: int, s: int) -> Symbol:
    """``P_s(x)``, with ``P_1 = P`` and ``P_0 = K``."""
    if s < 0:
        raise ValueError('P_s is defined for s >= 0.')
    if s == 0:
        return K(index)
    if s == 1:
        return P(index)
    return Symbol(SymbolClass.P_S, s, index)


def opaque(name: str, key: Sequence = (), grade_: Grade = (1, 1)) -> Symbol:
    return Symbol(SymbolClass.W, 0, WKind.OPAQUE, (name, tuple(key), tuple(grade_)))


def atom(x: Symbol, y: Symbol) -> Symbol:
    if not x < y:
        raise ValueError('Bracket atoms are stored with their arguments in increasing order.')
    return Symbol(SymbolClass.W, 0, WKind.ATOM, (x, y))


def held(x: Symbol, y: Symbol) -> Symbol:
    if not x < y:
        raise ValueError('Held brackets are stored with their arguments in increasing order.')
    return Symbol(SymbolClass.W, 0, WKind.HELD, (x, y))


def is_w(sym: Symbol) -> bool:
    return sym.cls == SymbolClass.W


def kind(sym: Symbol):
    return WKind(sym.index) if is_w(sym) else None


def is_unknown(sym: Symbol) -> bool:
    """Atoms and opaque symbols are the unknowns a linear solve may eliminate."""
    return is_w(sym) and sym.index in (WKind.OPAQUE, WKind.ATOM)


def grade(sym: Symbol) -> Grade:
    cls = sym.cls
    if cls == SymbolClass.LIE:
        return 0, 0
    if cls == SymbolClass.CUR_U:
        return sym.degree, 0
    if cls == SymbolClass.CUR_V:
        return 0, sym.degree
    if cls == SymbolClass.P:
        return 1, 1
    if cls == SymbolClass.P_S:
        return sym.degree, 1
    if sym.index == WKind.OPAQUE:
        return sym.args[2]
    (u1, v1), (u2, v2) = grade(sym.args[0]), grade(sym.args[1])
    return u1 + u2, v1 + v2


def weight(sym: Symbol) -> int:
    # language=rst prefix="    "
    """Termination weight: a bracket never produces a word heavier than its two letters together.

    Lie letters weigh 1, ``x(u^s)`` and ``x(v^s)`` weigh ``2 + s``, ``P`` weighs 4 and ``P_s``
    weighs ``3 + s``. An opaque symbol of grade ``(a, b)`` weighs ``3 + a + b``, an atom one less
    than its two arguments together and a held bracket exactly as much.
    """
    cls = sym.cls
    if cls == SymbolClass.LIE:
        return 1
    if cls in (SymbolClass.CUR_U, SymbolClass.CUR_V):
        return 2 + sym.degree
    if cls == SymbolClass.P:
        return 4
    if cls == SymbolClass.P_S:
        return 3 + sym.degree
    if sym.index == WKind.OPAQUE:
        a, b = sym.args[2]
        return 3 + a + b
    total = weight(sym.args[0]) + weight(sym.args[1])
    return total - 1 if sym.index == WKind.ATOM else total


def word_grade(word: Word) -> Grade:
    u = v = 0
    for sym in word:
        a, b = grade(sym)
        u += a
        v += b
    return u, v


def word_weight(word: Word) -> int:
    return sum(weight(sym) for sym in word)


def _power(name: str, s: int) -> str:
    return name if s == 1 else f'{name}^{s}'


def label(sym: Symbol, frame) -> str:
    cls = sym.cls
    if cls == SymbolClass.LIE:
        return frame.label(sym.index)
    base = frame.label(sym.index) if cls != SymbolClass.W else ''
    if cls == SymbolClass.CUR_U:
        return f'Q({base})' if sym.degree == 1 else f'{base}({_power("u", sym.degree)})'
    if cls == SymbolClass.CUR_V:
        return f'K({base})' if sym.degree == 1 else f'{base}({_power("v", sym.degree)})'
    if cls == SymbolClass.P:
        return f'P({base})'
    if cls == SymbolClass.P_S:
        return f'P{sym.degree}({base})'
    if sym.index == WKind.OPAQUE:
        name, key, _ = sym.args
        return f'{name}({",".join(str(k) for k in key)})' if key else name
    left, right = (label(a, frame) for a in sym.args)
    return f'[{left}, {right}]' if sym.index == WKind.ATOM else f'⟦{left}, {right}⟧'


def render_word(word: Word, frame) -> str:
    if not word:
        return '1'
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        text = label(word[i], frame)
        parts.append(text if j - i == 1 else f'{text}^{j - i}')
        i = j
    return '·'.join(parts)
