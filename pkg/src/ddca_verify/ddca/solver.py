# language=rst
"""Linear elimination of unknown symbols.

A row is an element known to vanish. Its coordinates are indexed by columns ``(word,
(deg λ, deg β))`` with rational entries, so the rows form a matrix over ℚ. Columns fall in
three classes:

* *unknown*: one bracket atom or opaque symbol alone, without parameters;
* *mixed*: any other word containing an unknown;
* *known*: everything else.

Unknown columns come first, so the reduced row echelon form expresses as many unknowns as
possible through known columns. A pivot in an unknown column becomes a substitution, a pivot in
a known column is a contradiction (the rows are inconsistent with the knowledge base), and a
pivot in a mixed column leaves the row unresolved.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..scalarring import RING
from .element import DdcaElement
from .kb import Identity, Provenance
from .symbols import Symbol, is_unknown, label

__all__ = ['SolveResult', 'solve', 'saturate', 'rows_to_vectors', 'echelon', 'vector_to_element']

logger = logging.getLogger(__name__)

Column = Tuple[tuple, Tuple[int, int]]
Vector = Dict[Column, object]

UNKNOWN, PREFERRED, MIXED, KNOWN = range(4)


@dataclass
class SolveResult:
    substitutions: Dict[Symbol, DdcaElement] = field(default_factory=dict)
    contradictions: List[DdcaElement] = field(default_factory=list)
    unresolved: List[DdcaElement] = field(default_factory=list)
    rank: int = 0
    rows: int = 0

    @property
    def ok(self) -> bool:
        return not self.contradictions

    def solved(self, sym: Symbol) -> bool:
        return sym in self.substitutions


def _column_class(column: Column, preferred: Dict[Symbol, int]) -> int:
    word, monom = column
    if len(word) == 1 and is_unknown(word[0]) and monom == (0, 0):
        return PREFERRED if word[0] in preferred else UNKNOWN
    if any(is_unknown(sym) for sym in word):
        return MIXED
    return KNOWN


def _column_key(column: Column, preferred: Dict[Symbol, int]):
    cls = _column_class(column, preferred)
    if cls == PREFERRED:
        return cls, preferred[column[0][0]], column
    return cls, 0, column


def rows_to_vectors(rows: Iterable[DdcaElement]) -> List[Vector]:
    vectors = []
    for row in rows:
        vector = {}
        for word, c in row.terms.items():
            for monom, q in c.items():
                vector[(word, monom)] = q
        if vector:
            vectors.append(vector)
    return vectors


def vector_to_element(algebra, vector: Vector) -> DdcaElement:
    terms = {}
    for (word, monom), q in vector.items():
        c = RING.from_dict({monom: q})
        terms[word] = terms[word] + c if word in terms else c
    return DdcaElement(algebra, terms)


def echelon(vectors: Sequence[Vector], preferred: Dict[Symbol, int] = None) -> Tuple[List[Vector], List[Column]]:
    """Reduced row echelon basis of the span of ``vectors`` and the pivot column of each row."""
    preferred = preferred or {}
    columns = sorted({c for v in vectors for c in v}, key=lambda c: _column_key(c, preferred))
    if not columns or not vectors:
        return [], []
    position = {c: j for j, c in enumerate(columns)}
    dok = {}
    for i, vector in enumerate(vectors):
        for c, q in vector.items():
            dok[(i, position[c])] = q
    matrix = DomainMatrix.from_dok(dok, (len(vectors), len(columns)), QQ).to_sparse()
    reduced, pivots = matrix.rref()
    entries = reduced.to_dok()
    rows: List[Dict[Column, object]] = [{} for _ in pivots]
    for (i, j), q in entries.items():
        if i < len(pivots) and q:
            rows[i][columns[j]] = q
    return rows, [columns[j] for j in pivots]


def solve(algebra, rows: Iterable[DdcaElement], prefer_last: Sequence[Symbol] = (), source: str = 'solve',
          anchor: str = '', register: bool = True) -> SolveResult:
    # language=rst prefix="    "
    """Eliminate unknowns from ``rows`` and register the solutions as derived substitutions.

    Unknowns listed in ``prefer_last`` are eliminated last, in the given order, so they stay in
    the solutions of the others. Every registration is followed by re-normalizing the rows, which
    must now vanish or keep only unresolved unknowns.
    """
    rows = [algebra.release(row) for row in rows]
    preferred = {sym: i for i, sym in enumerate(prefer_last)}
    vectors = rows_to_vectors(rows)
    basis, pivots = echelon(vectors, preferred)
    result = SolveResult(rank=len(basis), rows=len(vectors))
    for vector, pivot in zip(basis, pivots):
        cls = _column_class(pivot, preferred)
        if cls == KNOWN:
            result.contradictions.append(vector_to_element(algebra, vector))
            continue
        rest = {c: -q for c, q in vector.items() if c != pivot}
        if cls == MIXED or any(_column_class(c, preferred) == MIXED for c in rest):
            result.unresolved.append(vector_to_element(algebra, vector))
            continue
        result.substitutions[pivot[0][0]] = vector_to_element(algebra, rest)
    logger.info('%s: %d rows, rank %d, %d solved, %d unresolved, %d contradictions', source, result.rows,
                result.rank, len(result.substitutions), len(result.unresolved), len(result.contradictions))
    if register and result.substitutions:
        kb = algebra.kb
        for sym, value in sorted(result.substitutions.items()):
            identity = Identity(f'{source}:{_name(algebra, sym)}', anchor or source, Provenance.DERIVED, source)
            kb.add_substitution(sym, value, identity, bump=False)
        kb.register(Identity(source, anchor or source, Provenance.DERIVED, source), bump=True)
        for row in rows:
            left = algebra.current(row)
            if left and not left.unknowns():
                result.contradictions.append(left)
    return result


def _name(algebra, sym: Symbol) -> str:
    return label(sym, algebra.frame)


def saturate(algebra, seeds: Iterable[DdcaElement], generators: Sequence[DdcaElement], prefer_last=(),
             max_rounds: int = 12, source: str = 'saturate', anchor: str = '', register: bool = True) -> SolveResult:
    # language=rst prefix="    "
    """Close the span of ``seeds`` under ``ad(generators)`` and solve the closure.

    Each round brackets a basis of the newly added part of the span with every generator and
    keeps the part of the result outside the span. The loop stops when a round adds nothing or
    after ``max_rounds`` rounds.
    """
    preferred = {sym: i for i, sym in enumerate(prefer_last)}
    basis, pivots = echelon(rows_to_vectors(algebra.release(r) for r in seeds), preferred)
    frontier = list(basis)
    for round_ in range(max_rounds):
        new = []
        for vector in frontier:
            row = vector_to_element(algebra, vector)
            for g in generators:
                new.append(algebra.release(algebra.bracket(row, g)))
        fresh = []
        for vector in rows_to_vectors(new):
            for pivot, row in zip(pivots, basis):
                q = vector.get(pivot)
                if q:
                    for c, v in row.items():
                        total = vector.get(c, 0) - q * v
                        if total:
                            vector[c] = total
                        else:
                            vector.pop(c, None)
            if vector:
                fresh.append(vector)
        frontier, _ = echelon(fresh, preferred)
        logger.debug('%s round %d: %d new rows', source, round_ + 1, len(frontier))
        if not frontier:
            break
        basis, pivots = echelon(basis + frontier, preferred)
    return solve(algebra, [vector_to_element(algebra, v) for v in basis], prefer_last, source, anchor, register)
