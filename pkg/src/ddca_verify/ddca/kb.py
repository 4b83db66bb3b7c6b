# language=rst
"""The knowledge base: every commutator rule the rewriter may use, with its provenance.

Rules come in three shapes:

* *substitutions* replace one symbol (a bracket atom or an opaque symbol) by an element;
* *families* compute the bracket of two symbol classes from their payloads, for example the
  defining relation between ``K(x)`` and ``Q(y)``;
* *definitions* attach a defining expression to an opaque symbol, so that brackets with it can be
  computed through the expression;
* *symmetry extensions* give the image of a symbol class the automorphism or the
  anti-automorphism does not cover by itself, such as ``P_s`` or opaque symbols.

The knowledge base is append only. Each registration bumps :attr:`KnowledgeBase.generation`,
which invalidates the rewriter's memoized products.
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..exceptions import DependencyError, RegistrationError
from .symbols import Symbol, grade

__all__ = ['Provenance', 'Identity', 'Family', 'SymmetryExtension', 'KnowledgeBase']

logger = logging.getLogger(__name__)


class Provenance(Enum):
    DEFINING = 'defining'
    DERIVED = 'derived'
    REGISTERED_UNVERIFIED = 'registered-unverified'


@dataclass(frozen=True)
class Identity:
    # language=rst prefix="    "
    """A named entry of the registration log.

    ``source`` is ``'seed'`` for defining relations and the script name otherwise; ``anchor``
    names the result being replayed.
    """
    name: str
    anchor: str
    provenance: Provenance
    source: str = 'seed'
    statement: str = ''

    def to_json(self) -> dict:
        return {'name': self.name, 'anchor': self.anchor, 'provenance': self.provenance.value,
                'source': self.source, 'statement': self.statement}


@dataclass
class Family:
    # language=rst prefix="    "
    """Bracket rule for a pair of symbol classes.

    ``key`` is ``(class, degree, class, degree)`` of the two sorted symbols, with degree ``None``
    matching every degree. ``rule(algebra, x, y)`` returns the bracket ``[x, y]`` or ``None``
    when the payloads fall outside the rule's constraints.
    """
    name: str
    key: Tuple
    specificity: int
    rule: Callable
    identity: Identity = None

    def matches(self, x: Symbol, y: Symbol) -> bool:
        c1, d1, c2, d2 = self.key
        return x.cls == c1 and y.cls == c2 and d1 in (None, x.degree) and d2 in (None, y.degree)


@dataclass
class SymmetryExtension:
    # language=rst prefix="    "
    """Image of symbols of class ``cls`` under the symmetry ``which``.

    ``image(algebra, sym)`` returns the image of ``sym`` or ``None`` when the payload is outside
    the extension.
    """
    name: str
    which: str
    cls: int
    image: Callable
    identity: Identity = None


class KnowledgeBase:
    def __init__(self, mode: str = 'general'):
        self.mode = mode
        self.generation = 0
        self.substitutions: Dict[Symbol, object] = {}
        self.definitions: Dict[Symbol, object] = {}
        self.families: List[Family] = []
        self.symmetry_extensions: List[SymmetryExtension] = []
        self.ps_degrees = set()
        self.identities: Dict[str, Identity] = {}
        self.log: List[Identity] = []

    def _bump(self):
        self.generation += 1

    # registration

    def register(self, identity: Identity, bump: bool = False) -> Identity:
        """Record an identity in the log; re-registering the same name keeps the first entry."""
        if identity.name not in self.identities:
            self.identities[identity.name] = identity
            self.log.append(identity)
            logger.info('registered %s [%s] from %s', identity.name, identity.provenance.value, identity.source)
        if bump:
            self._bump()
        return identity

    def add_substitution(self, sym: Symbol, value, identity: Identity, bump: bool = True):
        if sym in self.substitutions:
            raise RegistrationError(f'{identity.name}: a rule for {sym} is already registered.')
        if sym in value.symbols():
            raise RegistrationError(f'{identity.name}: the value of {sym} refers to the symbol itself.')
        target = grade(sym)
        for g in value.grades():
            if g != target:
                raise RegistrationError(f'{identity.name}: a term of grade {g} cannot replace a symbol of '
                                        f'grade {target}.')
        self.substitutions[sym] = value
        self.register(identity)
        if bump:
            self._bump()

    def add_family(self, family: Family):
        for other in self.families:
            if other.key == family.key and other.specificity == family.specificity:
                raise RegistrationError(f'{family.name} and {other.name} are equally specific rules for the same '
                                        f'symbol classes.')
        self.families.append(family)
        self.families.sort(key=lambda f: -f.specificity)
        if family.identity is not None:
            self.register(family.identity)
        self._bump()

    def add_symmetry_extension(self, extension: SymmetryExtension):
        if extension.which not in ('auto', 'anti'):
            raise RegistrationError(f'{extension.name}: unknown symmetry {extension.which!r}.')
        self.symmetry_extensions.append(extension)
        if extension.identity is not None:
            self.register(extension.identity)
        self._bump()

    def define(self, sym: Symbol, expression, identity: Identity):
        if sym in self.definitions:
            raise RegistrationError(f'{identity.name}: {sym} is already defined.')
        self.definitions[sym] = expression
        self.register(identity)
        self._bump()

    def add_ps_degree(self, s: int, identity: Identity):
        self.ps_degrees.add(s)
        self.register(identity)
        self._bump()

    # lookup

    def families_for(self, x: Symbol, y: Symbol) -> List[Family]:
        return [f for f in self.families if f.matches(x, y)]

    def extensions_for(self, which: str, sym: Symbol) -> List[SymmetryExtension]:
        return [e for e in self.symmetry_extensions if e.which == which and e.cls == sym.cls]

    def has(self, name: str) -> bool:
        return name in self.identities

    def require(self, name: str, script: str, order: Sequence[str] = ()):
        if name not in self.identities:
            raise DependencyError(name, script, order)

    def provenance(self, name: str) -> Optional[Provenance]:
        identity = self.identities.get(name)
        return identity.provenance if identity else None

    # serialization

    def to_json(self) -> dict:
        return {
            'mode': self.mode,
            'identities': [identity.to_json() for identity in self.log],
            'families': [f.name for f in self.families],
            'symmetry_extensions': [e.name for e in self.symmetry_extensions],
            'substitutions': len(self.substitutions),
            'definitions': len(self.definitions),
            'ps_degrees': sorted(self.ps_degrees),
        }

    def digest(self) -> str:
        """md5 of the canonical JSON of :meth:`to_json`."""
        text = json.dumps(self.to_json(), sort_keys=True, separators=(',', ':'), ensure_ascii=False)
        return hashlib.md5(text.encode('utf-8')).hexdigest()

    def __repr__(self):
        return f'KnowledgeBase(mode={self.mode!r}, generation={self.generation}, identities={len(self.log)})'
