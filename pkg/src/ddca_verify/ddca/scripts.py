# language=rst
"""Derivation scripts: declarative replays of proofs.

A :class:`DerivationScript` is a list of :class:`Step` objects run against one
:class:`~ddca_verify.ddca.rewriting.DdcaAlgebra`. Steps read and write named lists of
labelled elements in a workspace:

``EXPAND_DEF``
    build elements from their definitions;
``APPLY_AD``
    bracket every element of a list with Lie elements;
``LINEAR_COMBINE``
    combine lists with scalar coefficients or a combining function;
``APPLY_SYMMETRY`` / ``TRANSPORT``
    map a list through the automorphism, the anti-automorphism or a Weyl group lift;
``SOLVE`` / ``SATURATE``
    eliminate unknowns from rows known to vanish and register the solutions;
``NORMALIZE_COMPARE``
    normalize both sides of claimed identities and stop at the first difference;
``REGISTER``
    add a derived rule to the knowledge base.

A script passes when every comparison normalized to zero. The first failing comparison is
returned as a :class:`FailureDiff` rather than raised.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import DdcaError, RegistrationError, VerificationFailed
from ..liealg import LieElement
from .element import DdcaElement
from .kb import Family, Identity, Provenance
from .rewriting import DdcaAlgebra
from .solver import SolveResult, saturate as saturate_rows, solve as solve_rows
from .symbols import P, Ps, Symbol, SymbolClass, WKind, cur, kind, lie, render_word
from .symmetries import apply_symmetry, transport

__all__ = ['StepKind', 'Step', 'DerivationScript', 'ScriptResult', 'FailureDiff', 'run_script', 'apply_ad',
           'expand', 'ad', 'combine', 'symmetry', 'weyl', 'solve', 'saturate', 'compare', 'register',
           'Check', 'check_family']

logger = logging.getLogger(__name__)

Labelled = List[Tuple[str, DdcaElement]]
Workspace = Dict[str, Labelled]


class StepKind(Enum):
    EXPAND_DEF = 'expand-def'
    APPLY_AD = 'apply-ad'
    LINEAR_COMBINE = 'linear-combine'
    APPLY_SYMMETRY = 'apply-symmetry'
    TRANSPORT = 'transport'
    SOLVE = 'solve'
    SATURATE = 'saturate'
    NORMALIZE_COMPARE = 'normalize-compare'
    REGISTER = 'register'


@dataclass(frozen=True)
class Step:
    kind: StepKind
    target: str = ''
    source: Tuple[str, ...] = ()
    params: Mapping = field(default_factory=dict, compare=False)
    anchor: str = ''


@dataclass(frozen=True)
class DerivationScript:
    # language=rst prefix="    "
    """A named proof replay.

    ``requires`` lists the identities that must be in the knowledge base before the first
    step; a missing one raises :class:`~ddca_verify.exceptions.DependencyError`.
    """
    name: str
    anchor: str
    steps: Tuple[Step, ...]
    requires: Tuple[str, ...] = ()
    description: str = ''


@dataclass
class Check:
    # language=rst prefix="    "
    """One claimed identity ``lhs = rhs``.

    When ``operands`` holds the two elements whose commutator is ``lhs``, the runner can
    recompute the commutator along both swap orders.
    """
    label: str
    lhs: DdcaElement
    rhs: DdcaElement
    operands: Optional[Tuple[DdcaElement, DdcaElement]] = None


@dataclass
class ScriptResult:
    script: str
    anchor: str
    checks: int = 0
    confluence_checks: int = 0
    registered: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    passed = True

    def to_json(self) -> dict:
        return {'script': self.script, 'anchor': self.anchor, 'passed': True, 'checks': self.checks,
                'confluence_checks': self.confluence_checks, 'registered': list(self.registered)}


@dataclass
class FailureDiff:
    # language=rst prefix="    "
    """Normal forms of both sides of the first comparison that did not vanish."""
    script: str
    step: int
    kind: str
    label: str
    lhs: str
    rhs: str
    diff: str
    first_word: str
    irreducible: Optional[str] = None
    elapsed: float = 0.0

    passed = False

    @classmethod
    def from_elements(cls, script: str, step: int, kind: str, label: str, lhs: DdcaElement,
                      rhs: DdcaElement) -> 'FailureDiff':
        alg = lhs.algebra
        difference = alg.current(lhs - rhs)
        words = sorted(difference.terms)
        first = render_word(words[0], alg.frame) if words else ''
        report = alg.irreducible(difference)
        return cls(script, step, kind, label, lhs.render(), rhs.render(), difference.render(), first,
                   report.render() if report else None)

    def render(self) -> str:
        lines = [f'{self.script}: step {self.step} ({self.kind}) failed at {self.label}',
                 f'  lhs:  {self.lhs}',
                 f'  rhs:  {self.rhs}',
                 f'  diff: {self.diff}',
                 f'  first differing word: >>{self.first_word}<<']
        if self.irreducible:
            lines.append(f'  irreducible: {self.irreducible}')
        return '\n'.join(lines)

    def __str__(self):
        return self.render()

    def to_json(self) -> dict:
        return {'script': self.script, 'passed': False, 'step': self.step, 'kind': self.kind,
                'label': self.label, 'lhs': self.lhs, 'rhs': self.rhs, 'diff': self.diff,
                'first_word': self.first_word, 'irreducible': self.irreducible}

    def raise_(self):
        raise VerificationFailed(self)


# step constructors

def expand(target: str, build: Callable, anchor: str = '') -> Step:
    """``build(alg)`` yields ``(label, element)`` pairs."""
    return Step(StepKind.EXPAND_DEF, target, (), {'build': build}, anchor)


def ad(target: str, source: str, by: Callable, side: str = 'right', anchor: str = '') -> Step:
    """``by(alg, label)`` yields ``(suffix, x)``; ``side='right'`` forms ``[e, x]``, ``'left'`` forms ``[x, e]``."""
    if side not in ('left', 'right'):
        raise ValueError(f'side must be left or right, got {side!r}.')
    return Step(StepKind.APPLY_AD, target, (source,), {'by': by, 'side': side}, anchor)


def combine(target: str, sources: Sequence[str], fn: Callable = None, coefficients: Mapping = None,
            anchor: str = '') -> Step:
    """Either ``fn(alg, {name: {label: element}})`` yields pairs, or ``coefficients`` maps labels to scalars."""
    if (fn is None) == (coefficients is None):
        raise ValueError('Give exactly one of fn and coefficients.')
    return Step(StepKind.LINEAR_COMBINE, target, tuple(sources), {'fn': fn, 'coefficients': coefficients}, anchor)


def symmetry(target: str, source: str, which: str = 'auto', anchor: str = '') -> Step:
    return Step(StepKind.APPLY_SYMMETRY, target, (source,), {'which': which}, anchor)


def weyl(target: str, source: str, word: Sequence[int], anchor: str = '') -> Step:
    return Step(StepKind.TRANSPORT, target, (source,), {'word': tuple(word)}, anchor)


def solve(*sources: str, prefer_last: Callable = None, solves: Callable = None, anchor: str = '') -> Step:
    # language=rst prefix="    "
    """Solve the rows of ``sources``.

    ``prefer_last(alg)`` lists unknowns to eliminate last; ``solves(alg)`` lists the symbols
    that must have a rule once the step is done.
    """
    return Step(StepKind.SOLVE, '', tuple(sources), {'prefer_last': prefer_last, 'solves': solves}, anchor)


def saturate(*sources: str, generators: Callable, prefer_last: Callable = None, solves: Callable = None,
             max_rounds: int = 12, anchor: str = '') -> Step:
    return Step(StepKind.SATURATE, '', tuple(sources),
                {'generators': generators, 'prefer_last': prefer_last, 'solves': solves, 'max_rounds': max_rounds},
                anchor)


def compare(checks: Callable, target: str = '', release: bool = True, anchor: str = '') -> Step:
    """``checks(alg, workspace)`` yields :class:`Check` objects or ``(label, lhs, rhs)`` triples."""
    return Step(StepKind.NORMALIZE_COMPARE, target, (), {'checks': checks, 'release': release}, anchor)


def register(name: str, family: Callable = None, substitutions: Callable = None, statement: str = '',
             provenance: Provenance = Provenance.DERIVED, ps_degree: int = None, anchor: str = '',
             extension: Callable = None) -> Step:
    # language=rst prefix="    "
    """Register a family built by ``family(alg)``, substitutions from ``substitutions(alg)``, a
    symmetry extension built by ``extension(alg)``, or a bare identity.

    A family is compared with every bracket the knowledge base already determines first, see
    :func:`check_family`.

    With ``ps_degree`` the letters ``P_s(x)`` of that degree also start to transform like ``g``.
    """
    return Step(StepKind.REGISTER, name, (),
                {'family': family, 'substitutions': substitutions, 'statement': statement,
                 'provenance': provenance, 'ps_degree': ps_degree, 'extension': extension}, anchor)


# operations

def apply_ad(alg: DdcaAlgebra, e: DdcaElement, x: Union[LieElement, DdcaElement], side: str = 'right') -> DdcaElement:
    """``[e, x]`` (or ``[x, e]``) in normal form; held brackets of ``e`` unfold."""
    if isinstance(x, LieElement):
        x = alg.lie(x)
    return alg.bracket(e, x) if side == 'right' else alg.bracket(x, e)


def _domain(alg: DdcaAlgebra, cls: int, degree: Optional[int]) -> List[Symbol]:
    dim = alg.frame.dim
    if cls == SymbolClass.W:
        kb = alg.kb
        return sorted({sym for sym in list(kb.definitions) + list(kb.substitutions) if kind(sym) == WKind.OPAQUE})
    if cls == SymbolClass.LIE:
        return [lie(i) for i in range(dim)]
    if cls == SymbolClass.P:
        return [P(i) for i in range(dim)]
    if cls == SymbolClass.P_S:
        degrees = sorted(alg.kb.ps_degrees) if degree is None else [degree]
        return [Ps(i, s) for s in degrees for i in range(dim)]
    side = 'u' if cls == SymbolClass.CUR_U else 'v'
    degrees = range(1, alg.smax + 1) if degree is None else [degree]
    return [cur(side, i, s) for s in degrees for i in range(dim)]


def check_family(alg: DdcaAlgebra, family: Family) -> int:
    # language=rst prefix="    "
    """Compare every instance of ``family`` with the bracket the knowledge base already gives.

    The domain is the basis of ``g`` in each current degree up to ``smax`` and the opaque symbols
    with a rule. Instances whose current bracket still has unknowns are left to the family.

    :return: the number of instances that agreed.
    :raises RegistrationError: when an instance contradicts a bracket that is already determined.
    """
    c1, d1, c2, d2 = family.key
    agreed = 0
    for x in _domain(alg, c1, d1):
        for y in _domain(alg, c2, d2):
            if not x < y or not family.matches(x, y):
                continue
            value = family.rule(alg, x, y)
            if value is None:
                continue
            known = alg.bracket(alg.symbol(x), alg.symbol(y))
            diff = alg.release(known - value)
            if not diff:
                agreed += 1
            elif not diff.unknowns():
                frame = alg.frame
                raise RegistrationError(f'{family.name}: the rule gives {value.render()} for '
                                        f'[{render_word((x,), frame)}, {render_word((y,), frame)}], the knowledge '
                                        f'base {known.render()}.')
    return agreed


def _commutator_along(alg: DdcaAlgebra, a: DdcaElement, b: DdcaElement, strategy: str) -> DdcaElement:
    total = alg.zero()
    a, b = alg.current(a), alg.current(b)
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            c = c1 * c2
            total = total + (alg.product(w1 + w2, strategy) - alg.product(w2 + w1, strategy)) * c
    return total


class _Failed(Exception):
    def __init__(self, diff: FailureDiff):
        self.diff = diff


class _Runner:
    def __init__(self, script: DerivationScript, alg: DdcaAlgebra, confluence: int):
        self.script = script
        self.alg = alg
        self.confluence = confluence
        self.ws: Workspace = {}
        self.checks = 0
        self.confluence_checks = 0
        self.number = 0

    def fail(self, step: Step, label: str, lhs: DdcaElement, rhs: DdcaElement):
        raise _Failed(FailureDiff.from_elements(self.script.name, self.number, step.kind.value, label, lhs, rhs))

    def rows(self, step: Step) -> List[DdcaElement]:
        return [e for name in step.source for _, e in self.ws[name]]

    def run(self, step: Step):
        getattr(self, step.kind.name.lower())(step)

    def expand_def(self, step: Step):
        self.ws[step.target] = list(step.params['build'](self.alg))

    def apply_ad(self, step: Step):
        out = []
        by, side = step.params['by'], step.params['side']
        for label, e in self.ws[step.source[0]]:
            for suffix, x in by(self.alg, label):
                out.append((f'{label}|{suffix}', apply_ad(self.alg, e, x, side)))
        self.ws[step.target] = out

    def linear_combine(self, step: Step):
        alg = self.alg
        fn, coefficients = step.params['fn'], step.params['coefficients']
        if fn is not None:
            self.ws[step.target] = list(fn(alg, {name: dict(self.ws[name]) for name in step.source}))
            return
        total = alg.zero()
        for name in step.source:
            for label, e in self.ws[name]:
                c = coefficients.get(label)
                if c is not None:
                    total = total + e * c
        self.ws[step.target] = [(step.target, total)]

    def apply_symmetry(self, step: Step):
        which = step.params['which']
        self.ws[step.target] = [(f'{which}({label})', apply_symmetry(self.alg, e, which))
                                for label, e in self.ws[step.source[0]]]

    def transport(self, step: Step):
        word = step.params['word']
        self.ws[step.target] = [(f'w{word}({label})', transport(self.alg, e, word))
                                for label, e in self.ws[step.source[0]]]

    def _after_solve(self, step: Step, result: SolveResult):
        alg = self.alg
        if result.contradictions:
            self.fail(step, 'inconsistent rows', result.contradictions[0], alg.zero())
        solves = step.params.get('solves')
        if solves is not None:
            for sym in solves(alg):
                if sym not in alg.kb.substitutions:
                    value = alg.symbol(sym)
                    self.fail(step, f'unsolved {value.render()}', value, alg.zero())

    def _preferred(self, step: Step):
        prefer = step.params.get('prefer_last')
        return list(prefer(self.alg)) if prefer is not None else []

    def solve(self, step: Step):
        script = self.script
        result = solve_rows(self.alg, self.rows(step), self._preferred(step), script.name,
                            step.anchor or script.anchor)
        self._after_solve(step, result)

    def saturate(self, step: Step):
        script = self.script
        params = step.params
        generators = [self.alg.lie(x) if isinstance(x, LieElement) else x for x in params['generators'](self.alg)]
        result = saturate_rows(self.alg, self.rows(step), generators, self._preferred(step),
                               params['max_rounds'], script.name, step.anchor or script.anchor)
        self._after_solve(step, result)

    def normalize_compare(self, step: Step):
        alg = self.alg
        release = step.params['release']
        verified = []
        budget = self.confluence
        for item in step.params['checks'](alg, self.ws):
            check = item if isinstance(item, Check) else Check(*item)
            lhs = alg.release(check.lhs) if release else alg.current(check.lhs)
            rhs = alg.release(check.rhs) if release else alg.current(check.rhs)
            self.checks += 1
            if lhs != rhs:
                self.fail(step, check.label, lhs, rhs)
            if check.operands is not None and budget > 0:
                budget -= 1
                self.confluence_checks += 1
                a, b = check.operands
                left = alg.release(_commutator_along(alg, a, b, 'leftmost'))
                right = alg.release(_commutator_along(alg, a, b, 'rightmost'))
                if left != right:
                    self.fail(step, f'{check.label} (swap orders)', left, right)
            verified.append((check.label, lhs - rhs))
        if step.target:
            self.ws[step.target] = verified

    def register(self, step: Step):
        alg = self.alg
        kb = alg.kb
        params = step.params
        anchor = step.anchor or self.script.anchor
        identity = Identity(step.target, anchor, params['provenance'], self.script.name, params['statement'])
        if params.get('ps_degree') is not None:
            kb.add_ps_degree(params['ps_degree'], identity)
        if params['family'] is not None:
            family = params['family'](alg)
            family.identity = identity
            agreed = check_family(alg, family)
            logger.debug('%s agrees with %d determined brackets', family.name, agreed)
            kb.add_family(family)
        elif params.get('extension') is not None:
            extension = params['extension'](alg)
            extension.identity = identity
            kb.add_symmetry_extension(extension)
        elif params['substitutions'] is not None:
            for sym, value in params['substitutions'](alg).items():
                kb.add_substitution(sym, value, identity, bump=False)
            kb.register(identity, bump=True)
        else:
            kb.register(identity, bump=True)


def run_script(script: DerivationScript, alg: DdcaAlgebra, order: Sequence[str] = (),
               confluence: int = 1) -> Union[ScriptResult, FailureDiff]:
    # language=rst prefix="    "
    """Replay ``script`` against ``alg``.

    :param order: the registration order the script belongs to, quoted in dependency errors.
    :param confluence: how many comparisons per step are also recomputed along both swap orders.
    :return: a :class:`ScriptResult` when every comparison vanished, the first
        :class:`FailureDiff` otherwise.
    """
    if not isinstance(alg, DdcaAlgebra):
        raise ValueError(f'This function is only compatible with DdcaAlgebra, got {type(alg).__name__}.')
    for name in script.requires:
        alg.kb.require(name, script.name, order)
    runner = _Runner(script, alg, confluence)
    before = len(alg.kb.log)
    started = time.perf_counter()
    logger.info('running %s (%s)', script.name, script.anchor)
    try:
        for runner.number, step in enumerate(script.steps, start=1):
            logger.debug('%s step %d: %s %s', script.name, runner.number, step.kind.value, step.target)
            runner.run(step)
    except _Failed as failure:
        failure.diff.elapsed = time.perf_counter() - started
        logger.warning('%s failed at step %d: %s', script.name, failure.diff.step, failure.diff.label)
        return failure.diff
    except DdcaError:
        logger.exception('%s aborted at step %d', script.name, runner.number)
        raise
    alg.kb.register(Identity(script.name, script.anchor, Provenance.DERIVED, script.name, script.description))
    return ScriptResult(script.name, script.anchor, runner.checks, runner.confluence_checks,
                        [identity.name for identity in alg.kb.log[before:]], time.perf_counter() - started)
