# language=rst
"""Suites: ordered groups of derivation scripts run against one algebra.

A suite class lists :class:`BaseScript` subclasses in its ``scripts`` attribute. Calling a suite
with a :class:`SuiteConfig` builds a fresh algebra for the suite's presentation, instantiates
the scripts and replays them in order, so the knowledge base grows exactly as the derivation
does. Scripts marked ``slow`` only run when the config asks for a full replay.
"""
import logging
import time
from abc import ABC
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Dict, List, Optional, Sequence, Tuple, Type, Union

from ..ddca.rewriting import DdcaAlgebra
from ..ddca.scripts import DerivationScript, FailureDiff, ScriptResult, Step, run_script
from ..ddca.seeds import MODES, new_algebra
from ..exceptions import ConfigurationError
from ..helpers import instantiate
from ..liealg import ChevalleyFrame, frame_for
from ..rootsys import DYNKIN_TYPES

__all__ = ['SuiteConfig', 'SuiteReport', 'Skipped', 'BaseScript', 'BaseSuite']

logger = logging.getLogger(__name__)

Specialization = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SuiteConfig:
    # language=rst prefix="    "
    """Everything a suite run depends on.

    ``rank`` is the rank of ``g``; for type ``A`` use :meth:`for_type_a` to give ``n`` instead.
    ``specializations`` lists ``(λ₀, β₀)`` pairs at which symbolic results are also evaluated.
    """
    dynkin_type: str = 'A'
    rank: int = 3
    smax: int = 4
    specializations: Tuple[Specialization, ...] = ()
    jobs: int = 1
    confluence: int = 1
    full: bool = False

    @classmethod
    def for_type_a(cls, n: int, **kwargs) -> 'SuiteConfig':
        return cls('A', n - 1, **kwargs)

    @property
    def n(self) -> Optional[int]:
        return self.rank + 1 if self.dynkin_type == 'A' else None

    @property
    def frame(self) -> ChevalleyFrame:
        return frame_for(self.dynkin_type, self.rank)

    def validate(self) -> 'SuiteConfig':
        if self.dynkin_type not in DYNKIN_TYPES:
            raise ConfigurationError(f'Unknown Dynkin type {self.dynkin_type!r}; expected one of {DYNKIN_TYPES}.')
        minimum = 4 if self.dynkin_type == 'D' else 3
        if self.rank < minimum:
            raise ConfigurationError(f'Type {self.dynkin_type} needs rank at least {minimum}, got {self.rank}.')
        if self.smax < 1:
            raise ConfigurationError(f'smax must be at least 1, got {self.smax}.')
        if self.jobs < 1:
            raise ConfigurationError(f'jobs must be at least 1, got {self.jobs}.')
        if self.confluence < 0:
            raise ConfigurationError(f'confluence must be non negative, got {self.confluence}.')
        for pair in self.specializations:
            if len(pair) != 2:
                raise ConfigurationError(f'A specialization is a (λ, β) pair, got {pair!r}.')
        return self

    def to_json(self) -> dict:
        return {'type': self.dynkin_type, 'rank': self.rank, 'n': self.n, 'smax': self.smax,
                'specializations': [[str(Fraction(lam)), str(Fraction(beta))] for lam, beta in self.specializations],
                'confluence': self.confluence, 'full': self.full}


@dataclass
class Skipped:
    script: str
    anchor: str
    reason: str

    passed = False
    elapsed = 0.0

    def to_json(self) -> dict:
        return {'script': self.script, 'anchor': self.anchor, 'passed': False, 'skipped': self.reason}


Result = Union[ScriptResult, FailureDiff, Skipped]


@dataclass
class SuiteReport:
    # language=rst prefix="    "
    """Outcome of one suite run.

    A report with skipped scripts is incomplete and does not count as passed, though it has no
    :attr:`failures`.

    Everything except :attr:`timing` is a function of the config, so two runs of the same config
    serialize identically once the timing block is dropped.
    """
    suite: str
    anchor: str
    config: SuiteConfig
    results: List[Result] = field(default_factory=list)
    registrations: List[dict] = field(default_factory=list)
    kb_digest: str = ''
    values: Dict[str, object] = field(default_factory=dict)
    stats: Dict[str, int] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def skipped(self) -> List[Skipped]:
        return [result for result in self.results if isinstance(result, Skipped)]

    @property
    def complete(self) -> bool:
        return not self.skipped

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[FailureDiff]:
        return [result for result in self.results if isinstance(result, FailureDiff)]

    def to_json(self, timing: bool = True) -> dict:
        data = {
            'suite': self.suite,
            'anchor': self.anchor,
            'passed': self.passed,
            'complete': self.complete,
            'config': self.config.to_json(),
            'scripts': [result.to_json() for result in self.results],
            'values': {key: str(value) for key, value in sorted(self.values.items())},
            'kb': {'md5': self.kb_digest, 'registrations': self.registrations},
            'stats': dict(sorted(self.stats.items())),
        }
        if timing:
            data['timing'] = dict(self.timing)
        return data


class BaseScript(ABC):
    # language=rst prefix="    "
    """Base class for objects that write one derivation script for an algebra.

    Subclasses set the class attributes and implement :meth:`value`, which returns the steps.
    ``modes`` lists the presentations the script is written for.
    """
    name: ClassVar[str] = ''
    anchor: ClassVar[str] = ''
    description: ClassVar[str] = ''
    requires: ClassVar[Tuple[str, ...]] = ()
    modes: ClassVar[Tuple[str, ...]] = MODES
    slow: ClassVar[bool] = False

    def value(self, alg: DdcaAlgebra) -> Sequence[Step]:
        raise NotImplementedError

    def __call__(self, alg: DdcaAlgebra) -> DerivationScript:
        if not isinstance(alg, DdcaAlgebra):
            raise ValueError(f'This function is only compatible with DdcaAlgebra, got {type(alg).__name__}.')
        if alg.kb.mode not in self.modes:
            raise ConfigurationError(f'Script {self.name!r} is written for the {", ".join(self.modes)} '
                                     f'presentation, not {alg.kb.mode}.')
        return DerivationScript(self.name, self.anchor, tuple(self.value(alg)), tuple(self.requires),
                                self.description)


class BaseSuite(ABC):
    # language=rst prefix="    "
    """Base class for verification suites.

    ``scripts`` is replayed in order; :meth:`extras` may add computed values (such as a scalar
    criterion) to the report after the scripts ran.
    """
    name: ClassVar[str] = ''
    anchor: ClassVar[str] = ''
    mode: ClassVar[str] = 'general'
    dynkin_types: ClassVar[Tuple[str, ...]] = DYNKIN_TYPES
    min_rank: ClassVar[int] = 1
    scripts: ClassVar[Sequence[Union[BaseScript, Type[BaseScript]]]] = ()

    def check_config(self, config: 'SuiteConfig'):
        if not isinstance(config, SuiteConfig):
            raise ValueError(f'This function is only compatible with SuiteConfig, got {type(config).__name__}.')
        config.validate()
        if config.dynkin_type not in self.dynkin_types:
            raise ConfigurationError(f'Suite {self.name!r} runs on types {", ".join(self.dynkin_types)}, '
                                     f'not {config.dynkin_type}.')
        if config.rank < self.min_rank:
            raise ConfigurationError(f'Suite {self.name!r} needs rank at least {self.min_rank}, got {config.rank}.')

    def algebra(self, config: SuiteConfig) -> DdcaAlgebra:
        return new_algebra(config.frame, self.mode, config.smax)

    def script_list(self, config: SuiteConfig) -> List[BaseScript]:
        """The scripts replayed for ``config``, in order."""
        return instantiate(self.scripts)

    def script_names(self, config: Optional[SuiteConfig] = None) -> List[str]:
        return [script.name for script in self.script_list(config or SuiteConfig())]

    def extras(self, alg: DdcaAlgebra, config: SuiteConfig, report: SuiteReport):
        pass

    def value(self, config: SuiteConfig, until: Optional[str] = None) -> SuiteReport:
        alg = self.algebra(config)
        scripts = self.script_list(config)
        order = [script.name for script in scripts]
        if until is not None and until not in order:
            raise ConfigurationError(f'Suite {self.name!r} has no script {until!r}.')
        report = SuiteReport(self.name, self.anchor, config)
        skipped = set()
        started = time.perf_counter()
        for script in scripts:
            blocked = [name for name in script.requires if name in skipped]
            if script.slow and not config.full and script.name != until:
                skipped.add(script.name)
                report.results.append(Skipped(script.name, script.anchor, 'slow; run with full=True'))
            elif blocked:
                skipped.add(script.name)
                report.results.append(Skipped(script.name, script.anchor, f'needs {", ".join(blocked)}'))
            else:
                result = run_script(script(alg), alg, order, config.confluence)
                report.results.append(result)
                report.timing[script.name] = result.elapsed
                if not result.passed:
                    logger.warning('%s stopped at %s', self.name, script.name)
                    break
            if script.name == until:
                break
        else:
            if until is None:
                self.extras(alg, config, report)
        report.timing['total'] = time.perf_counter() - started
        report.registrations = [identity.to_json() for identity in alg.kb.log]
        report.kb_digest = alg.kb.digest()
        report.stats = dict(alg.stats)
        return report

    def __call__(self, config: SuiteConfig, until: Optional[str] = None) -> SuiteReport:
        self.check_config(config)
        logger.info('suite %s on %s', self.name, config.frame.rs.label)
        return self.value(config, until)
