# language=rst
"""Every suite by name, and the entry points built on them.

Suites are looked up by their own name or by the alias of the derivation they replay:

================ =================
alias            suite
================ =================
``section2``     ``presentation``
``section2-psi`` ``kac-moody``
``section3``     ``cartan``
``section4``     ``central``
``section5``     ``two-parameter``
``section6``     ``higher-degree``
``appendixA``    ``p-brackets``
================ =================

>>> get_suite('section6').name
'higher-degree'
>>> 'engine' in SUITES
True
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Type, Union

from ..ddca.higher import criterion_scalar, specialized
from ..ddca.scripts import FailureDiff, run_script
from ..ddca.seeds import z_total
from ..exceptions import ConfigurationError, VerificationFailed
from ..scalarring import ParamScalar
from .base import BaseSuite, SuiteConfig, SuiteReport
from .cartan import CartanSuite
from .central import CentralSuite
from .engine import EngineSuite, IdentitySuite
from .higher_degree import HigherDegreeSuite, extracted_criterion
from .p_brackets import PBracketSuite
from .presentation import KacMoodySuite, PresentationSuite
from .twoparam import TwoParameterSuite

__all__ = ['SUITES', 'ALIASES', 'ScriptEntry', 'get_suite', 'run_suite', 'run_suites', 'find_script',
           'run_script_named', 'list_scripts', 'check_phi_relations', 'centrality_criterion']

logger = logging.getLogger(__name__)

SUITES: Dict[str, Type[BaseSuite]] = {suite.name: suite for suite in (
    IdentitySuite, EngineSuite, PresentationSuite, KacMoodySuite, CartanSuite, CentralSuite, TwoParameterSuite,
    PBracketSuite, HigherDegreeSuite,
)}

ALIASES: Dict[str, str] = {
    'section2': 'presentation',
    'section2-psi': 'kac-moody',
    'section3': 'cartan',
    'section4': 'central',
    'section5': 'two-parameter',
    'section6': 'higher-degree',
    'appendixA': 'p-brackets',
}


class ScriptEntry(NamedTuple):
    suite: str
    alias: Optional[str]
    script: str
    anchor: str
    description: str
    slow: bool

    @property
    def path(self) -> str:
        return f'{self.alias or self.suite}/{self.script}'


def get_suite(name: str) -> BaseSuite:
    """The suite called ``name``, or the suite behind the alias ``name``."""
    key = ALIASES.get(name, name)
    if key not in SUITES:
        known = ', '.join(sorted(SUITES) + sorted(ALIASES))
        raise ConfigurationError(f'Unknown suite {name!r}; expected one of {known}.')
    return SUITES[key]()


def run_suite(name: str, config: Union[SuiteConfig, dict], until: Optional[str] = None) -> SuiteReport:
    # language=rst prefix="    "
    """Run one suite.

    :param config: a :class:`SuiteConfig`, or a mapping of its fields.
    :param until: stop after this script; a slow script named here runs even without ``full``.
    """
    suite = get_suite(name)
    if isinstance(config, dict):
        config = SuiteConfig(**config)
    return suite(config, until)


def _alias(suite: str) -> Optional[str]:
    return next((alias for alias, name in ALIASES.items() if name == suite), None)


def list_scripts(config: Optional[SuiteConfig] = None) -> Iterator[ScriptEntry]:
    """Every script of every suite, in replay order; the higher degree scripts follow ``config.smax``."""
    config = config or SuiteConfig()
    for name, suite_class in SUITES.items():
        for script in suite_class().script_list(config):
            yield ScriptEntry(name, _alias(name), script.name, script.anchor, script.description, script.slow)


def find_script(name: str, config: Optional[SuiteConfig] = None) -> List[ScriptEntry]:
    """The entries of every suite that replays a script called ``name``."""
    return [entry for entry in list_scripts(config) if entry.script == name]


def run_script_named(name: str, config: SuiteConfig, suite: Optional[str] = None) -> SuiteReport:
    # language=rst prefix="    "
    """Replay the suite holding script ``name`` up to and including that script.

    Without ``suite`` the first suite that accepts ``config`` and contains the script is used.
    """
    candidates = [entry.suite for entry in find_script(name, config)]
    if suite is not None:
        suite = ALIASES.get(suite, suite)
        candidates = [candidate for candidate in candidates if candidate == suite]
    if not candidates:
        raise ConfigurationError(f'No suite has a script {name!r}.')
    errors = []
    for candidate in candidates:
        try:
            SUITES[candidate]().check_config(config)
        except ConfigurationError as error:
            errors.append(str(error))
            continue
        return run_suite(candidate, config, until=name)
    raise ConfigurationError(' '.join(errors))


def check_phi_relations(dynkin_type: str, rank: int, **kwargs) -> SuiteReport:
    """Replay the ``presentation`` suite up to the images of the Kac-Moody style relations."""
    return run_suite('presentation', SuiteConfig(dynkin_type, rank, **kwargs), until='phi-relations')


def centrality_criterion(n: int, s: int, specialization: Optional[Tuple[Fraction, Fraction]] = None,
                         confluence: int = 0) -> Union[ParamScalar, Fraction]:
    # language=rst prefix="    "
    """The scalar ``c`` with ``[K(H_34), Z(s)] = c·H_34(u^{s-2})``, computed by normalization.

    Replays the ``higher-degree`` suite on ``sl_n`` with ``smax = s`` through ``k-z-s`` and
    extracts the multiple. With ``specialization = (λ₀, β₀)`` the scalar is evaluated there.

    :raises ConfigurationError: unless ``n ≥ 4`` and ``s ≥ 2``.
    :raises VerificationFailed: when the bracket is not a multiple of ``H_34(u^{s-2})``.
    """
    criterion_scalar(n, s)
    config = SuiteConfig.for_type_a(n, smax=s, full=True, confluence=confluence)
    suite = HigherDegreeSuite()
    suite.check_config(config)
    alg = suite.algebra(config)
    scripts = suite.script_list(config)
    order = [script.name for script in scripts]
    for script in scripts:
        result = run_script(script(alg), alg, order, confluence)
        if not result.passed:
            result.raise_()
        if script.name == f'k-z-{s}':
            break
    value = extracted_criterion(alg, s)
    if value is None:
        h = alg.frame.H_ab(3, 4)
        bracket = alg.bracket(alg.K(h), z_total(alg, s=s))
        target = alg.cur('u', h, s - 2)
        raise VerificationFailed(FailureDiff.from_elements('centrality-criterion', 0, 'normalize-compare',
                                                           f'[K(H34), Z({s})] against H34(u^{s - 2})', bracket, target))
    logger.info('criterion for n=%d, s=%d extracted', n, s)
    if specialization is None:
        return value
    return specialized(value, *specialization)


def run_suites(names: Sequence[str], config: SuiteConfig, jobs: int = 1) -> List[SuiteReport]:
    # language=rst prefix="    "
    """Run several suites on one configuration, ``jobs`` of them at a time in worker processes.

    Every configuration is checked before anything runs, so a bad name or type fails fast. The
    reports come back in the order of ``names``.
    """
    for name in names:
        get_suite(name).check_config(config)
    if jobs <= 1 or len(names) <= 1:
        return [run_suite(name, config) for name in names]
    with ProcessPoolExecutor(max_workers=min(jobs, len(names))) as pool:
        return list(pool.map(run_suite, names, [config] * len(names)))
