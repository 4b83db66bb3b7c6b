from fractions import Fraction

import pytest

from ddca_verify.ddca.higher import commuting_atoms
from ddca_verify.ddca.scripts import DerivationScript, FailureDiff, ScriptResult, StepKind, run_script
from ddca_verify.ddca.seeds import new_algebra
from ddca_verify.exceptions import ConfigurationError
from ddca_verify.suites.base import Skipped, SuiteConfig, SuiteReport
from ddca_verify.suites.cartan import CartanSuite
from ddca_verify.suites.engine import EngineSuite, IdentitySuite
from ddca_verify.suites.higher_degree import DegreeScript, HigherDegreeSuite, PsDefinition, base_scripts, \
    degree_scripts
from ddca_verify.suites.presentation import PsiRelations
from ddca_verify.suites.registry import run_suite


def assert_passed(report):
    messages = [failure.render() for failure in report.failures]
    assert report.passed, '\n\n'.join(messages)


class TestSuiteConfig:
    def test_defaults(self):
        config = SuiteConfig()
        assert config.validate() is config
        assert config.n == 4
        assert config.frame.rs.label

    def test_type_a(self):
        config = SuiteConfig.for_type_a(5, smax=3)
        assert (config.dynkin_type, config.rank, config.smax) == ('A', 4, 3)
        assert SuiteConfig('B', 3).n is None

    @pytest.mark.parametrize('kwargs', [
        {'dynkin_type': 'E'},
        {'dynkin_type': 'A', 'rank': 2},
        {'dynkin_type': 'D', 'rank': 3},
        {'smax': 0},
        {'jobs': 0},
        {'confluence': -1},
        {'specializations': ((Fraction(1),),)},
    ])
    def test_invalid(self, kwargs):
        """Assert that configurations outside the supported range are rejected"""
        with pytest.raises(ConfigurationError):
            SuiteConfig(**kwargs).validate()

    def test_to_json(self):
        data = SuiteConfig.for_type_a(4, specializations=((Fraction(4), Fraction(-2)),)).to_json()
        assert data['n'] == 4
        assert data['specializations'] == [['4', '-2']]


class TestSuiteChecks:
    def test_types(self):
        """Assert that suites refuse Dynkin types they are not written for"""
        with pytest.raises(ConfigurationError):
            CartanSuite()(SuiteConfig('A', 3))
        with pytest.raises(ConfigurationError):
            HigherDegreeSuite()(SuiteConfig('B', 3))

    def test_until_unknown(self):
        with pytest.raises(ConfigurationError):
            CartanSuite()(SuiteConfig('B', 3), until='nope')

    def test_degree_script_names(self):
        """Assert that each degree gets its own family of scripts"""
        names = [script.name for script in degree_scripts(3)]
        assert names == ['ps-definition-3', 'higher-relation-3', 'w-relations-3', 'z-lie-3', 'z-commutes-3', 'k-z-3',
                         'z-tilde-3']
        with pytest.raises(ValueError):
            PsDefinition(1)
        assert issubclass(PsDefinition, DegreeScript)

    def test_script_list_follows_smax(self):
        suite = HigherDegreeSuite()
        assert 'k-z-4' in suite.script_names(SuiteConfig.for_type_a(4, smax=4))
        assert 'k-z-3' not in suite.script_names(SuiteConfig.for_type_a(4, smax=2))

    def test_identity_suite_adds_nu_for_type_a(self):
        assert 'nu-commutators' in IdentitySuite().script_names(SuiteConfig('A', 3))
        assert 'nu-commutators' not in IdentitySuite().script_names(SuiteConfig('B', 3))


class TestQuickReplays:
    def test_cartan_first_script(self):
        """Assert that the [K, Q] relation with a Cartan operand follows from the root relations"""
        report = run_suite('cartan', SuiteConfig('B', 3), until='kq-cartan')
        assert_passed(report)
        assert [result.script for result in report.results] == ['kq-cartan']
        assert report.values == {}

    def test_two_parameter_z_lie(self):
        report = run_suite('two-parameter', SuiteConfig.for_type_a(4, smax=2), until='z-lie')
        assert_passed(report)
        assert report.results[-1].script == 'z-lie'

    def test_slow_scripts_skip(self):
        """Assert that slow scripts and everything resting on them are skipped without full"""
        report = run_suite('higher-degree', SuiteConfig.for_type_a(4, smax=2))
        skipped = {result.script for result in report.skipped}
        assert 'ps-definition-2' in skipped
        assert 'higher-relation-2' in skipped
        assert report.values['contraction'] == '48'

    def test_skipped_run_is_incomplete(self):
        """Assert that a run with skipped scripts neither passes nor fails, and reports no criterion"""
        report = run_suite('higher-degree', SuiteConfig.for_type_a(4, smax=2))
        assert report.failures == []
        assert not report.complete
        assert not report.passed
        assert not any(key.startswith('criterion') for key in report.values)
        data = report.to_json(timing=False)
        assert data['complete'] is False
        assert all(entry['passed'] is False for entry in data['scripts'] if 'skipped' in entry)

    def test_ps_definition_commuting_brackets(self, sl4):
        """Assert that the degree two brackets of commuting root vectors are solved and D is a lowest weight vector"""
        config = SuiteConfig.for_type_a(4, smax=2)
        suite = HigherDegreeSuite()
        alg = suite.algebra(config)
        for script in base_scripts():
            assert run_script(script(alg), alg).passed
        script = PsDefinition(2)(alg)
        end = next(k for k, step in enumerate(script.steps) if step.kind == StepKind.REGISTER)
        result = run_script(DerivationScript(script.name, script.anchor, script.steps[:end]), alg)
        assert result.passed, result.render() if not result.passed else ''
        assert all(sym in alg.kb.substitutions for sym in commuting_atoms(alg, 2))

    def test_psi_first_stages(self, b3):
        """Assert the ψ chain through the relation for (-θ, θ - α)"""
        alg = new_algebra(b3, 'kac-moody')
        script = PsiRelations()(alg)
        end = max(k for k, step in enumerate(script.steps) if step.anchor == 'theta-minus-alpha') + 1
        result = run_script(DerivationScript(script.name, script.anchor, script.steps[:end]), alg)
        assert result.passed, result.render() if not result.passed else ''
        assert result.checks > 0

    def test_report_is_deterministic(self):
        config = SuiteConfig('B', 3)
        first, second = (run_suite('cartan', config, until='kq-cartan-auto') for _ in range(2))
        assert first.to_json(timing=False) == second.to_json(timing=False)
        assert first.kb_digest == second.kb_digest


@pytest.mark.slow
class TestSuites:
    @pytest.mark.parametrize('dynkin_type, rank', [('B', 3), ('C', 3), ('D', 4)])
    def test_presentation(self, dynkin_type, rank):
        assert_passed(run_suite('presentation', SuiteConfig(dynkin_type, rank)))

    def test_kac_moody(self):
        assert_passed(run_suite('kac-moody', SuiteConfig('B', 3, full=True)))

    @pytest.mark.parametrize('dynkin_type, rank', [('B', 3), ('C', 3), ('D', 4)])
    def test_central(self, dynkin_type, rank):
        assert_passed(run_suite('central', SuiteConfig(dynkin_type, rank)))

    @pytest.mark.parametrize('n', [4, 5])
    def test_two_parameter(self, n):
        assert_passed(run_suite('two-parameter', SuiteConfig.for_type_a(n, smax=2)))

    def test_p_brackets(self):
        assert_passed(run_suite('p-brackets', SuiteConfig.for_type_a(4, smax=2, full=True)))

    def test_higher_degree(self):
        """Assert the full replay through degree 3 and the recorded criterion values"""
        report = run_suite('higher-degree', SuiteConfig.for_type_a(4, smax=3, full=True))
        assert_passed(report)
        assert not any(isinstance(result, Skipped) for result in report.results)
        assert report.values['criterion(2) at λ=4, β=6'] == '0'

    @pytest.mark.parametrize('config', [SuiteConfig('A', 3), SuiteConfig('C', 3)])
    def test_identities(self, config):
        assert_passed(run_suite('identities', config))

    def test_engine(self):
        report = EngineSuite()(SuiteConfig('A', 3, smax=3))
        assert_passed(report)
        assert report.values['swap order checks'] > 0
        assert report.values['termination checks'] > 0


class TestEngineValues:
    def test_values_are_measured(self, sl4):
        """Assert that the engine report carries counted values only"""
        suite = EngineSuite()
        config = SuiteConfig('A', 3, smax=2)
        alg = suite.algebra(config)
        alg.bracket(alg.K(sl4.E(1, 2)), alg.Q(sl4.E(2, 3)))
        passed = ScriptResult('symmetry-coherence', 'anchor', 10, 2, [])
        report = SuiteReport(suite.name, suite.anchor, config, [passed])
        suite.extras(alg, config, report)
        assert report.values['swap order checks'] == 2
        assert report.values['termination checks'] == alg.stats['weight_checks'] > 0
        assert 'invariant violations' not in report.values


class TestFailureReporting:
    def test_failure_stops_the_suite(self, monkeypatch):
        """Assert that the first failing script ends the suite and is reported with its diff"""
        import ddca_verify.suites.base as base

        def fail(script, alg, order, confluence):
            return FailureDiff(script.name, 1, 'normalize-compare', 'forced', 'a', 'b', 'a - b', 'a')

        monkeypatch.setattr(base, 'run_script', fail)
        report = run_suite('cartan', SuiteConfig('B', 3))
        assert not report.passed
        assert len(report.results) == 1
        assert report.failures[0].label == 'forced'
