import json

import pytest

from ddca_verify.ddca.higher import criterion_scalar, specializations
from ddca_verify.ddca.scripts import FailureDiff, ScriptResult
from ddca_verify.exceptions import ConfigurationError
from ddca_verify.reports import SCHEMA_VERSION, render_json, render_text, to_json, write_report
from ddca_verify.suites.base import Skipped, SuiteConfig, SuiteReport
from ddca_verify.suites.registry import ALIASES, SUITES, centrality_criterion, check_phi_relations, find_script, \
    get_suite, list_scripts, run_script_named, run_suite, run_suites


@pytest.fixture
def reports():
    passing = SuiteReport('cartan', 'Cartan operands', SuiteConfig('B', 3), [
        ScriptResult('kq-cartan', 'Cartan operands', 4, 1, ['kq-cartan']),
        Skipped('kq-orthogonal', 'orthogonal roots', 'slow; run with full=True'),
    ], [{'name': 'kq-cartan'}], 'abc', {'criterion(2)': '16*beta**2'}, {'swaps': 3}, {'kq-cartan': 0.5, 'total': 0.7})
    failing = SuiteReport('central', 'central elements', SuiteConfig('B', 3), [
        FailureDiff('cb-relation', 2, 'normalize-compare', 'C against B', 'a', 'b', 'a - b', 'a'),
    ], [], 'def', {}, {}, {'total': 0.1})
    return passing, failing


class TestRegistry:
    def test_aliases(self):
        """Assert that every alias names a registered suite"""
        assert set(ALIASES.values()) <= set(SUITES)
        assert get_suite('section6').name == 'higher-degree'
        assert get_suite('appendixA').name == 'p-brackets'
        assert get_suite('engine').name == 'engine'

    def test_unknown_suite(self):
        with pytest.raises(ConfigurationError):
            get_suite('section9')

    def test_wrong_type(self):
        """Assert that the presentation suite refuses type A"""
        with pytest.raises(ConfigurationError):
            run_suite('section2', SuiteConfig('A', 3))
        with pytest.raises(ConfigurationError):
            check_phi_relations('A', 3)

    def test_config_mapping(self):
        report = run_suite('cartan', {'dynkin_type': 'B', 'rank': 3}, until='kq-cartan')
        assert report.config == SuiteConfig('B', 3)

    def test_list_scripts(self):
        """Assert that the script listing carries aliases, anchors and slow marks"""
        entries = list(list_scripts(SuiteConfig.for_type_a(4, smax=2)))
        paths = {entry.path for entry in entries}
        assert 'section6/ps-definition-2' in paths
        assert 'engine/pbw-properties' in paths
        assert all(entry.anchor for entry in entries)
        assert next(entry for entry in entries if entry.script == 'k-z-2').slow

    def test_find_script(self):
        suites = {entry.suite for entry in find_script('z-central')}
        assert suites == {'two-parameter', 'p-brackets', 'higher-degree'}

    def test_run_script_named(self):
        report = run_script_named('kq-cartan-auto', SuiteConfig('B', 3))
        assert report.suite in ('cartan', 'central', 'presentation')
        assert report.results[-1].script == 'kq-cartan-auto'
        with pytest.raises(ConfigurationError):
            run_script_named('phi-relations', SuiteConfig('A', 3))
        with pytest.raises(ConfigurationError):
            run_script_named('no-such-script', SuiteConfig())

    def test_run_suites_checks_first(self):
        """Assert that a bad suite in the list fails before anything runs"""
        with pytest.raises(ConfigurationError):
            run_suites(['cartan', 'section6'], SuiteConfig('B', 3), jobs=2)

    def test_criterion_range(self):
        with pytest.raises(ConfigurationError):
            centrality_criterion(3, 2)
        with pytest.raises(ConfigurationError):
            centrality_criterion(4, 1)

    @pytest.mark.slow
    def test_criterion(self):
        """Assert that the normalized bracket [K(H_34), Z(2)] gives the closed form criterion"""
        assert centrality_criterion(4, 2) == criterion_scalar(4, 2)
        for point in specializations(4):
            assert centrality_criterion(4, 2, point) == 0


class TestReports:
    def test_json_layout(self, reports):
        """Assert that timings sit in their own block and the schema version is recorded"""
        data = to_json(reports)
        assert data['schema_version'] == SCHEMA_VERSION
        assert data['passed'] is False
        assert data['timing']['cartan']['total'] == 0.7
        assert all('timing' not in suite for suite in data['suites'])
        assert 'timing' not in to_json(reports, timing=False)

    def test_json_is_canonical(self, reports):
        text = render_json(reports)
        assert json.loads(text)['suites'][0]['values'] == {'criterion(2)': '16*beta**2'}
        assert text == render_json(reports)
        assert text.endswith('\n')

    def test_text(self, reports):
        text = render_text(reports)
        assert 'PASS  kq-cartan' in text
        assert 'SKIP  kq-orthogonal' in text
        assert 'FAIL  cb-relation  at step 2: C against B' in text
        assert 'md5 abc' in text
        assert text.rstrip().endswith('verification failed')
        assert 'time:' not in render_text(reports, timing=False)

    def test_incomplete(self, reports):
        """Assert that a report with skipped scripts is rendered as incomplete rather than passed"""
        passing, _ = reports
        assert not passing.complete
        assert not passing.failures
        text = render_text([passing])
        assert ': INCOMPLETE' in text
        assert text.rstrip().endswith('incomplete: 1 scripts skipped; run with --full')
        data = to_json([passing])
        assert data['passed'] is False
        assert data['complete'] is False

    def test_write(self, reports, tmp_path):
        out = tmp_path / 'report.json'
        write_report(reports, 'json', out)
        assert json.loads(out.read_text(encoding='utf-8'))['schema_version'] == SCHEMA_VERSION
        with pytest.raises(ValueError):
            write_report(reports, 'xml')
