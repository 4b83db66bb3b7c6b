import json

import pytest

from ddca_verify import cli
from ddca_verify.ddca.scripts import FailureDiff
from ddca_verify.exceptions import InvariantViolation
from ddca_verify.suites.base import Skipped, SuiteConfig, SuiteReport


class TestArguments:
    @pytest.mark.parametrize('argv', [
        ['--suite', 'section2', '--type', 'A'],
        ['--suite', 'nope'],
        ['--suite', 'cartan', '--n', '3'],
        ['--suite', 'section6', '--n', '5', '--rank', '3'],
        ['--suite', 'section3', '--type', 'B', '--n', '4'],
        ['--suite', 'section6', '--lambda', '1'],
        ['--suite', 'section6', '--n', '4', '--smax', '0'],
        ['--script', 'no-such-script'],
        [],
    ])
    def test_configuration_errors(self, argv, capsys):
        """Assert that configurations that cannot run exit with status 2"""
        assert cli.main(argv) == cli.EXIT_CONFIG
        assert 'error' in capsys.readouterr().err

    @pytest.mark.parametrize('argv', [['--report', 'xml'], ['--lambda', 'one'], ['--suite', 'a', '--list']])
    def test_parser_errors(self, argv):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2

    def test_config(self):
        args = cli.build_parser().parse_args(['--n', '5', '--smax', '3', '--lambda', '4', '--beta', '-1/2'])
        config = cli.config_from_args(args)
        assert (config.dynkin_type, config.rank, config.smax) == ('A', 4, 3)
        assert config.specializations == ((4, cli.Fraction(-1, 2)),)

    @pytest.mark.parametrize('value, expected', [('-1/2', (-1, 2)), ('-3', (-3, 1)), ('-0.5', (-1, 2))])
    def test_negative_rationals(self, value, expected):
        """Assert that negative values of --beta are read as values, not options"""
        args = cli.build_parser().parse_args(['--lambda', value, '--beta', value])
        assert args.lam == args.beta == cli.Fraction(*expected)


class TestMain:
    def test_list(self, capsys):
        """Assert that --list names every script under its alias with its anchor"""
        assert cli.main(['--list', '--smax', '2']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert 'higher-degree (section6)' in out
        assert 'section6/ps-definition-2' in out
        assert '[slow]' in out

    def test_json_report(self, tmp_path):
        out = tmp_path / 'cartan.json'
        argv = ['--script', 'kq-cartan', '--type', 'B', '--rank', '3', '--report', 'json', '--out', str(out)]
        assert cli.main(argv) == cli.EXIT_OK
        data = json.loads(out.read_text(encoding='utf-8'))
        assert data['passed'] is True
        assert data['suites'][0]['scripts'][-1]['script'] == 'kq-cartan'

    def test_failure_exit(self, monkeypatch, capsys):
        """Assert that a failed verification exits with status 1 and prints the diff"""
        def run_suites(names, config, jobs):
            failure = FailureDiff('z-lie', 3, 'normalize-compare', 'forced', 'a', 'b', 'a - b', 'a')
            return [SuiteReport('two-parameter', 'anchor', config, [failure])]

        monkeypatch.setattr(cli, 'run_suites', run_suites)
        assert cli.main(['--suite', 'section5']) == cli.EXIT_FAILED
        assert 'FAIL  z-lie' in capsys.readouterr().out

    def test_incomplete_exit(self, monkeypatch, capsys):
        """Assert that skipped scripts give status 4 and never the passed message"""
        def run_suites(names, config, jobs):
            skipped = Skipped('ps-definition-2', 'existence of P_s', 'slow; run with full=True')
            return [SuiteReport('higher-degree', 'anchor', config, [skipped])]

        monkeypatch.setattr(cli, 'run_suites', run_suites)
        assert cli.main(['--suite', 'section6', '--n', '4', '--smax', '3']) == cli.EXIT_INCOMPLETE
        out = capsys.readouterr().out
        assert 'all suites passed' not in out
        assert 'SKIP  ps-definition-2' in out

    def test_invariant_exit(self, monkeypatch):
        """Assert that a broken internal invariant exits with status 3"""
        def run_suites(names, config, jobs):
            raise InvariantViolation('weight did not decrease')

        monkeypatch.setattr(cli, 'run_suites', run_suites)
        assert cli.main(['--suite', 'section5', '-v']) == cli.EXIT_INVARIANT

    @pytest.mark.slow
    def test_suite_run(self, capsys):
        assert cli.main(['--suite', 'section3', '--type', 'B', '--rank', '3', '--full']) == cli.EXIT_OK
        assert 'all suites passed' in capsys.readouterr().out


def test_default_config():
    args = cli.build_parser().parse_args([])
    assert cli.config_from_args(args) == SuiteConfig()
