# language=rst
"""Text and JSON renderings of suite reports.

The JSON document carries a ``schema_version``. Everything a run measures in seconds sits in
one top level ``timing`` block, so two runs of the same configuration produce identical
documents once that block is removed::

    {"schema_version": 1, "passed": true, "complete": true, "suites": [...], "timing": {...}}

A run with skipped scripts is ``complete: false`` and not passed. The text rendering lists the
same content line by line.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO, Union

from .ddca.scripts import FailureDiff
from .suites.base import Skipped, SuiteReport

__all__ = ['SCHEMA_VERSION', 'FORMATS', 'to_json', 'render_json', 'render_text', 'write_report']

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

FORMATS = ('text', 'json')


def to_json(reports: Sequence[SuiteReport], timing: bool = True) -> dict:
    data = {
        'schema_version': SCHEMA_VERSION,
        'passed': all(report.passed for report in reports),
        'complete': all(report.complete for report in reports),
        'suites': [report.to_json(timing=False) for report in reports],
    }
    if timing:
        data['timing'] = {report.suite: {key: round(value, 6) for key, value in report.timing.items()}
                          for report in reports}
    return data


def render_json(reports: Sequence[SuiteReport], timing: bool = True) -> str:
    return json.dumps(to_json(reports, timing), indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def _script_line(result) -> str:
    if isinstance(result, Skipped):
        return f'  SKIP  {result.script}  ({result.reason})'
    if isinstance(result, FailureDiff):
        return f'  FAIL  {result.script}  at step {result.step}: {result.label}'
    extra = f', {result.confluence_checks} confluence' if result.confluence_checks else ''
    registered = f'; registered {", ".join(result.registered)}' if result.registered else ''
    return f'  PASS  {result.script}  [{result.anchor}]  {result.checks} checks{extra}{registered}'


def _summary(reports: Sequence[SuiteReport]) -> str:
    if any(report.failures for report in reports):
        return 'verification failed'
    skipped = sum(len(report.skipped) for report in reports)
    if skipped:
        return f'incomplete: {skipped} scripts skipped; run with --full'
    return 'all suites passed'


def render_text(reports: Sequence[SuiteReport], timing: bool = True) -> str:
    lines = []
    for report in reports:
        config = report.config
        status = 'FAILED' if report.failures else 'INCOMPLETE' if not report.complete else 'PASSED'
        lines.append(f'{report.suite} ({report.anchor}) on {config.frame.rs.label}, smax={config.smax}: {status}')
        lines.extend(_script_line(result) for result in report.results)
        for failure in report.failures:
            lines.append('')
            lines.extend('    ' + line for line in failure.render().splitlines())
        if report.values:
            lines.append('  values:')
            lines.extend(f'    {key} = {value}' for key, value in sorted(report.values.items()))
        lines.append(f'  knowledge base: {len(report.registrations)} identities, md5 {report.kb_digest}')
        if report.stats:
            lines.append('  rewriting: ' + ', '.join(f'{key}={value}' for key, value in sorted(report.stats.items())))
        if timing:
            lines.append(f'  time: {report.timing.get("total", 0.0):.2f}s')
        lines.append('')
    lines.append(_summary(reports))
    return '\n'.join(lines) + '\n'


def write_report(reports: Sequence[SuiteReport], fmt: str = 'text', out: Optional[Union[str, Path]] = None,
                 stream: TextIO = None):
    """Write the rendering in ``fmt`` to the file ``out``, or to ``stream`` (standard output by default)."""
    if fmt not in FORMATS:
        raise ValueError(f'Unknown report format {fmt!r}; expected one of {FORMATS}.')
    text = render_json(reports) if fmt == 'json' else render_text(reports)
    if out is not None:
        Path(out).write_text(text, encoding='utf-8')
        logger.info('report written to %s', out)
    else:
        (stream or sys.stdout).write(text)
