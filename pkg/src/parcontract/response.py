"""
Handles report assembly, JSON serialization and text rendering.
"""

import json
import logging

from . import partitions
from .algebra import constants
from .algebra.contraction import contract, index_of
from .algebra.liealg import build_algebra, build_parabolic, levi_dimension
from .algebra.richardson import centraliser, find_richardson, jordan_type
from .types import CheckStatus, DegreeReport, InfoReport, SuiteReport

logger = logging.getLogger(__name__)

_STATUS_MARKS = {
    CheckStatus.PASS: 'ok',
    CheckStatus.FAIL: 'FAIL',
    CheckStatus.INFO: 'info'
}


# report assembly

def build_info(cfg):
    """
    Computes the dimensions, Richardson data and index of a parabolic contraction.

    - ``cfg``: A ``RunConfig`` of the info command.
    """

    t, spec = cfg.lie_type, cfg.spec
    a = build_algebra(t)
    p = build_parabolic(a, spec)
    q = contract(p)

    element = find_richardson(p, cfg.trials, cfg.seed)
    levi = levi_dimension(spec, t)
    dim_n = len(p.idx_n)

    return InfoReport({
        'lie_type': t.label(),
        'composition': spec.composition,
        'central': spec.central,
        'levi_type': [block.label() for block in p.levi_blocks()],
        'dimensions': {
            'g': a.dim,
            'p': levi + dim_n,
            'n': dim_n,
            'levi': levi,
            'q': q.dim
        },
        'jordan_type': jordan_type(element),
        'certificate_rank': element.certificate,
        'centraliser_dim': centraliser(a, element).dim,
        'index': index_of(q, cfg.trials, cfg.seed, cfg.bound),
        'trials': cfg.trials,
        'seed': cfg.seed
    })

def build_degrees(cfg):
    """
    Computes the degree combinatorics of a Richardson partition.

    - ``cfg``: A ``RunConfig`` of the degrees command.
    """
    return DegreeReport(partitions.degree_profile(cfg.lie_type, cfg.partition).asraw())


# serialization

def _strip_timings(data):
    if isinstance(data, dict):
        return {k: _strip_timings(v) for k, v in data.items() if k != 'runtime_ms'}
    if isinstance(data, list):
        return [_strip_timings(v) for v in data]
    return data

def _suite_document(report):
    data = report.asdict()
    return {
        'config': data['config'],
        'checks': [
            {key: check[key] for key in ('name', 'anchor', 'status', 'witness', 'bound',
                                         'seed', 'runtime_ms')}
            for check in data['checks']
        ],
        'summary': {
            'status': data['status'],
            'runtime_ms': data['runtime_ms'],
            'seed': data['seed'],
            'failed': [check.name for check in report.failures()]
        }
    }

def to_document(report, cfg, timings=False):
    """
    Returns the JSON document of a report.
    Run times are only included when ``timings`` is set, so output is reproducible.
    """

    if isinstance(report, SuiteReport):
        document = _suite_document(report)
    else:
        document = {'config': cfg.asdict(), 'result': report.asdict()}

    document = {'schema_version': constants.SCHEMA_VERSION, 'command': cfg.command, **document}
    return document if timings else _strip_timings(document)

def to_json(report, cfg, timings=False):
    """Serializes a report with sorted keys."""
    return json.dumps(to_document(report, cfg, timings), indent=2, sort_keys=True)

def write_json(report, cfg, path, timings=False):
    """Writes the JSON report to ``path``."""

    with open(path, 'w', encoding='utf-8') as file:
        file.write(to_json(report, cfg, timings))
        file.write('\n')

    logger.info('report written to %s', path)


# text rendering

def _join(values):
    return ','.join(map(str, values))

def _table(rows):
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return '\n'.join(
        '  '.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    )

def render_info(report):
    """Renders an ``InfoReport`` as text."""

    composition = _join(report.composition)
    rows = [(name, value) for name, value in report.dimensions.items()]

    return '\n'.join([
        f'{report.lie_type} ({composition};{report.central})',
        f'levi type: {" + ".join(report.levi_type)}',
        _table([('dim', '')] + rows),
        f'richardson jordan type: ({_join(report.jordan_type)})'
        f' certificate rank {report.certificate_rank}',
        f'dim g_e: {report.centraliser_dim}',
        f'index of q: {report.index} ({report.trials} trials, seed {report.seed})'
    ])

def render_degrees(report):
    """Renders a ``DegreeReport`` as text."""

    lines = [
        f'type {report.lie_type}, partition ({_join(report.partition)})',
        f'dual: ({_join(report.dual)})'
    ]
    if report.modified is not None:
        lines.append(f'modified: ({_join(report.modified)})')

    lines.append(f'levi type: {" + ".join(report.levi_type)}')
    lines.append(f'degree multiset: {{{_join(report.degree_multiset)}}}')

    rows = [('deg F', 'deg_p', 'deg_n-')] + [
        (degree, p_degree, n_degree)
        for degree, (p_degree, n_degree) in zip(report.invariant_degrees, report.bidegrees)
    ]
    lines.append(_table(rows))

    sums = report.sums
    lines.append(f'sum deg_n- = {sums["nminus_degrees"]}, dim n = {sums["dim_n"]}')
    lines.append(
        f'sum of slice degrees = {sums["degree_multiset"]}, dim b(l) = {sums["dim_borel_levi"]}')
    lines.append(f'matches levi degrees: {"yes" if report.matches_levi else "no"}')

    return '\n'.join(lines)

def render_suite(report):
    """Renders a ``SuiteReport`` as a table of check outcomes."""

    rows = [('check', 'status', 'anchor')] + [
        (record.name, _STATUS_MARKS[record.status], record.anchor)
        for record in report.checks
    ]
    lines = [f'suite {report.suite}: {report.status.value}', _table(rows)]

    for record in report.failures():
        lines.append(f'{record.name} witness: {json.dumps(record.asdict()["witness"], sort_keys=True)}')

    return '\n'.join(lines)

def render(report):
    """Renders any report as text."""

    if isinstance(report, SuiteReport):
        return render_suite(report)
    if isinstance(report, InfoReport):
        return render_info(report)
    return render_degrees(report)
