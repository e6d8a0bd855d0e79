"""
Provides functions that compute and verify parabolic contractions.
"""

import asyncio
from functools import partial

from .request import build_config
from .response import build_degrees, build_info, to_document
from .types import CheckFailure
from .verify import run_suite


async def _in_executor(function, *args):
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, partial(function, *args))

async def info(**kwargs):
    """
    Computes the dimensions of ``g``, ``p``, ``n``, the Levi subalgebra and ``q``,
    the Jordan type and certificate of a Richardson element and the index of ``q``.

    - ``lie_type``: The classical family (``A``, ``B``, ``C``, ``D`` or ``GL``).
    - ``rank``: The rank. Can be omitted when a composition is given.
    - ``composition``: The flag composition, as a list or a comma-separated string.
    - ``central``: The size of the central block for types B, C and D.
    - ``trials``: The number of random trials for the searches and the index.
    - ``seed``: The run seed.
    """

    cfg = build_config('info', kwargs)
    return await _in_executor(build_info, cfg)

async def degrees(**kwargs):
    """
    Computes the degree combinatorics of a Richardson partition: the dual and modified
    partitions, the Levi type, the slice degree multiset and the bi-degree table.

    - ``lie_type``: The classical family (``A``, ``B``, ``C`` or ``GL``).
    - ``partition``: The partition, as a list or a comma-separated string.
    """

    cfg = build_config('degrees', kwargs)
    return await _in_executor(build_degrees, cfg)

async def run_verification(suite, **kwargs):
    """
    Runs a verification suite and returns its ``SuiteReport``.

    - ``suite``: One of ``coadjoint``, ``adjoint``, ``subregular``, ``counterexample``
    and ``combinatorics``.
    - ``raise_check_failures``: Sets whether a ``CheckFailure`` will be raised if a check
    fails. A value of ``True`` guarantees that the returned report passed.
    - ``lie_type``, ``rank``, ``composition``, ``central``: The configuration, as for ``info``.
    Fixed for the counterexample suite and unused by the combinatorics suite.
    - ``trials``: Random points for index, Jacobian and slice checks ``[1, ...]``.
    - ``probes``: Random points for invariance and Kostant probes.
    - ``certify``: Random points for certifying component degrees.
    - ``bound``: Random coordinates are drawn from ``[-bound, bound]``.
    - ``seed``: The run seed.
    - ``workers``: The width of the thread pool running checks.
    """

    cfg = build_config('verify', {**kwargs, 'suite': suite})
    report = await run_suite(cfg.suite_config(), cfg.workers)

    if kwargs.get('raise_check_failures', False) and not report.passed:
        failed = ', '.join(record.name for record in report.failures())
        raise CheckFailure(f'{report.suite} suite failed: {failed}', to_document(report, cfg))

    return report
