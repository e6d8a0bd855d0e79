"""
Transforms input parameters into validated run configurations.
"""

import os
from dataclasses import dataclass

from .algebra import constants
from .algebra.liealg import LieType, ParabolicSpec, full_spec, validate_spec
from .partitions import Partition, rank_from_partition
from .types import ConfigurationError, Family, OutputFormat, SuiteName, isiterable
from .verify import SuiteConfig

_WORKERS_VARIABLE = 'PARCONTRACT_WORKERS'
_COMMANDS = ('info', 'degrees', 'verify')
_PARAM_MAPS = {
    'lie_type': {
        'name': 'family',
        'type': Family
    },
    'type': {
        'name': 'family',
        'type': Family
    },
    'rank': {
        'name': 'rank',
        'int': True
    },
    'composition': {
        'name': 'composition',
        'list': True
    },
    'central': {
        'name': 'central',
        'int': True
    },
    'central_block': {
        'name': 'central',
        'int': True
    },
    'partition': {
        'name': 'partition',
        'list': True
    },
    'suite': {
        'name': 'suite',
        'type': SuiteName
    },
    'trials': {
        'name': 'trials',
        'int': True
    },
    'seed': {
        'name': 'seed',
        'int': True
    },
    'bound': {
        'name': 'bound',
        'int': True
    },
    'probes': {
        'name': 'probes',
        'int': True
    },
    'certify': {
        'name': 'certify',
        'int': True
    },
    'output_format': {
        'name': 'output_format',
        'type': OutputFormat
    },
    'output_path': {
        'name': 'output_path'
    },
    'json': {
        'name': 'output_path'
    },
    'timings': {
        'name': 'timings'
    },
    'workers': {
        'name': 'workers',
        'int': True
    }
}
_BUILTIN_DEFAULTS = {
    'TRIALS': constants.TRIALS,
    'SEED': constants.SEED,
    'BOUND': constants.BOUND,
    'PROBES': constants.PROBES,
    'CERTIFY': constants.CERTIFY_TRIALS,
    'WORKERS': None
}
_DEFAULTS = dict(_BUILTIN_DEFAULTS)


@dataclass(frozen=True)
class RunConfig:
    """
    The validated configuration of a single command.
    ``lie_type`` and ``spec`` are resolved from the family, rank, composition and central block.
    """

    command: str
    suite: SuiteName = None
    lie_type: LieType = None
    spec: ParabolicSpec = None
    partition: Partition = None
    trials: int = constants.TRIALS
    seed: int = constants.SEED
    bound: int = constants.BOUND
    probes: int = constants.PROBES
    certify: int = constants.CERTIFY_TRIALS
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: str = None
    timings: bool = False
    workers: int = 1

    def asdict(self):
        """Returns the configuration as a JSON-compatible dict, without output settings."""

        return {
            'command': self.command,
            'suite': self.suite.value if self.suite else None,
            'lie_type': str(self.lie_type) if self.lie_type else None,
            'algebra': self.lie_type.label() if self.lie_type else None,
            'composition': list(self.spec.composition) if self.spec else None,
            'central': self.spec.central if self.spec else None,
            'partition': list(self.partition) if self.partition else None,
            'trials': self.trials,
            'seed': self.seed,
            'bound': self.bound,
            'probes': self.probes,
            'certify': self.certify
        }

    def suite_config(self):
        """Returns the ``SuiteConfig`` of a verify command."""

        if self.command != 'verify':
            raise ConfigurationError(f'{self.command} does not run a suite')

        return SuiteConfig(
            self.suite, self.lie_type, self.spec,
            trials=self.trials, seed=self.seed, bound=self.bound,
            probes=self.probes, certify=self.certify
        )


def _parse_list(value):
    if isinstance(value, Partition):
        return value.parts
    if isinstance(value, str):
        value = [part for part in value.replace(' ', '').split(',') if part]
    if not isiterable(value):
        value = [value]

    try:
        return tuple(int(part) for part in value)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f'expected a list of integers, got {value!r}') from exc

def _map_value(key, mapper, value):
    if 'type' in mapper:
        return mapper['type'].parse(value, key)

    if mapper.get('list'):
        return _parse_list(value)

    if mapper.get('int'):
        if isinstance(value, bool):
            raise ConfigurationError(f'{key} must be an integer', {key: value})
        try:
            return int(value)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f'{key} must be an integer', {key: value}) from exc

    return value

def transform_params(params):
    """
    Renames and coerces input keyword arguments, dropping ``None`` values.

    - ``params``: The provided input keyword arguments.
    """

    result = {}
    for key, value in params.items():
        if value is None or key == 'raise_check_failures':
            continue
        if key not in _PARAM_MAPS:
            raise ConfigurationError(f'unknown parameter {key!r}')

        mapper = _PARAM_MAPS[key]
        result[mapper['name']] = _map_value(key, mapper, value)

    return result

def _derive_rank(family, composition, central):
    total = sum(composition)
    if family in (Family.A, Family.GL):
        return total - 1

    size = 2 * total + central
    if family == Family.B:
        return (size - 1) // 2
    return size // 2

def _resolve_algebra(params):
    family = params.get('family')
    if family is None:
        raise ConfigurationError('a Lie type is required')

    composition = params.get('composition')
    central = params.get('central', 0)
    rank = params.get('rank')

    if rank is None:
        if composition is None:
            raise ConfigurationError('either a rank or a composition is required')
        rank = _derive_rank(family, composition, central)

    t = LieType(family, rank)
    spec = full_spec(t) if composition is None and central == 0 else ParabolicSpec(
        composition or (), central)
    validate_spec(t, spec)

    return t, spec

def workers():
    """
    Returns the width of the thread pool running suite checks, read from
    ``PARCONTRACT_WORKERS`` unless set with ``set_defaults``.
    """

    if _DEFAULTS['WORKERS'] is not None:
        return _DEFAULTS['WORKERS']

    value = os.environ.get(_WORKERS_VARIABLE, '1')
    try:
        width = int(value)
    except ValueError as exc:
        raise ConfigurationError(f'{_WORKERS_VARIABLE} must be an integer', {
            _WORKERS_VARIABLE: value
        }) from exc

    if width < 1:
        raise ConfigurationError(f'{_WORKERS_VARIABLE} must be positive', {_WORKERS_VARIABLE: width})
    return width

def build_config(command, kwargs):
    """
    Builds a validated ``RunConfig`` from input keyword arguments.
    Defaults are applied before validation.

    - ``command``: One of ``info``, ``degrees`` and ``verify``.
    - ``kwargs``: The provided input keyword arguments.
    """

    if command not in _COMMANDS:
        raise ConfigurationError(f'unknown command {command!r}')

    params = transform_params(kwargs)
    for name in ('trials', 'seed', 'bound', 'probes', 'certify'):
        params.setdefault(name, _DEFAULTS[name.upper()])
    params.setdefault('workers', workers())

    values = {
        name: params[name]
        for name in ('trials', 'seed', 'bound', 'probes', 'certify', 'workers')
    }
    values['output_format'] = params.get('output_format', OutputFormat.TEXT)
    values['output_path'] = params.get('output_path')
    values['timings'] = bool(params.get('timings', False))
    if values['output_path'] is not None and 'output_format' not in params:
        values['output_format'] = OutputFormat.JSON

    if command == 'degrees':
        if 'partition' not in params:
            raise ConfigurationError('the degrees command requires a partition')
        family = params.get('family')
        if family is None:
            raise ConfigurationError('a Lie type is required')

        partition = Partition.parse(params['partition'])
        t = LieType(family, rank_from_partition(family, partition))
        if params.get('rank') not in (None, t.rank):
            raise ConfigurationError(f'the partition sums to {partition.total}, not to the matrix size', {
                'rank': params['rank'], 'partition': list(partition)
            })
        return RunConfig(command, lie_type=t, partition=partition, **values)

    suite = None
    if command == 'verify':
        suite = params.get('suite')
        if suite is None:
            raise ConfigurationError('the verify command requires a suite')
        if suite in (SuiteName.COUNTEREXAMPLE, SuiteName.COMBINATORICS) and 'family' not in params:
            config = RunConfig(command, suite=suite, **values)
            config.suite_config()
            return config

    t, spec = _resolve_algebra(params)
    config = RunConfig(command, suite=suite, lie_type=t, spec=spec, **values)
    if command == 'verify':
        config.suite_config()

    return config

def set_defaults(**kwargs):
    """
    Sets the defaults used when a parameter is omitted.
    Passing ``None`` restores the built-in value.

    - ``trials``, ``seed``, ``bound``, ``probes``, ``certify``: Numeric defaults.
    - ``workers``: The width of the thread pool; overrides ``PARCONTRACT_WORKERS``.
    """

    for key, value in kwargs.items():
        name = key.upper()
        if name not in _DEFAULTS:
            raise ConfigurationError(f'unknown default {key!r}')

        if value is None:
            _DEFAULTS[name] = _BUILTIN_DEFAULTS[name]
            continue

        value = _map_value(key, _PARAM_MAPS[key], value)
        if value < 0 or (value == 0 and name != 'SEED'):
            raise ConfigurationError(f'{key} must be positive', {key: value})
        _DEFAULTS[name] = value
