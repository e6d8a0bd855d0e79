"""
Contains report types defined by the parcontract package.
"""

from .enums import CheckStatus

# pylint: disable=too-few-public-methods,too-many-instance-attributes,too-many-arguments


def format_rational(value):
    """
    Formats an exact rational as a ``"num/den"`` string.
    Integers are returned unchanged.
    """

    if isinstance(value, int):
        return value

    return f'{int(value.numerator)}/{int(value.denominator)}'

def _is_rational(obj):
    return (
        not isinstance(obj, (int, float, str))
        and hasattr(obj, 'numerator')
        and hasattr(obj, 'denominator')
    )

def _to_dict(obj):
    if isinstance(obj, ReportObject):
        return obj.asdict()

    if isinstance(obj, (list, tuple)):
        return list(map(_to_dict, obj))

    if isinstance(obj, dict):
        return {str(k): _to_dict(v) for k, v in obj.items()}

    if _is_rational(obj):
        return format_rational(obj)

    if isinstance(obj, CheckStatus):
        return obj.value

    return obj


# base classes

class ReportObject:
    """Base class for report objects."""

    def __contains__(self, key):
        return key in self.__dict__

    def __repr__(self):
        return repr(self.asdict())

    def asdict(self):
        """
        Converts the report object to a dict and returns the created dict.
        Rationals become ``"num/den"`` strings.
        """

        return {
            k: _to_dict(v)
            for k, v in vars(self).items()
            if not k.startswith('_')
        }


# verification reports

class CheckRecord(ReportObject):
    """Contains the outcome of a single check in a suite."""

    def __init__(self, name, anchor, status, witness=None, seed=None, bound=None):
        self.name: str = name
        self.anchor: str = anchor
        self.status = CheckStatus.get(status)
        self.witness: dict = witness or {}
        self.seed = seed
        self.bound = bound
        self.runtime_ms = None

    @property
    def passed(self):
        """Whether the check did not fail."""
        return self.status != CheckStatus.FAIL

class SuiteReport(ReportObject):
    """Contains the ordered check records of a verification suite."""

    def __init__(self, suite, config, checks, seed):
        self.suite: str = str(suite)
        self.config: dict = config
        self.checks = sorted(checks, key=lambda record: record.name)
        self.seed: int = seed
        self.runtime_ms = None
        self.status = (
            CheckStatus.PASS
            if all(record.passed for record in self.checks)
            else CheckStatus.FAIL
        )

    @property
    def passed(self):
        """Whether every check in the suite passed."""
        return self.status == CheckStatus.PASS

    def failures(self):
        """Returns the failed check records."""
        return [record for record in self.checks if not record.passed]


# summaries

class InfoReport(ReportObject):
    """Contains dimensions and Richardson data of a parabolic contraction."""

    def __init__(self, raw):
        self.lie_type: str = raw['lie_type']
        self.composition: list = list(raw['composition'])
        self.central: int = raw['central']
        self.levi_type: list = list(raw['levi_type'])
        self.dimensions: dict = raw['dimensions']
        self.jordan_type: list = list(raw['jordan_type'])
        self.certificate_rank: int = raw['certificate_rank']
        self.centraliser_dim: int = raw['centraliser_dim']
        self.index: int = raw['index']
        self.trials: int = raw['trials']
        self.seed: int = raw['seed']

class DegreeReport(ReportObject):
    """Contains the degree combinatorics of a Richardson partition."""

    def __init__(self, raw):
        self.lie_type: str = raw['lie_type']
        self.partition: list = list(raw['partition'])
        self.dual: list = list(raw['dual'])
        self.modified = list(raw['modified']) if raw.get('modified') is not None else None
        self.levi_type: list = list(raw['levi_type'])
        self.degree_multiset: list = list(raw['degree_multiset'])
        self.bidegrees: list = [list(pair) for pair in raw['bidegrees']]
        self.invariant_degrees: list = list(raw['invariant_degrees'])
        self.removed_trace_degree = raw.get('removed_trace_degree')
        self.sums: dict = raw['sums']
        self.matches_levi: bool = raw['matches_levi']
