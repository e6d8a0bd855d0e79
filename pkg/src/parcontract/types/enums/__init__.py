"""
Contains parcontract enumeration helpers.
"""

from .base import IntEnum, StrEnum


class Family(StrEnum):
    """Enumeration class that contains the classical families."""

    __aliases__ = {
        'sl': 'A',
        'so_odd': 'B',
        'sp': 'C',
        'so_even': 'D',
        'gl': 'GL'
    }

    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    GL = 'GL'

class LeviKind(StrEnum):
    """Enumeration class that contains the kinds of Levi summands."""

    GL = 'gl'
    SP = 'sp'
    SO = 'so'

class SuiteName(StrEnum):
    """Enumeration class that contains the verification suites."""

    __aliases__ = {
        'coadj': 'coadjoint',
        'adj': 'adjoint',
        'subreg': 'subregular',
        'counter': 'counterexample',
        'comb': 'combinatorics'
    }

    COADJOINT = 'coadjoint'
    ADJOINT = 'adjoint'
    SUBREGULAR = 'subregular'
    COUNTEREXAMPLE = 'counterexample'
    COMBINATORICS = 'combinatorics'

class CheckStatus(StrEnum):
    """Enumeration class that contains check outcomes."""

    PASS = 'pass'
    FAIL = 'fail'
    INFO = 'info'

class OutputFormat(StrEnum):
    """Enumeration class that contains report output formats."""

    TEXT = 'text'
    JSON = 'json'

class ExitCode(IntEnum):
    """Enumeration class that contains command-line exit codes."""

    PASSED = 0
    CHECK_FAILURE = 1
    CONFIGURATION_ERROR = 2


__all__ = [
    'CheckStatus',
    'ExitCode',
    'Family',
    'IntEnum',
    'LeviKind',
    'OutputFormat',
    'StrEnum',
    'SuiteName'
]
