"""
Contains types defined by the parcontract package.
"""

from .exceptions import (
    AlgebraError,
    CertificationError,
    CheckFailure,
    ConfigurationError,
    InterpolationError,
    ParContractException
)
from .enums import (
    CheckStatus,
    ExitCode,
    Family,
    LeviKind,
    OutputFormat,
    SuiteName
)
from .main import (
    CheckRecord,
    DegreeReport,
    InfoReport,
    ReportObject,
    SuiteReport,
    format_rational
)


def isiterable(obj, exclude=None):
    """
    Returns True if a type is iterable,
    or False otherwise.

    Types passed to ``exclude`` will be
    considered not iterable.
    """

    if any(isinstance(obj, cls) for cls in exclude or ()):
        return False

    try:
        iter(obj)
        return True
    except TypeError:
        return False


__all__ = [
    'format_rational',
    'isiterable',

    # exceptions
    'AlgebraError',
    'CertificationError',
    'CheckFailure',
    'ConfigurationError',
    'InterpolationError',
    'ParContractException',

    # enums
    'CheckStatus',
    'ExitCode',
    'Family',
    'LeviKind',
    'OutputFormat',
    'SuiteName',

    # report objects
    'CheckRecord',
    'DegreeReport',
    'InfoReport',
    'ReportObject',
    'SuiteReport'
]
