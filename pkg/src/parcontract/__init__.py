"""
Exact computations with parabolic contractions of classical Lie algebras:
invariants, Richardson elements, slice restrictions and verification suites.
"""

from . import algebra, partitions
from .request import set_defaults
from .main import degrees, info, run_verification
from .algebra.liealg import LieType, ParabolicSpec
from .partitions import Partition, RichardsonProfile
from .verify import SuiteConfig
from .types import (
    AlgebraError,
    CertificationError,
    CheckFailure,
    CheckRecord,
    CheckStatus,
    ConfigurationError,
    DegreeReport,
    ExitCode,
    Family,
    InfoReport,
    InterpolationError,
    LeviKind,
    OutputFormat,
    ParContractException,
    SuiteName,
    SuiteReport
)

__all__ = [
    'algebra',
    'partitions',
    'degrees',
    'info',
    'set_defaults',
    'run_verification',
    'AlgebraError',
    'CertificationError',
    'CheckFailure',
    'CheckRecord',
    'CheckStatus',
    'ConfigurationError',
    'DegreeReport',
    'ExitCode',
    'Family',
    'InfoReport',
    'InterpolationError',
    'LeviKind',
    'LieType',
    'OutputFormat',
    'ParabolicSpec',
    'ParContractException',
    'Partition',
    'RichardsonProfile',
    'SuiteConfig',
    'SuiteName',
    'SuiteReport'
]
