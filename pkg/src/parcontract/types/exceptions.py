"""
Contains exception classes.
"""

class ParContractException(Exception):
    """
    Base class for errors raised by parcontract.

    - ``message``: The error message associated with the error.
    - ``details``: A dict with the values that triggered the error.
    """

    def __init__(self, message, details=None):
        super().__init__(message)

        self.message = message
        self.details = details or {}

    def __reduce__(self):
        return (type(self), (self.message, self.details))

class ConfigurationError(ParContractException):
    """
    Raised when a Lie type, composition, partition or suite selection is inconsistent.
    The command-line interface maps this error to exit code 2.
    """

class AlgebraError(ParContractException):
    """Raised when an algebraic construction is called outside its domain."""

class InterpolationError(ParContractException):
    """Raised when interpolation samples are empty or share a node."""

class CertificationError(ParContractException):
    """
    Raised when a randomized search exhausts its trials without a certificate,
    such as a Richardson element, a normalisable opposite element or a nonzero component.
    """

class CheckFailure(ParContractException):
    """
    Contains information about a failed check.
    This exception is only thrown if the argument passed to the
    ``raise_check_failures`` parameter is True.

    - ``message``: The error message associated with the failure.
    - ``details``: The serialized report of the failing suite.
    """
