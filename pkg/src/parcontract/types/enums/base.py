"""
Contains base class for parcontract enumeration helpers.
"""

from enum import Enum

from ..exceptions import ConfigurationError

class EnumBase(Enum):
    """
    Base class for enumerations read from keyword arguments and the command line.
    Lookups ignore case and surrounding whitespace, and accept the short
    names listed in ``__aliases__``.
    """

    __aliases__ = {}

    @classmethod
    def choices(cls):
        """Every spelling accepted on the command line: values first, then aliases."""

        values = [str(member.value) for member in cls]
        return values + [alias for alias in cls.__aliases__ if alias not in values]

    @classmethod
    def get(cls, key, default=None):
        """
        Returns the enumeration instance matching a member, value, name or alias,
        or the provided default value if nothing matches.
        """

        if isinstance(key, cls):
            return key

        if isinstance(key, str):
            text = key.strip()
            key = cls.__aliases__.get(text.lower(), text)

            for member in cls:
                if isinstance(member.value, str) and member.value.lower() == str(key).lower():
                    return member
            if isinstance(key, str) and key.upper() in cls.__members__:
                return cls[key.upper()]

        try:
            return cls(key)
        except ValueError:
            return default

    @classmethod
    def parse(cls, key, name):
        """
        Returns the enumeration instance for a parameter value.

        - ``key``: The value to look up.
        - ``name``: The parameter name, used in the error.

        Raises ``ConfigurationError`` listing the accepted spellings when nothing matches.
        """

        member = cls.get(key)
        if member is None:
            raise ConfigurationError(f'invalid value for {name}: {key!r}', {
                name: key, 'choices': cls.choices()
            })
        return member

class IntEnum(int, EnumBase): # pylint: disable=invalid-enum-extension
    """Base class for integer-based enumerations."""

class StrEnum(str, EnumBase): # pylint: disable=invalid-enum-extension
    """Base class for string-based enumerations, printed as their value."""

    def __str__(self):
        return str(self.value)
