"""Exception tree of the library.

Every error derives from ``SuperpowerError`` and from the builtin it refines,
so callers may catch either one.
"""


class SuperpowerError(Exception):
    """Base class for all library errors."""


class ScalarDivisionError(SuperpowerError, ZeroDivisionError):
    """Division by an exact zero."""


class DimensionMismatchError(SuperpowerError, ValueError):
    """Shapes or degrees of the arguments do not fit together."""


class IndexRangeError(SuperpowerError, IndexError):
    """An index or split count lies outside its admissible range."""


class DegeneratePowerError(SuperpowerError, ValueError):
    """The requested superpower is the zero space."""


class NotEvenError(SuperpowerError, ValueError):
    """A supermatrix couples even and odd blocks where an even map is needed."""


class SingularFormError(SuperpowerError, ArithmeticError):
    """A bilinear form or matrix that must be invertible is singular."""


class ConsistencyFailure(SuperpowerError, ArithmeticError):
    """Data that should define a structure contradicts itself."""


class NotAutomorphismError(SuperpowerError, ValueError):
    """A map expected to be an automorphism is not one."""


class PowerTooLargeError(SuperpowerError, ValueError):
    """The power exceeds the supported dimension."""


class MalformedInputError(SuperpowerError, ValueError):
    """Input documents that cannot be decoded."""


class SideError(SuperpowerError, ValueError):
    """Arguments given on the wrong side of a pair."""
