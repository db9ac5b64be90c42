"""Exception types shared across the library.

Every domain error derives from PairQuatError so callers (and the HTTP
layer) can catch one base class; the concrete class name doubles as the
machine-readable error code.
"""


class PairQuatError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonUnitVector(PairQuatError):
    """A vector argument was required to have unit length and does not."""


class NonUnitQuaternion(PairQuatError):
    """A quaternion argument was required to have unit norm and does not."""


class NotOrthogonal(PairQuatError):
    """A vector argument violates a required orthogonality constraint."""


class ZeroQuaternion(PairQuatError):
    """The zero quaternion is not a valid operand here."""


class DegeneratePair(PairQuatError):
    """The pair represents the zero class and cannot be composed."""


class AntipodalInputs(PairQuatError):
    """Opposite unit vectors admit no unique aligning rotation."""


class AntipodalQuaternions(PairQuatError):
    """Antipodal unit quaternions admit no unique interpolation geodesic."""


class DimensionMismatch(PairQuatError):
    """Vector dimensions disagree or are below the supported minimum."""


class InvalidGrid(PairQuatError):
    """A sampling grid parameter is out of range."""


class MalformedInput(PairQuatError):
    """External input (JSON, CLI argument) failed schema validation."""
