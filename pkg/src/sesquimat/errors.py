"""Exception types raised across the package.

Everything derives from SesquimatError so callers can catch domain errors
with a single except clause (the CLI maps them to exit code 1).
"""


class SesquimatError(Exception):
    """Base class for all domain errors raised by this package."""


class NonPrimeCharacteristic(SesquimatError):
    """Field characteristic is not a prime number."""


class ReducibleModulus(SesquimatError):
    """The defining modulus polynomial is not irreducible over GF(p)."""


class FieldMismatch(SesquimatError):
    """Operands belong to different fields (or are out of range for the field)."""


class NotInvolution(SesquimatError):
    """The requested (j, s) map is not self-inverse, so it is not admissible."""


class GroundMismatch(SesquimatError):
    """Operands are indexed by different ground sets."""


class SingularMatrix(SesquimatError):
    """Matrix inversion or division by a singular matrix."""


class SingularPivotBlock(SesquimatError):
    """The principal block selected for a Schur complement or pivot is singular."""


class IncompatibleScalingPair(SesquimatError):
    """The two diagonal scaling factors do not satisfy the compatibility relation."""


class SizeLimitExceeded(SesquimatError):
    """Input exceeds a documented size bound, or a truncated search was inconclusive."""


class FieldTooLarge(SesquimatError):
    """The construction would need a field beyond the supported order."""


class NotSigmaEpsSymmetric(SesquimatError):
    """No sign assignment makes the matrix symmetric for the given sesqui-morphism."""


class InvalidSupplementaryPair(SesquimatError):
    """The two chains do not form a supplementary pair for any sign function."""


class NotEulerian(SesquimatError):
    """The given chain is not eulerian for the chain group."""


class NotLagrangian(SesquimatError):
    """The chain group is not lagrangian (isotropic of full dimension)."""


class NotSpecialChain(SesquimatError):
    """A chain value falls outside the two coordinate axes, so it is not special."""


class ZeroVector(SesquimatError):
    """A nonzero vector was required (e.g. the direction of a minor)."""


class OverlappingMinorSets(SesquimatError):
    """The deletion and contraction sets of a minor overlap."""
