"""Exception types raised by the geometry routines."""


class GeometryError(ValueError):
    """Base class for every validation or numerical-domain failure."""


class DimensionMismatch(GeometryError):
    """Input is not a square matrix, or operand dimensions disagree."""


class NotHermitian(GeometryError):
    """A Hermitian (or anti-Hermitian, where stated) matrix was required."""


class NotPositiveDefinite(GeometryError):
    """Minimum eigenvalue is below the positivity floor."""


class Singular(GeometryError):
    """Smallest singular value is below the invertibility floor."""


class NotSymmetricPair(GeometryError):
    """Pair (b, x) fails the Hermiticity constraint on b* x."""


class NotInLieAlgebra(GeometryError):
    """Block matrix is outside the Lie algebra of the form group."""


class NotInGroup(GeometryError):
    """Block matrix does not preserve the model form."""


class NotDiagonalUnitary(GeometryError):
    """Unitary group element has off-diagonal blocks above tolerance."""


class NotOnSphere(GeometryError):
    """Pair fails the unit self-pairing or first-coordinate invertibility."""


class NotInHalfspace(GeometryError):
    """Imaginary part is not positive definite."""


class NotInDisk(GeometryError):
    """Spectral norm is not strictly below one."""


class NotReflection(GeometryError):
    """Matrix fails the reflection invariants (square one, positive rho*eps)."""


class NotHorizontal(GeometryError):
    """Lie-algebra element has a non-negligible vertical part."""


class InvalidParams(GeometryError):
    """Geodesic-family parameters violate their commutation constraints."""


class ReflectionDrift(GeometryError):
    """Mid-curve reflection invariants degraded beyond the drift tolerance."""


class NumericalBreakdown(GeometryError):
    """A denominator that is invertible in exact arithmetic lost invertibility."""


class ParseError(GeometryError):
    """Serialized object does not match the expected JSON envelope."""
