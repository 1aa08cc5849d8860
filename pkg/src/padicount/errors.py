"""Exception hierarchy shared across the package.

Every domain failure derives from PadicError so the service layer can map
the whole family onto one structured HTTP error.
"""


class PadicError(Exception):
    """Base class for every domain error raised by this package."""


class CompositeModulus(PadicError):
    """The requested base is not a prime number."""


class EvenPrime(PadicError):
    """p = 2 is rejected; everything here needs an odd prime."""


class BadExponent(PadicError):
    """Target exponent must be at least 1."""


class BadArgument(PadicError):
    """An argument is outside its documented domain."""


class ContextMismatch(PadicError):
    """Residues from different contexts cannot interoperate."""


class NotAUnit(PadicError):
    """The value is divisible by p where a unit is required."""


class NotOneUnit(PadicError):
    """The value is not congruent to 1 mod p."""


class OutsideConvergenceDomain(PadicError):
    """Exponential input must have valuation at least 1 for odd p."""


class InexactDivision(PadicError):
    """Division by p^k was requested on a value of valuation below k."""


class NonCoprimeModuli(PadicError):
    """CRT assembly needs coprime moduli."""


class BadBranchModulus(PadicError):
    """Branch modulus must be a multiple of ord_p(g) dividing p - 1."""


class NotARoot(PadicError):
    """The start point does not solve the equation mod p."""


class NonUnitDerivative(PadicError):
    """One-variable lifting needs a unit derivative at the start point."""


class SingularJacobian(PadicError):
    """System lifting needs a unit Jacobian determinant at the start point."""


class NoUnitPartial(PadicError):
    """Fiber lifting needs at least one unit partial derivative."""


class NotASolutionModPe(PadicError):
    """A point handed to the fiber lift does not solve the equation at its level."""


class BadLength(PadicError):
    """Walk length must be at least 1."""


class TooLarge(PadicError):
    """The requested enumeration exceeds the configured budget."""
