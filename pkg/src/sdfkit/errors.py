"""Exception types shared across the toolkit."""


class SdfkitError(Exception):
    """Base class for all sdfkit errors."""


class InvalidOrder(SdfkitError):
    """Requested ring order is not admissible (e.g. n < 2)."""


class OrderBoundExceeded(SdfkitError):
    """A construction or enumeration would exceed the configured size bound."""


class InvalidRing(SdfkitError):
    """Operation tables failed the exhaustive ring-axiom check."""


class NotProper(SdfkitError):
    """An operation required a proper ideal but got the unit ideal."""


class NotAnIdeal(SdfkitError):
    """An element set failed the ideal axioms (reportable, e.g. amalgamation)."""


class NotMultClosed(SdfkitError):
    """An element set is not a multiplicative set (missing 1 or not closed)."""


class RingMismatch(SdfkitError):
    """Two arguments live in different rings."""


class NotAHomomorphism(SdfkitError):
    """A candidate map violates a ring-homomorphism identity (witness in args)."""


class TwoNotUnit(SdfkitError):
    """The element 2 = 1+1 is not a unit, but the operation requires it."""


class OutOfRange(SdfkitError):
    """Integer argument outside the supported range."""


class UnitIdealResult(SdfkitError):
    """An integer localization inverted every prime factor; nZ became (1)."""


class ZeroRingResult(SdfkitError):
    """A localization hit 0 in the multiplicative set; the result is the zero ring."""


class ImproperExtension(SdfkitError):
    """Extending the ideal along this localization yields the unit ideal (I meets S)."""


class ModulusMismatch(SdfkitError):
    """Polynomial operands have different coefficient moduli."""


class DivisionByZeroPoly(SdfkitError):
    """Polynomial division by the zero polynomial."""


class ConstantPolynomial(SdfkitError):
    """A nonconstant polynomial was required."""


class DegreeBoundExceeded(SdfkitError):
    """Polynomial degree exceeds the configured factorization bound."""


class NotPrime(SdfkitError):
    """A prime modulus was required."""


class UnknownTheoremId(SdfkitError):
    """verify was asked for a theorem id that is not registered."""


class ExpressionParseError(SdfkitError):
    """A predicate search expression could not be parsed."""


class SpecParseError(SdfkitError):
    """A ring-spec string could not be parsed."""


class UsageError(SdfkitError):
    """Bad command-line arguments (maps to exit code 1)."""
