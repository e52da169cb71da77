"""Exception types shared across the package."""


class Su2OrbitsError(Exception):
    """Base class for all package errors."""


class ZeroPolynomialError(Su2OrbitsError, ValueError):
    """All coefficients of a binary form vanish."""


class DegenerateLoopError(Su2OrbitsError, ValueError):
    """A sampled loop passes through (numerical) zero."""


class UndersampledLoopError(Su2OrbitsError, ValueError):
    """Consecutive loop samples differ in argument by pi or more."""


class TypeMismatchError(Su2OrbitsError, TypeError):
    """Group element type does not match the representation case."""


class NotImaginaryError(Su2OrbitsError, ValueError):
    """A quaternion required to be purely imaginary has a real part."""


class NegativeTargetError(Su2OrbitsError, ValueError):
    """Product target for the monotone solve is negative."""


class ZeroVectorError(Su2OrbitsError, ValueError):
    """A vector required to be nonzero is (numerically) zero."""


class NotInDError(Su2OrbitsError, ValueError):
    """Gram coordinates do not define a positive semidefinite matrix."""


class NotAntipodalError(Su2OrbitsError, ValueError):
    """Root multiset of a claimed real form is not antipodally symmetric."""


class BadDegreeError(Su2OrbitsError, ValueError):
    """Witness construction requested outside its valid degree range."""


class OutOfRangeError(Su2OrbitsError, ValueError):
    """Chart parameter outside its declared range."""


class InputTooLargeError(Su2OrbitsError, ValueError):
    """Combinatorial input exceeds the supported brute-force size."""


class UnknownCaseError(Su2OrbitsError, KeyError):
    """No representation case registered under the given name."""
