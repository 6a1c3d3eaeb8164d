"""Exception hierarchy shared across the package."""


class NakayamaError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(NakayamaError, ValueError):
    """Malformed input: a Kupisch series, a quiver presentation, a matrix."""


class SingularMatrixError(NakayamaError, ArithmeticError):
    pass


class NonUnimodularError(NakayamaError, ArithmeticError):
    """Cartan matrix whose determinant is not +1 or -1."""

    def __init__(self, determinant):
        super().__init__(f"Cartan matrix is not unimodular (determinant {determinant})")
        self.determinant = determinant


class SearchBoundExceeded(NakayamaError, RuntimeError):
    pass


class TheoremViolation(NakayamaError, AssertionError):
    """A computed result contradicts a proven statement.

    These are never expected. ``algebra`` carries a serialisable description
    of the input so that the failure can be reproduced.
    """

    def __init__(self, message, algebra=None):
        if algebra is not None:
            message = f"{message} [algebra: {algebra}]"
        super().__init__(message)
        self.algebra = algebra


class InfiniteGlobalDimension(NakayamaError, ArithmeticError):
    """The Coxeter matrix and Euler form are only defined at finite global dimension."""
