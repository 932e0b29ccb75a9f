"""
Exception hierarchy for the dual complex toolkit.

Every error raised on purpose by the library derives from DualComplexError, so
callers (and the CLI) can separate mathematical verdicts, bad input and
numerical trouble.
"""


class DualComplexError(Exception):
    """Base class for all toolkit errors."""


class MathematicalNegative(DualComplexError):
    """A verdict-type failure: the input is valid but lacks the property asked for."""


class ConfigError(DualComplexError, ValueError):
    """Invalid tolerance configuration."""


class ParseError(DualComplexError, ValueError):
    """Input file or JSON payload could not be decoded."""


class NonFiniteValue(DualComplexError, ValueError):
    """NaN or infinity offered to the dual complex algebra."""


class NotAppreciable(DualComplexError, ArithmeticError):
    """The operation needs a nonzero standard part."""


class NegativeInput(DualComplexError, ArithmeticError):
    """Square root of a negative dual number."""


class ShapeMismatch(DualComplexError, ValueError):
    """Operand dimensions do not agree."""


class SingularStandardPart(DualComplexError, ArithmeticError):
    """The standard part of a square matrix is singular, so no inverse exists."""


class ConvergenceFailure(DualComplexError, ArithmeticError):
    """A dense eigenvalue routine did not converge."""


class IllConditionedStructure(DualComplexError, ArithmeticError):
    """A Jordan structure or transform could not be certified at the active tolerances."""


class NotAnEigenpair(DualComplexError, ValueError):
    """The supplied (lambda_s, x_s) is not an eigenpair of the standard part."""


class BadBlockStructure(DualComplexError, ValueError):
    """Block sizes do not describe a valid standard-part Jordan structure."""


class NotHermitian(MathematicalNegative, ValueError):
    """The matrix is not equal to its conjugate transpose."""


class StandardPartNotBlockScalar(DualComplexError, ValueError):
    """The standard part is not diag(l_1 I, ..., l_t I)."""


class EigenvaluesNotDistinct(DualComplexError, ValueError):
    """Repeated eigenvalue among the diagonal blocks of the standard part."""


class StandardPartDefective(DualComplexError, ValueError):
    """The standard part is not diagonalizable."""


class StandardPartNotJordanBlock(DualComplexError, ValueError):
    """The standard part is not a single Jordan block J_n(l) with n >= 2."""


class NoJordanForm(DualComplexError, ValueError):
    """Neither the diagonalizable nor the single-Jordan-block construction applies."""


class NotADualNumber(DualComplexError, ValueError):
    """A dual complex value has imaginary parts that are not negligible."""
