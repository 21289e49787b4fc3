"""Exception types raised by the library."""


class QSchurError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(QSchurError, ValueError):
    """Degree queries are undefined for the zero polynomial."""


class SizeMismatch(QSchurError, ValueError):
    """Two multipartitions of different size or level were compared."""


class InvalidNode(QSchurError, ValueError):
    """A node is neither in a multipartition nor addable to it."""


class OddNorm(QSchurError, ValueError):
    """(beta, beta) is odd, so beta is not a valid root-lattice element."""


class Unsupported(QSchurError):
    """The requested computation lies outside the supported regime.

    Raised for 1 < e < n (where the graded Schur algebra machinery does not
    apply) and for Kleshchev detection with e != 0 or an unsorted charge.
    """


class PositivityViolation(QSchurError, ArithmeticError):
    """Straightening produced a coefficient outside the expected positive cone."""


class NotLevelTwo(QSchurError, ValueError):
    """The level-two closed formula was requested for a charge of other level."""


class NonUniqueTableau(QSchurError, ArithmeticError):
    """More than one tableau was found where at most one can exist."""
