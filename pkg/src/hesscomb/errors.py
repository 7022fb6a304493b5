"""Exception taxonomy shared across the package.

Every error raised on bad input derives from HesscombError (itself a
ValueError), so callers can catch one type at API boundaries while tests
can assert the precise condition.
"""


class HesscombError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotWeaklyIncreasing(HesscombError):
    """Hessenberg values decrease somewhere."""


class BelowDiagonal(HesscombError):
    """Some h(i) < i."""


class OutOfRange(HesscombError):
    """A value lies outside [1, n]."""


class EmptyInput(HesscombError):
    """An empty sequence where at least one entry is required."""


class ShapeMismatch(HesscombError):
    """A filling or request does not match the partition shape/size."""


class NotPTableau(HesscombError):
    """A tableau violates the P-tableau conditions for the given h."""


class KOutOfRange(HesscombError):
    """A row/column/index parameter k is outside its documented range."""


class BasisMismatch(HesscombError):
    """An operation got a symmetric function in an unsupported basis."""


class DegreeTooLarge(HesscombError):
    """Requested degree exceeds the configured conversion bound."""


class NotSymmetric(HesscombError):
    """A generating-function expansion failed the symmetry consistency check."""


class FormMismatch(HesscombError):
    """h is not of the special form required by the operation."""


class OddDegree(HesscombError):
    """A cohomological degree argument must be even."""


class NotSquare(HesscombError):
    """A matrix operation needs a square block."""


class NotInBasis(HesscombError):
    """An element is not a member of the required basis set."""


class InvalidPair(HesscombError):
    """A tableau pair fails its validity conditions."""


class NonTerminating(HesscombError):
    """Rewriting exceeded its safety bound (should be unreachable)."""


class DegenerateForm(HesscombError):
    """The requested decomposition degenerates for this h (e.g. h(1) = n)."""


class KeyNotFound(HesscombError):
    """Unknown key in the golden store."""


class GuardrailExceeded(HesscombError):
    """An enumeration would exceed the configured size guardrail."""


class UnsupportedFormat(HesscombError):
    """The requested output format does not apply to this command."""
