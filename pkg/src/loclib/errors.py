"""Exception hierarchy shared by all loclib modules."""


class LocLibError(Exception):
    """Base class for every error raised by loclib."""


class BadPolynomial(LocLibError, ValueError):
    """Field polynomial is malformed or not primitive."""


class BadDegree(BadPolynomial):
    """Polynomial degree does not match the extension degree."""


class NonPrimitivePolynomial(BadPolynomial):
    """The element x does not generate the multiplicative group."""


class DivideByZero(LocLibError, ZeroDivisionError):
    pass


class DimensionMismatch(LocLibError, ValueError):
    pass


class IndexOutOfRange(LocLibError, IndexError):
    pass


class RankDeficient(LocLibError, ValueError):
    pass


class NoSolution(LocLibError, ValueError):
    """Linear system A x = b is inconsistent."""


class BadParams(LocLibError, ValueError):
    """(n, k, d) violates 1 <= k < n, 2 <= d <= n - k + 1."""


class DistanceTooSmall(LocLibError, ValueError):
    """A code's actual minimum distance is below its design distance."""


class TooManyErasures(LocLibError, ValueError):
    pass


class ShapeMismatch(LocLibError, ValueError):
    pass


class HypothesisViolated(LocLibError, ValueError):
    """Tanner graph does not meet the private-VN / full-global-CN premises."""


class RateConditionViolated(LocLibError, ValueError):
    pass


class BudgetExceeded(LocLibError, ValueError):
    pass


class NotApplicable(LocLibError, ValueError):
    """Requested construction class does not apply to (n, k, d)."""


class RealizationFailed(LocLibError, RuntimeError):
    def __init__(self, message, attempts=0):
        super().__init__(message)
        self.attempts = attempts


class ProfileMismatch(LocLibError, RuntimeError):
    pass
