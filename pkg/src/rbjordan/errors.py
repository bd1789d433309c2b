"""Exception hierarchy shared by all modules."""


class RBJordanError(Exception):
    """Base class for every error raised by the package."""


class DivisionByZero(RBJordanError, ZeroDivisionError):
    pass


class MixedFields(RBJordanError, ValueError):
    """Operands belong to different fields (or are not canonical elements)."""


class UnsupportedField(RBJordanError, ValueError):
    pass


class DimensionMismatch(RBJordanError, ValueError):
    pass


class ParseError(RBJordanError, ValueError):
    pass


class ConstraintViolated(RBJordanError, ValueError):
    """Construction parameters fail their defining equations."""


class MissingRoots(RBJordanError, ValueError):
    """A required square root does not exist in the ground field."""


class NotApplicable(RBJordanError):
    """A diagnostic's hypothesis does not hold for the given operator."""


class HypothesisViolated(RBJordanError, ValueError):
    pass


class BudgetExceeded(RBJordanError):
    """A search ran out of budget; ``partial`` holds a non-certifying census."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
