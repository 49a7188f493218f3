"""Exception hierarchy shared by all richlat modules."""


class RichlatError(Exception):
    pass


class ConfigurationError(RichlatError, ValueError):
    """Bad root system name, bad index, unparsable word, non-positive budget."""


class BudgetExceeded(RichlatError, RuntimeError):
    """An enumeration would exceed its element/word budget."""


class EmptyIntervalError(RichlatError, ValueError):
    """Raised when v is not below w, so [v, w] and X_w^v are empty."""


class NotReducedError(RichlatError, ValueError):
    pass


class UnsupportedTypeError(RichlatError, ValueError):
    pass


class PreconditionError(RichlatError, ValueError):
    pass


class StructuralError(RichlatError, RuntimeError):
    """An internal consistency check failed.

    These signal either a bug or a counterexample to a published theorem;
    they are never caught inside the library.
    """


class InvariantViolation(StructuralError):
    pass
