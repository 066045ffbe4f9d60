"""Exception types shared across the toolkit."""


class FieldMismatchError(ValueError):
    """Operands live over different base fields."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class InvalidStructureError(ValueError):
    """A precondition on algebraic structure failed (not an ideal, bad
    Cayley table, not a subcoalgebra, zero polynomial, ...)."""


class UnsupportedCharacteristicError(ValueError):
    """The operation is only available in characteristic zero."""


class CrossCheckError(RuntimeError):
    """Two independently computed routes to the same value disagreed.

    This always signals an implementation bug, never a valid outcome.
    """
