"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition (negative entry, bad shape, ...)."""


class DimensionError(ValidationError):
    """Operand shapes do not conform."""


class CsvParseError(ValueError):
    """A CSV file could not be parsed into a rectangular numeric matrix."""


class NumericsError(ArithmeticError):
    """A computation produced NaN/Inf where finite values are guaranteed."""
