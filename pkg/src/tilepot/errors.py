"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: out-of-range vertex, bad file contents, bad parameters."""

    def __init__(self, message, *, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An operation was called on an input violating its precondition.

    ``witness`` carries the offending object (a bridge, an uncovered edge, ...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
