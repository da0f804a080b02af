"""Exception hierarchy shared by all modules."""


class HopfError(Exception):
    """Base class for every error raised by :mod:`hopfconst`."""


class FieldMismatchError(HopfError, TypeError):
    """Two scalars (or a scalar and a container) live over different fields."""


class SingularMatrixError(HopfError, ValueError):
    pass


class HypothesisError(HopfError, ValueError):
    """An input does not satisfy the precondition of a construction."""


class ConstructionError(HopfError, RuntimeError):
    """A constructed object failed its own post-check.

    This signals a bug (bad input validation or an index mix-up), never a
    normal outcome.
    """


class ParseError(HopfError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
