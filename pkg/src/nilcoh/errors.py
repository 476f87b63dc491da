"""Exception hierarchy shared by every module."""


class NilcohError(Exception):
    pass


class InputError(NilcohError, ValueError):
    """Malformed input: bad indices, wrong degree, mismatched dimensions."""


class InvalidAlgebraError(NilcohError):
    """Structure constants that do not define a Lie algebra."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class ComplexError(NilcohError):
    """Internal consistency failure: d∘d != 0 in an assembled complex."""


class UnsupportedQueryError(NilcohError, ValueError):
    """The query makes no sense for this input (e.g. symplectic in odd dimension)."""
