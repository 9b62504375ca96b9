"""Exception hierarchy shared by every module."""


class MindistError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(MindistError):
    pass


class VertexOutOfRange(MindistError):
    pass


class IsolatedVertexPolicyViolation(MindistError):
    """A vertex of the ambient ring is not a face of the complex."""


class NonSquareFreeInput(MindistError):
    pass


class ZeroOrUnitIdeal(MindistError):
    pass


class UnsupportedField(MindistError):
    pass


class NotAFace(MindistError):
    pass


class NotPure(MindistError):
    pass


class NotMixed(MindistError):
    pass


class NonFiniteLength(MindistError):
    """Localization length is infinite; signals an inconsistent prime choice."""


class InterpolationMismatch(MindistError):
    pass


class CrossValidationMismatch(MindistError):
    """Two independent routes to the same quantity disagree (a bug)."""


class TooManyMonomials(MindistError):
    pass


class MixedInputUnsupported(MindistError):
    pass


class TheoremViolation(MindistError):
    """A proved bound failed on some input; always an implementation bug."""


class ParseError(MindistError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
