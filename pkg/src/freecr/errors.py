"""Exception hierarchy shared by all modules."""


class FreeCRError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(FreeCRError, ZeroDivisionError):
    pass


class UnknownSymbol(FreeCRError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ChartMismatch(FreeCRError):
    pass


class DegenerateFrame(FreeCRError):
    pass


class NotFree(FreeCRError):
    """A frame bracket left the span required by the free CR structure."""


class NonCommutingFrame(FreeCRError):
    """The holomorphic frame fields do not pairwise commute."""


class WrongDimension(FreeCRError):
    pass


class UnsupportedDimension(FreeCRError):
    pass


class MissingNijenhuis(FreeCRError):
    pass


class TraceResidual(FreeCRError):
    """The assembled invariant tensor failed a trace or symmetry check."""


class DegenerateInput(FreeCRError):
    pass


class ParseError(FreeCRError):
    def __init__(self, message, line=1, column=1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


class UnknownCoordinate(ParseError):
    pass


class WrongFieldCount(ParseError):
    pass
