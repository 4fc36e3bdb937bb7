"""Exception hierarchy.  Every error raised by the library derives from :class:`FormsError`."""


class FormsError(Exception):
    pass


class ParseError(FormsError, ValueError):
    def __init__(self, message, line=0, col=0, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        where = f" at line {line}, column {col}" if line else ""
        super().__init__(f"{message}{where}")


class ExprSyntaxError(ParseError):
    pass


class UnknownIdentifier(ParseError):
    def __init__(self, name, line=0, col=0):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", line, col)


class DomainError(FormsError, ArithmeticError):
    pass


class SingularMetric(FormsError):
    pass


class SignatureError(FormsError):
    pass


class DimensionMismatch(FormsError, ValueError):
    pass


class GradeError(FormsError, ValueError):
    pass


class BadConjugator(FormsError):
    pass


class NoConvergence(FormsError):
    pass


class NotInvertible(FormsError):
    pass


class FrameError(FormsError):
    pass


class GaugeAssumptionViolated(FormsError):
    pass


class DenominatorNearZero(FormsError):
    pass


class ConditionViolated(FormsError):
    pass


class SingularSystem(FormsError):
    pass


class GeneratorDefect(FormsError):
    pass


class ClosureDefect(FormsError):
    pass


class NotInGroup(FormsError):
    pass


class NotInSpin(FormsError):
    pass


class SchemaError(FormsError, ValueError):
    pass


class SlotParseError(ParseError, SchemaError):
    """A DSL parse error inside a scenario file; ``slot`` names the offending entry."""

    def __init__(self, slot, err: ParseError):
        self.slot = slot
        self.line, self.col, self.expected = err.line, err.col, err.expected
        Exception.__init__(self, f"{slot}: {err}")
