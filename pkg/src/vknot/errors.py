"""Exception hierarchy shared by all vknot modules."""


class VKnotError(Exception):
    """Base class for every error raised by this package."""


class ParseError(VKnotError, ValueError):
    """Malformed polynomial or knot text.

    ``position`` is the 0-based character offset into the parsed text and
    ``line`` the 1-based line number (knot files only).
    """

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class NotDivisible(VKnotError, ArithmeticError):
    pass


class NegativePowerOfNonUnit(VKnotError, ArithmeticError):
    pass


class ValidationError(VKnotError, ValueError):
    pass


class EdgeUsedTwiceAsInput(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    """An edge is the output of more than one crossing role."""


class EdgeUnused(ValidationError):
    """An edge has a head but no tail, or a tail but no head."""


class NotSingleComponent(ValidationError):
    pass


class InconsistentColoring(VKnotError):
    pass


class EmptyDiagram(VKnotError, ValueError):
    pass


class InternalInvariantViolation(VKnotError, RuntimeError):
    pass


class UnknownEdge(VKnotError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SameEdge(VKnotError, ValueError):
    pass


class NotAKink(VKnotError, ValueError):
    pass


class NotAnR2Pair(VKnotError, ValueError):
    pass
