"""Exception hierarchy shared by every module."""


class HLCError(Exception):
    """Base class for all errors raised by hlcolor."""


class InvalidInstance(HLCError, ValueError):
    """The instance is malformed or violates a modelling assumption."""


class EmptyList(InvalidInstance):
    pass


class ListTooSmall(InvalidInstance):
    pass


class VertexOutOfRange(InvalidInstance):
    pass


class DuplicateVertexInEdge(InvalidInstance):
    pass


class BadColor(InvalidInstance):
    pass


class CNotRespected(InvalidInstance):
    """The declared intersection deficiency is smaller than the true one."""


class PreconditionViolated(HLCError, ValueError):
    pass


class ImproperInput(PreconditionViolated):
    """A partial coloring already has a monochromatic, fully colored edge."""


class EmptyActive(PreconditionViolated):
    pass


class EmptyPart(PreconditionViolated):
    pass


class Eps2TooLarge(PreconditionViolated):
    pass


class InternalInvariantViolation(HLCError, RuntimeError):
    """A guarantee that holds on conforming instances was observed to fail."""


class BudgetExceeded(HLCError):
    pass


class TooManyEdges(HLCError, ValueError):
    pass


class Infeasible(HLCError):
    pass


class HLCSyntaxError(HLCError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
