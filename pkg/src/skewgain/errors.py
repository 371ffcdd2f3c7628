"""Exception hierarchy for skewgain."""


class SkewGainError(Exception):
    """Base class for every error raised by this package."""


class ZeroGain(SkewGainError, ValueError):
    pass


class DomainMismatch(SkewGainError, ValueError):
    pass


# graph construction

class LoopEdge(SkewGainError, ValueError):
    pass


class DuplicateEdge(SkewGainError, ValueError):
    pass


class VertexOutOfRange(SkewGainError, ValueError):
    pass


class BadGainCount(SkewGainError, ValueError):
    pass


class FamilyTooSmall(SkewGainError, ValueError):
    pass


# matrices

class NotSquare(SkewGainError, ValueError):
    pass


class ShapeMismatch(SkewGainError, ValueError):
    pass


class NotCommuting(SkewGainError, ValueError):
    pass


class SingularBlock(SkewGainError, ValueError):
    pass


# structural preconditions of the closed-form routes

class StructureError(SkewGainError, ValueError):
    """The underlying graph does not have the shape a closed form needs."""


class NotAPath(StructureError):
    pass


class NotACycle(StructureError):
    pass


class NotBipartite(StructureError):
    pass


class NotUnicyclic(StructureError):
    pass


class NotAStar(StructureError):
    pass


class NotADoubleStar(StructureError):
    pass


class NotCompleteBipartite(StructureError):
    pass


class ConvergenceFailure(SkewGainError, ArithmeticError):
    pass


class ParseError(SkewGainError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
