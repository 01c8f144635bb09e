"""Exception hierarchy shared by all modules."""


class NodalError(Exception):
    """Base class for every error raised by nodalgraph."""


class GraphError(NodalError, ValueError):
    """Raw graph data failed validation."""


class EmptyGraph(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class Disconnected(GraphError):
    pass


class DimensionMismatch(NodalError, ValueError):
    pass


class ConvergenceFailure(NodalError, ArithmeticError):
    """The eigensolver hit its iteration cap or missed its accuracy contract."""


class BadCoefficientLength(NodalError, ValueError):
    pass


class NonUnitCoefficients(NodalError, ValueError):
    pass


class AllZero(NodalError, ValueError):
    """Every entry of a vector is numerically zero."""


class TooLarge(NodalError, ValueError):
    pass


class ResidualTooLarge(NodalError, ValueError):
    pass


class DegenerateSystem(NodalError, ArithmeticError):
    pass


class GenerationFailure(NodalError, RuntimeError):
    pass


class GraphFileError(NodalError, ValueError):
    """A graph file could not be parsed."""
