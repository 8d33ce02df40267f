"""Exception hierarchy shared by every module in the package."""


class GraphError(ValueError):
    """Base class for all atgraph errors."""


class ValidationError(GraphError):
    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class OutOfRange(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class ParseError(GraphError):
    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class InvalidParameter(GraphError):
    pass


class NotConnected(GraphError):
    pass


class Edgeless(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class TooLarge(GraphError):
    pass


class TooManyEdges(GraphError):
    pass


class TargetMismatch(GraphError):
    pass


class NotAPermutation(GraphError):
    pass


class NotATOrientation(GraphError):
    pass


class HashMismatch(GraphError):
    pass


class EdgeSetMismatch(GraphError):
    pass


class BudgetExceeded(GraphError):
    """Search ran out of node expansions; ``lower``/``upper`` bracket the answer."""

    def __init__(self, lower, upper, expanded=None):
        self.lower = lower
        self.upper = upper
        self.expanded = expanded
        super().__init__(f"search budget exhausted; AT in [{lower}, {upper}]")
