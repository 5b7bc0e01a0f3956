"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for all errors raised by twinlines."""


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRange(GraphError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range for n={n}")
        self.u, self.n = u, n


class EqualEndpoints(GraphError):
    """A line needs two distinct generators."""


class TooSmall(GraphError):
    """Raised for graphs with fewer than two vertices."""


class SameBlob(GraphError):
    """Both vertices belong to the same blob; the pullback rule does not apply."""


class InvalidPartition(GraphError):
    """A blob partition is inconsistent with the graph it claims to describe."""


class NotInClass(GraphError):
    """The graph is not obtained from a bipartite graph by splitting into true twins."""


class IllegalTriple(GraphError):
    """(n, p, k) violates 2 <= p <= n-1 and 1 <= k <= p/2."""


class BelowN0(GraphError):
    """The case analysis only applies for n >= 40."""


class FormatError(GraphError):
    """Malformed text input; carries the 1-based line number when known."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
