"""Exception hierarchy.

Every error raised by the package derives from :class:`HyperqError`.
Input problems additionally derive from :class:`ValueError` so callers
can catch them generically.
"""


class HyperqError(Exception):
    pass


class InvalidHypergraph(HyperqError, ValueError):
    pass


class NonUniformEdge(InvalidHypergraph):
    pass


class DuplicateVertexInEdge(InvalidHypergraph):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class VertexOutOfRange(InvalidHypergraph):
    pass


class BadUniformity(InvalidHypergraph):
    pass


class EmptySet(HyperqError, ValueError):
    pass


class DimensionMismatch(HyperqError, ValueError):
    pass


class InternalIdentityViolation(HyperqError, AssertionError):
    """Two constructions that must agree did not. Always a bug."""


class NoConvergence(HyperqError, RuntimeError):
    pass


class TooLarge(HyperqError, ValueError):
    pass


class NotConnected(HyperqError, ValueError):
    pass


class NoEdges(HyperqError, ValueError):
    pass


class NotEdgeRegular(HyperqError, ValueError):
    pass


class BadExponents(HyperqError, ValueError):
    pass


class BadParams(HyperqError, ValueError):
    pass


class Infeasible(BadParams):
    pass


class RetriesExhausted(HyperqError, RuntimeError):
    pass


class HgrSyntaxError(HyperqError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderMismatch(HyperqError, ValueError):
    pass


class UnknownId(HyperqError, KeyError):
    pass
