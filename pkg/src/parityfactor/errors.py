"""Exception hierarchy.

Every error raised by the package derives from :class:`ParityFactorError`,
which is itself a :class:`ValueError` so callers that only care about bad
input can catch the builtin.
"""


class ParityFactorError(ValueError):
    pass


# graph construction and queries
class SelfLoop(ParityFactorError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(ParityFactorError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge {u}-{v}")
        self.u, self.v = u, v


class VertexOutOfRange(ParityFactorError):
    def __init__(self, v, n=None):
        msg = f"vertex {v} out of range" + ("" if n is None else f" for n={n}")
        super().__init__(msg)
        self.v = v


class VertexInExcluded(ParityFactorError):
    pass


class OverlappingSets(ParityFactorError):
    pass


class EmptyGraph(ParityFactorError):
    pass


class BadParams(ParityFactorError):
    pass


class EdgeNotInGraph(ParityFactorError):
    pass


# specs, searches, reductions
class BadSpec(ParityFactorError):
    pass


class TooLarge(ParityFactorError):
    def __init__(self, size, limit, what="n"):
        super().__init__(f"{what}={size} exceeds exhaustive-search limit {limit}")
        self.size, self.limit = size, limit


class EvenK(ParityFactorError):
    pass


class NotPerfect(ParityFactorError):
    pass


class InfeasibleVertex(ParityFactorError):
    def __init__(self, v):
        super().__init__(f"vertex {v} has lower bound above its degree")
        self.v = v


# hypothesis checkers and extremal constructions
class BadParity(ParityFactorError):
    pass


class BadRange(ParityFactorError):
    pass


class KTooSmall(ParityFactorError):
    pass


class BadM(ParityFactorError):
    pass


# text I/O and experiments
class GraphSyntaxError(ParityFactorError):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class BadConfig(ParityFactorError):
    pass
