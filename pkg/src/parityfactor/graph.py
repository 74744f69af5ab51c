"""Immutable simple graphs on vertices ``0..n-1`` and the queries every
factor criterion needs."""

from __future__ import annotations

import random
from bisect import bisect_left
from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import (
    BadParams,
    DuplicateEdge,
    EdgeNotInGraph,
    EmptyGraph,
    OverlappingSets,
    SelfLoop,
    VertexInExcluded,
    VertexOutOfRange,
)

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the ascending tuple of neighbours of ``v`` and ``edges`` is
    the lexicographically sorted tuple of pairs ``(u, v)`` with ``u < v``.
    Instances are immutable; use :func:`build_graph` to construct one.
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], edges: Optional[tuple[Edge, ...]] = None):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_edges", edges)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            # derived on first use; large gadget graphs rarely need it
            es = tuple((u, v) for u, nb in enumerate(self.adj) for v in nb if u < v)
            object.__setattr__(self, "_edges", es)
        return self._edges

    @property
    def m(self) -> int:
        if self._edges is not None:
            return len(self._edges)
        return sum(len(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        if not 0 <= u < self.n:
            return False
        nb = self.adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def with_edge(self, u: int, v: int) -> Graph:
        """Return a fresh graph with the extra edge ``uv``."""
        return build_graph(self.n, list(self.edges) + [(u, v)])


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise BadParams(f"negative vertex count {n}")
    seen: set[Edge] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_pairs:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(*key)
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(nb)) for nb in nbrs)
    g = Graph(n, adj, tuple(sorted(seen)))
    assert sum(len(nb) for nb in adj) == 2 * len(g.edges)
    return g


def vertex_set(g: Graph, items: Iterable[int]) -> VertexSet:
    """Normalize ``items`` into a sorted, duplicate-free tuple of vertices of ``g``."""
    vs = tuple(sorted(set(items)))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        bad = next(v for v in vs if not 0 <= v < g.n)
        raise VertexOutOfRange(bad, g.n)
    return vs


def degree_excluding(g: Graph, v: int, S: Iterable[int]) -> int:
    """Degree of ``v`` in ``G - S``."""
    excluded = set(S)
    if v in excluded:
        raise VertexInExcluded(f"vertex {v} lies in the excluded set")
    return sum(1 for u in g.adj[v] if u not in excluded)


def components_excluding(g: Graph, removed: Iterable[int]) -> list[VertexSet]:
    """Connected components of ``G - removed``, ordered by smallest vertex."""
    gone = [False] * g.n
    for v in removed:
        gone[v] = True
    seen = gone[:]
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components_excluding(g, ())) == 1


def edges_between(g: Graph, A: Iterable[int], B: Iterable[int]) -> int:
    """Number of edges with one end in ``A`` and the other in ``B``."""
    A, B = set(A), set(B)
    if A & B:
        raise OverlappingSets(f"sets share vertices {sorted(A & B)}")
    if len(A) > len(B):
        A, B = B, A
    return sum(1 for x in A for y in g.adj[x] if y in B)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph is undefined")
    return min(len(nb) for nb in g.adj)


def nonadjacent_pairs(g: Graph) -> list[Edge]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]


def check_edge_subset(g: Graph, F: Iterable[tuple[int, int]]) -> list[Edge]:
    """Canonicalize ``F`` and make sure every edge belongs to ``g``."""
    out = []
    for u, v in F:
        if not g.has_edge(u, v):
            raise EdgeNotInGraph(f"{u}-{v} is not an edge")
        out.append((u, v) if u < v else (v, u))
    return sorted(out)


# --- generators -----------------------------------------------------------

def as_fraction(p) -> Fraction:
    """Accept a Fraction, an int, a ``(num, den)`` pair or a ``"num/den"`` string."""
    if isinstance(p, Fraction):
        return p
    if isinstance(p, tuple):
        return Fraction(*p)
    if isinstance(p, (int, str)):
        return Fraction(p)
    raise BadParams(f"probability {p!r} must be an exact rational")


def _count(params: Mapping, key: str, lo: int = 0) -> int:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    val = params[key]
    if not isinstance(val, int) or isinstance(val, bool) or val < lo:
        raise BadParams(f"parameter {key!r} must be an integer >= {lo}, got {val!r}")
    return val


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """K_{p,q} with the left part ``0..p-1``."""
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def gnp_graph(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); each pair ``u<v`` (lexicographic) is kept when a
    uniform draw from ``range(den)`` falls below ``num``."""
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise BadParams(f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    num, den = p.numerator, p.denominator
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.randrange(den) < num])


def generate(model: str, params: Mapping, seed: int = 0) -> Graph:
    """Deterministic graph generator.

    ``model`` is one of ``complete``/``cycle``/``path`` (param ``n``),
    ``complete_bipartite`` (params ``p``, ``q``) or ``gnp`` (params ``n`` and
    ``p``, an exact rational). ``seed`` only matters for ``gnp``.
    """
    if model == "complete":
        return complete_graph(_count(params, "n"))
    if model == "cycle":
        return cycle_graph(_count(params, "n"))
    if model == "path":
        return path_graph(_count(params, "n"))
    if model == "complete_bipartite":
        return complete_bipartite_graph(_count(params, "p"), _count(params, "q"))
    if model == "gnp":
        if "p" not in params:
            raise BadParams("missing parameter 'p'")
        return gnp_graph(_count(params, "n"), params["p"], seed)
    raise BadParams(f"unknown model {model!r}")
