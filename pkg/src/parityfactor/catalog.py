"""Isomorphism-free catalogs of small graphs for exhaustive sweeps.

Graphs on ``n`` vertices are grown from the catalog on ``n-1`` vertices by
attaching a new vertex to every subset of the old ones, then deduplicated by
a canonical edge mask. The canonical mask is the minimum over relabelings
that list vertices by (degree, sorted neighbour degrees); vertices sharing
that signature are permuted exhaustively, which keeps n <= 7 cheap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .graph import Graph, build_graph, is_connected


def _canonical(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    sig = [(len(nbrs[v]), tuple(sorted(len(nbrs[w]) for w in nbrs[v]))) for v in range(n)]
    classes: dict = {}
    for v in sorted(range(n), key=lambda v: sig[v]):
        classes.setdefault(sig[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(grp) for grp in groups)):
        order = [v for grp in choice for v in grp]
        label = [0] * n
        for i, v in enumerate(order):
            label[v] = i
        key = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n <= 1:
        return ((),)
    out = set()
    for base in _all_graphs(n - 1):
        for k in range(n):
            for nb in combinations(range(n - 1), k):
                edges = list(base) + [(u, n - 1) for u in nb]
                out.add(_canonical(n, edges))
    return tuple(sorted(out, key=lambda es: (len(es), es)))


def graph_catalog(n: int, connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    graphs = [build_graph(n, es) for es in _all_graphs(n)]
    if connected:
        graphs = [g for g in graphs if is_connected(g)]
    return graphs
