"""Gadget reduction from (g, f)-parity factors to perfect matchings.

Every edge ``uv`` becomes two external nodes ``e(u,v)`` and ``e(v,u)`` joined
by a twin edge. Vertex ``v`` gets ``d(v) - g(v)`` internal nodes, each adjacent
to all ``d(v)`` externals of ``v``, and ``(f(v) - g(v)) / 2`` disjoint pair edges
among those internals. In a perfect matching the externals of ``v`` left for
twin edges number exactly ``g(v) + 2k`` where ``k`` is the count of pair edges
used at ``v``, so twin edges in the matching form a parity factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleVertex, NotPerfect
from .graph import Edge, Graph
from .oracle import ParitySpec


@dataclass(frozen=True)
class ClampedSpec:
    spec: ParitySpec
    infeasible: tuple[int, ...]


@dataclass(frozen=True)
class GadgetGraph:
    gadget: Graph
    source: Graph
    clamped: ClampedSpec
    # node -> (original vertex, original edge) for externals, -1 row for internals
    external_of: dict[int, tuple[int, Edge]]
    internal_of: dict[int, int]
    twin_edges: tuple[Edge, ...]
    pair_edges: tuple[Edge, ...]
    externals_at: tuple[tuple[int, ...], ...]
    internals_at: tuple[tuple[int, ...], ...]


def clamp_spec(g: Graph, spec: ParitySpec) -> ClampedSpec:
    """Lower every ``f(v)`` to the largest admissible value not above ``d(v)``.

    Vertices with ``g(v) > d(v)`` cannot be satisfied; they keep ``f = g`` and
    are listed as infeasible.
    """
    spec.check_for(g)
    lo, hi, bad = [], [], []
    for v in range(g.n):
        d, gv = g.degree(v), spec.g[v]
        lo.append(gv)
        if gv > d:
            bad.append(v)
            hi.append(gv)
        else:
            hi.append(gv + 2 * ((min(spec.f[v], d) - gv) // 2))
    return ClampedSpec(ParitySpec(lo, hi, spec.uniform), tuple(bad))


def gadget_size(g: Graph, clamped: ClampedSpec) -> int:
    return 2 * g.m + sum(g.degree(v) - clamped.spec.g[v] for v in range(g.n))


def build_gadget(g: Graph, clamped: ClampedSpec) -> GadgetGraph:
    if clamped.infeasible:
        raise InfeasibleVertex(clamped.infeasible[0])
    lo, hi = clamped.spec.g, clamped.spec.f
    external_of: dict[int, tuple[int, Edge]] = {}
    ext_at: list[list[int]] = [[] for _ in range(g.n)]
    twins = []
    for i, (u, v) in enumerate(g.edges):
        external_of[2 * i] = (u, (u, v))
        external_of[2 * i + 1] = (v, (u, v))
        ext_at[u].append(2 * i)
        ext_at[v].append(2 * i + 1)
        twins.append((2 * i, 2 * i + 1))

    internal_of: dict[int, int] = {}
    int_at: list[list[int]] = [[] for _ in range(g.n)]
    node = 2 * g.m
    for v in range(g.n):
        for _ in range(g.degree(v) - lo[v]):
            internal_of[node] = v
            int_at[v].append(node)
            node += 1

    # adjacency comes out sorted: a twin precedes every internal node, and an
    # internal's externals (edge order) precede its pair partner
    adj: list = [None] * node
    pairs = []
    for v in range(g.n):
        ext, inner = tuple(ext_at[v]), tuple(int_at[v])
        for x in ext:
            twin = x + 1 if x % 2 == 0 else x - 1
            adj[x] = (twin,) + inner
        partner = {}
        for j in range((hi[v] - lo[v]) // 2):
            x, y = inner[2 * j], inner[2 * j + 1]
            pairs.append((x, y))
            partner[x], partner[y] = y, x
        for i in inner:
            adj[i] = ext + (partner[i],) if i in partner else ext

    gadget = Graph(node, tuple(adj))
    assert gadget.n == gadget_size(g, clamped)
    return GadgetGraph(
        gadget, g, clamped, external_of, internal_of, tuple(twins), tuple(pairs),
        tuple(map(tuple, ext_at)), tuple(map(tuple, int_at)),
    )


def seed_mates(gg: GadgetGraph) -> list[int]:
    """A large initial matching of the gadget.

    Greedily picks a subgraph ``H`` with ``deg_H(v) <= g(v)``, matches the
    twins of ``H``, then hands each internal node of ``v`` one external of
    ``v`` outside ``H``. Only ``g(v) - deg_H(v)`` externals per vertex stay
    exposed, so few augmentations remain.
    """
    src, lo = gg.source, gg.clamped.spec.g
    mate = [-1] * gg.gadget.n
    room = list(lo)
    for i, (u, v) in enumerate(src.edges):
        if room[u] and room[v]:
            room[u] -= 1
            room[v] -= 1
            mate[2 * i], mate[2 * i + 1] = 2 * i + 1, 2 * i
    for v in range(src.n):
        free = (x for x in gg.externals_at[v] if mate[x] == -1)
        for i, x in zip(gg.internals_at[v], free):
            mate[i], mate[x] = x, i
    return mate


def extract_factor(gg: GadgetGraph, pm: Sequence[Edge]) -> list[Edge]:
    """Original edges whose twin edge lies in the perfect matching ``pm``."""
    mate = [-1] * gg.gadget.n
    for x, y in pm:
        if not gg.gadget.has_edge(x, y) or mate[x] != -1 or mate[y] != -1:
            raise NotPerfect(f"{x}-{y} breaks the matching")
        mate[x], mate[y] = y, x
    if -1 in mate:
        raise NotPerfect(f"node {mate.index(-1)} is exposed")
    return factor_from_mates(gg, mate)


def factor_from_mates(gg: GadgetGraph, mate: Sequence[int]) -> list[Edge]:
    src, lo, hi = gg.source, gg.clamped.spec.g, gg.clamped.spec.f
    factor = [e for i, e in enumerate(src.edges) if mate[2 * i] == 2 * i + 1]
    deg = [0] * src.n
    for u, v in factor:
        deg[u] += 1
        deg[v] += 1
    used_pairs = [0] * src.n
    for x, y in gg.pair_edges:
        if mate[x] == y:
            used_pairs[gg.internal_of[x]] += 1
    for v in range(src.n):
        assert deg[v] == lo[v] + 2 * used_pairs[v] <= hi[v], v
    return factor


def dump_gadget(gg: GadgetGraph) -> tuple[str, str]:
    """Gadget as graph text plus a JSON node map for manual inspection.

    A twin edge in a perfect matching means the original edge is in the factor.
    """
    from .textio import format_graph_text

    nodes = []
    for x in range(gg.gadget.n):
        if x in gg.external_of:
            v, (a, b) = gg.external_of[x]
            nodes.append({"node": x, "kind": "external", "vertex": v, "edge": [a, b]})
        else:
            nodes.append({"node": x, "kind": "internal", "vertex": gg.internal_of[x]})
    sidecar = {
        "nodes": nodes,
        "twin_edges": [list(e) for e in gg.twin_edges],
        "pair_edges": [list(e) for e in gg.pair_edges],
    }
    return format_graph_text(gg.gadget), json.dumps(sidecar, indent=2) + "\n"
