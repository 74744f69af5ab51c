"""Lovasz deficiency, g-odd components and exhaustive oracles.

Everything here is exponential and meant for small graphs: it is the ground
truth the polynomial finder is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .errors import BadSpec, EvenK, OverlappingSets, TooLarge
from .graph import Edge, Graph, VertexSet, components_excluding, vertex_set

DEFAULT_CERT_MAX_N = 12
DEFAULT_MAX_EDGES = 18


@dataclass(frozen=True)
class ParitySpec:
    """Per-vertex bounds ``g(v) <= deg_F(v) <= f(v)`` with ``deg_F(v) = f(v) mod 2``."""

    g: tuple[int, ...]
    f: tuple[int, ...]
    uniform: Optional[tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "f", tuple(self.f))
        if len(self.g) != len(self.f):
            raise BadSpec("g and f must have one entry per vertex")
        for v, (lo, hi) in enumerate(zip(self.g, self.f)):
            if lo < 0 or lo > hi:
                raise BadSpec(f"vertex {v}: need 0 <= g <= f, got g={lo}, f={hi}")
            if (hi - lo) % 2:
                raise BadSpec(f"vertex {v}: g={lo} and f={hi} differ in parity")

    @classmethod
    def from_ab(cls, n: int, a: int, b: int) -> ParitySpec:
        if a < 0 or a > b or (b - a) % 2:
            raise BadSpec(f"(a, b) = ({a}, {b}) needs 0 <= a <= b and a = b mod 2")
        return cls((a,) * n, (b,) * n, (a, b))

    @property
    def n(self) -> int:
        return len(self.g)

    def check_for(self, graph: Graph) -> None:
        if self.n != graph.n:
            raise BadSpec(f"spec covers {self.n} vertices, graph has {graph.n}")


@dataclass(frozen=True)
class Certificate:
    S: VertexSet
    T: VertexSet
    eta: int
    odd_components: tuple[VertexSet, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "T": list(self.T),
            "eta": self.eta,
            "odd_components": [list(c) for c in self.odd_components],
        }


@dataclass(frozen=True)
class AmahashiCertificate:
    S: VertexSet
    odd_component_count: int


def _disjoint(g: Graph, S, T) -> tuple[VertexSet, VertexSet]:
    S, T = vertex_set(g, S), vertex_set(g, T)
    if set(S) & set(T):
        raise OverlappingSets(f"S and T share {sorted(set(S) & set(T))}")
    return S, T


def g_odd_component_count(
    g: Graph, spec: ParitySpec, S: Iterable[int], T: Iterable[int]
) -> tuple[int, list[VertexSet]]:
    """Components ``C`` of ``G-S-T`` with ``g(C) + e(C, T)`` odd."""
    spec.check_for(g)
    S, T = _disjoint(g, S, T)
    in_T = [False] * g.n
    for x in T:
        in_T[x] = True
    odd = []
    for comp in components_excluding(g, S + T):
        total = sum(spec.g[v] for v in comp)
        total += sum(1 for v in comp for u in g.adj[v] if in_T[u])
        if total % 2:
            odd.append(comp)
    return len(odd), odd


def eta(g: Graph, spec: ParitySpec, S: Iterable[int], T: Iterable[int]) -> int:
    """Deficiency ``f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q(S, T)``."""
    S, T = _disjoint(g, S, T)
    q, _ = g_odd_component_count(g, spec, S, T)
    in_S = set(S)
    value = sum(spec.f[v] for v in S) - sum(spec.g[x] for x in T)
    value += sum(1 for x in T for u in g.adj[x] if u not in in_S)
    return value - q


def make_certificate(g: Graph, spec: ParitySpec, S, T) -> Certificate:
    S, T = _disjoint(g, S, T)
    _, odd = g_odd_component_count(g, spec, S, T)
    return Certificate(S, T, eta(g, spec, S, T), tuple(odd))


def iter_disjoint_pairs(n: int):
    """All disjoint ``(S, T)`` in canonical order: ``|S|+|T|`` ascending, then
    ``|S|`` ascending, then ``S`` and ``T`` lexicographically."""
    verts = range(n)
    for k in range(n + 1):
        for s in range(k + 1):
            for S in combinations(verts, s):
                rest = [v for v in verts if v not in S]
                for T in combinations(rest, k - s):
                    yield S, T


def certificate_search(
    g: Graph, spec: ParitySpec, max_n: int = DEFAULT_CERT_MAX_N
) -> Optional[Certificate]:
    """First disjoint pair with negative deficiency, or ``None`` if a
    (g, f)-parity factor exists."""
    spec.check_for(g)
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    n = g.n
    nbr_mask = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    comp_cache: dict[int, list[tuple[int, int]]] = {}

    def components(removed: int) -> list[tuple[int, int]]:
        # (vertex mask, g-sum) for each component of G - removed
        hit = comp_cache.get(removed)
        if hit is not None:
            return hit
        left = ((1 << n) - 1) & ~removed
        out = []
        while left:
            frontier = left & -left
            comp = 0
            while frontier:
                comp |= frontier
                grow = 0
                m = frontier
                while m:
                    low = m & -m
                    grow |= nbr_mask[low.bit_length() - 1]
                    m ^= low
                frontier = grow & left & ~comp
            left &= ~comp
            out.append((comp, sum(spec.g[v] for v in range(n) if comp >> v & 1)))
        comp_cache[removed] = out
        return out

    for S, T in iter_disjoint_pairs(n):
        s_mask = sum(1 << v for v in S)
        t_mask = sum(1 << v for v in T)
        value = sum(spec.f[v] for v in S) - sum(spec.g[x] for x in T)
        value += sum((nbr_mask[x] & ~s_mask).bit_count() for x in T)
        for comp, gsum in components(s_mask | t_mask):
            to_t = sum((nbr_mask[x] & comp).bit_count() for x in T)
            if (gsum + to_t) % 2:
                value -= 1
        if value < 0:
            cert = make_certificate(g, spec, S, T)
            assert cert.eta == value
            return cert
    return None


def odd_component_count(g: Graph, S: Iterable[int]) -> int:
    return sum(1 for c in components_excluding(g, S) if len(c) % 2)


def amahashi_search(g: Graph, k: int, max_n: int = DEFAULT_CERT_MAX_N) -> Optional[AmahashiCertificate]:
    """First ``S`` (by size, then lexicographic) with ``c_o(G-S) > k|S|``."""
    if k < 1 or k % 2 == 0:
        raise EvenK(f"k must be a positive odd integer, got {k}")
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    for s in range(g.n + 1):
        for S in combinations(range(g.n), s):
            c = odd_component_count(g, S)
            if c > k * s:
                return AmahashiCertificate(S, c)
    return None


def brute_force_factor(
    g: Graph, spec: ParitySpec, max_edges: int = DEFAULT_MAX_EDGES
) -> Optional[list[Edge]]:
    """Enumerate every spanning subgraph.

    Subsets are visited by bitmask ascending (bit ``j`` selects ``g.edges[j]``)
    and the first one meeting every degree bound and parity is returned.
    """
    spec.check_for(g)
    m = g.m
    if m > max_edges:
        raise TooLarge(m, max_edges, what="edges")
    lo = np.array(spec.g, dtype=np.int64)
    hi = np.array(spec.f, dtype=np.int64)
    par = hi % 2
    inc = np.zeros((m, g.n), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        inc[j, u] = inc[j, v] = 1
    bits = np.arange(m, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        choose = (masks[:, None] >> bits) & 1
        deg = choose @ inc
        ok = ((deg >= lo) & (deg <= hi) & (deg % 2 == par)).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            mask = int(masks[hits[0]])
            return [e for j, e in enumerate(g.edges) if mask >> j & 1]
    return None

