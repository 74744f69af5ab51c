"""Maximum cardinality matching in general graphs.

Edmonds' blossom algorithm: one alternating-tree search per exposed vertex,
in increasing vertex order with neighbours scanned in ascending order, so the
result is deterministic. Blossoms are contracted onto their base and expanded
implicitly when the augmenting path is traced back through ``parent``.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .errors import TooLarge
from .graph import Edge, Graph

Matching = list[Edge]


def greedy_mates(g: Graph) -> list[int]:
    """Match each exposed vertex, in id order, to its lowest exposed neighbour."""
    mate = [-1] * g.n
    for v in range(g.n):
        if mate[v] == -1:
            for u in g.adj[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break
    return mate


def _augment_from(adj, mate: list[int], root: int) -> bool:
    """Search an augmenting path from the exposed vertex ``root``; flip it
    and return True if one exists.

    Contracted blossoms are tracked with a union-find forest whose roots
    remember the blossom base, so each contraction costs near-linear time
    in the length of the cycle.
    """
    n = len(adj)
    label = [0] * n  # 0 unreached, 1 even (outer), 2 odd (inner)
    parent = [-1] * n
    forest = list(range(n))
    base_of = list(range(n))
    mark = [0] * n
    stamp = 0

    def find(x: int) -> int:
        r = x
        while forest[r] != r:
            r = forest[r]
        while forest[x] != r:
            forest[x], x = r, forest[x]
        return r

    def base(x: int) -> int:
        return base_of[find(x)]

    def lca(x: int, y: int) -> int:
        nonlocal stamp
        stamp += 1
        while True:
            if x != -1:
                x = base(x)
                if mark[x] == stamp:
                    return x
                mark[x] = stamp
                x = -1 if mate[x] == -1 else parent[mate[x]]
            x, y = y, x

    def walk(v: int, child: int, b: int, members: list[int]) -> None:
        # bases must stay untouched until both sides are walked
        while base(v) != b:
            w = mate[v]
            parent[v] = child
            child = w
            if label[w] == 2:
                label[w] = 1
                queue.append(w)
            members += (v, w)
            v = parent[w]

    def contract(v: int, to: int) -> None:
        b = lca(v, to)
        members: list[int] = []
        walk(v, to, b, members)
        walk(to, v, b, members)
        rb = find(b)
        for x in members:
            rx = find(x)
            if rx != rb:
                forest[rx] = rb

    label[root] = 1
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if label[to] == 0:
                label[to] = 2
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                w = mate[to]
                label[w] = 1
                queue.append(w)
            elif label[to] == 1 and base(v) != base(to):
                contract(v, to)
    return False


def _check_mates(g: Graph, mate: Sequence[int]) -> list[int]:
    mate = list(mate)
    if len(mate) != g.n:
        raise ValueError("initial matching must have one entry per vertex")
    for v, u in enumerate(mate):
        if u != -1 and (mate[u] != v or not g.has_edge(u, v)):
            raise ValueError(f"initial matching is inconsistent at vertex {v}")
    return mate


def _to_edges(mate: Sequence[int]) -> Matching:
    return [(v, u) for v, u in enumerate(mate) if v < u]


def maximum_mates(g: Graph, initial: Optional[Sequence[int]] = None) -> list[int]:
    """Mate array of a maximum matching; ``initial`` optionally warm-starts
    the search (otherwise a greedy matching is used)."""
    mate = greedy_mates(g) if initial is None else _check_mates(g, initial)
    for v in range(g.n):
        if mate[v] == -1:
            _augment_from(g.adj, mate, v)
    return mate


def maximum_matching(g: Graph, initial: Optional[Sequence[int]] = None) -> Matching:
    return _to_edges(maximum_mates(g, initial))


def perfect_mates(g: Graph, initial: Optional[Sequence[int]] = None) -> Optional[list[int]]:
    """Mate array of a perfect matching, or None as soon as one exposed
    vertex admits no augmenting path."""
    if g.n % 2:
        return None
    mate = greedy_mates(g) if initial is None else _check_mates(g, initial)
    for v in range(g.n):
        if mate[v] == -1 and not _augment_from(g.adj, mate, v):
            return None
    return mate


def has_perfect_matching(g: Graph) -> bool:
    return perfect_mates(g) is not None


def is_matching(g: Graph, edges: Sequence[Edge]) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def brute_force_matching(g: Graph, max_n: int = 10) -> int:
    """Maximum matching size by exhaustive branching on the lowest free vertex."""
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        if free == 0:
            return 0
        if free in memo:
            return memo[free]
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        result = best(rest)
        for u in g.adj[v]:
            if rest >> u & 1:
                result = max(result, 1 + best(rest & ~(1 << u)))
        memo[free] = result
        return result

    return best((1 << g.n) - 1)
