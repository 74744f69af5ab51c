"""Degree-condition hypothesis checkers and the sharpness constructions.

All thresholds are rational; every comparison is done by integer
cross-multiplication so instances sitting right next to a threshold are
classified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadM, BadParity, BadRange, EvenK, KTooSmall
from .graph import Graph, build_graph, complete_bipartite_graph, is_connected, min_degree


@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    # lhs - rhs of the integer inequality; None for yes/no clauses and vacuous ones
    slack: Optional[int] = None
    detail: str = ""
    informational: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "slack": self.slack,
            "detail": self.detail,
            "informational": self.informational,
        }


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    clauses: tuple[Clause, ...]

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.clauses if not c.informational)

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "overall": self.overall,
            "clauses": [c.to_dict() for c in self.clauses],
        }


def _at_least(name: str, lhs: int, rhs: int, detail: str) -> Clause:
    return Clause(name, lhs >= rhs, lhs - rhs, detail)


def _pair_clause(g: Graph, weight: int, target: int, label: str) -> Clause:
    """``weight * max(d(u), d(v)) >= target`` for every nonadjacent ``u, v``.

    The slack is that of the worst pair.
    """
    deg = g.degrees()
    worst = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            s = weight * max(deg[u], deg[v]) - target
            if worst is None or s < worst[0]:
                worst = (s, u, v)
    if worst is None:
        return Clause("pair_degree", True, None, "no nonadjacent pairs")
    s, u, v = worst
    return Clause(
        "pair_degree", s >= 0, s,
        f"worst pair ({u},{v}): {weight}*max({deg[u]},{deg[v]}) vs {label}={target}",
    )


def _connectivity(g: Graph, informational: bool = False) -> Clause:
    return Clause("connectivity", is_connected(g), None, "", informational)


def check_main(g: Graph, a: int, b: int, require_connected: bool = False) -> HypothesisReport:
    """Hypotheses of the (a,b)-parity factor degree theorem.

    ``n >= b(a+b)(a+b+2)/(2a)``, ``na`` even, ``delta >= a + (b-a)/a`` and
    ``max(d(u), d(v)) >= an/(a+b)`` over nonadjacent pairs. Connectivity is
    reported but only counts towards ``overall`` with ``require_connected``.
    """
    if (b - a) % 2:
        raise BadParity(f"a={a} and b={b} differ in parity")
    if a < 1 or a > b:
        raise BadRange(f"need 1 <= a <= b, got a={a}, b={b}")
    n = g.n
    delta = min_degree(g)
    bound = b * (a + b) * (a + b + 2)
    return HypothesisReport("main", (
        _at_least("order", 2 * a * n, bound, f"2*{a}*n vs b(a+b)(a+b+2)={bound}"),
        Clause("parity", n * a % 2 == 0, None, f"n*a={n * a}"),
        _at_least("min_degree", a * delta, a * a + b - a, f"a*delta={a * delta} vs a^2+b-a"),
        _pair_clause(g, a + b, a * n, "a*n"),
        _connectivity(g, informational=not require_connected),
    ))


def check_nishimura(g: Graph, k: int) -> HypothesisReport:
    if k < 3:
        raise KTooSmall(f"k must be at least 3, got {k}")
    n = g.n
    return HypothesisReport("nishimura", (
        _connectivity(g),
        _at_least("order", n, 4 * k - 3, "n vs 4k-3"),
        Clause("parity", k * n % 2 == 0, None, f"k*n={k * n}"),
        _at_least("min_degree", min_degree(g), k, "delta vs k"),
        _pair_clause(g, 2, n, "n"),
    ))


def check_li_cai(g: Graph, a: int, b: int) -> HypothesisReport:
    """Hypotheses for an [a,b]-factor: ``delta >= a``,
    ``n >= 2a + b + (a^2 - a)/b`` and the ``an/(a+b)`` pair condition."""
    if not 1 <= a < b:
        raise BadRange(f"need 1 <= a < b, got a={a}, b={b}")
    n = g.n
    rhs = b * (2 * a + b) + a * a - a
    return HypothesisReport("licai", (
        _at_least("min_degree", min_degree(g), a, "delta vs a"),
        _at_least("order", b * n, rhs, f"b*n vs b(2a+b)+a^2-a={rhs}"),
        _pair_clause(g, a + b, a * n, "a*n"),
    ))


def check_odd_lemma(g: Graph, k: int) -> HypothesisReport:
    """Hypotheses for a (1,k)-odd factor: connected, ``n`` even,
    ``n >= k+1`` and ``(1+k) max(d(u), d(v)) >= n`` over nonadjacent pairs."""
    if k < 1 or k % 2 == 0:
        raise EvenK(f"k must be a positive odd integer, got {k}")
    n = g.n
    return HypothesisReport("oddlemma", (
        _connectivity(g),
        Clause("parity", n % 2 == 0, None, f"n={n}"),
        _at_least("order", n, k + 1, "n vs k+1"),
        _pair_clause(g, 1 + k, n, "n"),
    ))


def check(theorem: str, g: Graph, **params) -> HypothesisReport:
    """Dispatch by theorem id: ``main``/``licai`` take ``a, b``; ``nishimura``
    and ``oddlemma`` take ``k``."""
    if theorem == "main":
        return check_main(g, params["a"], params["b"], params.get("require_connected", False))
    if theorem == "licai":
        return check_li_cai(g, params["a"], params["b"])
    if theorem == "nishimura":
        return check_nishimura(g, params["k"])
    if theorem == "oddlemma":
        return check_odd_lemma(g, params["k"])
    raise ValueError(f"unknown theorem {theorem!r}")


# --- sharpness constructions ------------------------------------------------

def _extremal_params(a: int, b: int) -> None:
    if a < 1:
        raise BadRange(f"need a >= 1, got {a}")
    if (b - a) % 2:
        raise BadParity(f"a={a} and b={b} differ in parity")


def build_bipartite_extremal(a: int, b: int, m: int) -> Graph:
    """K_{ma, mb+1}, left part ``0..ma-1``."""
    _extremal_params(a, b)
    if m < 1:
        raise BadRange(f"need m >= 1, got {m}")
    return complete_bipartite_graph(m * a, m * b + 1)


def apex_clique_count(a: int, b: int) -> int:
    """``a + ceil((b-a)/a) - 1``."""
    return a + -(-(b - a) // a) - 1


def build_apex_extremal(a: int, b: int, m: int) -> Graph:
    """``q`` disjoint copies of K_m plus an apex joined to the first vertex of
    each copy, where ``q = a + ceil((b-a)/a) - 1``.

    The apex is vertex ``q*m``. ``m`` must be even so every copy is g-odd
    against ``T = {apex}``, and ``m >= q+1`` so the apex has minimum degree.
    """
    _extremal_params(a, b)
    q = apex_clique_count(a, b)
    if m % 2 or m < q + 1:
        raise BadM(f"m={m} must be even and at least q+1={q + 1}")
    apex = q * m
    edges = []
    for c in range(q):
        first = c * m
        edges.extend((first + i, first + j) for i in range(m) for j in range(i + 1, m))
        edges.append((first, apex))
    return build_graph(q * m + 1, edges)
