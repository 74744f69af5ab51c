"""Polynomial decision procedure for (g, f)-parity factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Edge, Graph, check_edge_subset
from .matching import perfect_mates
from .oracle import DEFAULT_CERT_MAX_N, Certificate, ParitySpec, certificate_search
from .reduction import build_gadget, clamp_spec, factor_from_mates, gadget_size, seed_mates


@dataclass(frozen=True)
class FactorOutcome:
    factor: Optional[tuple[Edge, ...]]
    certificate: Optional[Certificate] = None
    # which stage decided a negative verdict: infeasible_vertex, odd_g_sum,
    # odd_gadget or no_perfect_matching
    reason: Optional[str] = None

    @property
    def exists(self) -> bool:
        return self.factor is not None

    def to_dict(self) -> dict:
        if self.exists:
            return {"verdict": "factor", "edges": [list(e) for e in self.factor]}
        return {
            "verdict": "no_factor",
            "reason": self.reason,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def verify_factor(g: Graph, spec: ParitySpec, F: Iterable[tuple[int, int]]) -> bool:
    spec.check_for(g)
    deg = [0] * g.n
    for u, v in check_edge_subset(g, F):
        deg[u] += 1
        deg[v] += 1
    return all(
        lo <= d <= hi and (d - hi) % 2 == 0 for d, lo, hi in zip(deg, spec.g, spec.f)
    )


def find_parity_factor(
    g: Graph,
    spec: ParitySpec,
    want_certificate: bool = False,
    cert_max_n: int = DEFAULT_CERT_MAX_N,
) -> FactorOutcome:
    """Decide whether ``g`` has a (g, f)-parity factor and return a witness.

    Negative verdicts carry a deficiency certificate only when asked for and
    ``g.n <= cert_max_n``, since certificates come from exhaustive search.
    """
    spec.check_for(g)

    def no(reason: str) -> FactorOutcome:
        cert = None
        if want_certificate and g.n <= cert_max_n:
            cert = certificate_search(g, spec, max_n=cert_max_n)
            assert cert is not None, "exhaustive search disagrees with the finder"
        return FactorOutcome(None, cert, reason)

    clamped = clamp_spec(g, spec)
    if clamped.infeasible:
        return no("infeasible_vertex")
    if sum(spec.g) % 2:
        return no("odd_g_sum")
    if gadget_size(g, clamped) % 2:
        return no("odd_gadget")
    gg = build_gadget(g, clamped)
    mate = perfect_mates(gg.gadget, seed_mates(gg))
    if mate is None:
        return no("no_perfect_matching")
    factor = factor_from_mates(gg, mate)
    assert verify_factor(g, spec, factor)
    return FactorOutcome(tuple(factor))
