"""Seeded validation runs for the degree-condition theorems.

A run draws graphs, keeps those satisfying a theorem's hypotheses, and asks
the polynomial finder for the promised factor. A hypothesis-passing graph
without one is a counterexample and is reported with enough data to replay
it. Sharpness runs instead build the extremal families and confirm that they
are factor-free.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .catalog import graph_catalog
from .conditions import (
    apex_clique_count,
    build_apex_extremal,
    build_bipartite_extremal,
    check,
)
from .errors import BadConfig, ParityFactorError
from .finder import find_parity_factor
from .graph import Graph, as_fraction, gnp_graph, is_connected, min_degree
from .oracle import ParitySpec, eta
from .textio import format_graph_text

THEOREMS = ("main", "nishimura", "oddlemma")
MODES = ("random", "exhaustive", "sharpness")
FAMILIES = ("bipartite", "apex")
WORKERS_ENV = "PARITYFACTOR_WORKERS"


@dataclass(frozen=True)
class TrialConfig:
    theorem: str = "main"
    a: Optional[int] = None
    b: Optional[int] = None
    k: Optional[int] = None
    n_values: tuple[int, ...] = ()
    probabilities: tuple[Fraction, ...] = (Fraction(1, 2),)
    trials: int = 1
    seed: int = 0
    connected_only: bool = True
    certificate: bool = False
    mode: str = "random"
    family: str = "bipartite"
    m_values: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(self.n_values))
        object.__setattr__(self, "m_values", tuple(self.m_values))
        try:
            probs = tuple(as_fraction(p) for p in self.probabilities)
        except (ParityFactorError, ValueError, ZeroDivisionError) as exc:
            raise BadConfig(str(exc)) from None
        object.__setattr__(self, "probabilities", probs)
        self.validate()

    def validate(self) -> None:
        if self.mode not in MODES:
            raise BadConfig(f"mode must be one of {MODES}")
        if self.mode == "sharpness":
            if self.family not in FAMILIES:
                raise BadConfig(f"family must be one of {FAMILIES}")
            if self.a is None or self.b is None or not self.m_values:
                raise BadConfig("sharpness runs need a, b and at least one m")
            if self.a < 1 or (self.b - self.a) % 2:
                raise BadConfig(f"(a, b) = ({self.a}, {self.b}) needs a >= 1 and a = b mod 2")
            return
        if self.theorem not in THEOREMS:
            raise BadConfig(
                f"theorem must be one of {THEOREMS}; [a,b]-factors without parity "
                "cannot be decided by the parity finder"
            )
        if self.theorem == "main" and (self.a is None or self.b is None):
            raise BadConfig("theorem 'main' needs a and b")
        if self.theorem in ("nishimura", "oddlemma") and self.k is None:
            raise BadConfig(f"theorem {self.theorem!r} needs k")
        if not self.n_values or min(self.n_values) < 1:
            raise BadConfig("n range must be non-empty and positive")
        if self.mode == "random":
            if self.trials < 1:
                raise BadConfig("trial count must be at least 1")
            if not self.probabilities or any(not 0 <= p <= 1 for p in self.probabilities):
                raise BadConfig("probabilities must lie in [0, 1]")
        if self.theorem == "main" and self.a < 1:
            raise BadConfig("theorem 'main' needs a >= 1")
        if self.theorem == "nishimura" and self.k < 3:
            raise BadConfig("theorem 'nishimura' needs k >= 3")
        try:
            self.spec_for(1)
        except ParityFactorError as exc:
            raise BadConfig(str(exc)) from None

    def spec_for(self, n: int) -> ParitySpec:
        if self.theorem == "nishimura":
            return ParitySpec.from_ab(n, self.k, self.k)
        if self.theorem == "oddlemma":
            if self.k % 2 == 0:
                raise BadConfig("oddlemma needs odd k")
            return ParitySpec.from_ab(n, 1, self.k)
        return ParitySpec.from_ab(n, self.a, self.b)

    def check_params(self) -> dict:
        if self.theorem == "main":
            return {"a": self.a, "b": self.b}
        return {"k": self.k}

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "a": self.a,
            "b": self.b,
            "k": self.k,
            "n_values": list(self.n_values),
            "probabilities": [str(p) for p in self.probabilities],
            "trials": self.trials,
            "seed": self.seed,
            "connected_only": self.connected_only,
            "certificate": self.certificate,
            "mode": self.mode,
            "family": self.family,
            "m_values": list(self.m_values),
        }

    @classmethod
    def from_dict(cls, data: dict) -> TrialConfig:
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise BadConfig(f"unknown config keys {sorted(extra)}")
        return cls(**data)


@dataclass
class TrialReport:
    config: TrialConfig
    trials_generated: int = 0
    skipped_disconnected: int = 0
    trials_passing: int = 0
    factors_found: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    sharpness_run: int = 0
    sharpness_passed: int = 0
    sharpness_failures: list[dict] = field(default_factory=list)
    total_seconds: float = 0.0
    max_find_seconds: float = 0.0

    def check_invariants(self) -> None:
        assert self.factors_found + len(self.counterexamples) == self.trials_passing
        assert self.trials_passing + self.skipped_disconnected <= self.trials_generated
        assert self.sharpness_passed + len(self.sharpness_failures) == self.sharpness_run

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "config": self.config.to_dict(),
            "trials_generated": self.trials_generated,
            "skipped_disconnected": self.skipped_disconnected,
            "trials_passing": self.trials_passing,
            "factors_found": self.factors_found,
            "counterexamples": self.counterexamples,
            "sharpness_run": self.sharpness_run,
            "sharpness_passed": self.sharpness_passed,
            "sharpness_failures": self.sharpness_failures,
        }
        if include_timing:
            out["timing"] = {
                "total_seconds": round(self.total_seconds, 6),
                "max_find_seconds": round(self.max_find_seconds, 6),
            }
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"


def trial_seed(master: int, index: int) -> int:
    digest = hashlib.blake2b(f"{master}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _evaluate(config: TrialConfig, g: Graph) -> dict:
    """Outcome of one graph: skipped, failed hypothesis, factor, or counterexample."""
    if config.connected_only and not is_connected(g):
        return {"status": "disconnected"}
    if not check(config.theorem, g, **config.check_params()).overall:
        return {"status": "hypothesis_fails"}
    start = time.perf_counter()
    outcome = find_parity_factor(g, config.spec_for(g.n), want_certificate=config.certificate)
    elapsed = time.perf_counter() - start
    if outcome.exists:
        return {"status": "factor", "seconds": elapsed}
    return {
        "status": "counterexample",
        "seconds": elapsed,
        "record": {
            "n": g.n,
            "graph": format_graph_text(g),
            "certificate": None if outcome.certificate is None else outcome.certificate.to_dict(),
        },
    }


def _random_trial(config: TrialConfig, index: int) -> dict:
    rng = random.Random(trial_seed(config.seed, index))
    n = rng.choice(config.n_values)
    p = rng.choice(config.probabilities)
    graph_seed = rng.getrandbits(64)
    result = _evaluate(config, gnp_graph(n, p, graph_seed))
    if "record" in result:
        result["record"].update({"trial": index, "seed": graph_seed, "p": str(p)})
    return result


def _random_chunk(args) -> list[dict]:
    config, indices = args
    return [_random_trial(config, i) for i in indices]


def _tally(report: TrialReport, results) -> None:
    for res in results:
        report.trials_generated += 1
        status = res["status"]
        if status == "disconnected":
            report.skipped_disconnected += 1
            continue
        if status == "hypothesis_fails":
            continue
        report.trials_passing += 1
        report.max_find_seconds = max(report.max_find_seconds, res["seconds"])
        if status == "factor":
            report.factors_found += 1
        else:
            report.counterexamples.append(res["record"])


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _sharpness(config: TrialConfig, report: TrialReport) -> None:
    a, b = config.a, config.b
    for m in config.m_values:
        if config.family == "bipartite":
            g = build_bipartite_extremal(a, b, m)
            delta, n = min_degree(g), g.n
            checks = {"near_miss": (a + b) * delta < a * n < (a + b) * (delta + 1)}
        else:
            g = build_apex_extremal(a, b, m)
            spec = ParitySpec.from_ab(g.n, a, b)
            checks = {
                "min_degree": min_degree(g) == apex_clique_count(a, b),
                "apex_eta": eta(g, spec, (), (g.n - 1,)) == -a,
            }
        start = time.perf_counter()
        outcome = find_parity_factor(g, ParitySpec.from_ab(g.n, a, b))
        report.max_find_seconds = max(report.max_find_seconds, time.perf_counter() - start)
        checks["factor_free"] = not outcome.exists
        report.sharpness_run += 1
        if all(checks.values()):
            report.sharpness_passed += 1
        else:
            failed = sorted(k for k, ok in checks.items() if not ok)
            report.sharpness_failures.append({"m": m, "n": g.n, "failed": failed})


def run_validation(config: TrialConfig, workers: Optional[int] = None) -> TrialReport:
    """Execute ``config``; counts and counterexample lists do not depend on
    ``workers``."""
    config.validate()
    report = TrialReport(config)
    start = time.perf_counter()
    if config.mode == "sharpness":
        _sharpness(config, report)
    elif config.mode == "exhaustive":
        for n in config.n_values:
            results = []
            for g in graph_catalog(n, connected=config.connected_only):
                res = _evaluate(config, g)
                if "record" in res:
                    res["record"]["trial"] = report.trials_generated + len(results)
                results.append(res)
            _tally(report, results)
    else:
        workers = default_workers() if workers is None else workers
        indices = range(config.trials)
        if workers <= 1:
            _tally(report, (_random_trial(config, i) for i in indices))
        else:
            size = -(-config.trials // (4 * workers))
            chunks = [(config, indices[i:i + size]) for i in range(0, config.trials, size)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for results in pool.map(_random_chunk, chunks):
                    _tally(report, results)
    report.counterexamples.sort(key=lambda r: r["trial"])
    report.total_seconds = time.perf_counter() - start
    report.check_invariants()
    return report
