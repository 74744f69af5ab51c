"""Command-line interface.

Exit codes: 0 when the command decided or ran, 1 on usage or input errors,
2 when a validation run found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .conditions import build_apex_extremal, build_bipartite_extremal, check
from .errors import ParityFactorError
from .experiment import FAMILIES, MODES, THEOREMS, TrialConfig, run_validation
from .finder import find_parity_factor
from .graph import generate
from .oracle import DEFAULT_CERT_MAX_N, ParitySpec, amahashi_search, certificate_search
from .reduction import build_gadget, clamp_spec, dump_gadget
from .textio import format_graph_text, read_graph

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    """``"12..16"`` or ``"4,6,8"``."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _fractions(text: str) -> list[Fraction]:
    return [Fraction(p) for p in text.split(",")]


def _emit(text: str, path=None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_find(args) -> int:
    g = read_graph(args.graph)
    spec = ParitySpec.from_ab(g.n, args.a, args.b)
    outcome = find_parity_factor(g, spec, args.certificate, args.cert_max_n)
    _emit(_dump(outcome.to_dict()))
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    params = {"a": args.a, "b": args.b, "k": args.k, "require_connected": args.require_connected}
    needed = ("a", "b") if args.theorem in ("main", "licai") else ("k",)
    missing = [p for p in needed if params[p] is None]
    if missing:
        raise ParityFactorError(f"--theorem {args.theorem} needs --{' --'.join(missing)}")
    _emit(_dump(check(args.theorem, g, **params).to_dict()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    if args.amahashi is not None:
        cert = amahashi_search(g, args.amahashi, args.max_n)
        body = None if cert is None else {"S": list(cert.S), "odd_components": cert.odd_component_count}
        _emit(_dump({"criterion": "amahashi", "k": args.amahashi, "certificate": body}))
        return EXIT_OK
    if args.a is None or args.b is None:
        raise ParityFactorError("oracle needs A B or --amahashi K")
    cert = certificate_search(g, ParitySpec.from_ab(g.n, args.a, args.b), args.max_n)
    _emit(_dump({
        "criterion": "lovasz",
        "factor_exists": cert is None,
        "certificate": None if cert is None else cert.to_dict(),
    }))
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "p", "q") if getattr(args, k) is not None}
    if args.model == "complete_bipartite":
        params = {"p": int(args.p), "q": args.q}
    _emit(format_graph_text(generate(args.model, params, args.seed)), args.output)
    return EXIT_OK


def cmd_extremal(args) -> int:
    build = build_bipartite_extremal if args.family == "bipartite" else build_apex_extremal
    _emit(format_graph_text(build(args.a, args.b, args.m)), args.output)
    return EXIT_OK


def cmd_gadget(args) -> int:
    g = read_graph(args.graph)
    gg = build_gadget(g, clamp_spec(g, ParitySpec.from_ab(g.n, args.a, args.b)))
    text, sidecar = dump_gadget(gg)
    _emit(text, f"{args.out_prefix}.txt")
    _emit(sidecar, f"{args.out_prefix}.json")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.config:
        with open(args.config) as fh:
            config = TrialConfig.from_dict(json.load(fh))
    else:
        config = TrialConfig(
            theorem=args.theorem, a=args.a, b=args.b, k=args.k,
            n_values=_int_list(args.n) if args.n else (),
            probabilities=_fractions(args.p),
            trials=args.trials, seed=args.seed,
            connected_only=not args.allow_disconnected,
            certificate=args.certificate, mode=args.mode, family=args.family,
            m_values=_int_list(args.m) if args.m else (),
        )
    report = run_validation(config, workers=args.workers)
    _emit(report.to_json(include_timing=args.timing), args.output)
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parityfactor", description="(g,f)-parity factors of simple graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("find", help="decide and construct an (a,b)-parity factor")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--certificate", action="store_true", help="attach a Lovasz certificate on failure")
    p.add_argument("--cert-max-n", type=int, default=DEFAULT_CERT_MAX_N)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("check", help="evaluate a degree-condition hypothesis")
    p.add_argument("graph")
    p.add_argument("--theorem", required=True, choices=("main", "nishimura", "licai", "oddlemma"))
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--require-connected", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive Lovasz (or Amahashi) certificate search")
    p.add_argument("graph")
    p.add_argument("a", type=int, nargs="?")
    p.add_argument("b", type=int, nargs="?")
    p.add_argument("--amahashi", type=int, metavar="K")
    p.add_argument("--max-n", type=int, default=DEFAULT_CERT_MAX_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph in text format")
    p.add_argument("--model", required=True, choices=("complete", "cycle", "path", "complete_bipartite", "gnp"))
    p.add_argument("--n", type=int)
    p.add_argument("--p", help="gnp probability as num/den, or left part size for complete_bipartite")
    p.add_argument("--q", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("extremal", help="build a sharpness example")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("gadget", help="dump the matching gadget for inspection")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("validate", help="seeded theorem validation")
    p.add_argument("--config", help="JSON file with TrialConfig fields")
    p.add_argument("--theorem", default="main", choices=THEOREMS)
    p.add_argument("--mode", default="random", choices=MODES)
    p.add_argument("--family", default="bipartite", choices=FAMILIES)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", help="orders, e.g. 12..16 or 4,6")
    p.add_argument("--m", help="sharpness parameters, e.g. 1..3")
    p.add_argument("--p", default="1/2", help="comma-separated probabilities, e.g. 1/2,3/4")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--timing", action="store_true", help="add wall-clock fields (breaks byte-identical output)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParityFactorError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
