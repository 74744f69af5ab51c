"""Plain-text graph format.

::

    n m
    u v        (m lines, 0-based ids, one space)

Blank lines and anything after ``#`` are ignored when parsing. Output is
canonical: edges as ``u < v`` in lexicographic order, newline-terminated.
"""

from __future__ import annotations

from .errors import GraphSyntaxError
from .graph import Graph, build_graph


def _ints(line_no: int, text: str, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise GraphSyntaxError(line_no, f"expected {count} integers, got {text!r}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise GraphSyntaxError(line_no, f"non-integer token in {text!r}") from None
    if any(v < 0 for v in vals):
        raise GraphSyntaxError(line_no, f"negative value in {text!r}")
    return vals


def parse_graph_text(text: str) -> Graph:
    rows = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((line_no, body))
    if not rows:
        raise GraphSyntaxError(1, "missing 'n m' header")
    n, m = _ints(*rows[0], 2)
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise GraphSyntaxError(last, f"header declares {m} edges, found {len(rows) - 1}")
    edges = [tuple(_ints(no, body, 2)) for no, body in rows[1:]]
    return build_graph(n, edges)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph_text(fh.read())
