"""Plain-text graph files.

Format, one directive per line, ``#`` starts a comment::

    csg 1               # format version, must come first
    n 4                 # vertex count, before any edge
    v 0 v1              # optional label for vertex 0
    e 0 1 1.0 1.0       # gain of 0 -> 1 is 1 + 1i (rectangular)
    ep 1 2 2.0 1.5708   # gain of 1 -> 2 is 2 e^{1.5708 i} (polar)

Edge endpoints may be given as indices or as labels defined by ``v`` lines.
Output always uses the rectangular form with shortest round-trip float
formatting, so ``parse_graph_file(serialize_graph(g)) == g`` bit for bit.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from importlib import resources

from .errors import DuplicateEdgeError, GainGraphError, ParseError
from .graph import GainGraph, build_graph

FORMAT_VERSION = 1


@dataclass
class GraphFile:
    graph: GainGraph
    labels: dict[int, str] = field(default_factory=dict)
    version: int = FORMAT_VERSION

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))


def _float(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"not a number: {tok!r}", lineno) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite number: {tok!r}", lineno)
    return x


def load_graph_file(text: str) -> GraphFile:
    """Parse graph-file text, keeping vertex labels."""
    version = None
    n = None
    labels: dict[int, str] = {}
    by_label: dict[str, int] = {}
    edges = []
    edge_lines = []

    def vertex(tok: str, lineno: int) -> int:
        if tok in by_label:
            return by_label[tok]
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"unknown vertex {tok!r}", lineno) from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        if version is None:
            if head != "csg" or len(args) != 1:
                raise ParseError("expected header 'csg <version>'", lineno)
            if args[0] != str(FORMAT_VERSION):
                raise ParseError(f"unsupported format version {args[0]!r}", lineno)
            version = FORMAT_VERSION
        elif head == "n":
            if n is not None or len(args) != 1:
                raise ParseError("expected a single 'n <count>' line", lineno)
            try:
                n = int(args[0])
            except ValueError:
                raise ParseError(f"bad vertex count {args[0]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif n is None:
            raise ParseError(f"'{head}' before vertex count", lineno)
        elif head == "v":
            if len(args) != 2:
                raise ParseError("expected 'v <index> <label>'", lineno)
            idx = vertex(args[0], lineno)
            if not (0 <= idx < n):
                raise ParseError(f"vertex {idx} out of range", lineno)
            if args[1] in by_label or idx in labels:
                raise ParseError(f"duplicate label for vertex {idx}", lineno)
            labels[idx] = args[1]
            by_label[args[1]] = idx
        elif head in ("e", "ep"):
            if len(args) != 4:
                raise ParseError(f"expected '{head} u v a b'", lineno)
            u, v = vertex(args[0], lineno), vertex(args[1], lineno)
            a, b = _float(args[2], lineno), _float(args[3], lineno)
            z = complex(a, b) if head == "e" else a * cmath.exp(1j * b)
            edges.append((u, v, z))
            edge_lines.append(lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)

    if version is None:
        raise ParseError("empty file", None)
    if n is None:
        raise ParseError("missing vertex count", None)
    seen = set()
    for (u, v, z), lineno in zip(edges, edge_lines):
        try:
            build_graph(n, [(u, v, z)])
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
        except GainGraphError as exc:
            exc.line = lineno
            exc.args = (f"line {lineno}: {exc}",)
            raise
    graph = build_graph(n, edges)
    return GraphFile(graph, labels, version)


def parse_graph_file(text: str) -> GainGraph:
    return load_graph_file(text).graph


def serialize_graph(g: GainGraph, labels: dict[int, str] | None = None) -> str:
    lines = [f"csg {FORMAT_VERSION}", f"n {g.n}"]
    for v, name in sorted((labels or {}).items()):
        lines.append(f"v {v} {name}")
    for u, v, w in g.edges():
        lines.append(f"e {u} {v} {w.real!r} {w.imag!r}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> GraphFile:
    with open(path, encoding="utf-8") as fh:
        return load_graph_file(fh.read())


def example_graph(name: str) -> GainGraph:
    """Load one of the bundled example graphs: ``fig1``, ``fig2``, ``fig3``."""
    text = resources.files("skewgain").joinpath("data", f"{name}.csg").read_text(encoding="utf-8")
    return parse_graph_file(text)


def example_path(name: str):
    return resources.files("skewgain").joinpath("data", f"{name}.csg")
