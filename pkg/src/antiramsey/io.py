"""Text formats for graphs, colorings and forest families.

Graph file::

    # comment
    n m c          vertex count, edge count, color count (0 = uncolored)
    u v [color]    m lines, one per edge, in edge-id order

Forest file: one forest per line as space-separated edge ids; a line holding
only ``-`` is an empty forest. ``#`` starts a comment in both formats.
"""

from __future__ import annotations

from pathlib import Path

from .graph import ColoredMultigraph, Edge, GraphError
from .rainbow import ForestFamily


class FormatError(GraphError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _ints(tokens, lineno, source):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno, source) from None


def parse_graph(text: str, source: str | None = None) -> ColoredMultigraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty graph file", None, source)
    lineno, head = lines[0]
    if len(head) != 3:
        raise FormatError("header must be 'n m c'", lineno, source)
    n, m, c = _ints(head, lineno, source)
    if n < 0 or m < 0 or c < 0:
        raise FormatError("header values must be non-negative", lineno, source)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow", where, source)
    edges = []
    seen_colors = set()
    for lineno, tokens in body:
        want = 3 if c else 2
        if len(tokens) != want:
            raise FormatError(f"expected {want} fields per edge, got {len(tokens)}", lineno, source)
        vals = _ints(tokens, lineno, source)
        u, v = vals[0], vals[1]
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint outside [0, {n})", lineno, source)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno, source)
        color = None
        if c:
            color = vals[2]
            if not 0 <= color < c:
                raise FormatError(f"color {color} outside [0, {c})", lineno, source)
            seen_colors.add(color)
        edges.append(Edge(u, v, color))
    if c and len(seen_colors) != c:
        raise FormatError(f"header declares {c} colors but {len(seen_colors)} are used", None, source)
    return ColoredMultigraph(n, tuple(edges))


def serialize_graph(G: ColoredMultigraph) -> str:
    colored = G.m > 0 and G.is_colored
    lines = [f"{G.n} {G.m} {G.num_colors if colored else 0}"]
    for e in G.edges:
        lines.append(f"{e.u} {e.v} {e.color}" if colored else f"{e.u} {e.v}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> ColoredMultigraph:
    path = Path(path)
    return parse_graph(path.read_text(), str(path))


def write_graph(G: ColoredMultigraph, path: str | Path) -> None:
    Path(path).write_text(serialize_graph(G))


def parse_forests(text: str, source: str | None = None) -> ForestFamily:
    forests = []
    for lineno, tokens in _content_lines(text):
        if tokens == ["-"]:
            forests.append(())
        else:
            forests.append(tuple(_ints(tokens, lineno, source)))
    return ForestFamily(tuple(forests))


def serialize_forests(F: ForestFamily) -> str:
    return "".join((" ".join(map(str, f)) if f else "-") + "\n" for f in F.forests)


def read_forests(path: str | Path) -> ForestFamily:
    path = Path(path)
    return parse_forests(path.read_text(), str(path))
