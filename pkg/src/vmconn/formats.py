"""Text formats: digraph files, coloring files and key=value reports.

Digraph file::

    # optional comment lines
    n m
    u v        (m lines, 0-based)

Vertex-coloring file: one ``v c`` line per vertex, ``c`` a positive integer.
Arc-coloring file: one ``u v c`` line per arc.  Both allow ``#`` comments.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .coloring import ArcColoring, VertexColoring
from .errors import ParseError
from .graph import Digraph


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens: list[str], count: int, lineno: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise ParseError(f"expected {what} at line {lineno}, got {' '.join(tokens)!r}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"bad token at line {lineno}: {' '.join(tokens)!r}", lineno) from None


def parse_digraph(text: str) -> Digraph:
    lines = _data_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing header line 'n m'") from None
    try:
        n, m = _ints(tokens, 2, lineno, "header 'n m'")
    except ParseError as exc:
        raise ParseError(f"malformed header: {exc}", lineno) from None
    if n < 0 or m < 0:
        raise ParseError(f"malformed header at line {lineno}: negative count", lineno)
    arcs: set[tuple[int, int]] = set()
    for lineno, tokens in lines:
        u, v = _ints(tokens, 2, lineno, "arc 'u v'")
        if u == v:
            raise ParseError(f"loop at line {lineno}: ({u}, {v})", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range at line {lineno}: ({u}, {v})", lineno)
        if (u, v) in arcs:
            raise ParseError(f"duplicate arc at line {lineno}: ({u}, {v})", lineno)
        arcs.add((u, v))
    if len(arcs) != m:
        raise ParseError(f"header declares {m} arcs but {len(arcs)} were given")
    return Digraph(n, arcs)


def serialize_digraph(d: Digraph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{d.n} {d.m}")
    out += [f"{u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(out) + "\n"


def parse_coloring(text: str, d: Digraph) -> VertexColoring:
    labels: dict[int, int] = {}
    for lineno, tokens in _data_lines(text):
        v, c = _ints(tokens, 2, lineno, "'v c'")
        if not 0 <= v < d.n:
            raise ParseError(f"vertex {v} out of range at line {lineno}", lineno)
        if c < 1:
            raise ParseError(f"color must be positive at line {lineno}", lineno)
        if v in labels:
            raise ParseError(f"duplicate vertex {v} at line {lineno}", lineno)
        labels[v] = c
    missing = [v for v in range(d.n) if v not in labels]
    if missing:
        raise ParseError(f"missing vertex {missing[0]}")
    return VertexColoring([labels[v] for v in range(d.n)])


def serialize_coloring(coloring: VertexColoring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(coloring.assignment))


def parse_arc_coloring(text: str, d: Digraph) -> ArcColoring:
    colors: dict[tuple[int, int], int] = {}
    for lineno, tokens in _data_lines(text):
        u, v, c = _ints(tokens, 3, lineno, "'u v c'")
        if (u, v) not in d.arcs:
            raise ParseError(f"arc ({u}, {v}) not in digraph at line {lineno}", lineno)
        if c < 1:
            raise ParseError(f"color must be positive at line {lineno}", lineno)
        if (u, v) in colors:
            raise ParseError(f"duplicate arc ({u}, {v}) at line {lineno}", lineno)
        colors[(u, v)] = c
    missing = [a for a in d.sorted_arcs() if a not in colors]
    if missing:
        raise ParseError(f"missing arc {missing[0]}")
    return ArcColoring(d, colors)


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


class Report:
    """Ordered ``key=value`` lines followed by named sections.

    Keys are emitted in sorted order; sections keep insertion order and
    their lines are emitted verbatim.
    """

    def __init__(self):
        self.values: dict[str, str] = {}
        self.sections: list[tuple[str, list[str]]] = []

    def __setitem__(self, key: str, value) -> None:
        self.values[key] = format_value(value)

    def __getitem__(self, key: str) -> str:
        return self.values[key]

    def update(self, items: dict, prefix: str = "") -> None:
        for k, v in items.items():
            self[prefix + k] = v

    def section(self, name: str, lines: Iterable[str]) -> None:
        self.sections.append((name, list(lines)))

    def certificate(self, name: str, lines: Iterable[str]) -> None:
        self.section(f"certificate:{name}", lines)

    def render(self) -> str:
        out = [f"{k}={self.values[k]}" for k in sorted(self.values)]
        for name, lines in self.sections:
            out.append(f"[{name}]")
            out.extend(lines)
        return "\n".join(out) + "\n"

    def __str__(self):
        return self.render()
