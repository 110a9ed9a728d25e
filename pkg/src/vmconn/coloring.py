"""Vertex and arc colorings and the monochromatic-connection checks on them.

A vertex coloring is *SVMC* when every ordered pair ``(u, v)`` is joined by a
directed path whose internal vertices share one color.  An arc coloring is
*SMC* when every ordered pair is joined by a path whose arcs share one color.
Colorings are stored canonically: colors are renumbered ``1..p`` by first
occurrence, so two colorings inducing the same partition compare equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import ColoringError, EmptyDStarError, NotStrongError
from .graph import Arc, Digraph, Path, induced_subdigraph
from .metrics import is_strong


def _canonical(labels: Sequence[Hashable]) -> tuple[int, ...]:
    ids: dict[Hashable, int] = {}
    out = []
    for c in labels:
        if c not in ids:
            ids[c] = len(ids) + 1
        out.append(ids[c])
    return tuple(out)


class VertexColoring:
    """Surjective map from vertices ``0..n-1`` onto colors ``1..p``."""

    __slots__ = ("assignment", "classes", "class_masks")

    def __init__(self, labels: Sequence[Hashable]):
        self.assignment: tuple[int, ...] = _canonical(labels)
        p = max(self.assignment, default=0)
        classes: list[list[int]] = [[] for _ in range(p)]
        for v, c in enumerate(self.assignment):
            classes[c - 1].append(v)
        self.classes: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in classes)
        self.class_masks: tuple[int, ...] = tuple(sum(1 << v for v in c) for c in classes)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> VertexColoring:
        labels: list[Optional[int]] = [None] * n
        for i, block in enumerate(classes):
            for v in block:
                if not 0 <= v < n:
                    raise ColoringError(f"vertex {v} out of range (n={n})")
                if labels[v] is not None:
                    raise ColoringError(f"vertex {v} appears in two classes")
                labels[v] = i
        missing = [v for v, c in enumerate(labels) if c is None]
        if missing:
            raise ColoringError(f"vertices without a color: {missing}")
        return cls(labels)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def p(self) -> int:
        return len(self.classes)

    def color_of(self, v: int) -> int:
        return self.assignment[v]

    def class_of(self, color: int) -> tuple[int, ...]:
        return self.classes[color - 1]

    @property
    def singular_colors(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.classes) if len(c) == 1)

    @property
    def singular_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(c[0] for c in self.classes if len(c) == 1))

    @property
    def nonsingular_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for c in self.classes if len(c) > 1 for v in c))

    @property
    def size_counts(self) -> dict[int, int]:
        """``a_i``: number of classes of each cardinality ``i``."""
        return dict(sorted(Counter(len(c) for c in self.classes).items()))

    @property
    def ell(self) -> Optional[int]:
        """Smallest non-singular class size, ``None`` when every class is singular."""
        sizes = [len(c) for c in self.classes if len(c) > 1]
        return min(sizes) if sizes else None

    @property
    def largest(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    def __eq__(self, other):
        if not isinstance(other, VertexColoring):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self):
        return hash(self.assignment)

    def __repr__(self):
        return f"VertexColoring({list(self.assignment)})"


class ArcColoring:
    """Surjective map from the arcs of a digraph onto colors ``1..k``.

    Canonical color ids follow first occurrence over the lexicographic arc order.
    """

    __slots__ = ("arcs", "colors", "_index")

    def __init__(self, d: Digraph, colors: Mapping[Arc, Hashable] | Sequence[Hashable]):
        arcs = d.sorted_arcs()
        if isinstance(colors, Mapping):
            extra = set(colors) - d.arcs
            if extra:
                raise ColoringError(f"colored arc {min(extra)} not in digraph")
            missing = [a for a in arcs if a not in colors]
            if missing:
                raise ColoringError(f"arc {missing[0]} has no color")
            seq = [colors[a] for a in arcs]
        else:
            seq = list(colors)
            if len(seq) != len(arcs):
                raise ColoringError(
                    f"{len(seq)} colors given for {len(arcs)} arcs"
                )
        self.arcs: tuple[Arc, ...] = arcs
        self.colors: tuple[int, ...] = _canonical(seq)
        self._index = {a: i for i, a in enumerate(arcs)}

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def color_of(self, arc: Arc) -> int:
        return self.colors[self._index[arc]]

    def classes(self) -> tuple[tuple[Arc, ...], ...]:
        out: list[list[Arc]] = [[] for _ in range(self.k)]
        for a, c in zip(self.arcs, self.colors):
            out[c - 1].append(a)
        return tuple(tuple(c) for c in out)

    def as_dict(self) -> dict[Arc, int]:
        return dict(zip(self.arcs, self.colors))

    def __eq__(self, other):
        if not isinstance(other, ArcColoring):
            return NotImplemented
        return self.arcs == other.arcs and self.colors == other.colors

    def __hash__(self):
        return hash((self.arcs, self.colors))

    def __repr__(self):
        return f"ArcColoring({self.as_dict()})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an SVMC/SMC verification.

    ``witnesses`` maps every ordered pair to a connecting path when ``ok``;
    otherwise ``violation`` is the lexicographically first unconnected pair.
    """

    ok: bool
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)
    violation: Optional[tuple[int, int]] = None

    def __bool__(self):
        return self.ok


def _bfs_toward(n: int, in_mask, allowed: int, target: int) -> list[Optional[int]]:
    """Distance from each allowed vertex to ``target`` through allowed vertices."""
    dist: list[Optional[int]] = [None] * n
    frontier = in_mask[target] & allowed
    step = 1
    seen = frontier
    while frontier:
        f = frontier
        nxt = 0
        while f:
            low = f & -f
            x = low.bit_length() - 1
            dist[x] = step
            nxt |= in_mask[x]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
        step += 1
    return dist


def _lex_path(out_adj, dist, u: int, v: int) -> Optional[tuple[int, ...]]:
    starts = [w for w in out_adj[u] if dist[w] is not None]
    if not starts:
        return None
    best = min(dist[w] for w in starts)
    seq = [u]
    cur_candidates = sorted(w for w in starts if dist[w] == best)
    x = cur_candidates[0]
    seq.append(x)
    while dist[x] > 1:
        x = min(w for w in out_adj[x] if dist[w] == dist[x] - 1)
        seq.append(x)
    seq.append(v)
    return tuple(seq)


def vm_reachable(d: Digraph, coloring: VertexColoring, u: int, v: int) -> Optional[Path]:
    """Shortest ``(u, v)``-path whose internal vertices share one color.

    A direct arc wins outright.  Otherwise the shortest length over all
    colors is taken, ties going to the smaller color id and then to the
    lexicographically smaller vertex sequence.  Returns ``None`` when no
    such path exists.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if d.has_arc(u, v):
        return Path((u, v))
    ends = (1 << u) | (1 << v)
    best: Optional[tuple[int, ...]] = None
    for cmask in coloring.class_masks:
        allowed = cmask & ~ends
        if not allowed or not d.out_mask[u] & allowed:
            continue
        dist = _bfs_toward(d.n, d.in_mask, allowed, v)
        seq = _lex_path(d.out_adj, dist, u, v)
        if seq is not None and (best is None or len(seq) < len(best)):
            best = seq
    return None if best is None else Path(best)


def _reach_within(out_mask, start: int, allowed: int) -> int:
    seen = frontier = start & allowed
    while frontier:
        f = frontier
        nxt = 0
        while f:
            low = f & -f
            nxt |= out_mask[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def svmc_ok(n: int, out_mask, class_masks) -> bool:
    """Fast SVMC predicate on bitmasks (no witnesses).

    For a source ``u`` and class ``C``, the vertices reachable by a walk whose
    interior lies in ``C`` are the out-neighbours of the part of ``C``
    reachable from ``u`` inside ``C``.  Any such walk shortens to a path with
    interior in ``C`` minus the endpoints, so walk reachability suffices.
    """
    full = (1 << n) - 1
    for u in range(n):
        got = out_mask[u] | (1 << u)
        if got == full:
            continue
        for cmask in class_masks:
            inner = _reach_within(out_mask, out_mask[u], cmask)
            f = inner
            while f:
                low = f & -f
                got |= out_mask[low.bit_length() - 1]
                f ^= low
            if got == full:
                break
        if got != full:
            return False
    return True


def verify_svmc(d: Digraph, coloring: VertexColoring, witnesses: bool = True) -> Verdict:
    if not is_strong(d):
        raise NotStrongError()
    if coloring.n != d.n:
        raise ColoringError(f"coloring covers {coloring.n} vertices, digraph has {d.n}")
    if not witnesses:
        if svmc_ok(d.n, d.out_mask, coloring.class_masks):
            return Verdict(True)
        # fall through to locate the first violating pair
    table = {}
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            path = vm_reachable(d, coloring, u, v)
            if path is None:
                return Verdict(False, violation=(u, v))
            table[(u, v)] = path
    return Verdict(True, witnesses=table if witnesses else {})


def _color_out_masks(d: Digraph, coloring: ArcColoring) -> list[list[int]]:
    masks = [[0] * d.n for _ in range(coloring.k)]
    for (u, v), c in zip(coloring.arcs, coloring.colors):
        masks[c - 1][u] |= 1 << v
    return masks


def smc_ok(n: int, color_out_masks) -> bool:
    """Fast SMC predicate: every ordered pair reachable inside one color."""
    full = (1 << n) - 1
    for u in range(n):
        got = 1 << u
        for om in color_out_masks:
            got |= _reach_within(om, om[u], full)
            if got == full:
                break
        if got != full:
            return False
    return True


def am_reachable(d: Digraph, coloring: ArcColoring, u: int, v: int) -> Optional[Path]:
    """Shortest ``(u, v)``-path using arcs of a single color (same tie rules)."""
    if u == v:
        raise ValueError("endpoints must differ")
    best: Optional[tuple[int, ...]] = None
    for om in _color_out_masks(d, coloring):
        im = [0] * d.n
        out_adj = [[] for _ in range(d.n)]
        for x in range(d.n):
            f = om[x]
            while f:
                low = f & -f
                y = low.bit_length() - 1
                im[y] |= 1 << x
                out_adj[x].append(y)
                f ^= low
        if om[u] >> v & 1:
            seq: Optional[tuple[int, ...]] = (u, v)
        else:
            allowed = ((1 << d.n) - 1) & ~((1 << u) | (1 << v))
            dist = _bfs_toward(d.n, im, allowed, v)
            seq = _lex_path(out_adj, dist, u, v)
        if seq is not None and (best is None or len(seq) < len(best)):
            best = seq
    return None if best is None else Path(best)


def verify_smc(d: Digraph, coloring: ArcColoring, witnesses: bool = True) -> Verdict:
    if not is_strong(d):
        raise NotStrongError()
    if coloring.arcs != d.sorted_arcs():
        raise ColoringError("arc coloring does not match the digraph's arcs")
    if not witnesses and smc_ok(d.n, _color_out_masks(d, coloring)):
        return Verdict(True)
    table = {}
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            path = am_reachable(d, coloring, u, v)
            if path is None:
                return Verdict(False, violation=(u, v))
            table[(u, v)] = path
    return Verdict(True, witnesses=table if witnesses else {})


def witnesses_valid_svmc(d: Digraph, coloring: VertexColoring, table: dict) -> bool:
    """Independent re-check of a witness table against the SVMC condition."""
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            path = table.get((u, v))
            if path is None or path.source != u or path.target != v:
                return False
            if not path.is_valid_in(d):
                return False
            if len({coloring.color_of(x) for x in path.internal}) > 1:
                return False
    return True


def witnesses_valid_smc(d: Digraph, coloring: ArcColoring, table: dict) -> bool:
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            path = table.get((u, v))
            if path is None or path.source != u or path.target != v:
                return False
            if not path.is_valid_in(d):
                return False
            if len({coloring.color_of(a) for a in path.arcs()}) != 1:
                return False
    return True


def derive_dstar(d: Digraph, coloring: VertexColoring) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph induced by the vertices of non-singular classes, with its labels."""
    if coloring.n != d.n:
        raise ColoringError(f"coloring covers {coloring.n} vertices, digraph has {d.n}")
    keep = coloring.nonsingular_vertices
    if not keep:
        raise EmptyDStarError()
    return induced_subdigraph(d, keep)


def induce_arc_coloring(h_coloring: VertexColoring, d: Digraph) -> ArcColoring:
    """Color each arc of ``d`` by the color of its vertex in the line digraph.

    Vertex ``i`` of the line digraph is the ``i``-th arc of ``d`` in
    lexicographic order.
    """
    if h_coloring.n != d.m:
        raise ColoringError(
            f"line-digraph coloring has {h_coloring.n} vertices, digraph has {d.m} arcs"
        )
    return ArcColoring(d, h_coloring.assignment)
