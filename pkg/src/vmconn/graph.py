"""Immutable simple digraphs on the vertex set ``0..n-1``.

Adjacency is kept twice: as frozensets for readable membership queries and
as integer bitmasks, which the exact solvers lean on for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArcNotPresentError,
    DuplicateArcError,
    GraphError,
    LoopError,
    VertexRangeError,
)

Arc = tuple[int, int]


class Digraph:
    """A simple directed graph: no loops, no parallel arcs.

    Instances are immutable and hashable; equality compares the vertex count
    and the arc set.  Use :func:`build` to construct one from untrusted input.
    """

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_mask", "in_mask", "_sorted")

    def __init__(self, n: int, arcs: Iterable[Arc]):
        arcs = frozenset(arcs)
        out_adj = [set() for _ in range(n)]
        in_adj = [set() for _ in range(n)]
        for u, v in arcs:
            out_adj[u].add(v)
            in_adj[v].add(u)
        set_ = object.__setattr__
        set_(self, "n", n)
        set_(self, "arcs", arcs)
        set_(self, "out_adj", tuple(frozenset(s) for s in out_adj))
        set_(self, "in_adj", tuple(frozenset(s) for s in in_adj))
        set_(self, "out_mask", tuple(_mask(s) for s in out_adj))
        set_(self, "in_mask", tuple(_mask(s) for s in in_adj))
        set_(self, "_sorted", tuple(sorted(arcs)))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_arcs(self) -> tuple[Arc, ...]:
        """Arcs in lexicographic order; this order indexes line-digraph vertices."""
        return self._sorted

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def has_digon(self) -> bool:
        return any((v, u) in self.arcs for u, v in self.arcs)

    def is_tournament(self) -> bool:
        n = self.n
        if self.m != n * (n - 1) // 2:
            return False
        return all(
            (u, v) in self.arcs or (v, u) in self.arcs
            for u in range(n)
            for v in range(u + 1, n)
        )

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Return the digraph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return Digraph(self.n, ((perm[u], perm[v]) for u, v in self.arcs))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={list(self._sorted)})"


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_to_vertices(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Path:
    """A directed path given by its vertex sequence."""

    vertices: tuple[int, ...]

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def arcs(self) -> list[Arc]:
        return list(zip(self.vertices, self.vertices[1:]))

    def is_valid_in(self, d: Digraph) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        return all(d.has_arc(u, v) for u, v in self.arcs())


def build(n: int, arc_list: Iterable[Sequence[int]]) -> Digraph:
    """Validate ``arc_list`` and return the digraph it describes.

    Raises :class:`LoopError`, :class:`DuplicateArcError` or
    :class:`VertexRangeError`, each naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[Arc] = set()
    for pair in arc_list:
        u, v = pair
        arc = (int(u), int(v))
        if not (0 <= arc[0] < n and 0 <= arc[1] < n):
            raise VertexRangeError(arc, n)
        if arc[0] == arc[1]:
            raise LoopError(arc)
        if arc in seen:
            raise DuplicateArcError(arc)
        seen.add(arc)
    return Digraph(n, seen)


def induced_subdigraph(d: Digraph, s: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Return ``(D[s], labels)`` where ``labels[i]`` is the original name of vertex ``i``.

    Vertices of ``s`` are relabeled in increasing order.
    """
    labels = tuple(sorted(set(s)))
    if not labels:
        raise GraphError("induced subdigraph of an empty vertex set")
    for v in labels:
        if not 0 <= v < d.n:
            raise VertexRangeError(v, d.n)
    index = {v: i for i, v in enumerate(labels)}
    arcs = [(index[u], index[v]) for u, v in d.arcs if u in index and v in index]
    return Digraph(len(labels), arcs), labels


def spanning_subdigraph(d: Digraph, arc_subset: Iterable[Arc]) -> Digraph:
    arc_subset = frozenset(tuple(a) for a in arc_subset)
    for a in sorted(arc_subset):
        if a not in d.arcs:
            raise ArcNotPresentError(a)
    return Digraph(d.n, arc_subset)


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, ((v, u) for u, v in d.arcs))
