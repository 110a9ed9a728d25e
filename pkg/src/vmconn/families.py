"""Named digraph constructions, seeded random generators and exhaustive enumerators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import GraphError
from .graph import Arc, Digraph
from .metrics import is_strong, is_strong_masks
from .rng import SplitMix64

MAX_ATTEMPTS = 1_000_000


@dataclass(frozen=True)
class LineDigraph:
    """``L(D)`` together with the arc of ``D`` behind each of its vertices."""

    graph: Digraph
    arcs: tuple[Arc, ...]

    @property
    def arc_index(self) -> dict[Arc, int]:
        return {a: i for i, a in enumerate(self.arcs)}

    def vertices_of(self, arc_subset) -> tuple[int, ...]:
        index = self.arc_index
        return tuple(sorted(index[tuple(a)] for a in arc_subset))


def line_digraph(d: Digraph) -> LineDigraph:
    """Vertices are the arcs of ``d`` in lexicographic order; ``e -> f`` when head(e) = tail(f)."""
    if d.m == 0:
        raise GraphError("line digraph of an arcless digraph")
    arcs = d.sorted_arcs()
    index = {a: i for i, a in enumerate(arcs)}
    line_arcs = [
        (index[(u, v)], index[(v, w)])
        for u, v in arcs
        for w in d.out_adj[v]
    ]
    return LineDigraph(Digraph(len(arcs), line_arcs), arcs)


def cycle(n: int) -> Digraph:
    if n < 2:
        raise GraphError("a directed cycle needs n >= 2")
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_digraph(n: int) -> Digraph:
    if n < 1:
        raise GraphError("n must be positive")
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def figure1_family(n: int) -> Digraph:
    """``v1 -> v2``, and ``v2 -> vi -> v1`` for each ``i >= 3`` (0-based: 0 -> 1, 1 -> i -> 0).

    Diameter 3; three vertices ``{v1, v2, vi}`` already form a strong,
    dominating and absorbing subdigraph.
    """
    if n < 4:
        raise GraphError("figure-1 family needs n >= 4")
    arcs = [(0, 1)]
    for i in range(2, n):
        arcs += [(1, i), (i, 0)]
    return Digraph(n, arcs)


def long_path_tournament(n: int) -> Digraph:
    """Tournament with arcs ``i -> i+1`` and ``j -> i`` for ``j >= i + 2``; diameter ``n - 1``."""
    if n < 3:
        raise GraphError("long-path tournament needs n >= 3")
    arcs = [(i, i + 1) for i in range(n - 1)]
    arcs += [(j, i) for i in range(n) for j in range(i + 2, n)]
    return Digraph(n, arcs)


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def all_arcs(n: int) -> list[Arc]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def random_strong_digraph(n: int, m: int, seed: int, max_attempts: int = MAX_ATTEMPTS) -> Digraph:
    """Uniform ``m``-subset of the arcs of the complete digraph, redrawn until strong."""
    if n < 1:
        raise GraphError("n must be positive")
    lo = n if n > 1 else 0
    if not lo <= m <= n * (n - 1):
        raise GraphError(f"m={m} infeasible for a strong digraph on {n} vertices")
    pool = all_arcs(n)
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        d = Digraph(n, rng.sample(pool, m))
        if is_strong(d):
            return d
    raise GraphError(f"no strong digraph found in {max_attempts} attempts")


def random_strong_oriented(n: int, m: int, seed: int, max_attempts: int = MAX_ATTEMPTS) -> Digraph:
    """Uniform ``m`` vertex pairs, each oriented by a coin flip, redrawn until strong."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if n < 3 or not n <= m <= len(pairs):
        raise GraphError(f"m={m} infeasible for a strong oriented graph on {n} vertices")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        chosen = rng.sample(pairs, m)
        arcs = [(u, v) if rng.coin() else (v, u) for u, v in chosen]
        d = Digraph(n, arcs)
        if is_strong(d):
            return d
    raise GraphError(f"no strong oriented graph found in {max_attempts} attempts")


def random_strong_tournament(n: int, seed: int, max_attempts: int = MAX_ATTEMPTS) -> Digraph:
    """Each pair ``u < v`` oriented by a coin flip (in lexicographic pair order), redrawn until strong."""
    if n == 1:
        return Digraph(1, ())
    if n < 3:
        raise GraphError("strong tournaments need n = 1 or n >= 3")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        arcs = [
            (u, v) if rng.coin() else (v, u)
            for u in range(n)
            for v in range(u + 1, n)
        ]
        d = Digraph(n, arcs)
        if is_strong(d):
            return d
    raise GraphError(f"no strong tournament found in {max_attempts} attempts")


ENUMERATION_LIMITS = {"digraphs": 5, "tournaments": 6, "oriented": 6}


def arc_mask(d: Digraph) -> int:
    """Bit ``i`` set iff the ``i``-th arc of the complete digraph (lexicographic) is present.

    Enumerators yield digraphs in increasing order of this integer.
    """
    n = d.n
    out = 0
    for u, v in d.arcs:
        out |= 1 << (u * (n - 1) + (v if v < u else v - 1))
    return out


def _check_limit(kind: str, n: int) -> None:
    if n > ENUMERATION_LIMITS[kind]:
        raise GraphError(f"enumeration of {kind} limited to n <= {ENUMERATION_LIMITS[kind]}")


def enumerate_strong_digraphs(n: int, max_m: Optional[int] = None) -> Iterator[Digraph]:
    """Every labeled strong digraph on ``n`` vertices, once each.

    Vertex ``u``'s arcs occupy a contiguous block of the arc mask, so running
    the per-vertex out-sets as an odometer (vertex 0 fastest) walks masks in
    increasing order; empty out-sets are skipped up front.
    """
    _check_limit("digraphs", n)
    if n == 1:
        yield Digraph(1, ())
        return
    full = (1 << n) - 1
    others = [[v for v in range(n) if v != u] for u in range(n)]
    choices = []
    for u in range(n):
        opts = []
        for code in range(1, 1 << (n - 1)):
            opts.append(sum(1 << others[u][i] for i in range(n - 1) if code >> i & 1))
        choices.append(opts)
    for combo in itertools.product(*reversed(choices)):
        out_mask = combo[::-1]
        if max_m is not None and sum(bin(x).count("1") for x in out_mask) > max_m:
            continue
        union = 0
        for x in out_mask:
            union |= x
        if union != full:
            continue
        in_mask = [0] * n
        for u, x in enumerate(out_mask):
            bit = 1 << u
            for v in others[u]:
                if x >> v & 1:
                    in_mask[v] |= bit
        if is_strong_masks(n, out_mask, in_mask):
            yield Digraph(n, ((u, v) for u in range(n) for v in others[u] if out_mask[u] >> v & 1))


def _orientations(n: int, states: tuple[int, ...]) -> Iterator[list[Arc]]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for choice in itertools.product(states, repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, choice):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield arcs


def _sorted_strong(n: int, arc_lists, keep: Callable[[list[Arc]], bool]) -> Iterator[Digraph]:
    found = []
    for arcs in arc_lists:
        if not keep(arcs):
            continue
        d = Digraph(n, arcs)
        if is_strong(d):
            found.append((arc_mask(d), d))
    found.sort(key=lambda t: t[0])
    for _, d in found:
        yield d


def enumerate_strong_oriented(n: int, max_m: Optional[int] = None) -> Iterator[Digraph]:
    """Every labeled strong oriented graph (no digons), in arc-mask order."""
    _check_limit("oriented", n)
    if n == 1:
        yield Digraph(1, ())
        return
    lo = n
    hi = max_m if max_m is not None else n * (n - 1) // 2
    yield from _sorted_strong(n, _orientations(n, (0, 1, 2)), lambda a: lo <= len(a) <= hi)


def enumerate_strong_tournaments(n: int) -> Iterator[Digraph]:
    _check_limit("tournaments", n)
    if n == 1:
        yield Digraph(1, ())
        return
    yield from _sorted_strong(n, _orientations(n, (1, 2)), lambda a: True)


FAMILIES: dict[str, Callable[[int], Digraph]] = {
    "cycle": cycle,
    "complete": complete_digraph,
    "figure1": figure1_family,
    "long-path": long_path_tournament,
    "transitive": transitive_tournament,
}

RANDOM_FAMILIES = ("random-strong", "random-oriented", "random-tournament")


def make_family(name: str, n: int, seed: int = 0, m: Optional[int] = None) -> Digraph:
    if name in FAMILIES:
        return FAMILIES[name](n)
    if name == "random-tournament":
        return random_strong_tournament(n, seed)
    if name in ("random-strong", "random-oriented"):
        if m is None:
            raise GraphError(f"family {name} needs an arc count m")
        gen = random_strong_digraph if name == "random-strong" else random_strong_oriented
        return gen(n, m, seed)
    raise GraphError(f"unknown family {name!r}")
