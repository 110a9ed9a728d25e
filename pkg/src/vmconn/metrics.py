"""Reachability, distances, girth, domination and bad-pair classification."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DiameterUndefinedError, NotStrongError
from .graph import Digraph


def _reach_mask(out_mask: tuple[int, ...], source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= out_mask[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def reachable_from(d: Digraph, source: int) -> set[int]:
    mask = _reach_mask(d.out_mask, source)
    return {v for v in range(d.n) if mask >> v & 1}


def is_strong_masks(n: int, out_mask, in_mask) -> bool:
    """Strong-connectivity test on raw adjacency bitmasks."""
    if n <= 1:
        return True
    full = (1 << n) - 1
    return _reach_mask(out_mask, 0) == full and _reach_mask(in_mask, 0) == full


def is_strong(d: Digraph) -> bool:
    return is_strong_masks(d.n, d.out_mask, d.in_mask)


def is_unilateral(d: Digraph) -> bool:
    reach = [_reach_mask(d.out_mask, v) for v in range(d.n)]
    return all(
        reach[u] >> v & 1 or reach[v] >> u & 1
        for u in range(d.n)
        for v in range(u + 1, d.n)
    )


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs shortest directed distances; ``math.inf`` marks unreachable."""

    dist: tuple[tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.dist)

    def __getitem__(self, pair):
        u, v = pair
        return self.dist[u][v]

    @property
    def strong(self) -> bool:
        return all(x != math.inf for row in self.dist for x in row)

    @property
    def diameter(self) -> int:
        if not self.strong:
            raise DiameterUndefinedError()
        return max((x for row in self.dist for x in row), default=0)

    def eccentricity_out(self, v: int) -> float:
        return max(self.dist[v])

    def eccentricity_in(self, v: int) -> float:
        return max(row[v] for row in self.dist)


def distances(d: Digraph) -> DistanceTable:
    rows = []
    for s in range(d.n):
        row = [math.inf] * d.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in d.out_adj[u]:
                if row[w] == math.inf:
                    row[w] = row[u] + 1
                    queue.append(w)
        rows.append(tuple(row))
    return DistanceTable(tuple(rows))


def diameter(d: Digraph) -> int:
    return distances(d).diameter


def girth(d: Digraph) -> Optional[int]:
    """Length of a shortest directed cycle, or ``None`` if ``d`` is acyclic."""
    dist = distances(d)
    best = math.inf
    for u, v in d.arcs:
        best = min(best, dist[v, u] + 1)
    return None if best == math.inf else int(best)


def _set_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def is_dominating(d: Digraph, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` has an in-neighbour in ``s``."""
    sm = _set_mask(s)
    return all(sm >> v & 1 or d.in_mask[v] & sm for v in range(d.n))


def is_absorbing(d: Digraph, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` has an out-neighbour in ``s``."""
    sm = _set_mask(s)
    return all(sm >> v & 1 or d.out_mask[v] & sm for v in range(d.n))


def is_total_dominating(d: Digraph, s: Iterable[int]) -> bool:
    """Every vertex, members of ``s`` included, has an in-neighbour in ``s``."""
    sm = _set_mask(s)
    return all(d.in_mask[v] & sm for v in range(d.n))


def is_total_absorbing(d: Digraph, s: Iterable[int]) -> bool:
    sm = _set_mask(s)
    return all(d.out_mask[v] & sm for v in range(d.n))


class PairClass(enum.Enum):
    NOT_BAD = "i"
    BAD_WITH_GOOD_SUCCESSOR = "ii"
    BAD_WITH_GOOD_PREDECESSOR = "iii"
    BAD_OTHER = "iv"
    # the lone strong digraph where case iv gives no guarantee
    C3_EXCEPTION = "c3"


@dataclass(frozen=True)
class PairClassification:
    pair: tuple[int, int]
    cls: PairClass

    @property
    def is_bad(self) -> bool:
        return self.cls is not PairClass.NOT_BAD


def is_bad_pair(d: Digraph, u: int, v: int) -> bool:
    return d.out_adj[u] == {v} and d.in_adj[v] == {u}


def is_c3(d: Digraph) -> bool:
    return d.n == 3 and d.m == 3 and is_strong(d)


def bad_pairs(d: Digraph) -> list[PairClassification]:
    """Classify every ordered pair ``(u, v)``, ``u != v``.

    Bad pairs are split by the first matching case: a non-bad successor
    pair ``(v, w)``, then a non-bad predecessor pair ``(w, u)``, otherwise
    the residual case (reported as ``C3_EXCEPTION`` on the directed triangle).
    """
    if not is_strong(d):
        raise NotStrongError()
    bad = {(u, v) for u, v in d.arcs if is_bad_pair(d, u, v)}
    c3 = is_c3(d)
    out = []
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            if (u, v) not in bad:
                cls = PairClass.NOT_BAD
            elif any((v, w) not in bad for w in d.out_adj[v]):
                cls = PairClass.BAD_WITH_GOOD_SUCCESSOR
            elif any((w, u) not in bad for w in d.in_adj[u]):
                cls = PairClass.BAD_WITH_GOOD_PREDECESSOR
            elif c3:
                cls = PairClass.C3_EXCEPTION
            else:
                cls = PairClass.BAD_OTHER
            out.append(PairClassification((u, v), cls))
    return out
