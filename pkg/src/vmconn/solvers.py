"""Exact solvers for smc_v, Omega_v, Omega and smc, each with a certificate.

All searches run over a fixed canonical order, so values and certificates
are deterministic: partitions come as restricted growth strings in
lexicographic order (color counts tried high to low), subsets by increasing
size and then lexicographically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Any, Optional

from .coloring import (
    ArcColoring,
    VertexColoring,
    smc_ok,
    svmc_ok,
    verify_smc,
    verify_svmc,
    witnesses_valid_smc,
    witnesses_valid_svmc,
)
from .errors import GuardExceeded, HypothesisViolated, NotStrongError, NotTournamentError
from .graph import Digraph, Path, induced_subdigraph, spanning_subdigraph
from .metrics import distances, is_absorbing, is_dominating, is_strong, is_strong_masks
from .partitions import set_partitions

OPTIMAL_VERTEX_COLORING = "optimal-vertex-coloring"
OPTIMAL_ARC_COLORING = "optimal-arc-coloring"
MINIMAL_H = "minimal-H-subdigraph"
MINIMAL_ARCSET = "minimal-spanning-arcset"
HAMILTONIAN_CYCLE = "hamiltonian-cycle"


@dataclass(frozen=True)
class Guards:
    """Instance-size limits; ``None`` disables a limit."""

    smcv_n: Optional[int] = 9
    smc_m: Optional[int] = 10
    omega_v_n: Optional[int] = 16
    omega_m: Optional[int] = 20

    @classmethod
    def unlimited(cls) -> Guards:
        return cls(None, None, None, None)

    def check(self, name: str, actual: int) -> None:
        limit = getattr(self, name)
        if limit is not None and actual > limit:
            raise GuardExceeded(name, limit, actual)

    def with_limits(self, **limits) -> Guards:
        return replace(self, **limits)


DEFAULT_GUARDS = Guards()


@dataclass(frozen=True)
class Certificate:
    kind: str
    value: int
    payload: Any


def _require_strong(d: Digraph) -> None:
    if not is_strong(d):
        raise NotStrongError()


def smcv_exact(
    d: Digraph, guards: Guards = DEFAULT_GUARDS, use_bounds: bool = True
) -> tuple[int, Certificate]:
    """Largest number of colors in an SVMC-coloring of ``d``.

    With ``use_bounds`` the downward search starts at ``n - diam + 2`` (or
    ``n`` for diameter at most 2) and cannot go below ``n - Omega_v + 1``.
    Without it every color count from ``n`` down to 1 is searched, so the
    result assumes nothing about either bound.
    """
    _require_strong(d)
    guards.check("smcv_n", d.n)
    n = d.n
    if use_bounds:
        diam = distances(d).diameter
        top = n if diam <= 2 else n - diam + 2
        omega_v, _ = omega_v_exact(d, guards)
        bottom = n - omega_v + 1
    else:
        top, bottom = n, 1
    for p in range(top, bottom - 1, -1):
        for rgs in set_partitions(n, p):
            masks = [0] * p
            for v, c in enumerate(rgs):
                masks[c] |= 1 << v
            if svmc_ok(n, d.out_mask, masks):
                coloring = VertexColoring(rgs)
                return p, Certificate(OPTIMAL_VERTEX_COLORING, p, coloring)
    # a single color always works on a strong digraph, so only a broken
    # bound can land here
    raise RuntimeError(f"no SVMC-coloring found between {bottom} and {top} colors")


def omega_v_exact(d: Digraph, guards: Guards = DEFAULT_GUARDS) -> tuple[int, Certificate]:
    """Fewest vertices of a strong subdigraph that is dominating and absorbing."""
    _require_strong(d)
    guards.check("omega_v_n", d.n)
    n = d.n
    full = (1 << n) - 1
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sm = 0
            for v in subset:
                sm |= 1 << v
            outside = full & ~sm
            ok = True
            v = 0
            rest = outside
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not (d.in_mask[v] & sm and d.out_mask[v] & sm):
                    ok = False
                    break
                rest ^= low
            if not ok:
                continue
            sub, _ = induced_subdigraph(d, subset)
            if is_strong(sub):
                return size, Certificate(MINIMAL_H, size, subset)
    raise RuntimeError("unreachable: the full vertex set always qualifies")


def omega_exact(d: Digraph, guards: Guards = DEFAULT_GUARDS) -> tuple[int, Certificate]:
    """Fewest arcs of a strong spanning subdigraph.

    Strong tournaments are answered by a Hamiltonian cycle, since no strong
    spanning subdigraph on ``n >= 2`` vertices has fewer than ``n`` arcs.
    """
    _require_strong(d)
    n = d.n
    if n == 1:
        return 0, Certificate(MINIMAL_ARCSET, 0, ())
    if n >= 3 and d.is_tournament():
        cycle = hamiltonian_cycle(d)
        return n, Certificate(HAMILTONIAN_CYCLE, n, cycle)
    guards.check("omega_m", d.m)
    arcs = d.sorted_arcs()
    full = (1 << n) - 1
    tail_bits = [1 << u for u, _ in arcs]
    head_bits = [1 << v for _, v in arcs]
    for size in range(n, d.m + 1):
        for idx in itertools.combinations(range(len(arcs)), size):
            tails = heads = 0
            for i in idx:
                tails |= tail_bits[i]
                heads |= head_bits[i]
            if tails != full or heads != full:
                continue
            out_mask = [0] * n
            in_mask = [0] * n
            for i in idx:
                u, v = arcs[i]
                out_mask[u] |= 1 << v
                in_mask[v] |= 1 << u
            if is_strong_masks(n, out_mask, in_mask):
                chosen = tuple(arcs[i] for i in idx)
                return size, Certificate(MINIMAL_ARCSET, size, chosen)
    raise RuntimeError("unreachable: the full arc set is strong")


def smc_exact(d: Digraph, guards: Guards = DEFAULT_GUARDS) -> tuple[int, Certificate]:
    """Largest number of colors in an SMC arc coloring, by downward search over arc partitions."""
    _require_strong(d)
    guards.check("smc_m", d.m)
    n, m = d.n, d.m
    arcs = d.sorted_arcs()
    if m == 0:
        # the one-vertex digraph has nothing to color
        return 0, Certificate(OPTIMAL_ARC_COLORING, 0, ArcColoring(d, ()))
    for k in range(m, 0, -1):
        for rgs in set_partitions(m, k):
            masks = [[0] * n for _ in range(k)]
            for (u, v), c in zip(arcs, rgs):
                masks[c][u] |= 1 << v
            if smc_ok(n, masks):
                coloring = ArcColoring(d, rgs)
                return k, Certificate(OPTIMAL_ARC_COLORING, k, coloring)
    raise RuntimeError("unreachable: one color connects a strong digraph")


def smc_by_formula(d: Digraph, guards: Guards = DEFAULT_GUARDS) -> int:
    """``m - Omega + 1``; valid for strong oriented graphs only."""
    _require_strong(d)
    if d.has_digon():
        raise HypothesisViolated("digon present: formula needs an oriented graph")
    omega, _ = omega_exact(d, guards)
    return d.m - omega + 1


def hamiltonian_cycle(t: Digraph) -> Path:
    """Hamiltonian cycle of a strong tournament, rotated to start at vertex 0.

    The closing vertex is repeated at the end.  A vertex with both an in- and
    an out-neighbour on the current cycle is spliced in between a dominating
    and a dominated cycle vertex.  When every remaining vertex either beats
    the whole cycle (set A) or loses to all of it (set B), strong
    connectivity gives an arc b -> a with b in B, a in A, and the cycle
    ``c1 b a c2 ... ck`` absorbs both.
    """
    n = t.n
    if not t.is_tournament():
        raise NotTournamentError("not a tournament")
    if not is_strong(t):
        raise NotStrongError("not strong")
    if n < 3:
        raise NotTournamentError("a strong tournament with a cycle needs n >= 3")
    cycle = _initial_triangle(t)
    on = set(cycle)
    while len(cycle) < n:
        k = len(cycle)
        for w in range(n):
            if w in on:
                continue
            pos = next(
                (i for i in range(k) if t.has_arc(cycle[i], w) and t.has_arc(w, cycle[(i + 1) % k])),
                None,
            )
            if pos is not None:
                cycle.insert(pos + 1, w)
                on.add(w)
                break
        else:
            rest = [w for w in range(n) if w not in on]
            beats_all = [w for w in rest if t.has_arc(w, cycle[0])]
            loses_all = [w for w in rest if t.has_arc(cycle[0], w)]
            b, a = next(
                (b, a) for b in loses_all for a in beats_all if t.has_arc(b, a)
            )
            cycle[1:1] = [b, a]
            on.update((a, b))
    start = cycle.index(0)
    cycle = cycle[start:] + cycle[:start]
    return Path(tuple(cycle) + (cycle[0],))


def _initial_triangle(t: Digraph) -> list[int]:
    for u, v in t.sorted_arcs():
        for w in sorted(t.out_adj[v]):
            if t.has_arc(w, u):
                return [u, v, w]
    raise NotStrongError("tournament has no directed triangle")


def verify_certificate(d: Digraph, cert: Certificate) -> bool:
    """Re-check a certificate with checkers independent of the search that built it."""
    kind, value, payload = cert.kind, cert.value, cert.payload
    if kind == OPTIMAL_VERTEX_COLORING:
        if payload.n != d.n or payload.p != value:
            return False
        verdict = verify_svmc(d, payload)
        return verdict.ok and witnesses_valid_svmc(d, payload, verdict.witnesses)
    if kind == OPTIMAL_ARC_COLORING:
        if payload.k != value:
            return False
        if d.m == 0:
            return d.n == 1
        verdict = verify_smc(d, payload)
        return verdict.ok and witnesses_valid_smc(d, payload, verdict.witnesses)
    if kind == MINIMAL_H:
        s = tuple(payload)
        if len(s) != value or not s:
            return False
        sub, _ = induced_subdigraph(d, s)
        return is_strong(sub) and is_dominating(d, s) and is_absorbing(d, s)
    if kind == MINIMAL_ARCSET:
        if len(payload) != value:
            return False
        return is_strong(spanning_subdigraph(d, payload))
    if kind == HAMILTONIAN_CYCLE:
        vs = payload.vertices
        body = vs[:-1]
        return (
            value == d.n
            and len(vs) == d.n + 1
            and vs[0] == vs[-1]
            and sorted(body) == list(range(d.n))
            and all(d.has_arc(u, v) for u, v in zip(vs, vs[1:]))
        )
    raise ValueError(f"unknown certificate kind {kind!r}")
