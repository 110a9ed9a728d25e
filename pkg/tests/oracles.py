"""Brute-force reference computations, kept independent of the package's search code.

Paths are enumerated by plain DFS, partitions come from sympy, and
connectivity/cycles from networkx.  Only use these on tiny inputs.
"""

import itertools
import math

import networkx as nx
from sympy.utilities.iterables import multiset_partitions


def to_nx(n, arcs):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(arcs)
    return g


def strong(n, arcs):
    return nx.is_strongly_connected(to_nx(n, arcs)) if n else True


def simple_paths(n, arcs, u, v):
    out = {x: [] for x in range(n)}
    for a, b in arcs:
        out[a].append(b)
    found = []

    def walk(path):
        x = path[-1]
        if x == v:
            found.append(tuple(path))
            return
        for y in out[x]:
            if y not in path:
                walk(path + [y])

    walk([u])
    return found


def vm_connected(n, arcs, labels, u, v):
    return any(len({labels[x] for x in p[1:-1]}) <= 1 for p in simple_paths(n, arcs, u, v))


def is_svmc(n, arcs, labels):
    return all(
        vm_connected(n, arcs, labels, u, v)
        for u in range(n) for v in range(n) if u != v
    )


def first_svmc_violation(n, arcs, labels):
    for u in range(n):
        for v in range(n):
            if u != v and not vm_connected(n, arcs, labels, u, v):
                return (u, v)
    return None


def partitions_of(items):
    for part in multiset_partitions(list(items)):
        yield part


def smcv(n, arcs):
    best = 0
    for part in partitions_of(range(n)):
        labels = {}
        for i, block in enumerate(part):
            for v in block:
                labels[v] = i
        if len(part) > best and is_svmc(n, arcs, labels):
            best = len(part)
    return best


def is_smc(n, arcs, arc_labels):
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            ok = False
            for p in simple_paths(n, arcs, u, v):
                if len({arc_labels[e] for e in zip(p, p[1:])}) == 1:
                    ok = True
                    break
            if not ok:
                return False
    return True


def smc(n, arcs):
    arcs = sorted(arcs)
    best = 0
    for part in partitions_of(range(len(arcs))):
        if len(part) <= best:
            continue
        labels = {}
        for i, block in enumerate(part):
            for j in block:
                labels[arcs[j]] = i
        if is_smc(n, arcs, labels):
            best = len(part)
    return best


def omega(n, arcs):
    arcs = sorted(arcs)
    best = math.inf
    for k in range(len(arcs) + 1):
        for sub in itertools.combinations(arcs, k):
            if strong(n, sub):
                return k
    return best


def omega_v(n, arcs):
    arcs = set(arcs)
    for k in range(1, n + 1):
        for s in itertools.combinations(range(n), k):
            s = set(s)
            sub = [(a, b) for a, b in arcs if a in s and b in s]
            g = to_nx(n, sub).subgraph(s)
            if not nx.is_strongly_connected(g):
                continue
            dom = all(any((a, v) in arcs for a in s) for v in range(n) if v not in s)
            absorb = all(any((v, b) in arcs for b in s) for v in range(n) if v not in s)
            if dom and absorb:
                return k
    raise AssertionError("unreachable")


def floyd_warshall(n, arcs):
    dist = [[0 if i == j else math.inf for j in range(n)] for i in range(n)]
    for a, b in arcs:
        dist[a][b] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def girth(n, arcs):
    lengths = [len(c) for c in nx.simple_cycles(to_nx(n, arcs))]
    return min(lengths) if lengths else None
