import itertools

import networkx as nx
import pytest

import oracles
from vmconn.errors import GraphError
from vmconn.families import (
    arc_mask,
    complete_digraph,
    cycle,
    enumerate_strong_digraphs,
    enumerate_strong_oriented,
    enumerate_strong_tournaments,
    figure1_family,
    line_digraph,
    long_path_tournament,
    make_family,
    random_strong_digraph,
    random_strong_oriented,
    random_strong_tournament,
    transitive_tournament,
)
from vmconn.graph import Digraph
from vmconn.metrics import distances, is_strong
from vmconn.rng import SplitMix64


def test_splitmix_reference_output():
    # published first outputs of SplitMix64 seeded with 0
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_splitmix_helpers_are_deterministic():
    a, b = SplitMix64(2026), SplitMix64(2026)
    assert [a.below(7) for _ in range(50)] == [b.below(7) for _ in range(50)]
    r = SplitMix64(5)
    draws = [r.between(3, 5) for _ in range(300)]
    assert set(draws) == {3, 4, 5}
    items = list(range(10))
    SplitMix64(1).shuffle(items)
    assert sorted(items) == list(range(10))
    s = SplitMix64(1).sample(range(10), 4)
    assert len(set(s)) == 4
    with pytest.raises(ValueError):
        SplitMix64(1).below(0)


def test_line_digraph_small_example():
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    line = line_digraph(d)
    assert line.arcs == ((0, 1), (0, 2), (1, 2), (2, 3), (3, 0))
    assert line.graph.arcs == {(0, 2), (1, 3), (2, 3), (3, 4), (4, 0), (4, 1)}
    assert line.vertices_of([(2, 3), (0, 1)]) == (0, 3)


@pytest.mark.parametrize("d", [cycle(4), complete_digraph(3), figure1_family(5), long_path_tournament(5)])
def test_line_digraph_degrees_and_networkx(d):
    line = line_digraph(d)
    assert line.graph.n == d.m
    assert line.graph.m == sum(d.in_degree(v) * d.out_degree(v) for v in d.vertices)
    for i, (u, v) in enumerate(line.arcs):
        assert line.graph.out_degree(i) == d.out_degree(v)
        assert line.graph.in_degree(i) == d.in_degree(u)
    ref = nx.line_graph(oracles.to_nx(d.n, d.arcs))
    index = line.arc_index
    assert {(index[a], index[b]) for a, b in ref.edges} == line.graph.arcs
    assert is_strong(line.graph)


def test_line_digraph_of_arcless_graph():
    with pytest.raises(GraphError):
        line_digraph(Digraph(1, ()))


def test_named_families():
    f4 = figure1_family(4)
    assert f4.m == 5
    assert f4.arcs == {(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)}
    for n in range(4, 9):
        assert distances(figure1_family(n)).diameter == 3
    u4 = long_path_tournament(4)
    assert u4.is_tournament()
    assert distances(u4)[0, 3] == 3
    for n in range(3, 9):
        assert distances(long_path_tournament(n)).diameter == n - 1
    assert not is_strong(transitive_tournament(4))
    assert cycle(5).m == 5 and complete_digraph(4).m == 12
    with pytest.raises(GraphError):
        figure1_family(3)
    with pytest.raises(GraphError):
        make_family("nope", 4)


def test_random_generators_are_seeded():
    assert random_strong_digraph(6, 9, seed=3) == random_strong_digraph(6, 9, seed=3)
    assert random_strong_oriented(6, 8, seed=3) == random_strong_oriented(6, 8, seed=3)
    assert random_strong_tournament(7, seed=3) == random_strong_tournament(7, seed=3)
    seen = {random_strong_digraph(5, 7, seed=s) for s in range(20)}
    assert len(seen) > 1


@pytest.mark.parametrize("seed", range(10))
def test_random_generators_meet_their_contracts(seed):
    d = random_strong_digraph(6, 10, seed)
    assert is_strong(d) and d.m == 10
    o = random_strong_oriented(6, 9, seed)
    assert is_strong(o) and o.m == 9 and not o.has_digon()
    t = random_strong_tournament(6, seed)
    assert is_strong(t) and t.is_tournament()


def test_random_generators_reject_infeasible_sizes():
    with pytest.raises(GraphError):
        random_strong_digraph(4, 3, 0)
    with pytest.raises(GraphError):
        random_strong_oriented(4, 7, 0)
    with pytest.raises(GraphError):
        random_strong_tournament(2, 0)


def _brute_strong(n, oriented=False, tournament=False):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    found = set()
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        arcs = [p for p, b in zip(pairs, bits) if b]
        s = set(arcs)
        if oriented and any((v, u) in s for u, v in arcs):
            continue
        if tournament and len(arcs) != n * (n - 1) // 2:
            continue
        if oracles.strong(n, arcs):
            found.add(frozenset(arcs))
    return found


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumerators_match_brute_force(n):
    got = [d.arcs for d in enumerate_strong_digraphs(n)]
    assert len(got) == len(set(got))
    assert set(got) == _brute_strong(n)
    got = [d.arcs for d in enumerate_strong_oriented(n)]
    assert set(got) == _brute_strong(n, oriented=True)
    got = [d.arcs for d in enumerate_strong_tournaments(n)]
    assert set(got) == _brute_strong(n, oriented=True, tournament=True)


def test_enumeration_counts_and_order():
    digraphs = list(enumerate_strong_digraphs(4))
    # labeled strong digraphs on 4 vertices
    assert len(digraphs) == 1606
    masks = [arc_mask(d) for d in digraphs]
    assert masks == sorted(masks)
    assert sum(1 for _ in enumerate_strong_tournaments(5)) == 544
    assert sum(1 for _ in enumerate_strong_oriented(5)) == 7998
    assert all(d.m <= 5 for d in enumerate_strong_digraphs(4, max_m=5))


def test_enumeration_limits():
    with pytest.raises(GraphError):
        next(enumerate_strong_digraphs(6))
    with pytest.raises(GraphError):
        next(enumerate_strong_tournaments(7))
