import pytest
from hypothesis import given, strategies as st

from conftest import digraphs
from vmconn.errors import ArcNotPresentError, DuplicateArcError, GraphError, LoopError, VertexRangeError
from vmconn.families import complete_digraph, cycle
from vmconn.graph import Digraph, Path, build, induced_subdigraph, reverse, spanning_subdigraph


def test_build_triangle():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    assert d.m == 3
    assert d == cycle(3)


@pytest.mark.parametrize(
    "n, arcs, exc, text",
    [
        (2, [(0, 0)], LoopError, "loop"),
        (4, [(0, 1), (0, 1), (1, 2)], DuplicateArcError, "duplicate arc"),
        (3, [(0, 3)], VertexRangeError, "out of range"),
        (3, [(-1, 2)], VertexRangeError, "out of range"),
    ],
)
def test_build_rejects(n, arcs, exc, text):
    with pytest.raises(exc, match=text) as info:
        build(n, arcs)
    assert info.value.arc if hasattr(info.value, "arc") else True


def test_build_errors_name_the_pair():
    with pytest.raises(LoopError) as info:
        build(2, [(0, 1), (1, 1)])
    assert "(1, 1)" in str(info.value)


def test_digraph_is_immutable():
    d = cycle(3)
    with pytest.raises(AttributeError):
        d.n = 4


def test_induced_subdigraph():
    sub, labels = induced_subdigraph(cycle(4), {0, 1})
    assert sub == Digraph(2, [(0, 1)])
    assert labels == (0, 1)

    d = cycle(5)
    assert induced_subdigraph(d, range(5))[0] == d

    sub, labels = induced_subdigraph(complete_digraph(4), {1, 3})
    assert sub == Digraph(2, [(0, 1), (1, 0)])
    assert labels == (1, 3)


def test_induced_subdigraph_errors():
    with pytest.raises(GraphError):
        induced_subdigraph(cycle(3), set())
    with pytest.raises(VertexRangeError):
        induced_subdigraph(cycle(3), {5})


def test_spanning_subdigraph():
    k3 = complete_digraph(3)
    assert spanning_subdigraph(k3, [(0, 1), (1, 2), (2, 0)]) == cycle(3)
    assert spanning_subdigraph(k3, k3.arcs) == k3
    empty = spanning_subdigraph(k3, [])
    assert empty.n == 3 and empty.m == 0
    with pytest.raises(ArcNotPresentError):
        spanning_subdigraph(cycle(3), [(1, 0)])


def test_reverse_examples():
    assert reverse(cycle(3)) == Digraph(3, [(1, 0), (2, 1), (0, 2)])
    assert reverse(Digraph(2, [(0, 1)])) == Digraph(2, [(1, 0)])


def test_path_validity():
    d = cycle(4)
    assert Path((0, 1, 2)).is_valid_in(d)
    assert not Path((0, 2)).is_valid_in(d)
    assert not Path((0, 1, 2, 3, 0)).is_valid_in(d)  # repeats a vertex
    assert Path((0, 1, 2, 3)).internal == (1, 2)


@given(digraphs())
def test_reverse_is_involution(d):
    r = reverse(d)
    assert r.m == d.m
    assert reverse(r) == d


@given(digraphs())
def test_adjacency_consistent(d):
    assert sum(d.out_degree(v) for v in d.vertices) == d.m
    assert sum(d.in_degree(v) for v in d.vertices) == d.m
    for u, v in d.arcs:
        assert u != v
        assert v in d.out_adj[u] and u in d.in_adj[v]
        assert d.out_mask[u] >> v & 1 and d.in_mask[v] >> u & 1


@given(digraphs(), st.data())
def test_induced_matches_filtration(d, data):
    s = data.draw(st.sets(st.integers(0, d.n - 1), min_size=1))
    sub, labels = induced_subdigraph(d, s)
    expected = {(u, v) for u, v in d.arcs if u in s and v in s}
    assert {(labels[a], labels[b]) for a, b in sub.arcs} == expected
