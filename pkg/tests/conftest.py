import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from vmconn.graph import Digraph  # noqa: E402


@st.composite
def digraphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [a for a, k in zip(pairs, keep) if k])


@st.composite
def strong_digraphs(draw, min_n=1, max_n=5):
    """A random Hamiltonian cycle plus random extra arcs, so always strong."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    arcs = set()
    if n > 1:
        arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in arcs]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs |= {a for a, k in zip(pairs, keep) if k}
    return Digraph(n, arcs)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
