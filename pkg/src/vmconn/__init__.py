"""Exact strong (vertex-)monochromatic connection numbers of digraphs."""

from .coloring import (
    ArcColoring,
    VertexColoring,
    derive_dstar,
    induce_arc_coloring,
    verify_smc,
    verify_svmc,
    vm_reachable,
)
from .families import (
    complete_digraph,
    cycle,
    figure1_family,
    line_digraph,
    long_path_tournament,
)
from .graph import Digraph, Path, build, induced_subdigraph, reverse, spanning_subdigraph
from .metrics import distances, girth, is_strong
from .solvers import (
    Certificate,
    Guards,
    hamiltonian_cycle,
    omega_exact,
    omega_v_exact,
    smc_by_formula,
    smc_exact,
    smcv_exact,
)

__version__ = "0.1.0"
