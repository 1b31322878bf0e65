"""Hamming-distance graphs H_q(n,d) and the robustness of their colorings."""

from .bounds import BoundReport, alpha_formula, chi_bounds, evenness_forced, exact_alpha, mds_clique
from .coloring import (
    Coloring,
    ColoringError,
    Partition,
    canonical_partition,
    coordinate_coloring,
    is_even,
    is_proper,
    read_coloring,
    swap_along_edge,
    write_coloring,
)
from .constructions import (
    NamedColoring,
    construct,
    figure2,
    h243_example,
    hamming_coset_coloring,
    parity_coloring,
    swapped_h254,
    uneven27,
    uneven_variant,
)
from .core import ExcludedParamsError, GraphParams, ParamsError, Vertex, decode, distance, encode, weight
from .graph import HammingGraph
from .search import (
    SearchConfig,
    SearchResult,
    chromatic_number,
    enumerate_colorings,
    is_k_colorable,
    max_clique,
    max_independent_set,
)
from .transitions import (
    Contradiction,
    RobustnessReport,
    TransitionSpace,
    generator_set,
    max_robust_check,
    propagate_from_cycle,
    robustness,
    transition_space,
)

__all__ = [name for name in dir() if not name.startswith("_")]
