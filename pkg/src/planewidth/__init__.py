"""Plane-width of graphs: certified bounds, realizations and colorings.

Map vertices to plane points with adjacent vertices at least unit distance
apart; the plane-width is the least possible diameter of the image.  This
package computes certified lower/upper intervals for it, builds explicit
realizations, extracts proper colorings from geometric partitions, and
numerically searches for near-optimal arrangements.
"""

from .bounds import BoundReport, kn_lower, pw_interval
from .coloring import Coloring, ChromaticResult, chromatic_number, max_clique
from .geometry import Hexagon, NormSpec, diameter, distance, pal_hexagon
from .graphs import Graph, Homomorphism, circulant, circle_star, complete, \
    cycle, generate, odd_wheel, verify_homomorphism
from .optimizer import OptimizeConfig, OptimizeResult, brute_force, optimize
from .partition import extract_coloring, partition_unit, tiling_coloring
from .realization import Evaluation, Realization, evaluate, feasibilize, \
    from_circular, from_coloring, known_complete_arrangement, \
    lattice_complete_arrangement, low_dim_realization

__all__ = [
    "BoundReport", "Coloring", "ChromaticResult", "Evaluation", "Graph",
    "Hexagon", "Homomorphism", "NormSpec", "OptimizeConfig", "OptimizeResult",
    "Realization", "brute_force", "chromatic_number", "circle_star",
    "circulant", "complete", "cycle", "diameter", "distance",
    "evaluate", "extract_coloring", "feasibilize", "from_circular",
    "from_coloring", "generate", "kn_lower", "known_complete_arrangement",
    "lattice_complete_arrangement", "low_dim_realization", "max_clique",
    "odd_wheel", "optimize", "pal_hexagon", "partition_unit", "pw_interval",
    "tiling_coloring", "verify_homomorphism",
]

__version__ = "0.1.0"
