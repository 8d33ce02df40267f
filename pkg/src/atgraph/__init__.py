"""Graph operations, degeneracy and Alon-Tarsi numbers of F-sum graphs."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .graph import (Bipartition, Complete, Cycle, DegreeProfile, EdgeVertex, Graph,
                    Original, Pair, Path, Plain, Star, Theta, build, complete, cycle,
                    degree_profile, generate, is_bipartite, path, star, theta)
from .transforms import (FKind, FSumLayout, apply_op, cartesian, f_sum, f_sum_via_product,
                         line_superposition, subdivision, total_graph, triangle_parallel)
from .structure import (CoreClass, Density, StructureReport, at_equals_two, chromatic_number,
                        classify_core, coloring_number, core, degeneracy, elimination_order,
                        max_density, structure_report, two_choosable)
from .at import (Certificate, DiffResult, Orientation, SearchStats, at_exact, at_lower_bound,
                 at_orientation_by_coefficient, at_upper_bound, bipartite_at, eulerian_diff,
                 find_at_orientation, find_nonzero_monomial, make_certificate,
                 monomial_coefficient, orient_by_order, realize_outdegrees, s_sum_orientation,
                 subdivision_orientation, verify_certificate)
from .io import emit_dot, graph_sha, parse_graph, to_edgelist, to_json
