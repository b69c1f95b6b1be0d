"""turan3: constructions and desk-scale verification for 3-graph Turan problems.

The library builds the extremal objects of this problem family exactly
(norm graphs over finite fields, their coset quotients, crosscut-capacity
systems, layered high-girth systems, random-deletion systems), provides the
3-uniform machinery around them (shadows, codegrees, expansions, crosscuts,
full subsystems), and verifies countable claims by exact enumeration,
embedding search and brute-force Turan oracles.
"""

from .embedding import (BUDGET_EXHAUSTED, Embedding, contains_expansion,
                        graph_embed, triple_embed)
from .errors import Turan3Error
from .fields import (FieldContext, FieldElement, MultSubgroup, NormTower,
                     build_field, build_tower, count_norm_ratio_solutions,
                     factor_prime_power, mult_subgroup, norm, norm_fiber,
                     tower_for_prime_power)
from .graphs import (Coloring, Graph, INFINITE, bichromatic_cycle_profile,
                     clique, complete_bipartite, cube, cycle, girth,
                     has_acyclic_3_coloring, high_girth_bipartite, named_graph,
                     octahedron, path, proper_3_colorings, treewidth_le_two,
                     wheel)
from .triples import (CrosscutResult, TripleSystem, codegree, crosscut, expand,
                      full_subgraph, h_t_pattern, shadow, triangles_of_graph)
from .constructions import (ConstructionReport, layered_girth_construction,
                            projective_norm_graph, quotient_norm_graph,
                            random_deletion_construction, sigma_construction,
                            triangle_hypergraph)
from .oracle import ExtremalResult, ex2_bruteforce, ex3_bruteforce

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXHAUSTED", "Coloring", "ConstructionReport", "CrosscutResult",
    "Embedding", "ExtremalResult", "FieldContext", "FieldElement", "Graph",
    "INFINITE", "MultSubgroup", "NormTower", "TripleSystem", "Turan3Error",
    "bichromatic_cycle_profile", "build_field", "build_tower", "clique",
    "codegree", "complete_bipartite", "contains_expansion",
    "count_norm_ratio_solutions", "crosscut", "cube", "cycle",
    "ex2_bruteforce", "ex3_bruteforce", "expand", "factor_prime_power",
    "full_subgraph", "girth", "graph_embed", "h_t_pattern",
    "has_acyclic_3_coloring", "high_girth_bipartite",
    "layered_girth_construction", "mult_subgroup", "named_graph", "norm",
    "norm_fiber", "octahedron", "path", "projective_norm_graph",
    "proper_3_colorings", "quotient_norm_graph",
    "random_deletion_construction", "shadow", "sigma_construction",
    "tower_for_prime_power", "treewidth_le_two", "triangle_hypergraph",
    "triangles_of_graph", "triple_embed", "wheel",
]
