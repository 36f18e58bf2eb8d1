"""raagv: which graph groups embed into Thompson's group V.

The graph group of a finite simple graph has one generator per vertex and
one commutation relation per edge.  It embeds into Thompson's group V
exactly when the graph avoids the three-vertex pattern "one edge plus a
vertex adjacent to neither endpoint"; such graphs carry a unique commuting
partition and their groups are direct products of free groups.  This package
decides the class, produces the partition, the group decomposition and
witnesses, and solves the word problem on the embeddable side.
"""

from .classify import ForbiddenTriple, find_forbidden_triple, is_nb, recognize_multipartite
from .graphio import (
    LabelMap,
    ParseError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .graphs import (
    Graph,
    complement,
    connected_components,
    eccentricity,
    is_clique,
    new_graph,
    universal_vertices,
)
from .groups import (
    Embeddable,
    GroupDecomposition,
    NotEmbeddable,
    Verdict,
    canonical_form,
    decompose,
    emit_presentation,
    format_decomposition,
    verdict,
)
from .harness import (
    CrossCheckReport,
    Mismatch,
    cross_check,
    enumerate_graphs,
    graph_code,
    graph_from_code,
    graph_from_family,
    random_graph,
    random_nb_graph,
    random_partition_family,
)
from .partition import (
    CommutingPartition,
    GreedyRun,
    InternalEdge,
    MissingCrossEdge,
    Violation,
    WrongP0,
    canonical_partition,
    greedy_partition,
    min_pivot,
    run_greedy,
    seeded_pivot,
    validate_partition,
)
from .words import (
    Letter,
    NormalForm,
    Word,
    format_word,
    free_reduce,
    inverse,
    is_trivial,
    normal_form,
    parse_word,
    project,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "CommutingPartition",
    "CrossCheckReport",
    "Embeddable",
    "ForbiddenTriple",
    "Graph",
    "GreedyRun",
    "GroupDecomposition",
    "InternalEdge",
    "LabelMap",
    "Letter",
    "Mismatch",
    "MissingCrossEdge",
    "NormalForm",
    "NotEmbeddable",
    "ParseError",
    "Verdict",
    "Violation",
    "Word",
    "WrongP0",
    "canonical_form",
    "canonical_partition",
    "complement",
    "connected_components",
    "cross_check",
    "decompose",
    "eccentricity",
    "emit_dot",
    "emit_edge_list",
    "emit_graph6",
    "emit_presentation",
    "enumerate_graphs",
    "find_forbidden_triple",
    "format_decomposition",
    "format_word",
    "free_reduce",
    "graph_code",
    "graph_from_code",
    "graph_from_family",
    "greedy_partition",
    "inverse",
    "is_clique",
    "is_nb",
    "is_trivial",
    "min_pivot",
    "new_graph",
    "normal_form",
    "parse_edge_list",
    "parse_graph6",
    "parse_word",
    "project",
    "random_graph",
    "random_nb_graph",
    "random_partition_family",
    "recognize_multipartite",
    "run_greedy",
    "seeded_pivot",
    "universal_vertices",
    "validate_partition",
    "verdict",
    "word",
]
