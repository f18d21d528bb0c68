"""splitlink: exact evaluation of split-link presentations into graph vectors."""

from splitlink.diagrams import (
    ChordDiagram,
    DiagramError,
    DiagramRelation,
    diagram_to_json,
    diagram_to_text,
    diagram_word,
    enumerate_diagrams,
    four_t_relations,
    parse_diagram,
)
from splitlink.engine import EvalResult, eval_diagram, eval_presentation, pair_graph, single_graph
from splitlink.graphs import (
    GraphError,
    GraphVector,
    SimpleGraph,
    canonicalize,
    display_name,
    enumerate_simple_graphs,
    graph_from_key,
    graph_to_text,
    has_isolated_edge,
    named_graph,
    parse_graph,
)
from splitlink.mu import (
    FlipResult,
    MuCollection,
    MuError,
    flip_normalize,
    from_presentation,
    mu_from_json,
    mu_to_json,
    to_graph,
)
from splitlink.relations import (
    RelationError,
    RelationSystem,
    SolveResult,
    SubsetAssignment,
    harvest_4t,
    harvest_presentation_pair,
    moebius_reconstruct,
    psi,
)
from splitlink.words import (
    EpsilonMatrix,
    Letter,
    Presentation,
    SimpleCommutator,
    Word,
    WordError,
    canonical_presentation,
    magnus_epsilon,
    parse_bracket,
    parse_word,
    presentation_epsilon,
    presentation_to_text,
    word_to_text,
)

__version__ = "0.1.0"
