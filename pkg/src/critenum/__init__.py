"""critenum: exhaustive enumeration and certification of vertex-critical graphs.

A bitset-backed toolkit for k-vertex-critical graphs in hereditary classes
defined by forbidden induced subgraphs: exact coloring, canonical labeling,
induced-pattern search, recursive exhaustive generation with
criticality-based pruning, and a certifying 4-colorability checker.
"""

from .canon import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    graph_from_canonical_form,
)
from .certify import (
    Certificate,
    CriticalWitness,
    IncompleteListError,
    NotInClassError,
    certify_4_colorability,
)
from .coloring import Coloring, chromatic_number, clique_number, greedy_upper_bound, is_k_colorable
from .critical import (
    CriticalityReport,
    find_comparable_pair,
    find_xy_obstruction,
    is_k_critical_in_class,
    is_k_vertex_critical,
)
from .enumeration import (
    NO_PRUNING,
    EnumerationResult,
    ExpansionObligation,
    PruningFlags,
    SearchConfig,
    all_graphs,
    default_max_order_for,
    enumerate_5vc,
    find_obligations,
    one_vertex_extensions,
    pruning_allows,
    recursively_enumerate,
    seed_graphs,
    sort_graphs,
    sporadic_graphs,
)
from .graph6 import (
    Graph6Error,
    GraphListFile,
    decode_graph6,
    encode_graph6,
    read_graph6_file,
    write_graph6_file,
)
from .graphs import (
    MAX_ORDER,
    Graph,
    VertexSet,
    add_vertex_with_neighborhood,
    bits,
    complement,
    complete,
    complete_bipartite,
    cycle,
    degree,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_connected,
    mask_of,
    neighborhood,
    path,
    set_neighborhood,
)
from .patterns import (
    Embedding,
    Pattern,
    PatternSyntaxError,
    embedding_is_induced,
    find_induced,
    free_after_extension,
    is_family_free,
    parse_pattern,
)

__version__ = "0.1.0"
