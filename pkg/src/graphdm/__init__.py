"""Graph Laplacians as quantum states: entropy, separability, channels."""

from .channels import (
    ChannelError,
    KrausChannel,
    LoccReport,
    MeasurementOutcome,
    VertexEditReport,
    add_vertex_procedure,
    add_vertex_report,
    apply_channel,
    complete_to_unitary,
    delete_vertex_procedure,
    delete_vertex_report,
    edge_addition_channel,
    edge_deletion_channel,
    locc_principle_examples,
    measurement_probabilities,
)
from .concurrence import (
    CensusReport,
    CensusRow,
    ConcurrenceError,
    ConcurrenceResult,
    concurrence,
    four_vertex_census,
    pure_state_concurrence,
    spin_flip,
)
from .density import (
    DensityError,
    DensityMatrix,
    density_of_graph,
    density_with_loops,
    edge_state_vector,
    is_pure,
    pure_mixture_decomposition,
    purity,
    sigma_plus,
    tensor_separable_decomposition,
)
from .entropy import (
    EntropyError,
    EntropyReport,
    circulant_entropy_approx,
    circulant_entropy_exact,
    q_entropy,
    regular_graph_entropy,
    von_neumann_entropy,
)
from .graphs import (
    Graph,
    GraphError,
    ParseError,
    VertexPermutation,
    add_edge,
    add_isolated_vertex,
    adjacency_matrix,
    are_isomorphic,
    automorphisms,
    build_graph,
    cayley_circulant,
    complete_graph,
    component_count,
    cycle_graph,
    degree_matrix,
    delete_edge,
    delete_vertex,
    disjoint_union,
    format_graph,
    laplacian,
    nonisomorphic_graphs,
    parse_graph,
    path_graph,
    petersen_graph,
    star_graph,
    tensor_product,
    with_loops,
)
from .linalg import (
    HermitianMatrix,
    LinalgError,
    SpectrumResult,
    eigensystem,
    exact_projector,
    is_psd,
    kron,
    psd_sqrt,
)
from .separability import (
    ENTANGLED_NPT,
    PPT_INCONCLUSIVE,
    SEPARABLE,
    BipartiteLabeling,
    LabelingCensus,
    ProductState,
    SeparabilityError,
    SeparabilityVerdict,
    StarWitness,
    TallyMark,
    canonicalize_pe_matching,
    classify_matching,
    complete_graph_decomposition,
    entangled_edges,
    labeling_search,
    min_pt_eigenvalue,
    partial_transpose,
    pe_matching_separability,
    ppt_test,
    star_projection_witness,
    tally_mark_decomposition,
    verify_separable_decomposition,
)

__version__ = "0.1.0"
