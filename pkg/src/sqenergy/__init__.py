"""Square-energy toolkit: graph spectra, positive/negative square energies,
semidefinite witnesses, constructive partitions, exact combinatorial oracles,
bound certificates, named graph families, and a sweep harness with a CLI.
"""

from .bounds import (
    BOUND_FUNCTIONS,
    BoundVerdict,
    bound_alon_boppana,
    bound_dominating_vertex,
    bound_domination,
    bound_efgw,
    bound_inertia,
    bound_ratio,
    bound_regular,
    bound_surplus,
    bound_triangle,
    certify_s_plus_pipeline,
    conjecture_checks,
    energy_wall_check,
    join_complement_spectrum_check,
)
from .errors import (
    BudgetExceeded,
    ContractViolation,
    ConvergenceError,
    Graph6Error,
    NumericError,
    SquareEnergyError,
)
from .families import (
    GqSpectrumParams,
    complete,
    cycle,
    cycle_with_triangles,
    gq_collinearity_graph,
    gq_predicted_spectrum,
    join_complement,
    path,
    petersen,
    star,
    star_plus_edge,
    unicyclic_glue,
)
from .graphs import (
    Graph,
    VertexSet,
    canonical_form,
    canonical_key,
    complement,
    connected_components,
    delete_vertex,
    disjoint_union,
    dominating_vertices,
    enumerate_graphs,
    induced_subgraph,
    is_bipartite,
    is_clique,
    is_connected,
    is_regular,
    is_star,
    is_tree,
    join,
    parse_graph6,
    relabel,
    write_graph6,
)
from .harness import (
    FilterOutcome,
    RecordWriter,
    RunConfig,
    RunSummary,
    build_family,
    filter_minimal_counterexample_candidates,
    parse_family_spec,
    resolve_source,
    run,
    run_to_path,
)
from .oracles import (
    BipartiteRemovalReport,
    CutReport,
    DominationCertificate,
    P3CutVertexReport,
    check_bipartite_removal_property,
    check_p3_cut_vertex_property,
    cut_vertices,
    domination_number,
    find_induced_p3,
    independence_number,
    max_cut,
    triangle_count_exact,
)
from .partitions import (
    Partition,
    SuperadditivityReport,
    certify_superadditivity,
    degree_class_partition,
    domination_partition,
    star_clique_partition,
)
from .sdp import (
    MinCharacterizationReport,
    P3PsdScanReport,
    P3RemovalWitness,
    PsdWitness,
    p3_removal_witness,
    projected_gradient_min,
    random_psd,
    rayleigh_max_value,
    row_col_square_sum,
    scan_p3_psd_inequality,
    verify_min_characterization,
)
from .spectral import (
    EnergyReport,
    Inertia,
    SpectralSplit,
    Spectrum,
    default_zero_tolerance,
    eigen_decompose_symmetric,
    graph_inertia,
    inertia,
    numeric_tolerance,
    spectral_split,
    spectrum,
    square_energies,
    triangle_count_spectral,
)

__version__ = "0.1.0"
