"""rhokit: homomorphism densities on step graphons and the density
domination exponent rho(G,H) — catalog values, extremal constructions,
randomized inequality verification, and gradient-based graphon search."""

from .catalog import (
    RhoResult,
    blowup_upper_bound,
    finiteness,
    general_lower_bounds,
    majorization_chain,
    majorizes,
    part_sizes,
    rho_exact,
)
from .constructions import (
    KINDS,
    CertificateReport,
    ConstructionFamily,
    build_construction,
    certify_lower_bound,
)
from .density import (
    cycle_density_spectral,
    delta_index,
    density,
    generalized_path_density,
    generalized_star_density,
    hom_count,
    independence_number,
    log_density,
    path_density,
    spectrum,
)
from .errors import (
    DegenerateDensityError,
    DiscrepancyError,
    DomainError,
    EnumerationCapError,
    GraphSpecError,
    RhokitError,
)
from .graphs import (
    Graph,
    WeightedGraph,
    blowup,
    complete,
    cycle,
    cycle_tail,
    disjoint_union,
    hub,
    load_edge_list,
    multipartite,
    parse_graph_spec,
    path,
    paw,
    star,
)
from .search import SearchConfig, SearchResult, density_gradient, ratio_objective, search_lower_bound
from .verify import (
    PROFILES,
    SUITES,
    SuiteReport,
    domination_residual,
    reports_to_junit,
    run_all_suites,
    run_suite,
    sample_weighted_graph,
)

__version__ = "0.1.0"

__all__ = [
    "CertificateReport",
    "ConstructionFamily",
    "DegenerateDensityError",
    "DiscrepancyError",
    "DomainError",
    "EnumerationCapError",
    "Graph",
    "GraphSpecError",
    "KINDS",
    "PROFILES",
    "RhoResult",
    "RhokitError",
    "SUITES",
    "SearchConfig",
    "SearchResult",
    "SuiteReport",
    "WeightedGraph",
    "blowup",
    "blowup_upper_bound",
    "build_construction",
    "certify_lower_bound",
    "complete",
    "cycle",
    "cycle_density_spectral",
    "cycle_tail",
    "delta_index",
    "density",
    "density_gradient",
    "disjoint_union",
    "domination_residual",
    "finiteness",
    "general_lower_bounds",
    "generalized_path_density",
    "generalized_star_density",
    "hom_count",
    "hub",
    "independence_number",
    "load_edge_list",
    "log_density",
    "majorization_chain",
    "majorizes",
    "multipartite",
    "parse_graph_spec",
    "part_sizes",
    "path",
    "path_density",
    "paw",
    "ratio_objective",
    "reports_to_junit",
    "rho_exact",
    "run_all_suites",
    "run_suite",
    "sample_weighted_graph",
    "search_lower_bound",
    "spectrum",
    "star",
]
