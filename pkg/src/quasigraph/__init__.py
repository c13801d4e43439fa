"""quasigraph: quasi k-connectivity, contractible edges, fragments, and a
batch verification harness for graph corpora."""

from .core import (
    Contraction,
    Graph,
    Pattern4,
    classify_neighborhood,
    components_after_removal,
    contract_edge,
    distance,
    induced_subgraph,
    is_connected,
)
from .connectivity import (
    Cut,
    QuasiConnectivity,
    enumerate_cuts,
    enumeration_mode,
    is_cut,
    is_nontrivial_cut,
    is_quasi_k_connected,
    make_cut,
    min_vertex_cut_between,
    minimum_cuts,
    vertex_connectivity,
)
from .fragments import (
    Fragment,
    fragment_from_body,
    fragments_of_cut,
    nontrivial_atom,
    nontrivial_fragments_wrt_edge,
    quasi_atom_wrt_edges,
    quasi_fragments_wrt_edge,
)
from .contractibility import (
    ContractionReport,
    check_martinov,
    compute_E0,
    contraction_reports,
    is_contraction_critical,
    is_k_contractible,
    is_quasi_k_contractible,
)
from .harness import (
    CLAIMS,
    VerificationReport,
    check_degree_sum_condition,
    check_min_degree_condition,
    run_campaign,
    verify_claim,
    verify_degree_condition_A,
    verify_degree_condition_BC,
    verify_lemma,
    verify_theorem1,
    verify_theorem2,
)
from .generators import CorpusSpec, generate_corpus

__version__ = "0.1.0"
