"""Signless Laplacian spectra of uniform hypergraphs and certified bounds
on the entries of its principal eigenvector."""

from .bounds import CATALOG_IDS, BoundCheck, CertificateReport, certify, check_bound, corpus_certify
from .config import CertifyConfig, SolverConfig
from .generators import (
    complete_bipartite,
    complete_kgraph,
    cyclic_kgraph,
    example_fig1,
    path_graph,
    power_hypergraph,
    random_connected_kgraph,
    star_graph,
)
from .hgr import parse_hgr, report_json, serialize_hgr
from .hypergraph import (
    Hypergraph,
    build_hypergraph,
    clique_multigraph,
    connectivity_metrics,
    degree_profile,
    neighborhoods,
    row_sum_identity_check,
    set_degree,
)
from .parameters import (
    edge_extremes,
    edge_regular_closed_form,
    lagrange_sum_bound,
    parameter_report,
    regularity_report,
    vertex_extremes,
)
from .spectra import (
    edge_sums,
    full_spectrum,
    incidence_matrix,
    principal_eigenpair,
    second_eigenvalue,
    signless_laplacian,
    spectral_analysis,
)

__version__ = "0.1.0"
