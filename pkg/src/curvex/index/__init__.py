from curvex.index.core import (
    DXCertificate,
    certificate,
    curvature_index,
    index_of,
    index_via_pseudoinverse,
    is_distance_exceptional,
    modified_index,
    pendant_potential_update,
    steinerberger_curvature,
    twin_quotient,
    wiener_index,
)
from curvex.index.formulas import (
    FORMULAS,
    basket_index,
    complete_index,
    cycle_index,
    distance_regular_index,
    empty_modified_index,
    family_index_formula,
    grid_index,
    hypercube_index,
    join_branch,
    multipartite_index,
    predict_coalesce,
    predict_join,
    predict_product,
    torus_index,
    tree_index,
)
from curvex.index.spectral import SpectralCheck, spectral_cross_check
from curvex.index.verify import FamilyCheck, family_cases, verify_families

__all__ = [
    "DXCertificate",
    "FORMULAS",
    "FamilyCheck",
    "SpectralCheck",
    "basket_index",
    "certificate",
    "complete_index",
    "curvature_index",
    "cycle_index",
    "distance_regular_index",
    "empty_modified_index",
    "family_cases",
    "family_index_formula",
    "grid_index",
    "hypercube_index",
    "index_of",
    "index_via_pseudoinverse",
    "is_distance_exceptional",
    "join_branch",
    "modified_index",
    "multipartite_index",
    "pendant_potential_update",
    "predict_coalesce",
    "predict_join",
    "predict_product",
    "spectral_cross_check",
    "steinerberger_curvature",
    "torus_index",
    "tree_index",
    "twin_quotient",
    "verify_families",
    "wiener_index",
]
