from curvex.census.canonical import automorphism_count, canonical_form, canonical_search, orbit_size, refine
from curvex.census.enumerate import MAX_BUILTIN_ORDER, enumerate_connected, labeled_connected_count
from curvex.census.gnp import GnpSample, gnp_experiment, sample_gnp
from curvex.census.scan import CensusReport, default_jobs, scan_graph6

__all__ = [
    "MAX_BUILTIN_ORDER",
    "CensusReport",
    "GnpSample",
    "automorphism_count",
    "canonical_form",
    "canonical_search",
    "default_jobs",
    "enumerate_connected",
    "gnp_experiment",
    "labeled_connected_count",
    "orbit_size",
    "refine",
    "sample_gnp",
    "scan_graph6",
]
