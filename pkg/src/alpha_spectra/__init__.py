"""Exact A_α spectra of generalized corona and generalized edge corona products."""

from .alpha import (
    AlphaParam,
    adjacency_charpoly,
    alpha_charpoly,
    alpha_matrix,
    coronal,
    coronal_complete_bipartite,
    coronal_regular,
    signless_laplacian_charpoly,
)
from .closed_forms import (
    bipartite_identity,
    cor31_corona_charpoly,
    cor32_uniform,
    cor35_charpoly,
    cor36_charpoly,
    cor37_charpoly,
    cor38_charpoly,
    thm31_charpoly,
    thm32_forms,
    thm32_semiregular_charpoly,
)
from .corona import CoronaLayout, corona, generalized_corona, generalized_edge_corona
from .cospectral import (
    CospectralCertificate,
    are_cospectral,
    certify_nonisomorphic,
    cor33_pair,
    cor34_pair,
    cor42_pair,
    cor43_pair,
)
from .edge_forms import (
    SpectrumReport,
    cor41_spectrum,
    edge_bridge_identity_check,
    thm41_edge_corona_charpoly,
)
from .errors import DegreeBoundError, Graph6Error, HypothesisError, IdentityViolation, PoleError
from .graph6 import parse_graph6, to_graph6
from .graphs import Graph, from_shorthand
from .poly import LAMBDA, Poly, RatFunc

__version__ = "0.1.0"

__all__ = [
    "adjacency_charpoly",
    "alpha_charpoly",
    "alpha_matrix",
    "AlphaParam",
    "are_cospectral",
    "bipartite_identity",
    "certify_nonisomorphic",
    "cor31_corona_charpoly",
    "cor32_uniform",
    "cor33_pair",
    "cor34_pair",
    "cor35_charpoly",
    "cor36_charpoly",
    "cor37_charpoly",
    "cor38_charpoly",
    "cor41_spectrum",
    "cor42_pair",
    "cor43_pair",
    "corona",
    "coronal",
    "coronal_complete_bipartite",
    "coronal_regular",
    "CoronaLayout",
    "CospectralCertificate",
    "DegreeBoundError",
    "edge_bridge_identity_check",
    "from_shorthand",
    "generalized_corona",
    "generalized_edge_corona",
    "Graph",
    "Graph6Error",
    "HypothesisError",
    "IdentityViolation",
    "LAMBDA",
    "parse_graph6",
    "PoleError",
    "Poly",
    "RatFunc",
    "signless_laplacian_charpoly",
    "SpectrumReport",
    "thm31_charpoly",
    "thm32_forms",
    "thm32_semiregular_charpoly",
    "thm41_edge_corona_charpoly",
    "to_graph6",
]
