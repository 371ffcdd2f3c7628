"""Characteristic polynomials and spectra of skew gain graphs.

A skew gain graph stores one gain per edge from the multiplicative group of
a field; the reverse orientation carries the image of that gain under an
anti-involution ``f``.  Characteristic polynomials are computed exactly over
Q and Q(i) by summing over elementary subgraphs, by closed forms for special
families, and by a determinant oracle.
"""
from .charpoly import (
    applicable_routes, compute_charpoly, charpoly_bipartite, charpoly_cycle, charpoly_direct,
    charpoly_double_star, charpoly_kmn, charpoly_path, charpoly_star, charpoly_subgraphs,
    charpoly_unicyclic, det_cycle, det_path,
)
from .graph import (
    ElementarySubgraph, SkewGainGraph, build_graph, enumerate_elementary_subgraphs,
    enumerate_matchings, make_complete_bipartite, make_cycle, make_double_star, make_path,
    make_star, matching_number,
)
from .kernels import BACKEND
from .matrix import Matrix, adjacency_matrix, block_determinant_check, det, sharp
from .poly import Polynomial
from .scalar import (
    AntiInvolution, Domain, GaussianRational, apply_anti_involution, gmap,
    validate_anti_involution,
)
from .spectra import (
    Spectrum, compute_spectrum, double_star_spectrum, kmn_spectrum, spectrum_numeric, star_spectrum,
    zero_multiplicity_bound,
)

__version__ = "0.1.0"
