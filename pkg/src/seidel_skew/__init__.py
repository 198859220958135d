"""Skew Hadamard matrices, doubly regular tournaments and Seidel spectra."""
from .errors import SeidelSkewError
from .exact import (
    CertificateReport,
    adjacency_char_poly,
    certify_drt_spectrum,
    certify_thm1_spectrum,
    certify_thm3_adjacency,
    char_poly_int,
    seidel_char_poly,
)
from .numeric import SpectralData, main_angles, seidel_eigen
from .polynomial import IntPolynomial, RatPolynomial
from .tournament import (
    SkewHadamard,
    Tournament,
    delete_vertex,
    drt_to_skew_hadamard,
    extend_to_regular,
    from_adjacency,
    is_almost_regular,
    is_doubly_regular,
    is_regular,
    is_skew_hadamard,
    paley_tournament,
    score_vector,
    skew_hadamard_to_drt,
)
from .search import census, search_thm1

__version__ = "0.1.0"
