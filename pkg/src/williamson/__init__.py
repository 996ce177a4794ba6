"""Williamson-type symplectic decompositions of real symmetric matrices."""

__version__ = "0.1.0"

from .classify import (
    EigenspaceTriple,
    MembershipReport,
    check_eigsps_membership,
    check_pd,
    check_sppsd,
    eigenspace_split,
    projection_certificate,
    verify_certificate,
)
from .decompose import (
    SymplecticSpectrum,
    WilliamsonDecomposition,
    decompose,
    eigen_ija_check,
    simultaneous_skew_canonical,
    skew_canonical,
    symplectic_spectrum_eigsps,
    williamson_eigsps,
    williamson_pd,
    williamson_via_subspaces,
)
from .errors import (
    MatrixFormatError,
    MembershipError,
    NotPositiveDefiniteError,
    NotPositiveSemidefiniteError,
    NotSymmetricError,
    NotSymplecticError,
    NumericalError,
    WilliamsonError,
)
from .generate import GeneratorSpec, gen_eigsps, gen_pd, gen_sppsd, perturb, random_orthosymplectic
from .linalg import inertia, psd_sqrt, spectral_split
from .matrixio import read_matrix, write_matrix
from .perturbation import DHat, PerturbationReport, bound_frobenius, bound_main, bound_operator, d_hat, sweep
from .symplectic import (
    Subspace,
    SymplecticFrame,
    symplectic_complement,
    symplectic_gram_schmidt,
    symplectic_orthogonal_projection,
)

__all__ = [
    "DHat",
    "EigenspaceTriple",
    "GeneratorSpec",
    "MatrixFormatError",
    "MembershipError",
    "MembershipReport",
    "NotPositiveDefiniteError",
    "NotPositiveSemidefiniteError",
    "NotSymmetricError",
    "NotSymplecticError",
    "NumericalError",
    "PerturbationReport",
    "Subspace",
    "SymplecticFrame",
    "SymplecticSpectrum",
    "WilliamsonDecomposition",
    "WilliamsonError",
    "bound_frobenius",
    "bound_main",
    "bound_operator",
    "check_eigsps_membership",
    "check_pd",
    "check_sppsd",
    "d_hat",
    "decompose",
    "eigen_ija_check",
    "eigenspace_split",
    "gen_eigsps",
    "gen_pd",
    "gen_sppsd",
    "inertia",
    "perturb",
    "projection_certificate",
    "psd_sqrt",
    "random_orthosymplectic",
    "read_matrix",
    "simultaneous_skew_canonical",
    "skew_canonical",
    "spectral_split",
    "sweep",
    "symplectic_complement",
    "symplectic_gram_schmidt",
    "symplectic_orthogonal_projection",
    "symplectic_spectrum_eigsps",
    "verify_certificate",
    "williamson_eigsps",
    "williamson_pd",
    "williamson_via_subspaces",
    "write_matrix",
]
