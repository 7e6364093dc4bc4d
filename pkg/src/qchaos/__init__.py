"""Entropy production in subsystems as a dynamical probe of quantum chaos."""

from .baker import baker_entropy_series, build_baker_unitary, fourier_matrix
from .diagnostics import (
    PowerSpectrum,
    ks_distance,
    level_spacings,
    poisson_density,
    power_spectrum,
    residual_parameters,
    spectral_flatness,
    wigner_surmise,
)
from .dynamics import (
    EIGENVALUE_FLOOR,
    EntropySeries,
    EvolutionConfig,
    SpectralDecomposition,
    TensorSplit,
    basis_state,
    eig_symmetric,
    entropy_series,
    partial_trace,
    product_basis_state,
    propagate,
    random_product_state,
    von_neumann_entropy,
)
from .hamiltonians import (
    FAMILY_HARPER,
    FAMILY_INTERPOLATED,
    FAMILY_RANDOM,
    HamiltonianMatrix,
    build_harper,
    build_interpolated,
    build_random_symmetric,
    center_mean,
)

__version__ = "0.1.0"

__all__ = [
    "EIGENVALUE_FLOOR",
    "EntropySeries",
    "EvolutionConfig",
    "FAMILY_HARPER",
    "FAMILY_INTERPOLATED",
    "FAMILY_RANDOM",
    "HamiltonianMatrix",
    "PowerSpectrum",
    "SpectralDecomposition",
    "TensorSplit",
    "baker_entropy_series",
    "basis_state",
    "build_baker_unitary",
    "build_harper",
    "build_interpolated",
    "build_random_symmetric",
    "center_mean",
    "eig_symmetric",
    "entropy_series",
    "fourier_matrix",
    "ks_distance",
    "level_spacings",
    "partial_trace",
    "poisson_density",
    "power_spectrum",
    "product_basis_state",
    "propagate",
    "random_product_state",
    "residual_parameters",
    "spectral_flatness",
    "von_neumann_entropy",
    "wigner_surmise",
]
