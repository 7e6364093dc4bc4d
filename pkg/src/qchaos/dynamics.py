"""Exact state evolution, partial traces, and reduced-entropy time series.

Propagation works through one upfront symmetric eigendecomposition, so a
time sample costs two dense matrix-vector products instead of a matrix
exponential.  Subsystems follow the subsystem-major index convention
g = a * dim_drop + b with a indexing the kept factor, i.e. plain C-order
reshape of the amplitude vector to (dim_keep, dim_drop).
"""

from dataclasses import dataclass

import numpy as np

from .hamiltonians import HamiltonianMatrix, _as_array

# Density-matrix eigenvalues at or below this floor contribute 0 to the
# entropy (0*ln 0 := 0, negative round-off clamped).
EIGENVALUE_FLOOR = 1e-12

# Tolerances for the density-matrix invariants enforced by
# von_neumann_entropy.
_HERMITICITY_TOL = 1e-10
_TRACE_TOL = 1e-10
_POSITIVITY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


@dataclass(frozen=True)
class TensorSplit:
    """Bipartition of a Hilbert space of dimension dim_keep * dim_drop."""

    dim_keep: int
    dim_drop: int

    def __post_init__(self):
        if self.dim_keep < 1 or self.dim_drop < 1:
            raise ValueError("both factor dimensions must be positive")

    @property
    def dim(self) -> int:
        return self.dim_keep * self.dim_drop


@dataclass(frozen=True)
class EvolutionConfig:
    """Time grid and Planck constant for an evolution run."""

    hbar: float = 0.1
    dt: float = 1.0
    num_samples: int = 1024
    transient_cut: int = 128

    def __post_init__(self):
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.num_samples < 1:
            raise ValueError("num_samples must be positive")
        if not 0 <= self.transient_cut < self.num_samples:
            raise ValueError("transient_cut must satisfy 0 <= cut < num_samples")


@dataclass(frozen=True)
class EntropySeries:
    """Uniformly sampled reduced entropies, in nats."""

    values: np.ndarray
    dt: float
    transient_cut: int = 0

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(self.values.shape[0])


def eig_symmetric(h) -> SpectralDecomposition:
    """Diagonalize a real symmetric matrix; eigenvalues come out ascending."""
    m = _as_array(h)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    eigenvalues, eigenvectors = np.linalg.eigh(m)
    return SpectralDecomposition(eigenvalues, eigenvectors)


def propagate(state: np.ndarray, decomp: SpectralDecomposition, t: float, hbar: float) -> np.ndarray:
    """Apply exp(-i*H*t/hbar) to a state vector via the eigenbasis."""
    state = np.asarray(state)
    if state.shape != (decomp.dim,):
        raise ValueError(
            f"state of shape {state.shape} does not match decomposition dim {decomp.dim}"
        )
    v = decomp.eigenvectors
    phases = np.exp(-1j * decomp.eigenvalues * (t / hbar))
    return v @ (phases * (v.conj().T @ state))


def partial_trace(state: np.ndarray, split: TensorSplit, keep: str = "first") -> np.ndarray:
    """Reduce a pure state or density matrix to one factor of the split.

    Pure states are reshaped to (dim_keep, dim_drop) and contracted
    directly, so the full dim x dim density matrix is never formed.
    """
    if keep not in ("first", "second"):
        raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")
    state = np.asarray(state)
    d1, d2 = split.dim_keep, split.dim_drop
    if state.ndim == 1:
        if state.shape[0] != split.dim:
            raise ValueError(f"state dim {state.shape[0]} != {d1}*{d2}")
        a = state.reshape(d1, d2)
        if keep == "first":
            return a @ a.conj().T
        return a.T @ a.conj()
    if state.ndim == 2:
        if state.shape != (split.dim, split.dim):
            raise ValueError(f"density matrix shape {state.shape} != ({d1 * d2}, {d1 * d2})")
        r = state.reshape(d1, d2, d1, d2)
        if keep == "first":
            return np.einsum("ibjb->ij", r)
        return np.einsum("aiaj->ij", r)
    raise ValueError("state must be a vector or a square matrix")


def _density_eigenvalues(rho: np.ndarray) -> np.ndarray:
    """Validate the density-matrix invariants and return its eigenvalues."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > _HERMITICITY_TOL:
        raise ValueError(f"density matrix is not Hermitian (deviation {herm:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > _TRACE_TOL:
        raise ValueError(f"density matrix trace {tr!r} is not 1")
    eigenvalues = np.linalg.eigvalsh(rho)
    if eigenvalues[0] < -_POSITIVITY_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {eigenvalues[0]:.3e}")
    return eigenvalues


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-tr(rho ln rho) in nats, from the eigenvalues of rho."""
    eigenvalues = _density_eigenvalues(rho)
    lam = eigenvalues[eigenvalues > EIGENVALUE_FLOOR]
    return float(-np.sum(lam * np.log(lam)))


def entropy_series(h, initial: np.ndarray, split: TensorSplit, cfg: EvolutionConfig) -> EntropySeries:
    """Reduced entropy of the kept factor at times k*dt, k = 0..num_samples-1."""
    decomp = eig_symmetric(h)
    if split.dim != decomp.dim:
        raise ValueError(f"split {split.dim_keep}x{split.dim_drop} != Hamiltonian dim {decomp.dim}")
    values = np.empty(cfg.num_samples)
    for k in range(cfg.num_samples):
        psi = propagate(initial, decomp, k * cfg.dt, cfg.hbar)
        rho = partial_trace(psi, split, keep="first")
        values[k] = von_neumann_entropy(rho)
    return EntropySeries(values, cfg.dt, cfg.transient_cut)


def basis_state(dim: int, index: int = 0) -> np.ndarray:
    """Computational basis vector e_index."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    state = np.zeros(dim, dtype=complex)
    state[index] = 1.0
    return state


def product_basis_state(split: TensorSplit, keep_index: int = 0, drop_index: int = 0) -> np.ndarray:
    """Basis product state e_keep_index (x) e_drop_index."""
    return np.kron(
        basis_state(split.dim_keep, keep_index), basis_state(split.dim_drop, drop_index)
    )


def random_product_state(split: TensorSplit, rng: np.random.Generator) -> np.ndarray:
    """Product of two independent Haar-random unit vectors, one per factor."""
    return np.kron(_haar_vector(split.dim_keep, rng), _haar_vector(split.dim_drop, rng))


def _haar_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)
