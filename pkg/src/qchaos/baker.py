"""Quantized baker map and entropy production under its iteration."""

import numpy as np
from scipy.linalg import block_diag

from .dynamics import EntropySeries, TensorSplit, partial_trace, von_neumann_entropy


def fourier_matrix(dim: int, offset: float = 0.5) -> np.ndarray:
    """Discrete Fourier matrix with a common phase offset on both indices.

    Entry [k, m] is exp(-2j*pi*(k + offset)*(m + offset)/dim) / sqrt(dim).
    offset=0.5 gives the antiperiodic (parity-symmetric) convention,
    offset=0 the plain DFT.
    """
    if dim < 1:
        raise ValueError("Fourier matrix needs dim >= 1")
    k = np.arange(dim) + offset
    return np.exp(-2j * np.pi * np.outer(k, k) / dim) / np.sqrt(dim)


def build_baker_unitary(dim: int, half_integer_phases: bool = True) -> np.ndarray:
    """Quantize the baker transformation on a dim-dimensional torus.

    Returns F_dim^{-1} @ blockdiag(F_{dim/2}, F_{dim/2}) with F the offset
    Fourier matrix; half_integer_phases selects the antiperiodic convention
    (offset 1/2) over the plain integer-phase one.
    """
    if dim < 2 or dim % 2 != 0:
        raise ValueError(f"baker quantization needs an even dim >= 2, got {dim}")
    offset = 0.5 if half_integer_phases else 0.0
    f_full = fourier_matrix(dim, offset)
    f_half = fourier_matrix(dim // 2, offset)
    return f_full.conj().T @ block_diag(f_half, f_half)


def baker_entropy_series(
    u: np.ndarray,
    initial: np.ndarray,
    split: TensorSplit,
    num_steps: int,
    transient_cut: int = 0,
) -> EntropySeries:
    """Reduced entropy of the kept factor after k map applications, k = 0..num_steps.

    The state is iterated by repeated matrix-vector products; no
    renormalization is applied, so norm drift is visible to the caller.
    """
    u = np.asarray(u)
    initial = np.asarray(initial, dtype=complex)
    if num_steps < 1:
        raise ValueError("num_steps must be positive")
    if u.shape != (split.dim, split.dim):
        raise ValueError(f"unitary shape {u.shape} != split dim {split.dim}")
    if initial.shape != (split.dim,):
        raise ValueError(f"state shape {initial.shape} != split dim {split.dim}")
    values = np.empty(num_steps + 1)
    psi = initial
    for k in range(num_steps + 1):
        rho = partial_trace(psi, split, keep="first")
        values[k] = von_neumann_entropy(rho)
        if k < num_steps:
            psi = u @ psi
    return EntropySeries(values, 1.0, transient_cut)
