"""Stationary and dynamical chaos indicators.

Covers the power spectrum of steady-state entropy fluctuations together
with a scalar broad-bandedness score (spectral flatness), nearest-neighbor
level-spacing statistics against the Wigner surmise and the Poisson law,
and a per-eigenvector residual measuring the deviation of the component
histogram from a Gaussian of matched mean and variance.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from .dynamics import SpectralDecomposition

# Additive guard inside the geometric/arithmetic mean ratio so exact-zero
# bins stay well defined.
_FLATNESS_GUARD = 1e-300

# Gaussian histogram window half-width, in standard deviations.
_RESIDUAL_RANGE_SIGMAS = 4.0


@dataclass(frozen=True)
class PowerSpectrum:
    """One-sided squared-magnitude DFT on frequencies k/(M*dt)."""

    frequencies: np.ndarray
    power: np.ndarray


def power_spectrum(series) -> PowerSpectrum:
    """Spectrum of the post-transient fluctuation of an entropy series.

    Drops the first `transient_cut` samples, removes the window mean, and
    returns the squared magnitudes of the one-sided DFT (the redundant
    mirror half is not emitted).  The zero-frequency bin is annihilated by
    the mean removal up to round-off.
    """
    values = np.asarray(series.values, dtype=float)
    window = values[series.transient_cut:]
    m = window.shape[0]
    if m < 8:
        raise ValueError(f"post-transient window has {m} samples, need >= 8")
    window = window - window.mean()
    power = np.abs(np.fft.rfft(window)) ** 2
    frequencies = np.fft.rfftfreq(m, d=series.dt)
    return PowerSpectrum(frequencies, power)


def spectral_flatness(spectrum: PowerSpectrum) -> float:
    """Geometric over arithmetic mean of the positive-frequency power.

    1 for a flat spectrum, toward 0 for a spectrum dominated by a single
    line; invariant under uniform rescaling of the power.
    """
    power = np.asarray(spectrum.power, dtype=float)[1:]
    if power.size == 0:
        raise ValueError("spectrum has no positive-frequency bins")
    guarded = power + _FLATNESS_GUARD
    return float(np.exp(np.mean(np.log(guarded))) / np.mean(guarded))


def level_spacings(decomp) -> np.ndarray:
    """Nearest-neighbor eigenvalue spacings, normalized to unit mean."""
    if isinstance(decomp, SpectralDecomposition):
        eigenvalues = decomp.eigenvalues
    else:
        eigenvalues = np.asarray(decomp, dtype=float)
    if eigenvalues.size < 3:
        raise ValueError(f"need at least 3 eigenvalues, got {eigenvalues.size}")
    spacings = np.diff(np.sort(eigenvalues))
    mean = spacings.mean()
    if mean <= 0.0:
        raise ValueError("degenerate spectrum: mean spacing is zero")
    return spacings / mean


def wigner_surmise(s):
    """Unit-mean GOE surmise density (pi/2)*s*exp(-pi*s^2/4)."""
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise ValueError("spacing must be non-negative")
    out = 0.5 * np.pi * s * np.exp(-0.25 * np.pi * s**2)
    return out if out.ndim else float(out)


def poisson_density(s):
    """Unit-mean Poisson spacing density exp(-s)."""
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise ValueError("spacing must be non-negative")
    out = np.exp(-s)
    return out if out.ndim else float(out)


def _reference_cdf(s: np.ndarray, reference: str) -> np.ndarray:
    if reference == "wigner":
        return 1.0 - np.exp(-0.25 * np.pi * s**2)
    if reference == "poisson":
        return 1.0 - np.exp(-s)
    raise ValueError(f"reference must be 'wigner' or 'poisson', got {reference!r}")


def ks_distance(spacings: np.ndarray, reference: str) -> float:
    """Kolmogorov-Smirnov distance of a spacing sample to a reference law.

    Two-sided sup over the sorted sample of |empirical CDF - reference CDF|,
    with the closed-form CDFs 1 - exp(-pi*s^2/4) (wigner) and 1 - exp(-s)
    (poisson).
    """
    spacings = np.sort(np.asarray(spacings, dtype=float))
    n = spacings.size
    if n == 0:
        raise ValueError("empty spacing sample")
    cdf = _reference_cdf(spacings, reference)
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


def residual_parameters(decomp: SpectralDecomposition, bin_count: int = 32) -> np.ndarray:
    """Per-eigenvector RMS deviation of the component histogram from a Gaussian.

    Each eigenvector's components are histogrammed into `bin_count` uniform
    bins spanning mean +- 4 standard deviations (out-of-range components
    are clamped into the end bins).  The reference weights are the Gaussian
    probability masses of the same bins, and the returned value per vector
    is (1/N) * sqrt(sum_k (p_k - p_k_gauss)^2) with N the matrix dimension.
    """
    if bin_count < 4:
        raise ValueError("need at least 4 histogram bins")
    n = decomp.dim
    if n < bin_count:
        raise ValueError(f"matrix dim {n} smaller than bin_count {bin_count}")
    r_values = np.empty(n)
    for idx in range(n):
        vec = decomp.eigenvectors[:, idx]
        mu = vec.mean()
        sigma = vec.std()
        if sigma == 0.0:
            raise ValueError(f"eigenvector {idx} is constant; residual undefined")
        lo = mu - _RESIDUAL_RANGE_SIGMAS * sigma
        hi = mu + _RESIDUAL_RANGE_SIGMAS * sigma
        counts, edges = np.histogram(np.clip(vec, lo, hi), bins=bin_count, range=(lo, hi))
        p = counts / n
        z = (edges - mu) / sigma
        p_gauss = np.diff(ndtr(z))
        r_values[idx] = np.sqrt(np.sum((p - p_gauss) ** 2)) / n
    return r_values
