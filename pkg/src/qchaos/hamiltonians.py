"""Dense real-symmetric Hamiltonian families.

Three constructions are provided: a Gaussian random symmetric matrix
(GOE convention), a tight-binding ring with a cosine on-site potential
(Harper model on a discretized torus), and an interpolating family that
randomizes the far-off-diagonal band of a base matrix.  All factories
are deterministic functions of their seed and return immutable arrays.
"""

from dataclasses import dataclass, field

import numpy as np

FAMILY_RANDOM = "random_symmetric"
FAMILY_HARPER = "harper"
FAMILY_INTERPOLATED = "interpolated"


@dataclass(frozen=True)
class HamiltonianMatrix:
    """A dense real symmetric operator plus provenance metadata."""

    matrix: np.ndarray
    family: str
    params: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _as_array(h) -> np.ndarray:
    if isinstance(h, HamiltonianMatrix):
        return h.matrix
    return np.asarray(h, dtype=float)


def _freeze(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


def build_random_symmetric(dim: int, seed: int) -> HamiltonianMatrix:
    """Draw a GOE-convention random symmetric matrix.

    Upper-triangle entries (including the diagonal) are drawn in row-major
    order from a seeded stream of standard normals and mirrored below the
    diagonal; diagonal entries are then scaled to variance 2.
    """
    if dim < 2:
        raise ValueError(f"random symmetric matrix needs dim >= 2, got {dim}")
    rng = np.random.default_rng(seed)
    m = np.zeros((dim, dim))
    rows, cols = np.triu_indices(dim)
    m[rows, cols] = rng.standard_normal(rows.size)
    m = m + np.triu(m, k=1).T
    m[np.diag_indices(dim)] *= np.sqrt(2.0)
    return HamiltonianMatrix(_freeze(m), FAMILY_RANDOM, {"dim": dim, "seed": seed})


def build_harper(dim: int, gamma1: float = 0.5, gamma2: float = 2.5) -> HamiltonianMatrix:
    """Build gamma1*T + gamma2*V on a ring of `dim` sites.

    T carries 1/2 on the first off-diagonals and on the two wrap-around
    corners; V is diagonal with cos(2*pi*j/dim) for j = 1..dim (1-based).
    """
    if dim < 3:
        raise ValueError(f"ring needs dim >= 3 so the corner hop is distinct, got {dim}")
    if not (np.isfinite(gamma1) and np.isfinite(gamma2)):
        raise ValueError("gamma1 and gamma2 must be finite")
    t = np.zeros((dim, dim))
    i = np.arange(dim - 1)
    t[i, i + 1] = 0.5
    t[i + 1, i] = 0.5
    t[0, dim - 1] = 0.5
    t[dim - 1, 0] = 0.5
    j = np.arange(1, dim + 1)
    v = np.diag(np.cos(2.0 * np.pi * j / dim))
    m = gamma1 * t + gamma2 * v
    return HamiltonianMatrix(
        _freeze(m), FAMILY_HARPER, {"dim": dim, "gamma1": gamma1, "gamma2": gamma2}
    )


def build_interpolated(base, f: float, seed: int) -> HamiltonianMatrix:
    """Randomize the entries of `base` with index distance |m - n| > f*dim.

    The band |m - n| <= f*dim (compared against the exact real product,
    no rounding) is copied from `base` unchanged.  Replacement values are
    fresh standard normals, drawn in row-major upper-triangle order from
    the seeded stream and mirrored to keep the matrix symmetric.
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"correlation fraction f must lie in [0, 1], got {f}")
    m = _as_array(base).copy()
    dim = m.shape[0]
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(dim, k=1)
    far = (cols - rows) > f * dim
    draws = rng.standard_normal(int(np.count_nonzero(far)))
    m[rows[far], cols[far]] = draws
    m[cols[far], rows[far]] = draws
    return HamiltonianMatrix(
        _freeze(m), FAMILY_INTERPOLATED, {"dim": dim, "f": f, "seed": seed}
    )


def center_mean(h) -> HamiltonianMatrix:
    """Subtract the scalar mean of all dim^2 entries from every entry."""
    m = _as_array(h).copy()
    m -= m.mean()
    if isinstance(h, HamiltonianMatrix):
        return HamiltonianMatrix(_freeze(m), h.family, dict(h.params))
    return HamiltonianMatrix(_freeze(m), "centered", {"dim": m.shape[0]})
