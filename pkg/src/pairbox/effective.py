"""Effective Cooper-pair-box Hamiltonian in the integer charge basis.

The standard phenomenological description keeps a single degree of
freedom, the excess pair number n conjugate to the junction phase phi:

    H = E_C (n - n_g)^2 - E_J cos(phi)

With the compact-phase convention n has integer eigenvalues k and
cos(phi) hops between adjacent charge states, so on the truncated basis
k = -n_max .. n_max the matrix is tridiagonal:

    diag[i]    = E_C (k_i - n_g)^2
    offdiag[i] = -E_J / 2

E_J is stored with whatever sign the caller (or the semiclassical
mapping) supplies; the spectrum is invariant under E_J -> -E_J, so no
absolute value is ever taken. The qubit is the pair of lowest
eigenstates, which are orthogonal by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidParams, TruncationFailure
from .tridiag import TridiagMatrix, eigen_lowest, lowest_eigenvalues

# Truncation search doubles n_max through this schedule; the physical
# charge support of the low-lying states must fit well inside the window.
TRUNCATION_SCHEDULE = (8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096)

# Two lowest levels closer than this (times E_C) form a degenerate qubit
# cluster and are re-expressed in the charge-diagonal basis.
QUBIT_DEGENERACY_FACTOR = 1e-9


@dataclass(frozen=True)
class EffectiveParams:
    """Effective-model parameters.

    e_c: charging energy E_C > 0
    e_j: Josephson energy E_J (energy units, either sign)
    n_g: dimensionless gate charge
    n_max: charge-basis truncation (states k = -n_max..n_max), or None to
        pick the truncation automatically per operation
    """

    e_c: float
    e_j: float
    n_g: float
    n_max: int | None = None

    def __post_init__(self):
        for name in ("e_c", "e_j", "n_g"):
            if not np.isfinite(getattr(self, name)):
                raise InvalidParams(f"{name} must be finite")
        if self.e_c <= 0:
            raise InvalidParams("e_c must be > 0")
        if self.n_max is not None:
            if not isinstance(self.n_max, (int, np.integer)) or isinstance(
                self.n_max, bool
            ):
                raise InvalidParams("n_max must be an integer or None")
            if self.n_max < 1:
                raise InvalidParams("n_max must be >= 1")


@dataclass(frozen=True)
class QubitPair:
    """Two lowest eigenstates of the effective model.

    v0 and v1 are orthonormal eigenvectors in the charge basis
    k = -n_max..n_max. delta_n is the charge separation of the doublet:
    the spread of the two eigenvalues of the charge observable restricted
    to span{v0, v1}. Whenever <v0|n|v1> vanishes this reduces to
    |<n>_1 - <n>_0|; at charge-degeneracy points, where the eigenstates
    are even/odd hybrids with identical <n>, it still measures how many
    pairs the underlying charge-localized doublet states differ by.
    """

    e0: float
    e1: float
    v0: np.ndarray
    v1: np.ndarray
    delta_n: float
    n_max: int


def charge_values(n_max: int) -> np.ndarray:
    """Charge eigenvalues k = -n_max..n_max indexing the basis."""
    return np.arange(-n_max, n_max + 1, dtype=float)


def build_effective(params: EffectiveParams, n_max: int | None = None) -> TridiagMatrix:
    """Charge-basis matrix at an explicit or pre-resolved truncation."""
    resolved = n_max if n_max is not None else params.n_max
    if resolved is None:
        resolved = resolve_n_max(params, k_levels=2)
    if resolved < 1:
        raise InvalidParams("n_max must be >= 1")
    k = charge_values(resolved)
    diag = params.e_c * (k - params.n_g) ** 2
    offdiag = np.full(2 * resolved, -params.e_j / 2.0)
    return TridiagMatrix(diag=diag, offdiag=offdiag)


def auto_truncation(params: EffectiveParams, k_levels: int, tol: float) -> int:
    """Smallest scheduled n_max whose lowest ``k_levels`` eigenvalues move
    by less than ``tol`` when the truncation is doubled.

    Deterministic: the schedule is fixed at 8, 16, 32, ..., 4096. Raises
    :class:`TruncationFailure` if even n_max = 4096 fails the doubling
    test.
    """
    if not isinstance(k_levels, (int, np.integer)) or isinstance(k_levels, bool):
        raise InvalidParams("k_levels must be a positive integer")
    if k_levels < 1:
        raise InvalidParams("k_levels must be >= 1")
    if not np.isfinite(tol) or tol <= 0:
        raise InvalidParams("tol must be > 0")
    if k_levels > 2 * TRUNCATION_SCHEDULE[-1] + 1:
        raise InvalidParams(
            f"k_levels={k_levels} exceeds the largest scheduled basis"
        )

    prev_vals = None
    prev_nmax = None
    for n_max in TRUNCATION_SCHEDULE:
        if 2 * n_max + 1 < k_levels:
            continue
        vals = lowest_eigenvalues(build_effective(params, n_max), int(k_levels))
        if prev_vals is not None:
            if float(np.max(np.abs(vals - prev_vals))) < tol:
                return prev_nmax
        prev_vals, prev_nmax = vals, n_max
    vals = lowest_eigenvalues(
        build_effective(params, 2 * TRUNCATION_SCHEDULE[-1]), int(k_levels)
    )
    if float(np.max(np.abs(vals - prev_vals))) < tol:
        return prev_nmax
    raise TruncationFailure(
        f"lowest {k_levels} eigenvalues not converged to {tol} at n_max=4096"
    )


def resolve_n_max(
    params: EffectiveParams, k_levels: int, tol: float | None = None
) -> int:
    """Explicit n_max if set, else auto truncation tracking k_levels + 2
    levels at tolerance 1e-10 * E_C (the conservative default)."""
    if params.n_max is not None:
        return params.n_max
    if tol is None:
        tol = 1e-10 * params.e_c
    return auto_truncation(params, k_levels + 2, tol)


def qubit_states(params: EffectiveParams) -> QubitPair:
    """Extract the qubit: two lowest eigenstates plus charge separation.

    At an exactly degenerate ground doublet (gap below 1e-9 * E_C, e.g.
    E_J = 0 at half-integer n_g) the eigenbasis is arbitrary; the returned
    pair is then the one diagonalizing the charge observable within the
    doublet, ordered by increasing charge expectation, which keeps
    delta_n well defined.
    """
    n_max = resolve_n_max(params, k_levels=2)
    matrix = build_effective(params, n_max)
    k_solve = min(3, matrix.dim)
    spec = eigen_lowest(matrix, k_solve)
    vals = spec.eigenvalues
    vecs = spec.eigenvectors
    k = charge_values(n_max)

    v0, v1 = vecs[0].copy(), vecs[1].copy()
    if vals[1] - vals[0] < QUBIT_DEGENERACY_FACTOR * params.e_c:
        v0, v1 = _charge_sorted_pair(v0, v1, k)

    n00 = float(k @ (v0 * v0))
    n11 = float(k @ (v1 * v1))
    n01 = float((v0 * k) @ v1)
    delta_n = float(np.hypot(n11 - n00, 2.0 * n01))
    return QubitPair(
        e0=float(vals[0]),
        e1=float(vals[1]),
        v0=v0,
        v1=v1,
        delta_n=delta_n,
        n_max=n_max,
    )


def _charge_sorted_pair(v0, v1, k):
    """Rotate a degenerate doublet into the charge-diagonal basis."""
    block = np.vstack([v0, v1])
    restricted = (block * k) @ block.T
    _, rot = np.linalg.eigh(restricted)  # columns: ascending charge
    pair = rot.T @ block
    for row in pair:
        if row[np.argmax(np.abs(row))] < 0:
            row *= -1.0
    return pair[0], pair[1]


def charge_dispersion_sweep(
    params: EffectiveParams, ng_grid, k_levels: int
) -> np.ndarray:
    """Lowest ``k_levels`` eigenvalues across a gate-charge grid.

    Returns an array of shape (len(ng_grid), 1 + k_levels); column 0 is
    n_g, the rest are ascending eigenvalues. Rows are computed
    independently (pure functions), in grid order.
    """
    grid = np.asarray(ng_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidParams("ng_grid must be a nonempty one-dimensional sequence")
    if not np.all(np.isfinite(grid)):
        raise InvalidParams("ng_grid values must be finite")
    if not isinstance(k_levels, (int, np.integer)) or isinstance(k_levels, bool):
        raise InvalidParams("k_levels must be a positive integer")
    if k_levels < 1:
        raise InvalidParams("k_levels must be >= 1")

    out = np.empty((grid.size, 1 + k_levels))
    for i, ng in enumerate(grid):
        p = replace(params, n_g=float(ng))
        n_max = resolve_n_max(p, k_levels=int(k_levels))
        vals = lowest_eigenvalues(build_effective(p, n_max), int(k_levels))
        out[i, 0] = ng
        out[i, 1:] = vals
    return out
