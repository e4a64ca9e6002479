"""Real symmetric tridiagonal eigensolver.

Both Hamiltonians in this package are real symmetric tridiagonal in their
natural bases, so this is the single numerical engine everything else sits
on. Eigenvalues and eigenvectors come from LAPACK via
:func:`scipy.linalg.eigh_tridiagonal`; on top of that this module enforces
the contracts the rest of the package relies on: ascending eigenvalues,
orthonormal eigenvectors with verified residuals, and a deterministic
basis inside numerically degenerate clusters (largest component positive,
cluster bases re-orthogonalized against a fixed seed so repeated runs and
exactly degenerate inputs give reproducible output).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceFailure, InvalidMatrix, InvalidParams

# Residual contract: ||H v - lambda v|| <= RESIDUAL_FACTOR * max(1, ||H||_inf).
RESIDUAL_FACTOR = 1e-10

# Consecutive eigenvalues closer than DEGENERACY_FACTOR * max(1, ||H||_inf)
# are treated as one degenerate cluster for basis fixing.
DEGENERACY_FACTOR = 1e-12


@dataclass(frozen=True)
class TridiagMatrix:
    """Real symmetric tridiagonal matrix (diagonal + one off-diagonal).

    ``diag`` has length M >= 1 and ``offdiag`` length M - 1; all entries
    must be finite.
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or offdiag.ndim != 1:
            raise InvalidMatrix("diag and offdiag must be one-dimensional")
        if diag.size < 1:
            raise InvalidMatrix("diag must have at least one entry")
        if offdiag.size != diag.size - 1:
            raise InvalidMatrix(
                f"offdiag length {offdiag.size} != diag length {diag.size} - 1"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
            raise InvalidMatrix("matrix entries must be finite")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def dim(self) -> int:
        return self.diag.size

    def inf_norm(self) -> float:
        """Row-sum norm ||H||_inf."""
        m = self.dim
        if m == 1:
            return abs(float(self.diag[0]))
        rows = np.abs(self.diag).copy()
        rows[:-1] += np.abs(self.offdiag)
        rows[1:] += np.abs(self.offdiag)
        return float(rows.max())

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Apply the matrix to one vector or to a stack of row vectors."""
        v = np.asarray(v, dtype=float)
        out = v * self.diag
        if self.dim > 1:
            out[..., :-1] += v[..., 1:] * self.offdiag
            out[..., 1:] += v[..., :-1] * self.offdiag
        return out


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with optional orthonormal eigenvectors.

    ``eigenvectors`` is None or an array of shape (k, M) whose rows are the
    unit eigenvectors matching ``eigenvalues``. ``iterations`` is 0 when the
    backend does not expose a sweep count. ``residual_bound`` bounds
    ||H v - lambda v|| over all returned pairs (0 when no vectors were
    requested).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None
    iterations: int
    residual_bound: float


def _solve(m: TridiagMatrix, want_vectors: bool, k: int | None) -> Spectrum:
    select = "a" if k is None else "i"
    select_range = None if k is None else (0, k - 1)
    try:
        if want_vectors:
            vals, vecs = scipy.linalg.eigh_tridiagonal(
                m.diag, m.offdiag, select=select, select_range=select_range
            )
        else:
            vals = scipy.linalg.eigh_tridiagonal(
                m.diag,
                m.offdiag,
                eigvals_only=True,
                select=select,
                select_range=select_range,
            )
            vecs = None
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise ConvergenceFailure(f"tridiagonal eigensolver failed: {exc}") from exc

    scale = max(1.0, m.inf_norm())
    if vecs is not None:
        vecs = np.ascontiguousarray(vecs.T)  # rows are eigenvectors
        vecs = _fix_degenerate_clusters(vals, vecs, scale)
        _fix_signs(vecs)
        residuals = np.linalg.norm(m.matvec(vecs) - vals[:, None] * vecs, axis=1)
        residual_bound = float(residuals.max()) if residuals.size else 0.0
        if residual_bound > RESIDUAL_FACTOR * scale:
            raise ConvergenceFailure(
                f"residual {residual_bound:.3e} exceeds {RESIDUAL_FACTOR * scale:.3e}"
            )
    else:
        residual_bound = 0.0
    return Spectrum(
        eigenvalues=vals,
        eigenvectors=vecs,
        iterations=0,
        residual_bound=residual_bound,
    )


def _fix_degenerate_clusters(
    vals: np.ndarray, vecs: np.ndarray, scale: float
) -> np.ndarray:
    """Re-orthogonalize degenerate clusters against a deterministic seed.

    Within a cluster of numerically equal eigenvalues any orthonormal basis
    is valid; LAPACK's choice can depend on splitting details. To make the
    output reproducible, the first basis vector of each cluster is the
    normalized projection of the uniform vector onto the cluster span, and
    the rest follow by modified Gram-Schmidt.
    """
    n = vals.size
    if n < 2:
        return vecs
    tol = DEGENERACY_FACTOR * scale
    start = 0
    for stop in range(1, n + 1):
        if stop < n and vals[stop] - vals[stop - 1] <= tol:
            continue
        if stop - start > 1:
            block = vecs[start:stop]
            dim = block.shape[0]
            uniform = np.ones(block.shape[1]) / np.sqrt(block.shape[1])
            coords = block @ uniform
            basis = []
            if np.linalg.norm(coords) > 1e-8:
                first = coords @ block
                basis.append(first / np.linalg.norm(first))
            for row in block:
                w = row.copy()
                for b in basis:
                    w -= (b @ w) * b
                norm = np.linalg.norm(w)
                if norm > 1e-8:
                    basis.append(w / norm)
                if len(basis) == dim:
                    break
            if len(basis) == dim:
                vecs[start:stop] = np.asarray(basis)
        start = stop
    return vecs


def _fix_signs(vecs: np.ndarray) -> None:
    """Make the largest-magnitude component of each eigenvector positive."""
    idx = np.argmax(np.abs(vecs), axis=1)
    flip = vecs[np.arange(vecs.shape[0]), idx] < 0
    vecs[flip] *= -1.0


def eigen_all(m: TridiagMatrix, want_vectors: bool = True) -> Spectrum:
    """All M eigenvalues in ascending order, optionally with eigenvectors."""
    return _solve(m, want_vectors, None)


def eigen_lowest(m: TridiagMatrix, k: int) -> Spectrum:
    """The k smallest eigenvalues and their eigenvectors.

    Requires 1 <= k <= M; agrees with the first k entries of
    :func:`eigen_all` within the residual bound.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise InvalidParams("k must be a positive integer")
    if k < 1 or k > m.dim:
        raise InvalidParams(f"k={k} outside 1..{m.dim}")
    return _solve(m, True, int(k))


def lowest_eigenvalues(m: TridiagMatrix, k: int) -> np.ndarray:
    """The k smallest eigenvalues without eigenvectors (cheaper than
    :func:`eigen_lowest` for sweeps and truncation searches)."""
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise InvalidParams("k must be a positive integer")
    if k < 1 or k > m.dim:
        raise InvalidParams(f"k={k} outside 1..{m.dim}")
    return _solve(m, False, int(k)).eigenvalues
