"""Two-electrode bosonic Hamiltonian in the fixed-total-number sector.

The microscopic model of a Josephson junction treated here is a gas of
Cooper pairs hopping between two electrodes:

    H = E_C (a1+ a1 - nbar1)^2 + (U/2)(a1+ a1 - a2+ a2)
        + (lambda/2)(a1 a2+ + a1+ a2)

Total pair number N = n1 + n2 is conserved, so the Hamiltonian is block
diagonal over sectors. In the sector basis |k, N-k> (k pairs on electrode
1) it is real symmetric tridiagonal of dimension N + 1:

    diag[k]      = E_C (k - nbar1)^2 + (U/2)(2k - N)
    offdiag[k-1] = (lambda/2) sqrt(k (N - k + 1))

which is exact -- no truncation beyond fixing N.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidAmps, InvalidParams
from .tridiag import Spectrum, TridiagMatrix, eigen_lowest


@dataclass(frozen=True)
class TwoModeParams:
    """Physical parameters of the two-electrode Hamiltonian.

    e_c: charging energy E_C > 0 (energy units)
    u: bias potential U between the electrodes (energy units)
    lam: pair tunneling amplitude lambda (energy units, either sign)
    n_total: conserved total number of Cooper pairs N >= 1
    n_bar1: background island occupation nbar1 >= 0 (may be non-integer;
        values above n_total are allowed here but only warned about --
        the semiclassical mapping rejects them)
    """

    e_c: float
    u: float
    lam: float
    n_total: int
    n_bar1: float

    def __post_init__(self):
        if not isinstance(self.n_total, (int, np.integer)) or isinstance(
            self.n_total, bool
        ):
            raise InvalidParams("n_total must be an integer")
        if self.n_total < 1:
            raise InvalidParams("n_total must be >= 1")
        for name in ("e_c", "u", "lam", "n_bar1"):
            if not np.isfinite(getattr(self, name)):
                raise InvalidParams(f"{name} must be finite")
        if self.e_c <= 0:
            raise InvalidParams("e_c must be > 0")
        if self.n_bar1 < 0:
            raise InvalidParams("n_bar1 must be >= 0")
        if self.n_bar1 > self.n_total:
            warnings.warn(
                f"n_bar1={self.n_bar1} exceeds n_total={self.n_total}; "
                "the sector matrix is still well defined but the "
                "semiclassical mapping is not",
                stacklevel=2,
            )


@dataclass(frozen=True)
class FockVector:
    """State in the fixed-N sector; amplitudes[k] multiplies |k, N-k>."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=float)
        if amps.ndim != 1 or amps.size < 2:
            raise InvalidAmps("amplitudes must be a vector of length N + 1 >= 2")
        if not np.all(np.isfinite(amps)):
            raise InvalidAmps("amplitudes must be finite")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-10:
            raise InvalidAmps(f"amplitudes must be unit norm (got {norm!r})")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_total(self) -> int:
        return self.amplitudes.size - 1


@dataclass(frozen=True)
class TwoModeObservables:
    mean_n1: float
    var_n1: float
    coherence: float


def build_two_mode(params: TwoModeParams) -> TridiagMatrix:
    """Sector matrix of the two-electrode Hamiltonian at fixed N."""
    n = params.n_total
    k = np.arange(n + 1, dtype=float)
    diag = params.e_c * (k - params.n_bar1) ** 2 + (params.u / 2.0) * (2.0 * k - n)
    kk = np.arange(1, n + 1, dtype=float)
    offdiag = (params.lam / 2.0) * np.sqrt(kk * (n - kk + 1.0))
    return TridiagMatrix(diag=diag, offdiag=offdiag)


def two_mode_observables(
    params: TwoModeParams, state: FockVector
) -> TwoModeObservables:
    """Island occupation statistics and the pair-transfer coherence.

    mean_n1 and var_n1 are the first two cumulants of n1 in ``state``;
    coherence is <a1+ a2> = sum_k a_k a_{k+1} sqrt((k+1)(N-k)), the matrix
    element that carries the relative-phase information between the
    electrodes.
    """
    n = params.n_total
    a = state.amplitudes
    if a.size != n + 1:
        raise DimensionMismatch(
            f"state has length {a.size}, expected n_total + 1 = {n + 1}"
        )
    k = np.arange(n + 1, dtype=float)
    p = a * a
    mean = float(k @ p)
    var = float((k * k) @ p) - mean * mean
    kk = np.arange(n, dtype=float)
    coherence = float(np.sum(a[:-1] * a[1:] * np.sqrt((kk + 1.0) * (n - kk))))
    return TwoModeObservables(mean_n1=mean, var_n1=max(var, 0.0), coherence=coherence)


def two_mode_spectrum(params: TwoModeParams, k_levels: int) -> Spectrum:
    """Lowest ``k_levels`` eigenpairs of the sector matrix."""
    if not isinstance(k_levels, (int, np.integer)) or isinstance(k_levels, bool):
        raise InvalidParams("k_levels must be a positive integer")
    if k_levels < 1 or k_levels > params.n_total + 1:
        raise InvalidParams(
            f"k_levels={k_levels} outside 1..{params.n_total + 1}"
        )
    return eigen_lowest(build_two_mode(params), int(k_levels))
