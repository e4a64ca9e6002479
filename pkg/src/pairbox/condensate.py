"""Condensate product states and their overlaps.

In the many-particle picture each qubit state is an N-fold tensor power
of one single-boson wave function spread over the two electrodes,

    Psi(x) = (x/N)^(1/2) phi1 + ((N - x)/N)^(1/2) phi2,

with x pairs on electrode 1 and phi1, phi2 orthonormal. Two such states
whose electrode-1 occupations are N1 +/- dN/2 have the single-particle
factor overlap

    s = [ sqrt(N1^2 - (dN/2)^2) + sqrt(N2^2 - (dN/2)^2) ] / N

and the full N-body overlap s^N, which for dN << N1 << N2 collapses to
exp(-dN^2 / (8 N1)): states differing by a microscopic number of pairs
are nearly parallel, never orthogonal. Everything here works in log
space so the large-N regime where overlaps underflow stays resolvable.

Closed-form operations accept non-integer N1 and dN (the formulas are
smooth); :func:`fock_embedding` expands the product state in the fixed-N
occupation basis and is the integer-N brute-force oracle for the exact
overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import InvalidAmps, InvalidConfig, InvalidParams, SizeLimit
from .two_mode import FockVector

# exp() underflows to zero below roughly -745; the log value stays exact.
LOG_UNDERFLOW = -745.0

FOCK_EMBEDDING_MAX_N = 10**6


@dataclass(frozen=True)
class CondensateConfig:
    """(N, N1, dN) describing the pair of shifted product states.

    Requires every square-root argument to be nonnegative:
    N1 - dN/2 >= 0, N2 - dN/2 >= 0, and N1 + dN/2 <= N (with
    N2 = N - N1). N1 and dN may be non-integer.
    """

    n_total: int
    n1: float
    delta_n: float

    def __post_init__(self):
        if not isinstance(self.n_total, (int, np.integer)) or isinstance(
            self.n_total, bool
        ):
            raise InvalidConfig("n_total must be an integer")
        if self.n_total < 1:
            raise InvalidConfig("n_total must be >= 1")
        if not (np.isfinite(self.n1) and np.isfinite(self.delta_n)):
            raise InvalidConfig("n1 and delta_n must be finite")
        if self.n1 <= 0:
            raise InvalidConfig("n1 must be > 0")
        if self.delta_n < 0:
            raise InvalidConfig("delta_n must be >= 0")
        half = self.delta_n / 2.0
        if self.n1 - half < 0:
            raise InvalidConfig("n1 - delta_n/2 must be >= 0")
        if self.n2 - half < 0:
            raise InvalidConfig("n2 - delta_n/2 must be >= 0 (delta_n too large)")

    @property
    def n2(self) -> float:
        return self.n_total - self.n1


@dataclass(frozen=True)
class SingleParticleAmps:
    """Real nonnegative amplitudes (c1, c2) of one boson split across the
    electrodes; c1^2 + c2^2 = 1."""

    c1: float
    c2: float

    def __post_init__(self):
        if not (np.isfinite(self.c1) and np.isfinite(self.c2)):
            raise InvalidAmps("amplitudes must be finite")
        if self.c1 < 0 or self.c2 < 0:
            raise InvalidAmps("amplitudes must be nonnegative")
        if abs(self.c1 * self.c1 + self.c2 * self.c2 - 1.0) > 1e-12:
            raise InvalidAmps("amplitudes must satisfy c1^2 + c2^2 = 1")


@dataclass(frozen=True)
class OverlapExact:
    overlap: float
    log_overlap: float


@dataclass(frozen=True)
class OverlapAsymptotic:
    overlap: float
    linearized: float


@dataclass(frozen=True)
class ConeScanResult:
    """Rows (delta_n, overlap_exact, overlap_asymptotic) in grid order,
    plus per threshold the smallest grid delta_n whose exact overlap
    drops below it (None if the overlap never does)."""

    rows: np.ndarray
    crossings: tuple[tuple[float, float | None], ...]


def _sqrt_deficits(cfg: CondensateConfig) -> tuple[float, float]:
    """(N1 - sqrt(N1^2 - q^2), N2 - sqrt(N2^2 - q^2)) with q = dN/2,
    evaluated without cancellation."""
    q = cfg.delta_n / 2.0
    qsq = q * q
    t1 = qsq / (cfg.n1 + math.sqrt(max(cfg.n1 * cfg.n1 - qsq, 0.0)))
    t2 = qsq / (cfg.n2 + math.sqrt(max(cfg.n2 * cfg.n2 - qsq, 0.0)))
    return t1, t2


def single_particle_overlap(cfg: CondensateConfig) -> float:
    """Inner product s of the two single-boson factors, 0 < s <= 1
    (s = 0 only at the extreme dN = 2 N1 = 2 N2 corner)."""
    t1, t2 = _sqrt_deficits(cfg)
    return 1.0 - (t1 + t2) / cfg.n_total


def overlap_exact(cfg: CondensateConfig) -> OverlapExact:
    """Exact N-body overlap s^N, carried in log space.

    log_overlap = N log1p(-(t1 + t2)/N) where t_i are the cancellation-free
    square-root deficits, so the result keeps full relative precision even
    when s is within 1e-16 of 1. The linear overlap is reported as 0 once
    log_overlap < -745 (double-precision underflow); log_overlap itself
    stays finite whenever s > 0.
    """
    t1, t2 = _sqrt_deficits(cfg)
    x = -(t1 + t2) / cfg.n_total
    if x <= -1.0:
        return OverlapExact(overlap=0.0, log_overlap=-math.inf)
    log_overlap = cfg.n_total * math.log1p(x)
    overlap = 0.0 if log_overlap < LOG_UNDERFLOW else math.exp(log_overlap)
    return OverlapExact(overlap=overlap, log_overlap=log_overlap)


def overlap_asymptotic(cfg: CondensateConfig) -> OverlapAsymptotic:
    """Large-N limit exp(-dN^2 / (8 N1)) and its first-order form
    1 - dN^2 / (8 N1) (reported as-is, possibly negative)."""
    arg = cfg.delta_n * cfg.delta_n / (8.0 * cfg.n1)
    return OverlapAsymptotic(overlap=math.exp(-arg), linearized=1.0 - arg)


def fock_embedding(n_total: int, amps: SingleParticleAmps) -> FockVector:
    """Expand the product state (c1 phi1 + c2 phi2)^(tensor N) in the
    fixed-N occupation basis.

    The amplitude at n1 = k is binom(N, k)^(1/2) c1^k c2^(N-k), computed
    through log-gamma so arbitrary N up to 10^6 neither overflows nor
    underflows, then normalized.
    """
    if not isinstance(n_total, (int, np.integer)) or isinstance(n_total, bool):
        raise InvalidParams("n_total must be an integer")
    if n_total < 1:
        raise InvalidParams("n_total must be >= 1")
    if n_total > FOCK_EMBEDDING_MAX_N:
        raise SizeLimit(
            f"n_total={n_total} exceeds the dense-output limit {FOCK_EMBEDDING_MAX_N}"
        )
    n = int(n_total)
    if amps.c1 == 0.0:
        out = np.zeros(n + 1)
        out[0] = 1.0
        return FockVector(amplitudes=out)
    if amps.c2 == 0.0:
        out = np.zeros(n + 1)
        out[n] = 1.0
        return FockVector(amplitudes=out)
    k = np.arange(n + 1, dtype=float)
    log_amp = (
        0.5 * (gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0))
        + k * math.log(amps.c1)
        + (n - k) * math.log(amps.c2)
    )
    amp = np.exp(log_amp - log_amp.max())
    amp /= np.linalg.norm(amp)
    return FockVector(amplitudes=amp)


def shifted_pair_amps(
    cfg: CondensateConfig,
) -> tuple[SingleParticleAmps, SingleParticleAmps]:
    """Single-particle amplitudes of the two shifted product states
    (occupations N1 -/+ dN/2 and N1 +/- dN/2)."""
    n = cfg.n_total
    half = cfg.delta_n / 2.0
    minus = SingleParticleAmps(
        c1=math.sqrt(max(cfg.n1 - half, 0.0) / n),
        c2=math.sqrt(max(cfg.n2 + half, 0.0) / n),
    )
    plus = SingleParticleAmps(
        c1=math.sqrt(max(cfg.n1 + half, 0.0) / n),
        c2=math.sqrt(max(cfg.n2 - half, 0.0) / n),
    )
    return minus, plus


def cone_scan(n_total: int, n1: float, delta_grid, thresholds=()) -> ConeScanResult:
    """Overlap of the shifted pair across a grid of charge separations.

    Demonstrates the narrow-cone picture: the exact overlap stays near 1
    for every dN well below sqrt(8 N1). Thresholds must lie in (0, 1);
    each is annotated with the smallest grid dN whose overlap falls below
    it.
    """
    grid = np.asarray(delta_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidParams("delta_grid must be a nonempty one-dimensional sequence")
    thresholds = tuple(float(t) for t in thresholds)
    for t in thresholds:
        if not (0.0 < t < 1.0):
            raise InvalidParams(f"threshold {t} outside (0, 1)")

    rows = np.empty((grid.size, 3))
    for i, d in enumerate(grid):
        cfg = CondensateConfig(n_total=n_total, n1=n1, delta_n=float(d))
        rows[i] = (d, overlap_exact(cfg).overlap, overlap_asymptotic(cfg).overlap)

    crossings = []
    for t in thresholds:
        below = rows[rows[:, 1] < t, 0]
        crossings.append((t, float(below.min()) if below.size else None))
    return ConeScanResult(rows=rows, crossings=tuple(crossings))
