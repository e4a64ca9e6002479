"""Parameter mapping between the two-mode and effective models, and the
contrast pipeline that puts the two descriptions side by side.

Treating the mode operators as classical amplitudes and expanding around
the background occupation turns the two-electrode Hamiltonian into the
effective single-junction form with

    E_J = -(lambda/2) sqrt((N - nbar1) nbar1),    n_g = -U / (2 E_C),

valid when the charge excursion n is small against n1, n2 and N. The
mapping is exact arithmetic; how well the two low-lying spectra actually
agree is reported as a gap table, never asserted.

The contrast pipeline then runs the whole argument in one pass: take the
qubit doublet of the effective model (orthogonal by construction), read
off its charge separation, and feed that separation into the condensate
overlap formulas -- orthogonal eigenstates on one side, overlap close to
one on the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .condensate import (
    CondensateConfig,
    overlap_asymptotic,
    overlap_exact,
)
from .effective import EffectiveParams, qubit_states, resolve_n_max, build_effective
from .errors import InvalidParams
from .tridiag import lowest_eigenvalues
from .two_mode import (
    FockVector,
    TwoModeParams,
    build_two_mode,
    two_mode_observables,
    two_mode_spectrum,
)


@dataclass(frozen=True)
class BridgeValidity:
    """Scale check for the small-excursion condition: n_scale is the
    charge spread sqrt(Var n1) of the two-mode ground state and ratio is
    n_scale / min(nbar1, N - nbar1)."""

    n_scale: float
    ratio: float


@dataclass(frozen=True)
class BridgeMap:
    e_j: float
    n_g: float
    validity: BridgeValidity | None


@dataclass(frozen=True)
class GapRow:
    level: int
    gap_two_mode: float
    gap_effective: float
    rel_discrepancy: float


@dataclass(frozen=True)
class ContrastReport:
    """The two rival answers for one parameter set: the eigenstate overlap
    of the effective qubit (zero to solver precision) against the
    condensate overlap of product states separated by the same number of
    pairs (close to one)."""

    effective_overlap: float
    delta_n: float
    condensate_overlap_exact: float
    condensate_overlap_asymptotic: float
    gap_table: tuple[GapRow, ...]


def map_parameters(p: TwoModeParams, include_validity: bool = True) -> BridgeMap:
    """Map two-mode parameters onto (E_J, n_g).

    Requires 0 <= nbar1 <= N (a hard error here, unlike the warn-level
    check on :class:`TwoModeParams`). With ``include_validity`` the
    two-mode ground state is diagonalized to report the charge-spread
    diagnostics.
    """
    product = (p.n_total - p.n_bar1) * p.n_bar1
    if product < 0:
        raise InvalidParams(
            f"nbar1={p.n_bar1} outside 0..{p.n_total}: sqrt((N - nbar1) nbar1) "
            "is imaginary"
        )
    e_j = -(p.lam / 2.0) * math.sqrt(product)
    n_g = -p.u / (2.0 * p.e_c)

    validity = None
    if include_validity:
        ground = two_mode_spectrum(p, 1).eigenvectors[0]
        obs = two_mode_observables(p, FockVector(amplitudes=ground))
        n_scale = math.sqrt(obs.var_n1)
        edge = min(p.n_bar1, p.n_total - p.n_bar1)
        ratio = n_scale / edge if edge > 0 else math.inf
        validity = BridgeValidity(n_scale=n_scale, ratio=ratio)
    return BridgeMap(e_j=e_j, n_g=n_g, validity=validity)


def compare_spectra(p: TwoModeParams, k_levels: int) -> tuple[GapRow, ...]:
    """Gap ladder of the two-mode sector matrix against the effective
    model at the mapped parameters.

    Row j carries the j-th excitation gap E_j - E_0 of each model and
    their relative discrepancy (relative to the two-mode gap; zero when
    both gaps vanish). Gaps, never absolute energies: the mapping fixes
    the Hamiltonian only up to a constant.
    """
    if not isinstance(k_levels, (int, np.integer)) or isinstance(k_levels, bool):
        raise InvalidParams("k_levels must be a positive integer")
    if k_levels < 1:
        raise InvalidParams("k_levels must be >= 1")
    if k_levels + 1 > p.n_total + 1:
        raise InvalidParams(
            f"k_levels={k_levels} needs {k_levels + 1} levels but the sector "
            f"has only {p.n_total + 1}"
        )

    bm = map_parameters(p, include_validity=False)
    tm_vals = lowest_eigenvalues(build_two_mode(p), int(k_levels) + 1)
    ep = EffectiveParams(e_c=p.e_c, e_j=bm.e_j, n_g=bm.n_g)
    n_max = resolve_n_max(ep, k_levels=int(k_levels) + 1)
    eff_vals = lowest_eigenvalues(build_effective(ep, n_max), int(k_levels) + 1)

    rows = []
    for j in range(1, int(k_levels) + 1):
        gap_tm = float(tm_vals[j] - tm_vals[0])
        gap_eff = float(eff_vals[j] - eff_vals[0])
        if gap_tm == 0.0:
            rel = 0.0 if gap_eff == 0.0 else math.inf
        else:
            rel = abs(gap_eff - gap_tm) / abs(gap_tm)
        rows.append(
            GapRow(
                level=j,
                gap_two_mode=gap_tm,
                gap_effective=gap_eff,
                rel_discrepancy=rel,
            )
        )
    return tuple(rows)


def contrast_pipeline(
    p: TwoModeParams, n1_for_overlap: float, k_levels: int = 3
) -> ContrastReport:
    """Run the full comparison at one parameter set.

    The qubit doublet is computed from the effective model at the mapped
    parameters; its charge separation delta_n becomes the dN of a
    condensate configuration with ``n1_for_overlap`` pairs on the island
    (the island's absolute pair count is not part of the effective model,
    so it enters as its own input). Raises InvalidConfig if that
    configuration violates the square-root constraints.
    """
    if not (np.isfinite(n1_for_overlap) and n1_for_overlap > 0):
        raise InvalidParams("n1_for_overlap must be > 0")
    bm = map_parameters(p, include_validity=False)
    ep = EffectiveParams(e_c=p.e_c, e_j=bm.e_j, n_g=bm.n_g)
    qp = qubit_states(ep)
    effective_overlap = float(abs(qp.v0 @ qp.v1))
    cfg = CondensateConfig(
        n_total=p.n_total, n1=float(n1_for_overlap), delta_n=qp.delta_n
    )
    exact = overlap_exact(cfg)
    asym = overlap_asymptotic(cfg)
    return ContrastReport(
        effective_overlap=effective_overlap,
        delta_n=qp.delta_n,
        condensate_overlap_exact=exact.overlap,
        condensate_overlap_asymptotic=asym.overlap,
        gap_table=compare_spectra(p, k_levels),
    )
