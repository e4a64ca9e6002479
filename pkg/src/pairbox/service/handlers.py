"""Dispatch from validated requests to core computations.

Each handler returns the JSON payload for its endpoint; the CLI calls
the same functions in process, so both surfaces stay in lockstep.
"""

from __future__ import annotations

import numpy as np

from .. import bridge, condensate, effective, two_mode
from . import schemas


def run_two_mode_spectrum(req: schemas.TwoModeSpectrumRequest) -> list[dict]:
    params = two_mode.TwoModeParams(
        e_c=req.ec, u=req.u, lam=req.lam, n_total=req.n, n_bar1=req.nbar1
    )
    spec = two_mode.two_mode_spectrum(params, req.levels)
    rows = []
    for i, energy in enumerate(spec.eigenvalues):
        state = two_mode.FockVector(amplitudes=spec.eigenvectors[i])
        obs = two_mode.two_mode_observables(params, state)
        rows.append(
            {
                "level": i,
                "energy": float(energy),
                "mean_n1": obs.mean_n1,
                "var_n1": obs.var_n1,
                "coherence": obs.coherence,
            }
        )
    return rows


def run_effective_spectrum(req: schemas.EffectiveSpectrumRequest) -> list[dict]:
    params = effective.EffectiveParams(
        e_c=req.ec, e_j=req.ej, n_g=req.ng, n_max=req.n_max
    )
    n_max = effective.resolve_n_max(params, k_levels=req.levels)
    vals = effective.lowest_eigenvalues(
        effective.build_effective(params, n_max), req.levels
    )
    return [{"level": i, "energy": float(v)} for i, v in enumerate(vals)]


def run_sweep_ng(req: schemas.SweepNgRequest) -> list[dict]:
    params = effective.EffectiveParams(
        e_c=req.ec, e_j=req.ej, n_g=req.ng_start, n_max=req.n_max
    )
    grid = np.linspace(req.ng_start, req.ng_stop, req.ng_steps)
    table = effective.charge_dispersion_sweep(params, grid, req.levels)
    rows = []
    for row in table:
        entry = {"ng": float(row[0])}
        for j in range(req.levels):
            entry[f"e{j}"] = float(row[1 + j])
        rows.append(entry)
    return rows


def run_overlap(req: schemas.OverlapRequest) -> dict:
    cfg = condensate.CondensateConfig(n_total=req.n, n1=req.n1, delta_n=req.delta_n)
    exact = condensate.overlap_exact(cfg)
    asym = condensate.overlap_asymptotic(cfg)
    return {
        "exact": exact.overlap,
        "asymptotic": asym.overlap,
        "log_exact": exact.log_overlap,
        "linearized": asym.linearized,
    }


def run_cone_scan(req: schemas.ConeScanRequest) -> dict:
    grid = np.linspace(req.delta_start, req.delta_stop, req.delta_steps)
    result = condensate.cone_scan(req.n, req.n1, grid, req.thresholds)
    return {
        "rows": [
            {
                "delta_n": float(d),
                "overlap_exact": float(ex),
                "overlap_asymptotic": float(asym),
            }
            for d, ex, asym in result.rows
        ],
        "thresholds": [
            {"threshold": t, "smallest_delta_n": d} for t, d in result.crossings
        ],
    }


def _gap_rows(table) -> list[dict]:
    return [
        {
            "level": row.level,
            "gap_two_mode": row.gap_two_mode,
            "gap_effective": row.gap_effective,
            "rel_discrepancy": row.rel_discrepancy,
        }
        for row in table
    ]


def run_compare(req: schemas.CompareRequest) -> list[dict]:
    params = two_mode.TwoModeParams(
        e_c=req.ec, u=req.u, lam=req.lam, n_total=req.n, n_bar1=req.nbar1
    )
    return _gap_rows(bridge.compare_spectra(params, req.levels))


def run_pipeline(req: schemas.PipelineRequest) -> dict:
    params = two_mode.TwoModeParams(
        e_c=req.ec, u=req.u, lam=req.lam, n_total=req.n, n_bar1=req.nbar1
    )
    report = bridge.contrast_pipeline(params, req.n1, k_levels=req.levels)
    return {
        "effective_overlap": report.effective_overlap,
        "delta_n": report.delta_n,
        "condensate_overlap_exact": report.condensate_overlap_exact,
        "condensate_overlap_asymptotic": report.condensate_overlap_asymptotic,
        "gap_table": _gap_rows(report.gap_table),
    }
