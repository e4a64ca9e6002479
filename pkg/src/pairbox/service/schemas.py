"""Pydantic request/response schemas for the analysis endpoints.

Field names mirror the model parameter records one-to-one; the tunneling
amplitude is accepted as ``lambda`` (JSON) via an alias since that word
is reserved in Python. Unknown fields are rejected.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


class TwoModeSpectrumRequest(StrictModel):
    ec: float = Field(description="charging energy E_C > 0")
    u: float = Field(description="bias potential U")
    lam: float = Field(alias="lambda", description="tunneling amplitude")
    n: int = Field(ge=1, description="total Cooper pairs N")
    nbar1: float = Field(ge=0, description="background island occupation")
    levels: int = Field(default=2, ge=1, description="number of eigenvalues")


class EffectiveSpectrumRequest(StrictModel):
    ec: float
    ej: float
    ng: float
    n_max: int | None = Field(default=None, ge=1, description="truncation; null = auto")
    levels: int = Field(default=2, ge=1)


class SweepNgRequest(StrictModel):
    ec: float
    ej: float
    n_max: int | None = Field(default=None, ge=1)
    ng_start: float
    ng_stop: float
    ng_steps: int = Field(ge=1, description="number of grid points")
    levels: int = Field(default=2, ge=1)


class OverlapRequest(StrictModel):
    n: int = Field(ge=1, description="total Cooper pairs N")
    n1: float = Field(description="island pairs N1")
    delta_n: float = Field(ge=0, description="charge separation dN")


class ConeScanRequest(StrictModel):
    n: int = Field(ge=1)
    n1: float
    delta_start: float
    delta_stop: float
    delta_steps: int = Field(ge=1)
    thresholds: list[float] = Field(default_factory=list)


class CompareRequest(StrictModel):
    ec: float
    u: float
    lam: float = Field(alias="lambda")
    n: int = Field(ge=1)
    nbar1: float = Field(ge=0)
    levels: int = Field(default=3, ge=1, description="number of gaps")


class PipelineRequest(StrictModel):
    ec: float
    u: float
    lam: float = Field(alias="lambda")
    n: int = Field(ge=1)
    nbar1: float = Field(ge=0)
    n1: float = Field(description="island pairs N1 for the overlap")
    levels: int = Field(default=3, ge=1, description="number of gaps")


class LevelRow(StrictModel):
    level: int
    energy: float


class TwoModeLevelRow(StrictModel):
    level: int
    energy: float
    mean_n1: float
    var_n1: float
    coherence: float


class OverlapResponse(StrictModel):
    exact: float
    asymptotic: float
    log_exact: float
    linearized: float


class ConeScanRow(StrictModel):
    delta_n: float
    overlap_exact: float
    overlap_asymptotic: float


class ThresholdCrossing(StrictModel):
    threshold: float
    smallest_delta_n: float | None


class ConeScanResponse(StrictModel):
    rows: list[ConeScanRow]
    thresholds: list[ThresholdCrossing]


class GapTableRow(StrictModel):
    level: int
    gap_two_mode: float
    gap_effective: float
    rel_discrepancy: float


class PipelineResponse(StrictModel):
    effective_overlap: float
    delta_n: float
    condensate_overlap_exact: float
    condensate_overlap_asymptotic: float
    gap_table: list[GapTableRow]


class HealthResponse(StrictModel):
    status: str
    service: str
    version: str
