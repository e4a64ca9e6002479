"""FastAPI application exposing every analysis as a POST endpoint."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InputError, NumericsError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="pairbox",
        version=__version__,
        description=(
            "Cooper-pair-box analyses: two-mode sector spectra, effective "
            "charge-basis spectra, condensate overlaps, and the contrast "
            "pipeline between the two descriptions."
        ),
    )

    @app.exception_handler(InputError)
    async def _input_error(request: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(NumericsError)
    async def _numerics_error(request: Request, exc: NumericsError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(
            status="ok", service="pairbox", version=__version__
        )

    @app.post("/two-mode-spectrum", response_model=list[schemas.TwoModeLevelRow])
    def two_mode_spectrum(req: schemas.TwoModeSpectrumRequest):
        return handlers.run_two_mode_spectrum(req)

    @app.post("/effective-spectrum", response_model=list[schemas.LevelRow])
    def effective_spectrum(req: schemas.EffectiveSpectrumRequest):
        return handlers.run_effective_spectrum(req)

    @app.post("/sweep-ng")
    def sweep_ng(req: schemas.SweepNgRequest):
        # Rows carry dynamic keys ng, e0..e{levels-1}; returned as plain dicts.
        return handlers.run_sweep_ng(req)

    @app.post("/overlap", response_model=schemas.OverlapResponse)
    def overlap(req: schemas.OverlapRequest):
        return handlers.run_overlap(req)

    @app.post("/cone-scan", response_model=schemas.ConeScanResponse)
    def cone_scan(req: schemas.ConeScanRequest):
        return handlers.run_cone_scan(req)

    @app.post("/compare", response_model=list[schemas.GapTableRow])
    def compare(req: schemas.CompareRequest):
        return handlers.run_compare(req)

    @app.post("/pipeline", response_model=schemas.PipelineResponse)
    def pipeline(req: schemas.PipelineRequest):
        return handlers.run_pipeline(req)

    return app


app = create_app()
