"""FastAPI application exposing every counting task.

All handlers are pure computations over the request parameters, so the
service is safe to run with any number of workers; domain failures map to
a structured 400 and the budget refusal is distinguishable by its error
code.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import PadicError
from . import schemas, tasks


def create_app() -> FastAPI:
    app = FastAPI(
        title="padicount",
        version=__version__,
        description=(
            "Exact counting of fixed points, rooted closed walks, two-cycles, "
            "self-power solutions and collisions of discrete exponential maps "
            "modulo odd prime powers."
        ),
    )

    @app.exception_handler(PadicError)
    async def domain_error(request: Request, exc: PadicError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health", response_model=schemas.Health)
    def health():
        return {"status": "ok", "version": __version__}

    @app.post(
        "/fixed-points",
        response_model=schemas.CountReport,
        response_model_exclude_none=True,
    )
    def fixed_points(req: schemas.FixedPointsRequest):
        return tasks.fixed_points_report(
            req.p,
            req.e,
            req.g,
            enumerate_solutions=req.enumerate,
            oracle=req.oracle,
            budget=req.budget,
        )

    @app.post(
        "/walks", response_model=schemas.CountReport, response_model_exclude_none=True
    )
    def walks(req: schemas.WalksRequest):
        return tasks.walks_report(
            req.p,
            req.e,
            req.g,
            req.k,
            enumerate_solutions=req.enumerate,
            oracle=req.oracle,
            budget=req.budget,
        )

    @app.post(
        "/two-cycles",
        response_model=schemas.CountReport,
        response_model_exclude_none=True,
    )
    def two_cycles(req: schemas.TwoCyclesRequest):
        return tasks.two_cycles_report(
            req.p,
            req.e,
            g=req.g,
            enumerate_solutions=req.enumerate,
            oracle=req.oracle,
            budget=req.budget,
        )

    @app.post(
        "/self-power",
        response_model=schemas.CountReport,
        response_model_exclude_none=True,
    )
    def self_power(req: schemas.SelfPowerRequest):
        return tasks.self_power_report(
            req.p,
            req.e,
            req.c,
            enumerate_solutions=req.enumerate,
            oracle=req.oracle,
            budget=req.budget,
        )

    @app.post(
        "/collisions",
        response_model=schemas.CountReport,
        response_model_exclude_none=True,
    )
    def collisions(req: schemas.CollisionsRequest):
        return tasks.collisions_report(
            req.p,
            req.e,
            enumerate_solutions=req.enumerate,
            oracle=req.oracle,
            budget=req.budget,
        )

    @app.post("/conjecture", response_model=schemas.ConjectureReport)
    def conjecture(req: schemas.ConjectureRequest):
        return tasks.conjecture_report(req.p, req.e, budget=req.budget)

    @app.post("/verify", response_model=schemas.VerifyReport)
    def verify(req: schemas.VerifyRequest):
        return tasks.verify_report(req.max_p, req.max_e, budget=req.budget)

    return app


app = create_app()
