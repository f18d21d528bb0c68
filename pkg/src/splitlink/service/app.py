"""FastAPI application wrapping the evaluation engine."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

import splitlink
from splitlink.service import api, models


def create_app() -> FastAPI:
    app = FastAPI(
        title="splitlink",
        version=splitlink.__version__,
        description="Exact evaluation of split-link presentations into "
                    "unitrivalent graph vectors, plus relation harvesting.",
    )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=models.HealthResponse)
    def health() -> models.HealthResponse:
        return api.health_op()

    @app.post("/eval", response_model=models.EvalResponse)
    def eval_endpoint(req: models.EvalRequest) -> models.EvalResponse:
        return api.eval_op(req)

    @app.get("/enum/graphs/{k}", response_model=models.GraphEnumResponse)
    def enum_graphs(k: int, drop_isolated: bool = False) -> models.GraphEnumResponse:
        return api.enum_graphs_op(k, drop_isolated)

    @app.get("/enum/diagrams/{m}", response_model=models.DiagramEnumResponse)
    def enum_diagrams(m: int, reflection: bool = False) -> models.DiagramEnumResponse:
        return api.enum_diagrams_op(m, reflection)

    @app.get("/fourt/{m}", response_model=models.FourTResponse)
    def fourt(m: int) -> models.FourTResponse:
        return api.fourt_op(m)

    @app.post("/verify", response_model=models.VerifyResponse)
    def verify(req: models.VerifyRequest) -> models.VerifyResponse:
        return api.verify_op(req)

    @app.post("/rank", response_model=models.RankResponse)
    def rank(req: models.RankRequest) -> models.RankResponse:
        return api.rank_op(req)

    return app


app = create_app()
