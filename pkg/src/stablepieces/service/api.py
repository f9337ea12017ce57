"""The HTTP face of the package: one POST endpoint per computation.

Sessions are shared across requests through the in-process registry, so a
long-running server pays for each root datum's tables once.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import ops
from .models import (CellsRequest, CellsResponse, ClosureRequest,
                     ClosureResponse, HasseRequest, HasseResponse,
                     OrderRequest, OrderResponse, PiecesRequest,
                     PiecesResponse, VerifyRequest, VerifyResponse)

app = FastAPI(
    title="stablepieces",
    description=(
        "Stable-piece posets, orbit closures and cellular decompositions "
        "for wonderful group compactifications."
    ),
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/pieces", response_model=PiecesResponse)
def pieces(req: PiecesRequest) -> PiecesResponse:
    return ops.pieces_op(req, shared=True)


@app.post("/closure", response_model=ClosureResponse)
def closure(req: ClosureRequest) -> ClosureResponse:
    return ops.closure_op(req, shared=True)


@app.post("/hasse", response_model=HasseResponse)
def hasse(req: HasseRequest) -> HasseResponse:
    return ops.hasse_op(req, shared=True)


@app.post("/cells", response_model=CellsResponse)
def cells(req: CellsRequest) -> CellsResponse:
    return ops.cells_op(req, shared=True)


@app.post("/order", response_model=OrderResponse)
def order(req: OrderRequest) -> OrderResponse:
    return ops.order_op(req, shared=True)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return ops.verify_op(req, shared=True)
