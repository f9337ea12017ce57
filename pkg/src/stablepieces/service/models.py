"""Request and response schemas shared by the HTTP service and the CLI."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class TypeRank(BaseModel):
    type: str
    rank: int


class DatumSpec(BaseModel):
    """A root datum: a named type, a product of factors, or a raw matrix."""

    type: str | None = None
    rank: int | None = None
    cartan: list[list[int]] | None = None
    factors: list[TypeRank] | None = None


class PieceRef(BaseModel):
    """A piece named by its subset and word, before validation."""

    J: list[int] = Field(default_factory=list)
    w: list[int] = Field(default_factory=list)


class PieceModel(BaseModel):
    J: list[int]
    w: list[int]
    j_inf: list[int] | None = None
    dim: int | None = None


class EdgeModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: PieceModel = Field(alias="from")
    to: PieceModel


class PiecesRequest(BaseModel):
    datum: DatumSpec
    automorphism: str = "id"


class PiecesResponse(BaseModel):
    pieces: list[PieceModel]


class ClosureRequest(BaseModel):
    datum: DatumSpec
    automorphism: str = "id"
    piece: PieceRef


class ClosureResponse(BaseModel):
    piece: PieceModel
    pieces: list[PieceModel]


class HasseRequest(BaseModel):
    datum: DatumSpec
    automorphism: str = "id"


class HasseResponse(BaseModel):
    nodes: list[PieceModel]
    edges: list[EdgeModel]
    dot: str


class CellsRequest(BaseModel):
    datum: DatumSpec
    automorphism: str = "id"
    piece: PieceRef


class CellGroupModel(BaseModel):
    u: list[int]
    members: list[PieceModel]
    dim: int
    bundle_rank: int
    cells_by_dim: dict[int, int]


class CellsResponse(BaseModel):
    finite: bool
    violator: list[int] | None = None
    violator_subset: list[int] | None = None
    alpha_order: list[list[int]] = Field(default_factory=list)
    groups: list[CellGroupModel] = Field(default_factory=list)
    cells_by_dim: dict[int, int] = Field(default_factory=dict)


class OrderRequest(BaseModel):
    datum: DatumSpec
    automorphism: str = "id"
    piece: PieceRef | None = None
    piece2: PieceRef | None = None


class ComparisonModel(BaseModel):
    leq: bool
    geq: bool


class OrderResponse(BaseModel):
    pairs: list[EdgeModel] = Field(default_factory=list)
    comparison: ComparisonModel | None = None


class VerifyRequest(BaseModel):
    datum: DatumSpec | None = None
    automorphism: str | None = None
    max_rank: int | None = None
    properties: list[str] | None = None


class VerifyRowModel(BaseModel):
    datum: str
    automorphism: str
    prop: str
    ok: bool
    informational: bool = False
    detail: str = ""


class VerifyResponse(BaseModel):
    ok: bool
    rows: list[VerifyRowModel]
