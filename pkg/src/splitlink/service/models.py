"""Pydantic request/response schemas for the evaluation service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class EvalRequest(BaseModel):
    """Exactly one of word/bracket/diagram must be given."""

    word: str | None = Field(None, description="whitespace-separated signed letters, e.g. '1 2 -1 -2'")
    bracket: str | None = Field(None, description="bracket expression, e.g. '[1, 2 3][2, 3]'")
    diagram: str | None = Field(None, description="diagram text, e.g. 'dc:+1,+2,-1,-2'")
    ambient: str | None = Field(None, description="ambient components as '0..4' or '0,1,2,3,4'")
    trace: bool = False


class VectorTerm(BaseModel):
    key: str = Field(..., description="canonical graph key, hex encoded")
    graph: str = Field(..., description="readable edge list, sg: format")
    name: str | None = None
    coeff: str = Field(..., description="exact fraction")


class VectorModel(BaseModel):
    terms: list[VectorTerm]


class Case2Term(BaseModel):
    key: str
    graph: str
    name: str | None = None
    multiplicity: str


class TraceStepModel(BaseModel):
    kind: str
    circles: list[str]
    case: int | None = None
    outcome: str
    coefficient: str


class EvalResponse(BaseModel):
    input: str
    kind: str
    ambient: list[int]
    vector: VectorModel
    case2: list[Case2Term]
    pretty: str
    trace: list[TraceStepModel] | None = None


class GraphClassModel(BaseModel):
    key: str
    graph: str
    name: str | None = None
    edge_count: int
    trivalent: int
    univalent: int
    has_isolated_edge: bool


class GraphEnumResponse(BaseModel):
    k: int
    drop_isolated: bool
    count: int
    classes: list[GraphClassModel]


class DiagramClassModel(BaseModel):
    code: str
    m: int
    slots: list[list[object]]
    word: str


class DiagramEnumResponse(BaseModel):
    m: int
    up_to: str
    count: int
    classes: list[DiagramClassModel]


class RelationTermModel(BaseModel):
    diagram: str
    coeff: str


class FourTResponse(BaseModel):
    m: int
    count: int
    relations: list[list[RelationTermModel]]


class VerifyRequest(BaseModel):
    target: str = "all"
    max_chords: int = 6


class CheckModel(BaseModel):
    name: str
    claim: str
    expected: str
    computed: str
    passed: bool


class VerifyResponse(BaseModel):
    target: str
    passed: bool
    checks: list[CheckModel]
    environment: dict


class RankRequest(BaseModel):
    """Rows as CSV text with header row,unknown,coeff."""

    csv: str


class RankResponse(BaseModel):
    rank: int
    forced_zero: list[str]
    kernel_dim: int
    unknowns: list[str]
    conjectural_rows: list[int] = []
