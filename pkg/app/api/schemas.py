from typing import Any, Generic, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field

T = TypeVar("T")


class ApiResponse(BaseModel, Generic[T]):
    """Envelope for error output in JSON mode."""

    status: str = "success"
    message: Optional[str] = None
    data: Optional[T] = None


class StructuredEdgeSchema(BaseModel):
    """A structured edge with its weight."""

    model_config = ConfigDict(from_attributes=True)

    name: str
    src: str
    dst: str
    weight: int = 1


class GraphSchema(BaseModel):
    """A weighted graph; keys in the order vertices, sedges."""

    model_config = ConfigDict(from_attributes=True)

    vertices: list[str]
    sedges: list[StructuredEdgeSchema]


class HeadSchema(BaseModel):
    """A head of a polycephaly graph."""

    model_config = ConfigDict(from_attributes=True)

    kind: str
    base: str
    vertices: list[str]
    edges: list[str] = Field(default_factory=list)
    weights: list[int] = Field(default_factory=list)


class ClassificationSchema(BaseModel):
    tag: str
    comet_length: Optional[int] = None
    heads: list[HeadSchema] = Field(default_factory=list)
    reason: Optional[str] = None


class StrongGradingSchema(BaseModel):
    strongly_graded: bool


class BlockSchema(BaseModel):
    """One block M_size(base)(shifts)."""

    size: int
    base: str | dict[str, Any]
    shifts: list[int]
    head: HeadSchema
    label: str


class DecompositionSchema(BaseModel):
    blocks: list[BlockSchema]
    removed_edges: list[str]
    text: str


class IsoSchema(BaseModel):
    graded_isomorphic: str
    tag_level: bool = False
    reason: Optional[str] = None


class WitnessSchema(BaseModel):
    """A degree-1 permutation unit in one Laurent block."""

    base: str
    entries: list[tuple[int, int, int]]
    element: str


class RingFormSchema(BaseModel):
    form: str
    witnesses: list[WitnessSchema] = Field(default_factory=list)
    automorphism: Optional[str] = None
    group_ring: Optional[str] = None
    reason: Optional[str] = None


class BlockDimensionSchema(BaseModel):
    label: str
    dimension: Optional[int] = None
    infinite: bool = False
    zero_component: Optional[list[int]] = None


class DimensionSchema(BaseModel):
    degree: int
    blocks: list[BlockDimensionSchema]
    total: Optional[int] = None
    """
    None when some block has an infinite-dimensional component.
    """


class K0Schema(BaseModel):
    free_rank: int
    invariant_factors: list[int]
    unit_class: Optional[list[int]] = None


class MonoidSchema(BaseModel):
    generators: list[str]
    relations: list[str]
    group_completion: str
    property: Optional[str] = None
    verdict: Optional[str] = None
    bound: Optional[int] = None
    witness: Optional[dict[str, str]] = None
    note: Optional[str] = None


class EqualitySchema(BaseModel):
    verdict: str
    chain: Optional[list[str]] = None
    certificate_kind: Optional[str] = None
    certificate: Optional[str] = None


class ReductionSchema(BaseModel):
    normal_form: str
    degree: Optional[int] = None
    homogeneous: bool
