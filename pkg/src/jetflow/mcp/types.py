from typing import Any, TypeVar, Generic
from pydantic import BaseModel

# Generic type for the success data
T = TypeVar("T")


class ToolError(BaseModel):
    """Error response of a jetflow tool; `error_code` is the JetflowError code."""

    success: bool = False
    error: str
    error_code: str
    details: dict[str, Any] = {}


class ToolSuccess(BaseModel, Generic[T]):
    """Success response of a jetflow tool."""

    success: bool = True
    data: T


ToolResponse = ToolSuccess[T] | ToolError


class MultiplicityData(BaseModel):
    """Stabilization scan result, `value` and `stabilized_at` None when exceeded."""

    result: str
    kind: str
    value: int | None = None
    stabilized_at: int | None = None
    cap: int


class TorsionData(BaseModel):
    k: int
    eigenvalues: list[str]


class EmbeddingData(BaseModel):
    """Components of V with exp(V) = F, printed over the declared variables."""

    components: list[str]
    order: int


class IndexData(BaseModel):
    indices: list[MultiplicityData]
