from __future__ import annotations

import pytest
from pydantic import ValidationError

from jetflow.mcp.types import (
    EmbeddingData,
    IndexData,
    MultiplicityData,
    ToolError,
    ToolSuccess,
    TorsionData,
)


class TestToolError:
    """Test the ToolError Pydantic model."""

    def test_basic_creation(self):
        error = ToolError(error="linear part is not invertible", error_code="DOMAIN_ERROR")
        assert error.success is False
        assert error.details == {}

    def test_serialization(self):
        error = ToolError(
            error="unknown variable `z`",
            error_code="PARSE_ERROR",
            details={"position": 2},
        )
        assert error.model_dump() == {
            "success": False,
            "error": "unknown variable `z`",
            "error_code": "PARSE_ERROR",
            "details": {"position": 2},
        }

    def test_missing_code(self):
        with pytest.raises(ValidationError):
            ToolError(error="Error")


class TestToolSuccess:
    """Test the generic ToolSuccess model."""

    def test_torsion_payload(self):
        response = ToolSuccess[TorsionData](data=TorsionData(k=4, eigenvalues=["2i", "2"]))
        assert response.success is True
        assert response.data.k == 4

    def test_json_round_trip(self):
        response = ToolSuccess[EmbeddingData](
            data=EmbeddingData(components=["x^2"], order=4)
        )
        restored = ToolSuccess[EmbeddingData].model_validate_json(response.model_dump_json())
        assert restored == response


class TestMultiplicityData:
    """Test the multiplicity payloads."""

    def test_exceeded_defaults(self):
        data = MultiplicityData(result="exceeded:8", kind="exceeded", cap=8)
        assert data.value is None
        assert data.stabilized_at is None

    def test_index_list(self):
        entry = MultiplicityData(
            result="finite:2@2", kind="finite", value=2, stabilized_at=2, cap=4
        )
        assert IndexData(indices=[entry, entry]).indices[1].value == 2
