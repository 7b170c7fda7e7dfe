from jetflow.errors import JetflowError
from jetflow.intersect import MultResult
from jetflow.mcp.types import MultiplicityData, T, ToolError, ToolSuccess


def tool_error(message: str, code: str, **details) -> ToolError:
    """Create a standardized tool error response."""
    return ToolError(error=message, error_code=code, details=details)


def tool_success(data: T) -> ToolSuccess[T]:
    """Create a standardized tool success response."""
    return ToolSuccess(data=data)


def jetflow_error(error: JetflowError, **details) -> ToolError:
    """Error response carrying the stable code of a JetflowError."""
    extra = dict(details)
    position = getattr(error, "position", None)
    if position is not None:
        extra["position"] = position
    return tool_error(error.message, error.code, **extra)


def multiplicity_data(result: MultResult) -> MultiplicityData:
    return MultiplicityData(
        result=str(result),
        kind=result.kind,
        value=result.value,
        stabilized_at=result.stabilized_at,
        cap=result.cap,
    )
