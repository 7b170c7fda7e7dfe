from importlib.metadata import version, PackageNotFoundError

__version__: str

try:
    __version__ = version("jetflow")
except PackageNotFoundError:
    __version__ = "unknown"

from .config import JetflowConfig
from .errors import (
    DomainError,
    GroupError,
    JetflowError,
    ParseError,
    UnsupportedError,
    VerificationError,
)

from .embed import EmbeddingResult, embed_power_in_flow, takens_embed
from .expoly import ExpPoly, ExpPolyMatrix, flow_operator, power_operator
from .intersect import IdealGens, MultResult, colength, multiplicity, mu_sequence
from .jets import FiniteGroupAction, JetDiffeo, JetVectorField
from .series import TruncatedSeries

__all__ = [
    "DomainError",
    "EmbeddingResult",
    "ExpPoly",
    "ExpPolyMatrix",
    "FiniteGroupAction",
    "GroupError",
    "IdealGens",
    "JetDiffeo",
    "JetVectorField",
    "JetflowConfig",
    "JetflowError",
    "MultResult",
    "ParseError",
    "TruncatedSeries",
    "UnsupportedError",
    "VerificationError",
    "colength",
    "embed_power_in_flow",
    "flow_operator",
    "multiplicity",
    "mu_sequence",
    "power_operator",
    "takens_embed",
]
