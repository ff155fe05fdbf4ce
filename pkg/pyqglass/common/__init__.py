from .base import (
    QglassData,
    QglassString,
    QglassInt,
    QglassFloat,
    QglassBool,
    QglassDict,
    QglassOperator,
    canonical_digest,
)
from .errors import (
    QglassError,
    ContractViolationError,
    LatticeSizeError,
    DomainError,
    ConfigError,
)

__all__ = [
    "QglassData",
    "QglassString",
    "QglassInt",
    "QglassFloat",
    "QglassBool",
    "QglassDict",
    "QglassOperator",
    "canonical_digest",
    "QglassError",
    "ContractViolationError",
    "LatticeSizeError",
    "DomainError",
    "ConfigError",
]
