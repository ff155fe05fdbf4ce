from __future__ import annotations

from typing import Any, Dict, List, Optional


class QglassError(Exception):
    """Root of the package's structured errors.

    ``error_type`` names the failure for reports; ``details`` carries the offending values
    as strings so they survive JSON serialisation.
    """

    def __init__(self, message: str, *, error_type: Optional[str] = None, **details: Any):
        super().__init__(message)
        self.error_type = error_type or self.__class__.__name__
        self.details: Dict[str, str] = {
            key: str(value) for key, value in details.items() if value is not None
        }


class ContractViolationError(QglassError, ValueError):
    """Input breaks a documented precondition (Hermiticity, normalisation, shape)."""


class LatticeSizeError(QglassError, ValueError):
    """Lattice or Hilbert space outside what the oracle or closed forms support."""


class DomainError(QglassError, ValueError):
    """Parameter outside the mathematical domain of a formula."""


class ConfigError(QglassError, ValueError):
    """Invalid run configuration; ``problems`` lists one message per offending field."""

    def __init__(self, problems: List[str]):
        super().__init__("; ".join(problems), error_type="ConfigError")
        self.problems = list(problems)
