from .base import ExperimentModule, ExperimentResult
from .registry import ExperimentRegistry

__all__ = ["ExperimentModule", "ExperimentResult", "ExperimentRegistry"]
