from typing import List

from pyqglass.module import ExperimentModule, ExperimentRegistry

from .ball import SeparableBallExperiment
from .collapse import OrderedCollapseExperiment, PatternCollapseExperiment, SelfAveragingExperiment
from .ea import MeanStateExperiment, QuenchedLnExperiment
from .gate import HadamardGateExperiment
from .oracle import OracleCheckExperiment


def get_all_experiments() -> List[ExperimentModule]:
    return [
        QuenchedLnExperiment(),
        MeanStateExperiment(),
        HadamardGateExperiment(),
        OrderedCollapseExperiment(),
        PatternCollapseExperiment(),
        SelfAveragingExperiment(),
        SeparableBallExperiment(),
        OracleCheckExperiment(),
    ]


def default_registry() -> ExperimentRegistry:
    registry = ExperimentRegistry()
    registry.register_all(get_all_experiments())
    return registry


__all__ = [
    "QuenchedLnExperiment",
    "MeanStateExperiment",
    "HadamardGateExperiment",
    "OrderedCollapseExperiment",
    "PatternCollapseExperiment",
    "SelfAveragingExperiment",
    "SeparableBallExperiment",
    "OracleCheckExperiment",
    "get_all_experiments",
    "default_registry",
]
