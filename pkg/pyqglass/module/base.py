"""
Experiment modules: one callable unit per command-line subcommand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from pyqglass.common import QglassDict, QglassOperator, QglassString
from pyqglass.config import RunConfig


@dataclass
class ExperimentResult:
    """Tabular output of one run plus the scalar summary recorded in the manifest."""

    header: List[str]
    rows: List[Sequence[Any]]
    summary: Dict[str, Any] = field(default_factory=dict)
    conventions: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    def __post_init__(self):
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row has {len(row)} columns, header has {width}")

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.header, row)) for row in self.rows]


class ExperimentModule(QglassOperator):
    """Base class for experiments; subclasses implement ``forward(config)``."""

    name: QglassString
    description: QglassString
    conventions: QglassDict

    def __init__(self, name: str, description: str = "", conventions: Dict[str, Any] | None = None):
        super().__init__()
        self.name = QglassString(name)
        self.description = QglassString(description)
        self.conventions = QglassDict(conventions or {})

    def forward(self, config: RunConfig) -> ExperimentResult:
        raise NotImplementedError("Subclasses must implement forward()")

    def __call__(self, config: RunConfig) -> ExperimentResult:
        result = self.forward(config)
        merged = dict(self.conventions.data)
        merged.update(result.conventions)
        result.conventions = merged
        return result
