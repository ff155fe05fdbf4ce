"""
Run configuration shared by the command line and the experiment modules.
"""
from __future__ import annotations

import math
from typing import Any, Dict, List

import numpy as np

from pyqglass.common import (
    ConfigError,
    QglassBool,
    QglassFloat,
    QglassInt,
    QglassOperator,
    QglassString,
)
from pyqglass.lattice.base import _ALIASES

COMMANDS = ("ea", "ea-mean", "gate", "lro", "hopfield", "self-avg", "ball", "oracle-check")
FORMATS = ("csv", "json")
CUTS = ("pair", "triple")
# fields that change how a run executes or where it writes, not what it computes
EXECUTION_FIELDS = frozenset({"output", "format", "workers"})


class RunConfig(QglassOperator):
    """Validated parameters of one run; ``digest()`` identifies the computation."""

    command: QglassString
    geometry: QglassString
    j_mean: QglassFloat
    j_var: QglassFloat
    t_min: QglassFloat
    t_max: QglassFloat
    steps: QglassInt
    n_samples: QglassInt
    seed: QglassInt
    n_spins: QglassInt
    patterns: QglassInt
    radius: QglassFloat
    d: QglassInt
    measured: QglassFloat
    threshold: QglassFloat
    window: QglassInt
    cut: QglassString
    optimize: QglassBool
    output: QglassString
    format: QglassString
    workers: QglassInt

    DEFAULTS: Dict[str, Any] = {
        "command": "ea",
        "geometry": "square_2d",
        "j_mean": 0.0,
        "j_var": 1.0,
        "t_min": 0.0,
        "t_max": 50.0,
        "steps": 500,
        "n_samples": 1000,
        "seed": 0,
        "n_spins": 50,
        "patterns": 1,
        "radius": 0.0,
        "d": 6,
        "measured": 0.0,
        "threshold": 1e-4,
        "window": 10,
        "cut": "pair",
        "optimize": False,
        "output": "",
        "format": "csv",
        "workers": 0,
    }

    def __init__(self, **values: Any):
        super().__init__()
        state = dict(self.DEFAULTS)
        state.update({name: value for name, value in values.items() if value is not None})
        self.load_state_dict(state, strict=True)

    def validate(self) -> "RunConfig":
        problems: List[str] = []
        if self.command.data not in COMMANDS:
            problems.append(f"command: must be one of {', '.join(COMMANDS)}")
        if self.format.data not in FORMATS:
            problems.append(f"format: must be one of {', '.join(FORMATS)}")
        if self.geometry.data.strip().lower() not in _ALIASES:
            problems.append(f"geometry: unknown geometry {self.geometry.data!r}")
        if self.cut.data not in CUTS:
            problems.append("cut: must be 'pair' or 'triple'")
        if self.t_min.data < 0:
            problems.append("t_min: must be >= 0")
        if self.t_min.data > self.t_max.data:
            problems.append("t_min: must be <= t_max")
        if self.steps.data < 1:
            problems.append("steps: must be >= 1")
        elif self.steps.data > 1 and self.t_min.data == self.t_max.data:
            problems.append("steps: more than one step needs t_min < t_max")
        if self.n_samples.data < 1:
            problems.append("n_samples: must be >= 1")
        if self.j_var.data < 0:
            problems.append("j_var: must be >= 0")
        if self.n_spins.data < 3:
            problems.append("n_spins: must be >= 3")
        if self.patterns.data < 1:
            problems.append("patterns: must be >= 1")
        if not 0.0 <= self.radius.data < math.sqrt(3.0) / 2.0:
            problems.append("radius: must lie in [0, sqrt(3)/2)")
        if self.d.data < 1:
            problems.append("d: must be >= 1")
        if self.threshold.data <= 0:
            problems.append("threshold: must be > 0")
        if self.window.data < 1:
            problems.append("window: must be >= 1")
        if self.workers.data < 0:
            problems.append("workers: must be >= 0")
        if self.command.data == "gate" and self.j_mean.data == 0 and self.j_var.data == 0:
            problems.append("j_mean: gate needs a non-zero coupling scale")
        if problems:
            raise ConfigError(problems)
        return self

    def times(self) -> np.ndarray:
        return np.linspace(self.t_min.data, self.t_max.data, self.steps.data)

    def worker_count(self):
        """``None`` defers to the environment default."""
        return self.workers.data or None

    def digest(self) -> str:
        return self.checksum(exclude=EXECUTION_FIELDS)
