from pyqglass.config import RunConfig
from pyqglass.models.ball import compare_estimate_to_measurement, estimate_e_d
from pyqglass.module import ExperimentModule, ExperimentResult


class SeparableBallExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "ball",
            "Separable-ball estimate of the long-time log negativity",
            {"radius_squared": "(3 - 4 R^2) / 2", "sectors": "2^d - 1", "torus_volume": "(2 pi)^d"},
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        estimate = estimate_e_d(config.d.data, config.radius.data)
        summary = {"e_d": estimate.e_d}
        if config.measured.data > 0:
            comparison = compare_estimate_to_measurement(config.d.data, config.radius.data, config.measured.data)
            summary.update(
                measured=comparison.measured,
                ratio=comparison.ratio,
                passed=comparison.passed,
                reference=comparison.reference,
            )
        return ExperimentResult(
            header=["d", "R", "volume", "e_d"],
            rows=[(estimate.d, estimate.R, estimate.volume, estimate.e_d)],
            summary=summary,
        )
