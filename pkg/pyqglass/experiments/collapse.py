from dataclasses import asdict

from pyqglass.config import RunConfig
from pyqglass.models.hopfield import expected_revival_period, quenched_nn_ln_series, self_averaging_check
from pyqglass.models.lro import CollectiveModel, detect_collapse_revival, lro_ln_series
from pyqglass.module import ExperimentModule, ExperimentResult

LN_HEADER = ["t", "mean_ln", "std_ln", "sem_ln"]


class OrderedCollapseExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "lro",
            "Collapse and revival of entanglement in the ordered long-range model",
            {"hamiltonian": "S_z^2 / N", "initial_state": "|+> on every site"},
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        model = CollectiveModel(config.n_spins.data)
        series = lro_ln_series(model, config.times(), config.cut.data)
        report = detect_collapse_revival(series, config.threshold.data, config.window.data)
        summary = asdict(report)
        summary.update(cut=config.cut.data, expected_revival_period=model.revival_period)
        return ExperimentResult(header=LN_HEADER, rows=series.rows(), summary=summary)


class PatternCollapseExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "hopfield",
            "Quenched nearest-pair entanglement of the Hopfield model",
            {
                "hamiltonian": "(1/N) sum_mu (sum_i xi_mu^i s^z_i)^2",
                "patterns": "i.i.d. fair +-1",
                "initial_state": "|+> on every site",
            },
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        p, n = config.patterns.data, config.n_spins.data
        series = quenched_nn_ln_series(p, n, config.times(), config.n_samples.data, config.seed.data, config.worker_count())
        report = detect_collapse_revival(series, config.threshold.data, config.window.data)
        summary = asdict(report)
        summary["expected_revival_period"] = expected_revival_period(p, n)
        return ExperimentResult(header=LN_HEADER, rows=series.rows(), summary=summary)


class SelfAveragingExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "self-avg",
            "Overlap cosine product against the Gaussian law exp(-8 t^2 p / N)",
            {"product": "prod_{k>=3} cos(4 t m_k / N)", "overlap": "m_k = sum_mu xi_mu^k xi_mu^2"},
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        report = self_averaging_check(
            config.patterns.data,
            config.n_spins.data,
            config.times(),
            config.n_samples.data,
            config.seed.data,
            config.worker_count(),
        )
        rows = list(zip(report.times.tolist(), report.empirical.tolist(), report.sem.tolist(),
                        report.expected.tolist(), report.law.tolist()))
        return ExperimentResult(
            header=["t", "empirical", "sem", "expected", "law"],
            rows=rows,
            summary={"max_rel_dev": report.max_rel_dev, "regime_ok": report.regime_ok, "notes": report.notes},
        )
