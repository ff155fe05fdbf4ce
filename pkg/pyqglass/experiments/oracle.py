from pyqglass.config import RunConfig
from pyqglass.module import ExperimentModule, ExperimentResult
from pyqglass.oracle import certify, lro_hopfield_consistency

CERTIFICATION_FAILED = 3


class OracleCheckExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "oracle-check",
            "Certify every closed-form state against brute-force evolution",
            {"basis": "site 0 is the most significant bit, bit 0 is spin +1"},
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        report = certify()
        consistency = max(lro_hopfield_consistency(8))
        rows = [(r.model, r.case, r.t, r.max_abs_error, r.tolerance, r.passed) for r in report.records]
        passed = report.passed and consistency <= 1e-12
        return ExperimentResult(
            header=["model", "case", "t", "max_abs_error", "tolerance", "passed"],
            rows=rows,
            summary={
                "passed": passed,
                "worst_error": report.worst(),
                "failures": len(report.failures),
                "lro_hopfield_consistency": consistency,
            },
            exit_code=0 if passed else CERTIFICATION_FAILED,
        )
