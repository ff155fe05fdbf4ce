from pyqglass.config import RunConfig
from pyqglass.lattice import CouplingDistribution
from pyqglass.models.gate import (
    classical_benchmark,
    default_protocol,
    dephased_limit_fidelity,
    optimize_hold_time,
    quenched_gate_fidelity,
)
from pyqglass.module import ExperimentModule, ExperimentResult

GATE_HEADER = ["j_mean", "j_var", "hold_time", "mean_fidelity", "std_fidelity", "classical_benchmark"]


class HadamardGateExperiment(ExperimentModule):
    def __init__(self):
        super().__init__(
            "gate",
            "Quenched fidelity of the measurement-based Hadamard gate",
            {
                "interaction": "exp(+i J12 t* s1 s2 / 4)",
                "ancilla": "|+>",
                "inputs": "six Pauli eigenstates, outcome-averaged",
            },
        )

    def forward(self, config: RunConfig) -> ExperimentResult:
        dist = CouplingDistribution(config.j_mean.data, config.j_var.data)
        protocol = default_protocol(dist)
        n, seed, workers = config.n_samples.data, config.seed.data, config.worker_count()
        benchmark = classical_benchmark()
        if config.optimize.data:
            scan = optimize_hold_time(dist, protocol, n, seed, workers=workers)
            protocol = scan.best
            stats = zip(scan.hold_times.tolist(), scan.mean_fidelity.tolist(), scan.std_fidelity.tolist())
            mean = float(scan.mean_fidelity.max())
        else:
            mean, std = quenched_gate_fidelity(dist, protocol, n, seed, workers=workers)
            stats = [(protocol.hold_time, mean, std)]
        rows = [(dist.mean, dist.variance, t, f, s, benchmark) for t, f, s in stats]
        return ExperimentResult(
            header=GATE_HEADER,
            rows=rows,
            summary={
                "hold_time": protocol.hold_time,
                "mean_fidelity": mean,
                "exceeds_classical": mean > benchmark,
                "dephased_limit": dephased_limit_fidelity(protocol),
                "measurement_axis": list(protocol.measurement_axis),
                "phase_correction": protocol.phase_correction,
                "correction_rule": {str(k): v for k, v in protocol.correction_rule.items()},
            },
            conventions={"classical_benchmark": benchmark},
        )
