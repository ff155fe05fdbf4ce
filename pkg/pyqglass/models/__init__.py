from .ea import (
    CouplingDistribution,
    LnTimeSeries,
    MeanStateRecord,
    TailEstimate,
    mean_state_series,
    neighbor_decay,
    nnn_ln,
    pair_ln,
    pair_state,
    pair_state_array,
    quenched_ln_series,
    tail_window_estimate,
)
from .lro import (
    CollapseRevivalReport,
    CollectiveModel,
    ScalingFit,
    detect_collapse_revival,
    lro_ln_series,
    lro_pair_state,
    lro_triple_state,
    scaling_fit,
)
from .hopfield import (
    PatternSet,
    SelfAveragingReport,
    expected_revival_period,
    nn_pair_state,
    pattern_scaling_fit,
    quenched_nn_ln_series,
    realisation_revival_periods,
    revival_period,
    sample_patterns,
    self_averaging_check,
)
from .ball import (
    BallComparison,
    BallEstimate,
    compare_estimate_to_measurement,
    estimate_e_d,
    sphere_surface_coeff,
)
from .gate import (
    CLASSICAL_FIDELITY,
    classical_benchmark,
    GateProtocol,
    InputQubit,
    default_protocol,
    dephased_limit_fidelity,
    optimize_hold_time,
    quenched_gate_fidelity,
    run_gate_once,
)

__all__ = [
    "CouplingDistribution",
    "LnTimeSeries",
    "MeanStateRecord",
    "TailEstimate",
    "mean_state_series",
    "neighbor_decay",
    "nnn_ln",
    "pair_ln",
    "pair_state",
    "pair_state_array",
    "quenched_ln_series",
    "tail_window_estimate",
    "CollapseRevivalReport",
    "CollectiveModel",
    "ScalingFit",
    "detect_collapse_revival",
    "lro_ln_series",
    "lro_pair_state",
    "lro_triple_state",
    "scaling_fit",
    "PatternSet",
    "SelfAveragingReport",
    "expected_revival_period",
    "nn_pair_state",
    "pattern_scaling_fit",
    "quenched_nn_ln_series",
    "realisation_revival_periods",
    "revival_period",
    "sample_patterns",
    "self_averaging_check",
    "BallComparison",
    "BallEstimate",
    "compare_estimate_to_measurement",
    "estimate_e_d",
    "sphere_surface_coeff",
    "CLASSICAL_FIDELITY",
    "classical_benchmark",
    "GateProtocol",
    "InputQubit",
    "default_protocol",
    "dephased_limit_fidelity",
    "optimize_hold_time",
    "quenched_gate_fidelity",
    "run_gate_once",
]
