from .base import (
    Cut,
    DensityMatrix,
    PAIR_CUT,
    TRIPLE_CUT,
    hermitian_eigenvalues,
    jacobi_eigenvalues,
    partial_transpose,
    trace_norm,
    log_negativity,
    negativity,
    min_pt_eigenvalue,
    is_ppt,
    fidelity_pure,
    apply_local_unitary,
    batched_partial_transpose,
    batched_log_negativity,
)

__all__ = [
    "Cut",
    "DensityMatrix",
    "PAIR_CUT",
    "TRIPLE_CUT",
    "hermitian_eigenvalues",
    "jacobi_eigenvalues",
    "partial_transpose",
    "trace_norm",
    "log_negativity",
    "negativity",
    "min_pt_eigenvalue",
    "is_ppt",
    "fidelity_pure",
    "apply_local_unitary",
    "batched_partial_transpose",
    "batched_log_negativity",
]
