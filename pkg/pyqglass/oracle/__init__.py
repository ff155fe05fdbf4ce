from .base import (
    MAX_KEEP,
    DiagonalHamiltonian,
    build_hamiltonian,
    evolve_plus_state,
    oracle_state,
    reduced_state,
    spin_table,
)
from .certify import (
    CERTIFY_TOL,
    CertificationRecord,
    CertificationReport,
    certify,
    lro_hopfield_consistency,
)

__all__ = [
    "MAX_KEEP",
    "DiagonalHamiltonian",
    "build_hamiltonian",
    "evolve_plus_state",
    "oracle_state",
    "reduced_state",
    "spin_table",
    "CERTIFY_TOL",
    "CertificationRecord",
    "CertificationReport",
    "certify",
    "lro_hopfield_consistency",
]
