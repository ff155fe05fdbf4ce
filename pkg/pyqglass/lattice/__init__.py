from .base import (
    GEOMETRIES,
    ORACLE_MAX_SITES,
    CouplingDistribution,
    FiniteLattice,
    Geometry,
    PairNeighborhood,
    build_finite_lattice,
    sample_pair_couplings,
    sample_pair_neighborhood,
)

__all__ = [
    "GEOMETRIES",
    "ORACLE_MAX_SITES",
    "CouplingDistribution",
    "FiniteLattice",
    "Geometry",
    "PairNeighborhood",
    "build_finite_lattice",
    "sample_pair_couplings",
    "sample_pair_neighborhood",
]
