"""
Certification of the closed-form pair and triple states against brute-force evolution.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

import numpy as np

from pyqglass.lattice import GEOMETRIES, CouplingDistribution, build_finite_lattice
from pyqglass.models.ea import pair_state
from pyqglass.models.hopfield import PatternSet, nn_pair_state, sample_patterns
from pyqglass.models.lro import CollectiveModel, lro_pair_state, lro_triple_state
from pyqglass.oracle.base import build_hamiltonian, oracle_state
from pyqglass.qmat import DensityMatrix
from pyqglass.sampling import block_generator

logger = logging.getLogger(__name__)

CERTIFY_TOL = 1e-10
CERTIFY_TIMES = (0.37, 1.1, 2.9, 6.4)
LATTICE_CASES = (("chain_1d", (4,)), ("honeycomb_2d", (2, 2)), ("square_2d", (4, 3)))
COLLECTIVE_SIZES = (4, 8, 10, 12)
PATTERN_CASES = ((1, 8), (2, 10), (3, 12))


@dataclass
class CertificationRecord:
    model: str
    case: str
    t: float
    max_abs_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_abs_error <= self.tolerance


@dataclass
class CertificationReport:
    records: List[CertificationRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.passed for r in self.records)

    @property
    def failures(self) -> List[CertificationRecord]:
        return [r for r in self.records if not r.passed]

    def worst(self) -> float:
        return max((r.max_abs_error for r in self.records), default=0.0)


def _max_error(a: DensityMatrix, b: DensityMatrix) -> float:
    return float(np.max(np.abs(a.entries - b.entries)))


def _compare(
    report: CertificationReport,
    model: str,
    case: str,
    source,
    keep: Sequence[int],
    closed_form: Callable[[float], DensityMatrix],
    times: Sequence[float],
    tolerance: float,
) -> None:
    h = build_hamiltonian(source)
    for t in times:
        err = _max_error(oracle_state(h, t, keep), closed_form(t))
        report.records.append(CertificationRecord(model, case, float(t), err, tolerance))
        if err > tolerance:
            logger.error("%s %s t=%g: closed form differs from oracle by %.3e", model, case, t, err)


def certify(
    times: Sequence[float] = CERTIFY_TIMES,
    tolerance: float = CERTIFY_TOL,
    seed: int = 7,
    dist: CouplingDistribution = CouplingDistribution(mean=1.0, variance=1.0),
) -> CertificationReport:
    """Run every closed form against the oracle and collect per-time errors."""
    report = CertificationReport()

    for b, (kind, extent) in enumerate(LATTICE_CASES):
        lattice = build_finite_lattice(GEOMETRIES[kind], extent, dist, block_generator(seed, b))
        neighborhood = lattice.pair_neighborhood(0, 1)
        _compare(report, "ea", f"{kind}{list(extent)}", lattice, [0, 1],
                 lambda t, pn=neighborhood: pair_state(pn, t), times, tolerance)

    for n in COLLECTIVE_SIZES:
        model = CollectiveModel(n)
        _compare(report, "lro", f"pair N={n}", model, [0, 1], lambda t, m=model: lro_pair_state(m, t), times, tolerance)
        _compare(report, "lro", f"triple N={n}", model, [0, 1, 2], lambda t, m=model: lro_triple_state(m, t), times, tolerance)

    for p, n in PATTERN_CASES:
        patterns = sample_patterns(p, n, seed + p)
        _compare(report, "hopfield", f"p={p} N={n}", patterns, [0, 1],
                 lambda t, ps=patterns: nn_pair_state(ps, t), times, tolerance)
    weighted = sample_patterns(2, 9, seed, lambdas=[1.0, 1.7])
    _compare(report, "hopfield", "p=2 N=9 weighted", weighted, [0, 1],
             lambda t: nn_pair_state(weighted, t), times, tolerance)

    level = logging.INFO if report.passed else logging.WARNING
    logger.log(level, "oracle certification: %d records, worst error %.3e", len(report.records), report.worst())
    return report


def lro_hopfield_consistency(n_spins: int, times: Sequence[float] = CERTIFY_TIMES) -> Tuple[float, ...]:
    """Max deviation between the one-pattern all-plus model and the ordered model at each time."""
    patterns = PatternSet.all_plus(1, n_spins)
    model = CollectiveModel(n_spins)
    return tuple(_max_error(nn_pair_state(patterns, t), lro_pair_state(model, t)) for t in times)
