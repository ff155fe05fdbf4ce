"""
Edwards-Anderson spin glass: closed-form pair state, quenched log negativity and the
PPT test on the disorder-averaged state.

The Hamiltonian is ``H = -1/4 sum_<ij> J_ij s^z_i s^z_j`` with i.i.d. Gaussian couplings and
every spin prepared in ``|+>``. For a bonded pair (1, 2) in a triangle-free neighbourhood the
reduced state has diagonal ``1/4`` and upper off-diagonal entries

    rho[00,01] = e^{+i phi} c2 / 4      rho[00,10] = e^{+i phi} c1 / 4
    rho[01,11] = e^{-i phi} c1 / 4      rho[10,11] = e^{-i phi} c2 / 4
    rho[00,11] = rho[01,10] = c1 c2 / 4

with ``phi = J12 t / 2`` and ``c_s = prod_k cos(J_sk t / 2)`` over the exterior neighbours
of site ``s``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from pyqglass.common import ContractViolationError, canonical_digest
from pyqglass.lattice import (
    GEOMETRIES,
    CouplingDistribution,
    FiniteLattice,
    Geometry,
    PairNeighborhood,
    sample_pair_couplings,
)
from pyqglass.qmat import DensityMatrix, PAIR_CUT, batched_log_negativity, log_negativity, min_pt_eigenvalue
from pyqglass.sampling import sample_moments

logger = logging.getLogger(__name__)

MEAN_STATE_PPT_TOL = 1e-7
TAIL_WINDOW = (40.0, 50.0)
TAIL_POINTS = 11
_TIME_CHUNK = 64

__all__ = [
    "CouplingDistribution",
    "LnTimeSeries",
    "MeanStateRecord",
    "TailEstimate",
    "pair_state",
    "pair_state_array",
    "pair_ln",
    "quenched_ln_series",
    "mean_state_series",
    "nnn_ln",
    "tail_window_estimate",
    "neighbor_decay",
]


@dataclass
class LnTimeSeries:
    """Log negativity sampled on a time grid with its spread over disorder realisations."""

    times: np.ndarray
    mean_ln: np.ndarray
    std_ln: np.ndarray
    sem_ln: np.ndarray
    n_samples: int
    config_digest: str = ""

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.mean_ln = np.asarray(self.mean_ln, dtype=float)
        self.std_ln = np.asarray(self.std_ln, dtype=float)
        self.sem_ln = np.asarray(self.sem_ln, dtype=float)
        shapes = {a.shape for a in (self.times, self.mean_ln, self.std_ln, self.sem_ln)}
        if len(shapes) != 1:
            raise ContractViolationError("time series columns differ in length", shapes=sorted(shapes))
        if np.any(np.diff(self.times) <= 0):
            raise ContractViolationError("times must be strictly increasing")
        if np.any(self.mean_ln < 0) or np.any(self.std_ln < 0):
            raise ContractViolationError("log negativity statistics must be non-negative")

    def rows(self) -> List[Tuple[float, float, float, float]]:
        return [
            (float(t), float(m), float(s), float(e))
            for t, m, s, e in zip(self.times, self.mean_ln, self.std_ln, self.sem_ln)
        ]

    @classmethod
    def deterministic(cls, times: np.ndarray, values: np.ndarray, config_digest: str = "") -> "LnTimeSeries":
        zeros = np.zeros_like(np.asarray(values, dtype=float))
        return cls(times, values, zeros, zeros.copy(), 1, config_digest)


@dataclass
class MeanStateRecord:
    t: float
    state: DensityMatrix
    is_ppt: bool
    min_pt_eigenvalue: float


@dataclass
class TailEstimate:
    """Long-time log negativity pooled over a window of late times."""

    mean: float
    std: float
    sem: float
    n_samples: int
    window: Tuple[float, float] = TAIL_WINDOW
    per_time: Optional[LnTimeSeries] = field(default=None, repr=False)


def _check_times(times: Sequence[float]) -> np.ndarray:
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if times.ndim != 1 or times.size == 0:
        raise ContractViolationError("times must be a non-empty 1-d grid")
    if np.any(times < 0):
        raise ContractViolationError("times must be non-negative")
    if np.any(np.diff(times) <= 0):
        raise ContractViolationError("times must be strictly increasing")
    return times


def pair_state_array(couplings: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Pair states for stacked couplings ``(..., 2k+1)`` at ``times`` ``(T,)``: ``(..., T, 4, 4)``."""
    couplings = np.asarray(couplings, dtype=float)
    times = np.asarray(times, dtype=float)
    k = (couplings.shape[-1] - 1) // 2
    half_t = 0.5 * times
    j12 = couplings[..., 0, None]
    phase = np.exp(1j * j12 * half_t)
    c1 = np.prod(np.cos(couplings[..., 1:1 + k, None] * half_t), axis=-2)
    c2 = np.prod(np.cos(couplings[..., 1 + k:, None] * half_t), axis=-2)

    rho = np.zeros(phase.shape + (4, 4), dtype=np.complex128)
    idx = np.arange(4)
    rho[..., idx, idx] = 0.25
    upper = {
        (0, 1): 0.25 * phase * c2,
        (0, 2): 0.25 * phase * c1,
        (1, 3): 0.25 * np.conj(phase) * c1,
        (2, 3): 0.25 * np.conj(phase) * c2,
        (0, 3): 0.25 * c1 * c2,
        (1, 2): 0.25 * c1 * c2,
    }
    for (a, b), value in upper.items():
        rho[..., a, b] = value
        rho[..., b, a] = np.conj(value)
    return rho


def pair_state(pn: PairNeighborhood, t: float) -> DensityMatrix:
    if t < 0:
        raise ContractViolationError("time must be non-negative", t=t)
    return DensityMatrix(pair_state_array(pn.as_array(), np.array([t]))[0])


def pair_ln(pn: PairNeighborhood, t: float) -> float:
    return log_negativity(pair_state(pn, t), PAIR_CUT)


def _ln_block(rng: np.random.Generator, count: int, g: Geometry, dist: CouplingDistribution, times: np.ndarray) -> np.ndarray:
    couplings = sample_pair_couplings(g, dist, rng, count)
    out = np.empty((count, times.size))
    for start in range(0, times.size, _TIME_CHUNK):
        chunk = times[start:start + _TIME_CHUNK]
        out[:, start:start + chunk.size] = batched_log_negativity(pair_state_array(couplings, chunk))
    return out


def _series_digest(kind: str, g: Geometry, dist: CouplingDistribution, times: np.ndarray, n_samples: int, seed: int) -> str:
    return canonical_digest(
        {
            "kind": kind,
            "geometry": g.kind,
            "mean": dist.mean,
            "variance": dist.variance,
            "times": [float(t) for t in times],
            "n_samples": int(n_samples),
            "seed": int(seed),
        }
    )


def quenched_ln_series(
    g: Geometry,
    dist: CouplingDistribution,
    times: Sequence[float],
    n_samples: int,
    master_seed: int,
    workers: Optional[int] = None,
) -> LnTimeSeries:
    """Mean and spread of the pair log negativity over disorder realisations."""
    times = _check_times(times)
    if n_samples < 1:
        raise ContractViolationError("n_samples must be >= 1", n_samples=n_samples)
    logger.info("quenched LN: %s J=%g var=%g, %d samples x %d times", g.kind, dist.mean, dist.variance, n_samples, times.size)
    moments = sample_moments(partial(_ln_block, g=g, dist=dist, times=times), n_samples, master_seed, workers)
    return LnTimeSeries(
        times,
        np.maximum(moments.mean, 0.0),
        moments.std,
        moments.sem,
        n_samples,
        _series_digest("ea_quenched_ln", g, dist, times, n_samples, master_seed),
    )


def _state_block(rng: np.random.Generator, count: int, g: Geometry, dist: CouplingDistribution, times: np.ndarray) -> np.ndarray:
    return pair_state_array(sample_pair_couplings(g, dist, rng, count), times)


def mean_state_series(
    g: Geometry,
    dist: CouplingDistribution,
    times: Sequence[float],
    n_samples: int,
    master_seed: int,
    workers: Optional[int] = None,
    tol: float = MEAN_STATE_PPT_TOL,
) -> List[MeanStateRecord]:
    """PPT test on the disorder-averaged pair state at each time."""
    times = _check_times(times)
    moments = sample_moments(partial(_state_block, g=g, dist=dist, times=times), n_samples, master_seed, workers)
    records = []
    for t, entries in zip(times, moments.mean):
        state = DensityMatrix(0.5 * (entries + entries.conj().T))
        lam = min_pt_eigenvalue(state, PAIR_CUT)
        records.append(MeanStateRecord(float(t), state, bool(lam >= -tol), lam))
    n_npt = sum(not r.is_ppt for r in records)
    if n_npt:
        logger.info("mean state NPT at %d of %d times for %s J=%g", n_npt, len(records), g.kind, dist.mean)
    return records


def nnn_ln(lattice: FiniteLattice, t: float, pair: Optional[Tuple[int, int]] = None) -> float:
    """Log negativity of a next-nearest-neighbour pair, by exact evolution of the lattice."""
    from pyqglass.oracle import build_hamiltonian, oracle_state

    if pair is None:
        candidates = lattice.sites_at_distance(0, 2)
        if not candidates:
            raise ContractViolationError("lattice has no site at distance 2 from site 0", kind=lattice.kind)
        pair = (0, candidates[0])
    state = oracle_state(build_hamiltonian(lattice), t, list(pair))
    return log_negativity(state, PAIR_CUT)


def _tail_block(rng: np.random.Generator, count: int, g: Geometry, dist: CouplingDistribution, times: np.ndarray) -> np.ndarray:
    per_time = _ln_block(rng, count, g, dist, times)
    return np.concatenate([per_time, per_time.mean(axis=1, keepdims=True)], axis=1)


def tail_window_estimate(
    g: Geometry,
    dist: CouplingDistribution,
    n_samples: int,
    master_seed: int,
    window: Tuple[float, float] = TAIL_WINDOW,
    points: int = TAIL_POINTS,
    workers: Optional[int] = None,
) -> TailEstimate:
    """Estimate ``lim_{t->inf}`` of the quenched LN by pooling a late-time window.

    ``mean`` and ``sem`` refer to the per-realisation window average; ``std`` is the
    root-mean-square of the per-time spreads.
    """
    lo, hi = window
    if not 0 <= lo < hi or points < 2:
        raise ContractViolationError("window must satisfy 0 <= lo < hi with at least two points", window=window)
    times = np.linspace(lo, hi, points)
    moments = sample_moments(partial(_tail_block, g=g, dist=dist, times=times), n_samples, master_seed, workers)
    per_time = LnTimeSeries(
        times,
        moments.mean[:-1],
        moments.std[:-1],
        moments.sem[:-1],
        n_samples,
        _series_digest("ea_tail_window", g, dist, times, n_samples, master_seed),
    )
    return TailEstimate(
        mean=float(moments.mean[-1]),
        std=float(np.sqrt(np.mean(per_time.std_ln ** 2))),
        sem=float(moments.sem[-1]),
        n_samples=n_samples,
        window=(float(lo), float(hi)),
        per_time=per_time,
    )


def neighbor_decay(
    dist: CouplingDistribution,
    n_samples: int,
    master_seed: int,
    geometries: Sequence[str] = ("chain_1d", "honeycomb_2d", "square_2d", "cube_3d"),
    workers: Optional[int] = None,
) -> Dict[int, TailEstimate]:
    """Long-time LN keyed by the number of exterior neighbours ``d``."""
    out: Dict[int, TailEstimate] = {}
    for name in geometries:
        g = GEOMETRIES[name] if name in GEOMETRIES else Geometry.from_name(name)
        out[g.d] = tail_window_estimate(g, dist, n_samples, master_seed, workers=workers)
        logger.info("d=%d (%s): long-time LN %.5f +- %.5f", g.d, g.kind, out[g.d].mean, out[g.d].sem)
    return dict(sorted(out.items()))
