"""
Hopfield-type model ``H = (1/N) sum_mu w_mu (sum_i xi_mu^i s_i)^2`` with random +-1 patterns.

With ``h_mu(s1, s2) = xi_mu^1 s1 + xi_mu^2 s2`` the reduced state of spins 1 and 2 is

    rho[s, s'] = 1/4 exp(-i t sum_mu w_mu (h_mu^2 - h'_mu^2) / N)
                 * prod_{k>=3} cos(2 t sum_mu w_mu xi_mu^k (h_mu - h'_mu) / N)

The four coherence classes are ``<00|01>`` (``h - h' = 2 xi^2``), ``<00|10>``
(``2 xi^1``), ``<00|11>`` (``2 (xi^1 + xi^2)``) and ``<01|10>`` (``2 (xi^1 - xi^2)``); for
unit weights the first two carry the factor ``cos(4 t m_k / N)`` with the pattern overlap
``m_k = sum_mu xi_mu^k xi_mu^2``.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.stats import binom

from pyqglass.common import ContractViolationError, canonical_digest
from pyqglass.models.ea import LnTimeSeries, _check_times
from pyqglass.models.lro import DEFAULT_WINDOW, ScalingFit, detect_collapse_revival
from pyqglass.qmat import DensityMatrix, batched_log_negativity
from pyqglass.sampling import block_generator, fair_signs, iter_blocks, sample_moments

logger = logging.getLogger(__name__)

SELF_AVERAGING_MIN_N = 100
SELF_AVERAGING_MAX_T_OVER_N = 0.1
PATTERN_COUNTS = (1, 2, 4, 8)
# collapse level for the pattern-scaling fit, relative to the peak of the quenched mean
PATTERN_FRACTION = 0.5

_BASIS = np.array([[1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=float)
_UPPER = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@dataclass
class PatternSet:
    """``p`` stored patterns over ``N`` sites with per-pattern scales ``lambda_mu``."""

    xi: np.ndarray
    lambdas: Optional[np.ndarray] = None

    def __post_init__(self):
        self.xi = np.atleast_2d(np.asarray(self.xi)).astype(np.int8)
        if not np.all(np.abs(self.xi) == 1):
            raise ContractViolationError("pattern entries must be +-1")
        if self.n_spins < 3:
            raise ContractViolationError("patterns need at least 3 sites", n_spins=self.n_spins)
        if self.lambdas is None:
            self.lambdas = np.ones(self.p)
        self.lambdas = np.asarray(self.lambdas, dtype=float).reshape(-1)
        if self.lambdas.shape != (self.p,) or np.any(self.lambdas <= 0):
            raise ContractViolationError("need one positive lambda per pattern", lambdas=self.lambdas.tolist())

    @property
    def p(self) -> int:
        return int(self.xi.shape[0])

    @property
    def n_spins(self) -> int:
        return int(self.xi.shape[1])

    @property
    def weights(self) -> np.ndarray:
        return 1.0 / self.lambdas ** 2

    @property
    def revival_period(self) -> float:
        return expected_revival_period(self.p, self.n_spins)

    def couplings(self) -> np.ndarray:
        """``J_ij = (1/N) sum_mu w_mu xi_mu^i xi_mu^j``."""
        xi = self.xi.astype(float)
        return (xi.T * self.weights) @ xi / self.n_spins

    @classmethod
    def all_plus(cls, p: int, n_spins: int) -> "PatternSet":
        return cls(np.ones((p, n_spins), dtype=np.int8))


def expected_revival_period(p: int, n_spins: int) -> float:
    """``pi N / 4`` for odd ``p`` and ``pi N / 8`` for even ``p`` (unit weights)."""
    return np.pi * n_spins / (4.0 if p % 2 else 8.0)


def sample_patterns(p: int, n_spins: int, seed: int, lambdas: Optional[Sequence[float]] = None) -> PatternSet:
    if p < 1:
        raise ContractViolationError("need at least one pattern", p=p)
    rng = block_generator(seed, 0)
    return PatternSet(fair_signs(rng, (p, n_spins)), None if lambdas is None else np.asarray(lambdas, dtype=float))


def nn_pair_state_array(patterns: PatternSet, times: Sequence[float]) -> np.ndarray:
    """Reduced states of spins 1 and 2, shape ``(T, 4, 4)``."""
    times = np.asarray(times, dtype=float)
    n = patterns.n_spins
    xi = patterns.xi.astype(float)
    w = patterns.weights
    h = _BASIS @ xi[:, :2].T
    rest = xi[:, 2:]

    rho = np.zeros((times.size, 4, 4), dtype=np.complex128)
    idx = np.arange(4)
    rho[:, idx, idx] = 0.25
    for a, b in _UPPER:
        gap = float(np.sum(w * (h[a] ** 2 - h[b] ** 2)))
        g = (w * (h[a] - h[b])) @ rest
        envelope = np.prod(np.cos(2.0 * np.outer(times, g) / n), axis=1)
        value = 0.25 * np.exp(-1j * times * gap / n) * envelope
        rho[:, a, b] = value
        rho[:, b, a] = np.conj(value)
    return rho


def nn_pair_state(patterns: PatternSet, t: float) -> DensityMatrix:
    if t < 0:
        raise ContractViolationError("time must be non-negative", t=t)
    return DensityMatrix(nn_pair_state_array(patterns, [t])[0])


def _ln_block(rng: np.random.Generator, count: int, p: int, n_spins: int, times: np.ndarray, lambdas: Optional[np.ndarray]) -> np.ndarray:
    out = np.empty((count, times.size))
    for i in range(count):
        patterns = PatternSet(fair_signs(rng, (p, n_spins)), lambdas)
        out[i] = batched_log_negativity(nn_pair_state_array(patterns, times))
    return out


def quenched_nn_ln_series(
    p: int,
    n_spins: int,
    times: Sequence[float],
    n_samples: int,
    master_seed: int,
    workers: Optional[int] = None,
    lambdas: Optional[Sequence[float]] = None,
) -> LnTimeSeries:
    """Nearest-pair LN averaged over random pattern sets."""
    times = _check_times(times)
    lam = None if lambdas is None else np.asarray(lambdas, dtype=float)
    logger.info("hopfield LN: p=%d N=%d, %d samples x %d times", p, n_spins, n_samples, times.size)
    moments = sample_moments(
        partial(_ln_block, p=p, n_spins=n_spins, times=times, lambdas=lam), n_samples, master_seed, workers
    )
    digest = canonical_digest(
        {
            "kind": "hopfield_quenched_ln",
            "p": p,
            "n_spins": n_spins,
            "lambdas": None if lam is None else lam.tolist(),
            "times": [float(t) for t in times],
            "n_samples": n_samples,
            "seed": master_seed,
        }
    )
    return LnTimeSeries(times, np.maximum(moments.mean, 0.0), moments.std, moments.sem, n_samples, digest)


@dataclass
class SelfAveragingReport:
    times: np.ndarray
    empirical: np.ndarray
    sem: np.ndarray
    expected: np.ndarray
    law: np.ndarray
    max_rel_dev: float
    regime_ok: bool
    notes: List[str] = field(default_factory=list)


def _overlap_product_block(rng: np.random.Generator, count: int, p: int, n_spins: int, times: np.ndarray) -> np.ndarray:
    xi = fair_signs(rng, (count, p, n_spins))
    overlaps = np.einsum("cpk,cp->ck", xi[:, :, 2:], xi[:, :, 1])
    values = np.arange(-p, p + 1, 2)
    counts = (overlaps[:, :, None] == values[None, None, :]).sum(axis=1)
    cosines = np.cos(4.0 * np.outer(values, times) / n_spins)
    return np.prod(np.power(cosines[None, :, :], counts[:, :, None]), axis=1)


def overlap_cosine_expectation(p: int, n_spins: int, times: Sequence[float]) -> np.ndarray:
    """Exact ``E[cos(4 t m / N)]^(N-2)`` for ``m`` a sum of ``p`` fair signs."""
    times = np.asarray(times, dtype=float)
    ups = np.arange(p + 1)
    values = 2 * ups - p
    weights = binom.pmf(ups, p, 0.5)
    mean_cos = weights @ np.cos(4.0 * np.outer(values, times) / n_spins)
    return np.power(mean_cos, n_spins - 2)


def self_averaging_check(
    p: int,
    n_spins: int,
    times: Sequence[float],
    n_samples: int,
    master_seed: int,
    workers: Optional[int] = None,
) -> SelfAveragingReport:
    """Compare the sampled overlap product ``prod_k cos(4 t m_k / N)`` with ``exp(-8 t^2 p / N)``."""
    times = _check_times(times)
    notes = []
    if n_spins < SELF_AVERAGING_MIN_N:
        notes.append(f"N={n_spins} below {SELF_AVERAGING_MIN_N}: Gaussian law not expected to hold")
    if times.max() / n_spins > SELF_AVERAGING_MAX_T_OVER_N:
        notes.append(f"t/N={times.max() / n_spins:.3g} above {SELF_AVERAGING_MAX_T_OVER_N}: Gaussian law not expected to hold")
    for note in notes:
        warnings.warn(note, RuntimeWarning, stacklevel=2)
        logger.warning(note)

    moments = sample_moments(
        partial(_overlap_product_block, p=p, n_spins=n_spins, times=times), n_samples, master_seed, workers
    )
    law = np.exp(-8.0 * times ** 2 * p / n_spins)
    rel_dev = np.abs(moments.mean - law) / law
    return SelfAveragingReport(
        times=times,
        empirical=moments.mean,
        sem=moments.sem,
        expected=overlap_cosine_expectation(p, n_spins, times),
        law=law,
        max_rel_dev=float(rel_dev.max()),
        regime_ok=not notes,
        notes=notes,
    )


def pattern_grid(p: int, n_spins: int, step_factor: float = 0.01, span: float = 0.6) -> np.ndarray:
    """Uniform grid over ``[0, span * pi N]`` with step ``step_factor * sqrt(N / p)``."""
    step = step_factor * np.sqrt(n_spins / p)
    return np.arange(0.0, span * np.pi * n_spins + step / 2, step)


def pattern_scaling_fit(
    pattern_counts: Sequence[int] = PATTERN_COUNTS,
    n_spins: int = 200,
    n_samples: int = 32,
    master_seed: int = 0,
    fraction: float = PATTERN_FRACTION,
    step_factor: float = 0.01,
    workers: Optional[int] = None,
) -> ScalingFit:
    """Fit ``log tau_C`` against ``log p``; the slope should be close to -1/2.

    ``extra["revival_periods"]`` maps each ``p`` to the measured revival period.
    """
    collapse: List[float] = []
    periods: Dict[int, Optional[float]] = {}
    for p in pattern_counts:
        series = quenched_nn_ln_series(p, n_spins, pattern_grid(p, n_spins, step_factor), n_samples, master_seed, workers)
        report = detect_collapse_revival(series, fraction, DEFAULT_WINDOW, relative=True)
        if report.inconclusive:
            raise ContractViolationError("no collapse found for the pattern-scaling fit", p=p, reason=report.reason)
        collapse.append(report.collapse_time)
        periods[p] = report.revival_period
        logger.info("p=%d: tau_C=%.4g tau_R=%s", p, report.collapse_time, report.revival_period)
    return ScalingFit.of(
        np.log(np.asarray(pattern_counts, dtype=float)),
        np.log(collapse),
        quantity="collapse_time",
        n_spins=n_spins,
        values=collapse,
        revival_periods=periods,
    )


def revival_period(
    p: int,
    n_spins: int,
    n_samples: int = 16,
    master_seed: int = 0,
    fraction: float = PATTERN_FRACTION,
    step_factor: float = 0.01,
    workers: Optional[int] = None,
    per_realisation: bool = False,
) -> Optional[float]:
    """Revival period measured from the quenched nearest-pair LN.

    With ``per_realisation`` the period is detected on every pattern set separately and the
    median is returned instead.
    """
    if per_realisation:
        periods = realisation_revival_periods(p, n_spins, n_samples, master_seed, fraction, step_factor)
        periods = periods[np.isfinite(periods)]
        return float(np.median(periods)) if periods.size else None
    series = quenched_nn_ln_series(p, n_spins, pattern_grid(p, n_spins, step_factor), n_samples, master_seed, workers)
    return detect_collapse_revival(series, fraction, DEFAULT_WINDOW, relative=True).revival_period


def realisation_revival_periods(
    p: int,
    n_spins: int,
    n_samples: int = 16,
    master_seed: int = 0,
    fraction: float = PATTERN_FRACTION,
    step_factor: float = 0.01,
) -> np.ndarray:
    """Revival period of each pattern set, ``nan`` where none is found.

    The pattern sets are the ones ``quenched_nn_ln_series`` averages for the same seed.
    """
    times = pattern_grid(p, n_spins, step_factor)
    periods: List[float] = []
    for block, count in iter_blocks(n_samples):
        rows = _ln_block(block_generator(master_seed, block), count, p, n_spins, times, None)
        for row in rows:
            report = detect_collapse_revival(LnTimeSeries.deterministic(times, row), fraction, DEFAULT_WINDOW, relative=True)
            periods.append(np.nan if report.revival_period is None else report.revival_period)
    return np.asarray(periods)
