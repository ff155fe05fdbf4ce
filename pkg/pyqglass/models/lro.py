"""
Ordered long-range model ``H = S_z^2 / N`` and collapse/revival analysis of LN time series.

For ``k`` kept spins with ``a`` the sum of their spins in a basis row, the reduced state is

    rho[s, s'] = 2^{-k} exp(-i t (a^2 - a'^2) / N) cos(2 t (a - a') / N)^(N - k)

which is exact for every ``N > k``. The dynamics is periodic with period ``pi N / 2`` and the
pair log negativity revives every ``pi N / 4``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from pyqglass.common import ContractViolationError, canonical_digest
from pyqglass.models.ea import LnTimeSeries, _check_times
from pyqglass.qmat import DensityMatrix, batched_log_negativity

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 1e-4
DEFAULT_WINDOW = 10
# collapse level for the size-scaling fit, relative to the peak LN
SCALING_FRACTION = 0.01
SCALING_SIZES = (20, 40, 80, 160, 320)


@dataclass(frozen=True)
class CollectiveModel:
    n_spins: int

    def __post_init__(self):
        if self.n_spins < 3:
            raise ContractViolationError("collective model needs at least 3 spins", n_spins=self.n_spins)

    @property
    def revival_period(self) -> float:
        return np.pi * self.n_spins / 4.0


def _kept_sums(k: int) -> np.ndarray:
    index = np.arange(2 ** k)[:, None]
    bits = (index >> np.arange(k - 1, -1, -1)[None, :]) & 1
    return (1 - 2 * bits).sum(axis=1).astype(float)


def collective_state_array(n_spins: int, times: Sequence[float], k: int) -> np.ndarray:
    """Reduced states of ``k`` spins at each time, shape ``(T, 2^k, 2^k)``."""
    if not 1 <= k < n_spins:
        raise ContractViolationError("kept spins must satisfy 1 <= k < N", k=k, n_spins=n_spins)
    times = np.asarray(times, dtype=float)[:, None, None]
    a = _kept_sums(k)
    diff = a[:, None] - a[None, :]
    energy_gap = a[:, None] ** 2 - a[None, :] ** 2
    envelope = np.power(np.cos(2.0 * times * diff / n_spins), n_spins - k)
    return np.exp(-1j * times * energy_gap / n_spins) * envelope / 2 ** k


def lro_pair_state_array(n_spins: int, times: Sequence[float]) -> np.ndarray:
    return collective_state_array(n_spins, times, 2)


def lro_triple_state_array(n_spins: int, times: Sequence[float]) -> np.ndarray:
    return collective_state_array(n_spins, times, 3)


def lro_pair_state(model: CollectiveModel, t: float) -> DensityMatrix:
    return DensityMatrix(lro_pair_state_array(model.n_spins, [t])[0])


def lro_triple_state(model: CollectiveModel, t: float) -> DensityMatrix:
    return DensityMatrix(lro_triple_state_array(model.n_spins, [t])[0])


def lro_ln_series(model: CollectiveModel, times: Sequence[float], cut: str = "pair") -> LnTimeSeries:
    """LN of spin 1 against the rest of a kept pair (``cut="pair"``) or triple (``"triple"``)."""
    times = _check_times(times)
    if cut == "pair":
        values = batched_log_negativity(lro_pair_state_array(model.n_spins, times), n_qubits=2)
    elif cut == "triple":
        values = batched_log_negativity(lro_triple_state_array(model.n_spins, times), n_qubits=3)
    else:
        raise ContractViolationError("cut must be 'pair' or 'triple'", cut=cut)
    digest = canonical_digest({"kind": f"lro_{cut}", "n_spins": model.n_spins, "times": [float(t) for t in times]})
    return LnTimeSeries.deterministic(times, values, digest)


@dataclass
class CollapseRevivalReport:
    collapse_time: Optional[float]
    revival_times: List[float]
    revival_centers: List[float]
    revival_period: Optional[float]
    threshold: float
    inconclusive: bool = False
    reason: str = ""


def _above_runs(above: np.ndarray) -> List[Tuple[int, int]]:
    """Inclusive ``(start, end)`` index pairs of consecutive True entries."""
    padded = np.concatenate([[False], above, [False]]).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return [(int(s), int(e) - 1) for s, e in zip(edges[::2], edges[1::2])]


def detect_collapse_revival(
    series: LnTimeSeries,
    threshold: float = DEFAULT_THRESHOLD,
    window: int = DEFAULT_WINDOW,
    relative: bool = False,
) -> CollapseRevivalReport:
    """Collapse time and revival lobes of an LN series.

    The collapse time is the first grid time at which LN drops to ``threshold`` or below after
    having exceeded it, provided it stays there for ``window`` grid points. Later excursions
    above the threshold are grouped into lobes: gaps no longer than the initial rise of the
    first lobe count as the dip at a lobe's centre. ``revival_times`` are lobe onsets,
    ``revival_centers`` their midpoints, and the period is the mean spacing of
    ``0, centre_1, centre_2, ...``. Lobes cut off by the end of the grid are dropped.

    With ``relative=True`` the threshold is a fraction of the series maximum.
    """
    times = series.times
    ln = series.mean_ln
    level = threshold * float(ln.max()) if relative else threshold
    runs = _above_runs(ln > level)
    if not runs or level <= 0:
        return CollapseRevivalReport(None, [], [], None, level, True, "LN never exceeds the threshold")

    below = ~(ln > level)
    collapse_index = None
    first = 0
    for r, (_, end) in enumerate(runs):
        start = end + 1
        if start >= times.size:
            break
        if start + window <= times.size and below[start:start + window].all():
            collapse_index = start
            first = r
            break
    if collapse_index is None:
        return CollapseRevivalReport(None, [], [], None, level, True, "no collapse plateau within the grid")

    step = float(np.median(np.diff(times))) if times.size > 1 else 0.0
    rise = times[runs[0][0]] - times[0]
    merge_gap = 2.0 * rise + 2.0 * step

    lobes: List[List[int]] = []
    for start, end in runs[first + 1:]:
        if lobes and times[start] - times[lobes[-1][1]] <= merge_gap:
            lobes[-1][1] = end
        else:
            lobes.append([start, end])
    lobes = [lobe for lobe in lobes if lobe[1] < times.size - 1]

    onsets = [float(times[s]) for s, _ in lobes]
    centers = [0.5 * float(times[s] + times[e]) for s, e in lobes]
    period = float(np.mean(np.diff([0.0] + centers))) if centers else None
    report = CollapseRevivalReport(float(times[collapse_index]), onsets, centers, period, level)
    logger.debug("collapse at %.4g, %d revival lobes, period %s", report.collapse_time, len(lobes), period)
    return report


@dataclass
class ScalingFit:
    """Least-squares line ``y = slope * x + intercept`` with a 95% slope interval."""

    x: np.ndarray
    y: np.ndarray
    slope: float
    intercept: float
    slope_stderr: float
    r_squared: float
    slope_ci: Tuple[float, float] = (float("nan"), float("nan"))
    extra: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def of(cls, x: Sequence[float], y: Sequence[float], **extra) -> "ScalingFit":
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.size < 3:
            raise ContractViolationError("a scaling fit needs at least three points", points=x.size)
        fit = stats.linregress(x, y)
        half = stats.t.ppf(0.975, x.size - 2) * fit.stderr
        return cls(x, y, float(fit.slope), float(fit.intercept), float(fit.stderr), float(fit.rvalue ** 2),
                   (float(fit.slope - half), float(fit.slope + half)), dict(extra))


def scaling_grid(n_spins: int, step_factor: float = 0.01, span: float = 0.6) -> np.ndarray:
    """Uniform grid over ``[0, span * pi N]`` with step ``step_factor * sqrt(N)``."""
    step = step_factor * np.sqrt(n_spins)
    return np.arange(0.0, span * np.pi * n_spins + step / 2, step)


def scaling_fit(
    sizes: Sequence[int] = SCALING_SIZES,
    fraction: float = SCALING_FRACTION,
    window: int = DEFAULT_WINDOW,
) -> Tuple[ScalingFit, ScalingFit]:
    """Fit ``log tau_C`` against ``log N`` and ``tau_R`` against ``N``.

    Returns ``(collapse_fit, revival_fit)``; the collapse slope should be close to 1/2 and
    the revival slope close to ``pi / 4``.
    """
    collapse, revival = [], []
    for n in sizes:
        series = lro_ln_series(CollectiveModel(n), scaling_grid(n))
        report = detect_collapse_revival(series, fraction, window, relative=True)
        if report.inconclusive or report.revival_period is None:
            raise ContractViolationError("no collapse/revival found for the scaling fit", n_spins=n, reason=report.reason)
        collapse.append(report.collapse_time)
        revival.append(report.revival_period)
        logger.info("N=%d: tau_C=%.4g tau_R=%.4g", n, report.collapse_time, report.revival_period)
    sizes = np.asarray(sizes, dtype=float)
    return (
        ScalingFit.of(np.log(sizes), np.log(collapse), quantity="collapse_time", values=collapse),
        ScalingFit.of(sizes, revival, quantity="revival_period", values=revival),
    )
