import itertools

import numpy as np
import pytest

from pyqglass.common import ContractViolationError
from pyqglass.models.ea import LnTimeSeries
from pyqglass.models.lro import (
    CollectiveModel,
    ScalingFit,
    detect_collapse_revival,
    lro_ln_series,
    lro_pair_state,
    lro_pair_state_array,
    lro_triple_state,
    lro_triple_state_array,
    scaling_fit,
)
from pyqglass.oracle import build_hamiltonian, oracle_state

SWAP = [0, 2, 1, 3]


def test_initial_state_is_plus_plus():
    assert np.allclose(lro_pair_state(CollectiveModel(10), 0.0).entries, 0.25)
    assert np.allclose(lro_triple_state(CollectiveModel(10), 0.0).entries, 0.125)


def test_model_needs_three_spins():
    with pytest.raises(ContractViolationError):
        CollectiveModel(2)
    with pytest.raises(ContractViolationError):
        lro_triple_state(CollectiveModel(3), 1.0)
    with pytest.raises(ContractViolationError):
        lro_ln_series(CollectiveModel(5), [0.0, 1.0], cut="quad")


@pytest.mark.parametrize("n", [4, 8, 10, 12])
def test_closed_form_matches_oracle(n):
    model = CollectiveModel(n)
    h = build_hamiltonian(model)
    for t in (0.1, 1.0, 5.0, 10.0):
        assert np.max(np.abs(oracle_state(h, t, [0, 1]).entries - lro_pair_state(model, t).entries)) <= 1e-10
        assert np.max(np.abs(oracle_state(h, t, [0, 1, 2]).entries - lro_triple_state(model, t).entries)) <= 1e-10


def test_self_terms_leave_states_unchanged():
    model = CollectiveModel(6)
    with_self = build_hamiltonian(model)
    without = build_hamiltonian(model, include_self_terms=False)
    for t in (0.4, 3.0):
        assert np.allclose(oracle_state(with_self, t, [0, 1]).entries, oracle_state(without, t, [0, 1]).entries, atol=1e-12)


def test_pair_state_is_exchange_symmetric():
    for t in (0.3, 2.0, 17.0):
        rho = lro_pair_state(CollectiveModel(9), t).entries
        assert np.allclose(rho[np.ix_(SWAP, SWAP)], rho, atol=1e-15)


def test_state_is_pure_at_the_revival_time():
    model = CollectiveModel(20)
    rho = lro_pair_state(model, model.revival_period).entries
    assert np.allclose(np.abs(rho), 0.25, atol=1e-12)
    assert np.allclose(lro_pair_state(model, 2.0 * model.revival_period).entries, 0.25, atol=1e-12)


def test_collapse_and_revival_at_fifty_spins():
    model = CollectiveModel(50)
    times = np.arange(0.0, 200.0 + 1e-9, 0.05)
    series = lro_ln_series(model, times)
    assert series.n_samples == 1
    assert series.mean_ln[0] <= 1e-12
    report = detect_collapse_revival(series, threshold=1e-4, window=10)
    assert not report.inconclusive
    assert 0.0 < report.collapse_time < model.revival_period
    assert report.revival_times
    assert report.revival_period == pytest.approx(np.pi * 50 / 4.0, rel=0.03)
    assert report.revival_centers[0] == pytest.approx(model.revival_period, rel=0.03)


def test_zero_series_is_inconclusive():
    series = LnTimeSeries.deterministic(np.linspace(0.0, 10.0, 50), np.zeros(50))
    report = detect_collapse_revival(series)
    assert report.inconclusive
    assert report.collapse_time is None
    assert report.revival_period is None
    assert report.reason


def test_series_that_never_settles_is_inconclusive():
    times = np.linspace(0.0, 10.0, 100)
    series = LnTimeSeries.deterministic(times, 0.5 + 0.4 * np.sin(times))
    assert detect_collapse_revival(series).inconclusive


def test_scaling_fit_is_a_straight_line():
    fit = ScalingFit.of([1.0, 2.0, 3.0, 4.0], [1.0, 3.0, 5.0, 7.0], quantity="line")
    assert fit.slope == pytest.approx(2.0)
    assert fit.intercept == pytest.approx(-1.0)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.slope_ci[0] <= fit.slope <= fit.slope_ci[1]
    assert fit.extra == {"quantity": "line"}
    with pytest.raises(ContractViolationError):
        ScalingFit.of([1.0, 2.0], [1.0, 2.0])


def test_collapse_time_scales_as_square_root_of_size():
    collapse, revival = scaling_fit()
    assert collapse.slope == pytest.approx(0.5, abs=0.05)
    assert collapse.r_squared >= 0.99
    assert revival.slope == pytest.approx(np.pi / 4.0, rel=0.03)
    assert revival.r_squared >= 0.99
    assert len(collapse.extra["values"]) == 5


def test_triple_cut_can_be_entangled_while_the_pair_is_not():
    model = CollectiveModel(50)
    times = np.linspace(0.0, model.revival_period, 2001)
    pair = lro_ln_series(model, times).mean_ln
    triple = lro_ln_series(model, times, cut="triple").mean_ln
    assert np.any((pair <= 1e-10) & (triple > 1e-9))
    # at a quarter of the full period the pair is a balanced mixture of two Bell states
    quarter = lro_ln_series(model, [np.pi * 50 / 8.0]).mean_ln[0]
    assert quarter <= 1e-10


@pytest.mark.parametrize("perm", list(itertools.permutations(range(3))))
def test_triple_state_is_permutation_symmetric(perm):
    axes = list(perm) + [3 + k for k in perm]
    for t in (0.3, 2.0, 17.0):
        rho = lro_triple_state(CollectiveModel(9), t).entries
        permuted = rho.reshape((2,) * 6).transpose(axes).reshape(8, 8)
        assert np.allclose(permuted, rho, atol=1e-15)


def test_coherences_never_exceed_their_initial_magnitude():
    times = np.linspace(0.0, 60.0, 601)
    pair = lro_pair_state_array(24, times)
    triple = lro_triple_state_array(24, times)
    assert np.all(np.abs(pair) <= 0.25 + 1e-15)
    assert np.all(np.abs(triple) <= 0.125 + 1e-15)
    assert np.allclose(np.abs(pair[:, [0, 1, 2, 3], [0, 1, 2, 3]]), 0.25)


def test_halving_the_step_moves_no_time_by_more_than_a_step():
    model = CollectiveModel(50)
    coarse_step = 0.05
    reports = []
    for step, window in ((coarse_step, 10), (coarse_step / 2.0, 20)):
        times = np.arange(0.0, 180.0 + 1e-9, step)
        reports.append(detect_collapse_revival(lro_ln_series(model, times), threshold=1e-4, window=window))
    coarse, fine = reports
    assert not coarse.inconclusive and not fine.inconclusive
    tol = coarse_step + 1e-9
    assert abs(fine.collapse_time - coarse.collapse_time) <= tol
    assert len(fine.revival_times) == len(coarse.revival_times) == 4
    assert np.max(np.abs(np.subtract(fine.revival_times, coarse.revival_times))) <= tol
    assert np.max(np.abs(np.subtract(fine.revival_centers, coarse.revival_centers))) <= tol
    assert abs(fine.revival_period - coarse.revival_period) <= tol
