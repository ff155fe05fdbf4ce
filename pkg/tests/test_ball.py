import math

import numpy as np
import pytest

from pyqglass.common import DomainError
from pyqglass.models.ball import (
    REFERENCE_E6,
    ball_volume,
    compare_estimate_to_measurement,
    decay_ratio,
    estimate_e_d,
    monte_carlo_volume,
    sphere_surface_coeff,
)
from pyqglass.sampling import block_generator


def test_sphere_surface_coefficients():
    assert sphere_surface_coeff(2) == pytest.approx(2.0 * math.pi, rel=1e-13)
    assert sphere_surface_coeff(3) == pytest.approx(4.0 * math.pi, rel=1e-13)
    assert sphere_surface_coeff(6) == pytest.approx(math.pi ** 3, rel=1e-13)
    with pytest.raises(DomainError):
        sphere_surface_coeff(0)


def test_e6_at_zero_radius():
    estimate = estimate_e_d(6)
    expected = 63.0 * 1.5 ** 3 * math.pi ** 3 / (6.0 * (2.0 * math.pi) ** 6)
    assert estimate.e_d == pytest.approx(expected, rel=1e-12)
    assert estimate.e_d == pytest.approx(0.01786, abs=5e-6)
    assert estimate.volume == pytest.approx(math.pi ** 3 * 1.5 ** 3 / 6.0, rel=1e-12)


def test_radius_outside_domain_is_rejected():
    with pytest.raises(DomainError):
        estimate_e_d(6, math.sqrt(3.0) / 2.0)
    with pytest.raises(DomainError):
        estimate_e_d(6, -0.1)
    with pytest.raises(DomainError):
        ball_volume(0)


@pytest.mark.parametrize("radius", [0.0, 0.2, 0.4])
def test_estimate_decreases_with_neighbour_count(radius):
    values = [estimate_e_d(d, radius).e_d for d in (2, 4, 6, 10)]
    assert all(0.0 < v < 1.0 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("d, radius", [(2, 0.0), (4, 0.2), (6, 0.4), (8, 0.0)])
def test_decay_ratio_closed_form(d, radius):
    rho2 = (3.0 - 4.0 * radius ** 2) / 2.0
    expected = (
        (2.0 ** (d + 2) - 1.0) / (2.0 ** d - 1.0)
        * rho2 / (2.0 * math.pi) ** 2
        * sphere_surface_coeff(d + 2) * d / (sphere_surface_coeff(d) * (d + 2))
    )
    assert decay_ratio(d, radius) == pytest.approx(expected, rel=1e-12)
    assert decay_ratio(d, radius) < 1.0


def test_large_dimension_stays_finite():
    estimate = estimate_e_d(200)
    assert 0.0 < estimate.e_d < 1e-100


@pytest.mark.parametrize("d, radius", [(3, 0.0), (6, 0.2)])
def test_monte_carlo_volume_agrees_with_formula(d, radius):
    volume, error = monte_carlo_volume(d, radius, 1_000_000, block_generator(17, d))
    assert abs(volume - ball_volume(d, radius)) <= 3.0 * error


def test_comparison_with_measured_value():
    comparison = compare_estimate_to_measurement(6, 0.0, 0.0154)
    assert comparison.ratio == pytest.approx(1.16, abs=0.01)
    assert comparison.passed
    assert not comparison.degenerate
    assert comparison.reference == REFERENCE_E6
    assert REFERENCE_E6 / 0.0154 == pytest.approx(1.44, abs=0.01)

    far = compare_estimate_to_measurement(6, 0.0, 0.001)
    assert not far.passed


def test_zero_measurement_is_degenerate():
    comparison = compare_estimate_to_measurement(4, 0.0, 0.0)
    assert comparison.degenerate
    assert comparison.ratio is None
    assert not comparison.passed
    assert comparison.reference is None
    assert np.isfinite(comparison.estimate.e_d)
