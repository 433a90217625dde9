import math

import pytest

import usd


def test_two_state_bound_matches_idp():
    theta = math.pi / 8
    s = usd.two_state(theta)
    bound = usd.optimal_bound(s)
    assert bound == pytest.approx(1 - math.cos(2 * theta), abs=1e-12)
    assert bound == pytest.approx(usd.idp_limit(math.cos(2 * theta)), abs=1e-12)


def test_coherent_two_state_closed_form():
    moduli = usd.coherent_moduli(2, 1.0)
    assert moduli[0] == pytest.approx((1 + math.exp(-2)) / 2, abs=1e-13)
    assert moduli[1] == pytest.approx((1 - math.exp(-2)) / 2, abs=1e-13)


def test_degenerate_coefficients_raise():
    with pytest.raises(usd.UsdError):
        usd.symmetric_set([1.0, 0.0])


def test_simulation_is_zero_error_and_deterministic():
    s = usd.two_state(math.pi / 8)
    povm, bound = usd.optimal_povm(s)
    a = usd.run_trials(s, povm, 20000, 7)
    b = usd.run_trials(s, povm, 20000, 7)
    assert a.total_wrong() == 0
    assert a.empirical_success == b.empirical_success
    assert abs(a.empirical_success - bound) < 0.02


def test_sweep_and_crossings():
    grid = [0.1 * i for i in range(1, 51)]
    moduli, bound, argmin, nondecreasing = usd.coherent_bound_sweep(2, grid)
    assert nondecreasing
    for x, b in zip(grid, bound):
        assert b == pytest.approx(1 - math.exp(-2 * x), abs=1e-12)
    assert usd.find_crossings(2, 10.0) == []
    assert len(usd.find_crossings(10, 10.0)) > 0


def test_convexity_probe():
    assert usd.convexity_probe([2, 3, 4], 4, 50, 1) >= -1e-10
