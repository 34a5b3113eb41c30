import math

import pytest

from chromabound import bisect_increasing, minimize_scalar


def test_quadratic_minimum():
    res = minimize_scalar(lambda x: (x - 1.3) ** 2 + 0.5, 0.0, 4.0)
    assert res.argmin == pytest.approx(1.3, abs=1e-7)
    assert res.value == pytest.approx(0.5, abs=1e-12)
    assert res.tolerance_met
    assert res.bracket[0] <= res.argmin <= res.bracket[1]


def test_nonsmooth_objective():
    res = minimize_scalar(lambda x: abs(x - math.pi), 0.0, 10.0)
    assert res.argmin == pytest.approx(math.pi, abs=1e-6)


def test_narrow_well_requires_fine_grid():
    f = lambda x: min((x - 2.0004) ** 2, 1.0) - (1.0 if abs(x - 2.0004) < 5e-4 else 0.0)
    res = minimize_scalar(f, 0.0, 10.0, grid_points=40000)
    assert res.argmin == pytest.approx(2.0004, abs=1e-3)


def test_divergent_endpoints_are_tolerated():
    # 1/x + x on (0, 4): the pole at the left endpoint must not poison
    # the scan.
    res = minimize_scalar(lambda x: 1.0 / x + x, 0.0, 4.0)
    assert res.argmin == pytest.approx(1.0, abs=1e-6)
    assert res.value == pytest.approx(2.0, abs=1e-9)


def test_no_finite_value_raises():
    with pytest.raises(ValueError):
        minimize_scalar(lambda x: float("nan"), 0.0, 1.0)


def test_bisect_on_exponential():
    root = bisect_increasing(math.exp, 5.0, 0.0)
    assert root == pytest.approx(math.log(5.0), abs=1e-10)


def test_bisect_with_explicit_bracket():
    root = bisect_increasing(lambda x: x**3, 8.0, 0.0, hi=3.0)
    assert root == pytest.approx(2.0, abs=1e-10)


def test_bisect_target_below_start():
    with pytest.raises(ValueError):
        bisect_increasing(math.exp, 0.5, 0.0)
