import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from bohr_kit.errors import InvalidCoefficients, MaxIterExceeded, NoSignChange
from bohr_kit.numerics import (Bracket, ToleranceConfig, find_root,
                               maximize_on_interval, stable_quadratic_root)


def quartic(t):
    return t**4 - 8 * t**3 + 7 * t**2 + 4 * t - 4


def test_find_root_linear():
    f = lambda x: x - 0.5
    assert find_root(f, Bracket.of(f, 0.0, 1.0)) == pytest.approx(0.5, abs=1e-12)


def test_find_root_quartic_matches_scan():
    # oracle: sign scan of the quartic on (0, 1) at step 1e-6
    ts = np.arange(1, 10**6) * 1e-6
    crossings = np.nonzero(np.diff(np.sign(quartic(ts))))[0]
    assert len(crossings) == 1
    lo_scan, hi_scan = ts[crossings[0]], ts[crossings[0] + 1]

    root = find_root(quartic, Bracket.of(quartic, 0.7, 0.9))
    assert lo_scan - 1e-12 <= root <= hi_scan + 1e-12
    assert root == pytest.approx(0.8034424062557383, abs=1e-11)


def test_find_root_classical_rogosinski():
    f = lambda r: 2 * r * 1 * (1 + r) - 1 * (1 - r) ** 2
    assert find_root(f, Bracket.of(f, 0.0, 1.0)) == pytest.approx(math.sqrt(5) - 2, abs=1e-12)


def test_find_root_no_sign_change():
    f = lambda x: x * x + 1
    with pytest.raises(NoSignChange):
        find_root(f, Bracket.of(f, -1.0, 1.0))


def test_find_root_max_iter():
    f = lambda x: x - 0.3
    with pytest.raises(MaxIterExceeded):
        find_root(f, Bracket.of(f, 0.0, 1.0), ToleranceConfig(max_iter=5))


def test_find_root_endpoint_root():
    f = lambda x: x
    assert find_root(f, Bracket.of(f, 0.0, 1.0)) == 0.0


@given(st.floats(0.001, 0.999), st.floats(0.5, 5.0))
def test_find_root_brackets_a_sign_change(c, slope):
    f = lambda x: slope * (x - c) ** 3
    x = find_root(f, Bracket.of(f, 0.0, 1.0))
    tol = 1e-12
    assert 0 <= x <= 1
    assert f(max(x - tol, 0.0)) <= 0 <= f(min(x + tol, 1.0))


def test_bracket_invariants():
    with pytest.raises(ValueError):
        Bracket(1.0, 1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        ToleranceConfig(grid_points=2)
    with pytest.raises(ValueError):
        ToleranceConfig(abs_tol=0)


def test_maximize_quadratic_peak():
    x, v = maximize_on_interval(lambda x: -(x - 0.25) ** 2, 0.0, 1.0)
    assert x == pytest.approx(0.25, abs=1e-12)
    assert v == pytest.approx(0.0, abs=1e-12)


def test_maximize_vectorized_matches_scalar():
    f = lambda x: np.sin(7 * x) * np.exp(-x)
    xs, vs = maximize_on_interval(f, 0.0, 2.0)
    xv, vv = maximize_on_interval(f, 0.0, 2.0, vectorized=True)
    assert xs == pytest.approx(xv, abs=1e-9)
    assert vs == pytest.approx(vv, abs=1e-14)


def test_maximize_degenerate_interval():
    assert maximize_on_interval(lambda x: x * x, 0.3, 0.3) == (0.3, 0.09)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 2.0))
def test_maximize_never_below_endpoints(c, d, width):
    f = lambda x: math.sin(c * x) + d * x * x
    _, v = maximize_on_interval(f, 0.0, width, ToleranceConfig(grid_points=33))
    assert v >= f(0.0) and v >= f(width)


def test_stable_quadratic_examples():
    assert stable_quadratic_root(0, 2, -1) == 0.5
    p, lam = 1.0, 0.5
    assert stable_quadratic_root(2 * lam - p, 2 * (lam + p), -p) == pytest.approx(1 / 3, abs=1e-15)
    p, lam = 1.0, 1.0
    assert stable_quadratic_root(2 * p, 2 * lam + p, -p) == pytest.approx((-3 + math.sqrt(17)) / 4,
                                                                         abs=1e-15)


def test_stable_quadratic_rejects_bad_coefficients():
    for coeffs in [(1, -1, -1), (1, 1, 1), (-10, 1, -1)]:
        with pytest.raises(InvalidCoefficients):
            stable_quadratic_root(*coeffs)


@given(st.floats(-10, 10), st.floats(0.01, 10), st.floats(-10, -0.01))
def test_stable_quadratic_residual(A, B, C):
    if B * B - 4 * A * C < 0:
        return
    x = stable_quadratic_root(A, B, C)
    assert x > 0
    assert abs(A * x * x + B * x + C) < 1e-10


@given(st.floats(0.01, 10), st.floats(-10, -0.01))
def test_stable_quadratic_continuous_at_linear_limit(B, C):
    # dx/dA ~ -x^2/B, so the bound is meaningful for roots in (0, 1], where radii live
    assume(-C / B <= 1)
    assert abs(stable_quadratic_root(1e-9, B, C) - stable_quadratic_root(-1e-9, B, C)) < 1e-6
