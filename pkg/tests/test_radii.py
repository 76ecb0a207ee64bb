import math
import threading

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import brentq

from bohr_kit import (InvalidParams, TheoremParams, classify_region, defining_value,
                      lemma26_branch_radii, literal_radius, sharp_radius, tstar)
from bohr_kit.errors import DomainError
from bohr_kit.radii import Theorem, tstar_quartic

from grids import grid_for

P = TheoremParams.of


@pytest.mark.parametrize("p, lam, region", [
    (0.5, 2.0, "I"),
    (1.2, 1.0, "II"),
    (2.0, 1.0, "outside"),
    (1.0, 100.0, "I"),
    (1.5, 1.35, "II"),        # both boundaries are closed
    (1.5, 1.36, "outside"),
])
def test_classify_region(p, lam, region):
    assert classify_region(p, lam) == region


@pytest.mark.parametrize("p, lam", [(0, 1), (1, 0), (-1, 1)])
def test_classify_region_invalid(p, lam):
    with pytest.raises(InvalidParams):
        classify_region(p, lam)


@pytest.mark.parametrize("theorem, kwargs", [
    ("32", dict(p=1.5, lam=1)),
    ("32", dict(p=1, lam=0)),
    ("33", dict(t=1.0, p=0.5)),
    ("33", dict(t=0.5, p=0)),
    ("34", dict(t=0)),
    ("12", dict(n=1)),
    ("12", dict(n=2.5)),
    ("31", dict(p=1)),
    ("34", dict(t=0.5, p=1)),
])
def test_params_validation(theorem, kwargs):
    with pytest.raises(InvalidParams):
        P(theorem, **kwargs)


def test_unknown_theorem():
    with pytest.raises(InvalidParams):
        Theorem.parse("35")


def test_rogosinski_type_radius():
    res = sharp_radius("31", P("31", p=1, lam=1))
    assert res.value == pytest.approx(math.sqrt(5) - 2, abs=1e-15)
    assert res.region == "I"


def test_t31_outside_region_still_computed():
    res = sharp_radius("31", P("31", p=2, lam=1))
    assert res.region == "outside"
    assert 0 < res.value < 1


def test_t33_half_weight():
    # oracle: brentq on Q(r)
    Q = lambda r: 0.5 * 1 * (1 - r) ** 2 + 0.5 * (1 - 3 * r) * (1 + r)
    expected = brentq(Q, 0, 1, xtol=1e-15)
    assert sharp_radius("33", P("33", t=0.5, p=1)).value == pytest.approx(expected, abs=1e-13)
    assert expected == pytest.approx(math.sqrt(2) - 1, abs=1e-13)


def test_t34_half_weight():
    l = lambda r: 2 * 0.5 * r * r + 1.5 * r - 0.5
    res = sharp_radius("34", P("34", t=0.5))
    assert res.value == pytest.approx(brentq(l, 0, 0.5, xtol=1e-15), abs=1e-13)
    assert res.value == pytest.approx(0.2807764064044151, abs=1e-13)
    assert res.branch == "t<t*"


def test_t12_n2_against_fine_scan():
    rs = np.arange(1, 5 * 10**6) * 1e-7
    f = (1 + rs) * (1 - 2 * rs) * (1 - rs) - 2 * rs**2
    i = np.nonzero(np.diff(np.sign(f)))[0][0]
    value = sharp_radius("12", P("12", n=2)).value
    assert rs[i] - 1e-12 <= value <= rs[i + 1] + 1e-12
    assert value == pytest.approx(0.35541, abs=1e-4)


def test_defining_value_examples():
    assert defining_value("31", 0.0, P("31", p=0.7, lam=3)) == -0.7
    assert defining_value("32", 0.5, P("32", p=0.4, lam=2.5)) == pytest.approx(2.5, abs=1e-15)
    assert defining_value("33", 0.999999999, P("33", t=0.3, p=0.5)) == pytest.approx(-4 * 0.7, abs=1e-7)
    with pytest.raises(DomainError):
        defining_value("33", 1.0, P("33", t=0.3, p=0.5))


def test_defining_value_rejects_foreign_params():
    with pytest.raises(InvalidParams):
        defining_value("32", 0.1, P("31", p=1, lam=1))


def test_tstar_scan_and_residual():
    ts = np.arange(1, 10**6) * 1e-6
    i = np.nonzero(np.diff(np.sign(tstar_quartic(ts))))[0]
    assert len(i) == 1
    assert ts[i[0]] - 1e-12 <= tstar() <= ts[i[0] + 1] + 1e-12
    assert 0.80 < tstar() < 0.81
    assert tstar_quartic(0.80) < 0 < tstar_quartic(0.81)
    assert abs(tstar_quartic(tstar())) < 1e-10


def test_tstar_unique_on_coarse_scan():
    ts = np.arange(1, 10**4) * 1e-4
    assert len(np.nonzero(np.diff(np.sign(tstar_quartic(ts))))[0]) == 1


def test_tstar_concurrent_first_call():
    import bohr_kit.radii as radii
    radii._tstar_value = None
    results = []
    threads = [threading.Thread(target=lambda: results.append(tstar())) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(set(results)) == 1


def _literal_branch_radii(t):
    return ((t - 2 + math.sqrt(9 * t * t - 4 * t + 4)) / (4 * t),
            (4 - t - math.sqrt(t * t - 8 * t + 8)) / 4)


@pytest.mark.parametrize("t, expected", [
    (0.5, (0.2807764064044151, 0.3596117967977924)),
    (0.9, (0.4647458124367804, 0.4577855614887620)),
])
def test_branch_radii(t, expected):
    r1, r2 = lemma26_branch_radii(t)
    assert (r1, r2) == pytest.approx(_literal_branch_radii(t), abs=1e-13)
    assert (r1, r2) == pytest.approx(expected, abs=1e-13)
    assert (r1 < r2) == (t < tstar())


def test_branch_radii_cross_at_tstar():
    r1, r2 = lemma26_branch_radii(tstar())
    assert abs(r1 - r2) < 1e-6
    res = sharp_radius("34", P("34", t=tstar()))
    assert res.branch == "t=t*" and res.value == r1


@pytest.mark.parametrize("theorem", ["31", "32", "33", "34"])
def test_residual_small_on_grid(theorem):
    for params in grid_for(theorem, 12):
        res = sharp_radius(theorem, params)
        assert abs(defining_value(theorem, res.value, params)) < 1e-10
        assert res.residual == defining_value(theorem, res.value, params)
        assert 0 < res.value < 1
        if theorem in ("32", "34"):
            assert res.value < 0.5


@pytest.mark.parametrize("theorem", ["31", "33"])
def test_stable_matches_literal_away_from_split(theorem):
    for params in grid_for(theorem, 12):
        if theorem == "31" and abs(2 * params.lam - params.p) <= 1e-3:
            continue
        if theorem == "33" and abs(params.t * params.p - 3 + 3 * params.t) <= 1e-3:
            continue
        assert sharp_radius(theorem, params).value == pytest.approx(
            literal_radius(theorem, params), abs=1e-12)


def test_t31_continuity_at_split():
    for lam in [0.1, 0.6, 2.0]:
        for eps in (1e-9, -1e-9):
            v = sharp_radius("31", P("31", p=2 * lam, lam=lam + eps)).value
            assert abs(v - 1 / 3) < 1e-6
    assert sharp_radius("31", P("31", p=1, lam=0.5)).branch == "p=2λ"


def test_t33_continuity_at_split():
    for p in [0.25, 0.5, 1.0]:
        t0 = 3 / (p + 3)
        assert sharp_radius("33", P("33", t=t0, p=p)).value == pytest.approx(0.5, abs=1e-15)
        for eps in (1e-9, -1e-9):
            assert abs(sharp_radius("33", P("33", t=t0 + eps, p=p)).value - 0.5) < 1e-6


@pytest.mark.parametrize("p", [0.05, 0.3, 0.7, 1.0])
def test_t33_classical_limit(p):
    assert abs(sharp_radius("33", P("33", t=1e-9, p=p)).value - 1 / 3) <= 1e-6


def test_t34_same_code_path_as_branch_radii():
    for params in grid_for("34", 64):
        r1, r2 = lemma26_branch_radii(params.t)
        expected = r1 if params.t < tstar() else r2
        assert sharp_radius("34", params).value == expected


def test_t12_strictly_increasing():
    values = [sharp_radius("12", P("12", n=n)).value for n in range(2, 11)]
    assert all(b > a for a, b in zip(values, values[1:]))


@given(st.floats(1e-3, 1.0), st.floats(1e-3, 20.0))
def test_t32_radius_below_half(p, lam):
    res = sharp_radius("32", P("32", p=p, lam=lam))
    assert 0 < res.value < 0.5
    assert abs(res.residual) < 1e-10
