import math

import numpy as np
import pytest

from tandyn.analysis import Region, fixed_points, multiplier, normalize_lambda
from tandyn.classify import (
    DEFAULT_CONFIG,
    ClassifyConfig,
    Fate,
    classify,
    classify_array,
    classify_orbit,
    in_trap_region,
)
from tandyn.core import AT_INFINITY, orbit, pole_distance

PI = math.pi
ASINH1 = math.asinh(1.0)
WANDER = PI + 1j * PI / 2


class TestTrapRegion:
    def test_examples(self):
        assert in_trap_region(PI / 2 - 0.7j, 0)
        assert not in_trap_region(PI / 2 + PI / 16 - 0.7j, 0)
        assert in_trap_region(complex(3 * PI / 2, -0.7248), 1)

    def test_depth_is_inclusive(self):
        assert in_trap_region(complex(PI / 2, -0.6658), 0)
        assert not in_trap_region(complex(PI / 2, -0.6657), 0)

    def test_vectorized(self):
        z = np.array([PI / 2 - 1j, PI / 2 + 1j, 3 * PI / 2 - 1j])
        assert in_trap_region(z, 0).tolist() == [True, False, False]


class TestConfig:
    def test_defaults(self):
        assert DEFAULT_CONFIG == ClassifyConfig(1000, 50.0, -50.0, 1e-9, 5)

    @pytest.mark.parametrize("kw", [{"budget": 0}, {"y_up": -1.0}, {"y_down": 1.0}, {"trap_patience": 0}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            ClassifyConfig(**kw)


class TestExamples:
    @pytest.mark.parametrize("lam", [1.5j, 0.2 + 0.1j, PI + 3j, -4 + 0.7j])
    def test_upper_half_plane(self, lam):
        out = classify(lam, 1j)
        assert out.fate is Fate.PRIMARY_BAKER and out.steps <= 1

    def test_lower_baker(self):
        out = classify(PI + 0.5j, PI / 2 - 2j)
        assert out.fate is Fate.LOWER_BAKER
        assert out.last.imag < -50

    def test_wandering(self):
        out = classify(WANDER, complex(PI / 2, -ASINH1))
        assert out.fate is Fate.WANDERING_STRIP and out.index == 1

    def test_attracting_fixed(self):
        (zs,) = fixed_points(1.5j, 0, 0)
        out = classify(1.5j, zs + 0.05)
        assert out.fate is Fate.ATTRACTING_FIXED and out.index == 0
        assert abs(out.last - zs) < 1e-8
        # oracle: plain iteration until the step is below 1e-12
        z = zs + 0.05
        for _ in range(200):
            z, prev = 1.5j + z + np.tan(z), z
            if abs(z - prev) < 1e-12:
                break
        assert abs(z - zs) < 1e-11

    def test_attracting_fixed_translate(self):
        (zs,) = fixed_points(1.5j, 0, 0)
        assert classify(1.5j, zs + PI + 0.05).index == 1
        assert classify(1.5j, zs - 2 * PI + 0.05).index == -2

    def test_pole(self):
        out = classify(1.5j, PI / 2)
        assert out.fate is Fate.POLE_HIT and out.index == 0 and out.steps == 0

    def test_budget_exhausted(self):
        out = classify(PI + 0.5j, PI / 2 - 2j, ClassifyConfig(budget=3))
        assert out.fate is Fate.UNDECIDED and out.steps == 3

    def test_reflected_parameter(self):
        # f_{-lam}(z) = -f_lam(-z): the fate of -z0 under f_lam, with payloads mirrored
        out = classify(-WANDER, complex(-PI / 2, ASINH1))
        assert out.fate is Fate.WANDERING_STRIP and out.index == -1
        assert out.last.imag > 0
        (zs,) = fixed_points(1.5j, 1, 1)
        out = classify(-1.5j, -zs - 0.05)
        assert out.fate is Fate.ATTRACTING_FIXED and out.index == -1

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            classify_orbit(normalize_lambda(1j), complex(math.inf, 0))


def _seeds(n=1000, seed=0):
    rng = np.random.default_rng(seed)
    x = np.round(rng.uniform(-2 * PI, 0.85, n) * 2.0**44) / 2.0**44
    return x + 1j * rng.uniform(-4, 4, n)


@pytest.mark.parametrize("lam", [1.5j, WANDER, PI + 0.5j, 0.3 + 1.2j])
def test_translation_consistency(lam):
    p = normalize_lambda(lam)
    z = _seeds()
    fa, _, _, ia = classify_array(p.lam, p.region, p.k or 0, z)
    fb, _, _, ib = classify_array(p.lam, p.region, p.k or 0, z + PI)
    assert np.array_equal(fa, fb)
    fixed = fa == Fate.ATTRACTING_FIXED
    assert np.array_equal(ib[fixed], ia[fixed] + 1)
    wand = fa == Fate.WANDERING_STRIP
    assert np.array_equal(ib[wand], ia[wand])


@pytest.mark.parametrize("lam", [1.5j, WANDER, PI + 0.5j, 2.0 + 2.5j])
def test_primary_baker_is_sound(lam):
    p = normalize_lambda(lam)
    for z0 in _seeds(200, seed=1):
        out = classify_orbit(p, z0)
        if out.fate is not Fate.PRIMARY_BAKER:
            continue
        pts = orbit(p.lam, z0, out.steps)
        assert AT_INFINITY not in pts
        assert pts[-1] == out.last
        assert out.last.imag >= 0 and pole_distance(out.last) > 1e-12


def test_lobe_fixed_points_attract():
    p = normalize_lambda(0.3 + 1.2j)
    assert p.region is Region.ATTRACTING_LOBE
    assert abs(multiplier(p.lam)) < 1
    fa, _, last, idx = classify_array(p.lam, p.region, 0, _seeds(300))
    for z, m in zip(last[fa == Fate.ATTRACTING_FIXED], idx[fa == Fate.ATTRACTING_FIXED]):
        (zs,) = fixed_points(p.lam, int(m), int(m))
        assert abs(z - zs) < 1e-8


def test_wandering_stays_trapped():
    p = normalize_lambda(WANDER)
    z = _seeds(500, seed=2)
    fa, steps, last, _ = classify_array(p.lam, p.region, p.k, z)
    hits = np.flatnonzero(fa == Fate.WANDERING_STRIP)
    assert hits.size > 0
    for i in hits[:50]:
        pts = orbit(p.lam, last[i], 200)
        m0 = round((last[i].real - PI / 2) / PI)
        for n, w in enumerate(pts):
            assert in_trap_region(w, m0 + n)


def test_deterministic():
    p = normalize_lambda(1.5j)
    z = _seeds(400, seed=3)
    a = classify_array(p.lam, p.region, 0, z)
    b = classify_array(p.lam, p.region, 0, z)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)
    assert classify_orbit(p, z[0]) == classify_orbit(p, z[0])


def test_split_independence():
    p = normalize_lambda(WANDER)
    z = _seeds(300, seed=4)
    whole = classify_array(p.lam, p.region, p.k, z)
    parts = [classify_array(p.lam, p.region, p.k, c) for c in np.array_split(z, 7)]
    for j in range(4):
        assert np.array_equal(whole[j], np.concatenate([q[j] for q in parts]))
