"""Acceptance gate: one test per criterion, at the pinned tolerances.

Every test records its measurement before asserting, so the terminal
summary shows a PASS/FAIL line for each criterion even when some fail.
"""
import math

import numpy as np

from tandyn import analysis as an
from tandyn.classify import Fate, in_trap_region
from tandyn.core import f_array, f_prime, orbit
from tandyn.raster import FATE_PALETTE, GridSpec, render_dynamical, write_ppm
from tandyn.verify import degree_probes, run_check, trap_samples

PI = math.pi
DEPTH = -0.6658
WANDER = PI + 1j * PI / 2


def test_criterion_1_constants(record):
    y0, mult = an.solve_g_fixed_point()
    exact = 0.5 * math.log((PI - 2) / (PI + 2))
    e_y, e_m = abs(y0 - exact), abs(an.g_prime(y0) - (2 - PI**2 / 4))
    ok = e_y < 1e-10 and e_m < 1e-9 and abs(y0 - (-0.7524)) < 1e-4
    record(1, ok, f"y0={y0:.10f} |err|={e_y:.1e} (tol 1e-10); g'(y0)={mult:.10f} |err|={e_m:.1e} (tol 1e-9)")
    assert ok


def test_criterion_2_estimates(record):
    x = np.linspace(-20.0, DEPTH, 100_000)
    h1 = an.h1(x)
    v1 = int(np.count_nonzero(~((h1 > 0) & (h1 < PI / 8))))
    v2 = int(np.count_nonzero(an.h2(x) > DEPTH + 1e-9))
    v3 = 0
    for m in range(-3, 4):
        c = m * PI + PI / 2
        v3 += int(np.count_nonzero(an.h3(np.linspace(c - PI / 16, c + PI / 16, 100_000)) >= DEPTH))
    s1 = float(an.h1(DEPTH))
    s3 = an.h3(np.array([PI / 2 - PI / 16, PI / 2 + PI / 16]))
    spots = abs(s1 - 0.3473) <= 5e-4 and np.all(np.abs(s3 + 0.6939) <= 5e-4)
    ok = v1 == v2 == v3 == 0 and spots
    record(2, ok, f"violations h1={v1} h2={v2} (max h2={an.h2(x).max():.10f}) h3={v3}; "
                  f"h1(-0.6658)={s1:.6f} h3(ends)={s3[0]:.6f},{s3[1]:.6f}")
    assert ok


def test_criterion_3_trap_invariance(record):
    z = trap_samples(np.random.default_rng(1), n=10_000)
    escapes, worst = 0, -math.inf
    for k in (1, 2, 3):
        w = f_array(k * PI + 1j * PI / 2, z)
        escapes += int(np.count_nonzero(~in_trap_region(w, k)))
        worst = max(worst, float(w.imag.max()))
    ok = escapes == 0
    record(3, ok, f"{escapes} escapes over {3 * z.size} images; highest image Im={worst:.10f} (bound {DEPTH})")
    assert ok


def test_criterion_4_multiplier(record):
    rng = np.random.default_rng(7)
    worst, n, above = 0.0, 0, 0
    while n < 100:
        lam = complex(rng.uniform(-3, 3), rng.uniform(0, 3))
        if lam.imag == 0 or abs(lam - 1j) < 1e-3:
            continue
        n += 1
        for z in an.fixed_points(lam, -3, 3):
            worst = max(worst, abs(f_prime(z) - (2 + lam**2)))
            above += z.imag >= 0
    ok = worst < 1e-8 and above == 0
    record(4, ok, f"max |f'(z*)-(2+lam^2)|={worst:.2e} (tol 1e-8) over 100 lam x 7 translates; Im z*>=0: {above}")
    assert ok


def test_criterion_5_symmetries(record):
    a = run_check("pi-equivariance", 1)
    b = run_check("conjugacy", 1)
    ok = a.max_error < 1e-12 and b.max_error < 1e-12 and a.samples >= 10_000 and b.samples >= 10_000
    record(5, ok, f"pi-equivariance {a.max_error:.2e}, conjugacy {b.max_error:.2e} (tol 1e-12, 1e4 samples)")
    assert ok


def test_criterion_6_wandering_orbit(record):
    c0 = complex(PI / 2, -math.asinh(1.0))
    pts = orbit(WANDER, c0, 50)
    im1 = pts[1].imag
    im50 = pts[50].imag
    steps = max(abs(b.real - a.real - PI) for a, b in zip(pts, pts[1:]))
    ok = abs(im1 + 0.7248) <= 5e-4 and abs(im50 + 0.7524) <= 1e-3 and steps <= 1e-9
    record(6, ok, f"Im f(c0)={im1:.6f}; Im f^50(c0)={im50:.6f}; max |dRe - pi|={steps:.1e}")
    assert ok


def test_criterion_7_degree(record):
    misses = []
    for w, centre in degree_probes():
        res = an.count_preimages(WANDER, w, centre, PI / 2 - 1e-9, (w.imag - PI / 2 - 1.0, -1e-9))
        if res.count != 2:
            misses.append(f"{w:.4f}->{res.count}")
    ok = len(misses) <= 1
    record(7, ok, f"{10 - len(misses)}/10 probes count 2" + (f"; misses: {', '.join(misses)}" if misses else ""))
    assert ok


def test_criterion_8_rasters(record, tmp_path):
    spec = GridSpec.from_bounds(-2 * PI, 2 * PI, -4, 4, 256, 256)
    lobe = render_dynamical(an.normalize_lambda(1.5j), spec)
    upper = spec.im_axis() > 0
    upper_ok = bool(np.all(lobe.cells[upper] == Fate.PRIMARY_BAKER))
    frac_fixed = float(np.mean(lobe.cells == Fate.ATTRACTING_FIXED))
    high = render_dynamical(an.normalize_lambda(PI + 3j), spec).counts()
    high_bad = high[Fate.ATTRACTING_FIXED] + high[Fate.LOWER_BAKER] + high[Fate.WANDERING_STRIP]
    p = an.normalize_lambda(WANDER)
    one = write_ppm(render_dynamical(p, spec, workers=1), FATE_PALETTE, tmp_path / "1.ppm").read_bytes()
    eight = write_ppm(render_dynamical(p, spec, workers=8), FATE_PALETTE, tmp_path / "8.ppm").read_bytes()
    ok = upper_ok and frac_fixed >= 0.01 and high_bad == 0 and one == eight
    record(8, ok, f"(a) upper rows primary={upper_ok}, fixed fraction={frac_fixed:.3f}; "
                  f"(b) forbidden fates={high_bad}; (c) 1 vs 8 workers identical={one == eight}")
    assert ok


def test_criterion_9_baker_strip(record):
    lam = PI + 0.99j
    z = PI / 2 + 1j * np.linspace(-10.0, -0.1, 20)
    reached = np.zeros(z.size, dtype=bool)
    for _ in range(2000):
        z = f_array(lam, z)
        reached |= z.imag < -50
    ok = bool(reached.all())
    record(9, ok, f"{int(reached.sum())}/20 orbits below Im -50 within 2000 steps; "
                  f"Im after 2000 steps in [{z.imag.min():.2f}, {z.imag.max():.2f}]")
    assert ok
