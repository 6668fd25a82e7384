"""Named numerical checks of the quantitative facts about f(z) = lam + z + tan z.

Each check samples densely, measures a worst-case error or counts
violations, and compares against a fixed tolerance.  Checks are pure
functions of ``(name, seed)``.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import analysis as an
from .classify import in_trap_region
from .core import f_array, f_prime_array, pole_distance

__all__ = ["CheckResult", "VerifyReport", "CHECKS", "run_check", "run_all"]


@dataclass
class CheckResult:
    name: str
    max_error: float
    tolerance: float
    samples: int
    passed: bool
    note: str = ""
    violations: int = 0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<18} max_error={self.max_error:.3e} tol={self.tolerance:.1e} {status}  {self.note}".rstrip()


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self):
        return all(r.passed for r in self.results)

    def to_text(self):
        return "\n".join(r.line() for r in self.results)

    def to_json(self):
        return json.dumps({"all_passed": self.all_passed, "results": [asdict(r) for r in self.results]}, indent=2)


def _result(name, err, tol, samples, violations=0, note=""):
    err = float(err)
    return CheckResult(name, err, tol, int(samples), bool(err <= tol and violations == 0), note, int(violations))


def _random_lambdas(rng, n, im=(0.05, 3.0), re=(-3.0, 3.0)):
    return rng.uniform(*re, n) + 1j * rng.uniform(*im, n)


def _translation_samples(rng, n):
    # Re z on a 2^-44 grid inside [-2pi, 0.85]: then z + pi is exact in binary64
    # and the identity is tested on the map, not on the rounding of the input.
    out = np.empty(0, dtype=complex)
    while out.size < n:
        x = np.round(rng.uniform(-2 * math.pi, 0.85, 2 * n) * 2.0**44) / 2.0**44
        z = x + 1j * rng.uniform(-4, 4, 2 * n)
        keep = (pole_distance(z) >= 1e-3) & (pole_distance(z + math.pi) >= 1e-3)
        out = np.concatenate([out, z[keep]])
    return out[:n]


def check_pi_equivariance(seed, tol=1e-12):
    rng = np.random.default_rng(seed)
    z = _translation_samples(rng, 10_000)
    lam = _random_lambdas(rng, z.size)
    err = np.abs(f_array(lam, z + math.pi) - (f_array(lam, z) + math.pi))
    return _result("pi-equivariance", err.max(), tol, z.size)


def check_conjugacy(seed, tol=1e-12):
    rng = np.random.default_rng(seed)
    z = _translation_samples(rng, 10_000)
    lam = _random_lambdas(rng, z.size)
    err = np.abs(-f_array(-lam, -z) - f_array(lam, z))
    return _result("conjugacy", err.max(), tol, z.size)


def check_line_map(seed, tol=1e-12):
    rng = np.random.default_rng(seed)
    lams = _random_lambdas(rng, 20, re=(-5, 5))
    y = np.linspace(-30, 30, 2001)
    worst, bad, n = 0.0, 0, 0
    for lam in lams:
        for m in range(-5, 6):
            w = f_array(lam, m * math.pi + 1j * y)
            worst = max(worst, np.abs(w.real - (m * math.pi + lam.real)).max())
            bad += int(np.count_nonzero(np.diff(w.imag) <= 0))
            n += y.size
    return _result("line-map", worst, tol, n, bad, f"non-increasing steps: {bad}")


def check_phi_drift(seed, tol=0.0, y_up=50.0):
    rng = np.random.default_rng(seed)
    lam2 = rng.uniform(1.5, 3.0, 20)
    y = np.linspace(-10, 10, 201)
    bad = 0
    for l2 in lam2:
        bad += int(np.count_nonzero(an.phi(y, l2) - y < l2 - 1))
        yy = y.copy()
        for _ in range(200):
            yy = an.phi(yy, l2)
        bad += int(np.count_nonzero(yy <= y_up))
    return _result("phi-drift", bad, tol, lam2.size * y.size, bad)


def check_critical_set(seed, tol=1e-10):
    rng = np.random.default_rng(seed)
    worst, n = 0.0, 0
    for half in an.Half:
        c = np.array(an.critical_points(half, -10, 10))
        worst = max(worst, np.abs(f_prime_array(c)).max())
        for lam in _random_lambdas(rng, 10):
            cv = np.array(an.critical_values(lam, half, -10, 10))
            worst = max(worst, np.abs(f_array(lam, c) - cv).max())
            n += c.size
    return _result("critical-set", worst, tol, n)


def check_fixed_multiplier(seed, tol=1e-8):
    rng = np.random.default_rng(seed)
    lams = []
    while len(lams) < 100:
        lam = complex(rng.uniform(-3, 3), rng.uniform(0, 3))
        if lam.imag > 0 and abs(lam - 1j) > 0.05:
            lams.append(lam)
    worst, bad, n = 0.0, 0, 0
    for lam in lams:
        z = np.array(an.fixed_points(lam, -3, 3))
        worst = max(worst, np.abs(f_prime_array(z) - an.multiplier(lam)).max())
        bad += int(np.count_nonzero(z.imag >= 0))
        bad += int(np.count_nonzero(np.abs(f_array(lam, z) - z) >= 1e-9))
        n += z.size
    return _result("fixed-multiplier", worst, tol, n, bad)


def check_g_map(seed, tol=1e-10):
    rng = np.random.default_rng(seed)
    y0, mult = an.solve_g_fixed_point()
    closed = 0.5 * math.log((math.pi - 2) / (math.pi + 2))
    err = abs(y0 - closed)
    bad = int(abs(mult - (2 - math.pi**2 / 4)) > 1e-9)
    bad += int(not abs(mult) < 1)
    eps = np.array([1e-6, 1e-3, 0.1, 0.5])
    bad += int(np.count_nonzero(an.g_prime(-an.ASINH1 - eps) <= 0))
    bad += int(np.count_nonzero(an.g_prime(np.minimum(-an.ASINH1 + eps, -1e-9)) >= 0))
    # trapping interval [-asinh 1, pi/2 - asinh 1 - sqrt 2]; g sends the left
    # end exactly onto the right end
    a, b = -an.ASINH1, math.pi / 2 - an.ASINH1 - an.SQRT2
    ys = np.concatenate([np.linspace(a, b, 5000), rng.uniform(a, b, 5000)])
    gy = an.g(ys)
    bad += int(np.count_nonzero((gy < a - 1e-12) | (gy > b + 1e-12)))
    it = ys.copy()
    for _ in range(200):
        it = an.g(it)
    bad += int(np.count_nonzero(np.abs(it - y0) > 1e-10))
    note = f"y0={y0:.6f} multiplier={mult:.6f}"
    return _result("g-map", err, tol, ys.size, bad, note)


ESTIMATE_GRID = (-20.0, an.TRAP_DEPTH)


def check_estimates_1(seed, tol=5e-4):
    x = np.linspace(*ESTIMATE_GRID, 100_000)
    h = an.h1(x)
    bad = int(np.count_nonzero(~((h > 0) & (h < math.pi / 8))))
    spot = float(an.h1(an.TRAP_DEPTH))
    return _result("estimates-1", abs(spot - 0.3473), tol, x.size, bad, f"h1(-0.6658)={spot:.6f}")


def check_estimates_2(seed, tol=1e-9):
    x = np.linspace(*ESTIMATE_GRID, 100_000)
    h = an.h2(x)
    excess = h - an.TRAP_DEPTH
    bad = int(np.count_nonzero(excess > tol))
    i = int(np.argmax(h))
    note = f"max h2={h[i]:.10f} at x={x[i]:.5f}; points above bound: {bad}"
    return _result("estimates-2", max(excess.max(), 0.0), tol, x.size, bad, note)


def check_estimates_3(seed, tol=5e-4):
    xs = []
    for m in range(-2, 3):
        c = m * math.pi + math.pi / 2
        xs.append(np.linspace(c - math.pi / 16, c + math.pi / 16, 20_000))
    x = np.concatenate(xs)
    bad = int(np.count_nonzero(an.h3(x) >= an.TRAP_DEPTH))
    ends = an.h3(np.array([math.pi / 2 - math.pi / 16, math.pi / 2 + math.pi / 16]))
    err = float(np.abs(ends + 0.6939).max())
    return _result("estimates-3", err, tol, x.size, bad, f"h3 at ends={ends[0]:.6f}")


def trap_samples(rng, n=10_000, depth=an.TRAP_DEPTH, floor=-8.0):
    """Points of the closure of R_0: random interior plus grids on its three edges.

    The edge grids on the two vertical sides also carry the point where the
    image of that side comes closest to leaving the region.
    """
    c, hw = math.pi / 2, math.pi / 16
    n_edge = n // 5
    n_int = n - 3 * n_edge
    interior = rng.uniform(c - hw, c + hw, n_int) + 1j * rng.uniform(floor, depth, n_int)
    interior = interior[np.abs(interior.real - c) < hw]
    x_star = minimize_scalar(lambda t: -float(an.h2(t)), bounds=(floor, depth), method="bounded",
                             options={"xatol": 1e-12}).x
    ys = np.sort(np.append(np.linspace(floor, depth, n_edge - 1), x_star))
    l1 = (c - hw) + 1j * ys
    l2 = (c + hw) + 1j * ys
    l3 = np.linspace(c - hw, c + hw, n_edge) + 1j * depth
    return np.concatenate([interior, l1, l2, l3])


def check_trap_invariance(seed, tol=0.0):
    rng = np.random.default_rng(seed)
    z = trap_samples(rng)
    bad, worst_im, n = 0, -math.inf, 0
    for k in (1, 2, 3):
        w = f_array(k * math.pi + 1j * math.pi / 2, z)
        miss = ~in_trap_region(w, k)
        bad += int(np.count_nonzero(miss))
        worst_im = max(worst_im, w.imag.max())
        n += z.size
    note = f"highest image Im={worst_im:.10f} vs bound {an.TRAP_DEPTH}; escapes: {bad}"
    return _result("trap-invariance", bad, tol, n, bad, note)


def check_half_line_map(seed, tol=1e-9):
    y = -an.ASINH1 - np.concatenate([[0.0], np.geomspace(1e-6, 30, 2000)])
    worst, bad, n = 0.0, 0, 0
    for k in (-2, -1, 1, 2, 3):
        lam = k * math.pi + 1j * math.pi / 2
        for m in range(-3, 4):
            w = f_array(lam, m * math.pi + math.pi / 2 + 1j * y)
            worst = max(worst, np.abs(w.real - ((m + k) * math.pi + math.pi / 2)).max())
            bad += int(np.count_nonzero(w.imag >= 0))
            n += y.size
    return _result("half-line-map", worst, tol, n, bad)


def degree_probes(k=1, n=10):
    """Targets w_j deep in R_{(j+1)k}, paired with the strip around R_{jk}."""
    out = []
    for j in range(n):
        w = complex((j + 1) * k * math.pi + math.pi / 2 + 0.1 * math.sin(j), -0.8 - 0.35 * j)
        out.append((w, j * k * math.pi + math.pi / 2))
    return out


def check_degree_2(seed, tol=0.0):
    lam = math.pi + 1j * math.pi / 2
    misses = []
    for w, centre in degree_probes():
        res = an.count_preimages(lam, w, centre, math.pi / 2 - 1e-9, (w.imag - math.pi / 2 - 1.0, -1e-9))
        if res.count != 2:
            misses.append((w, res.count))
    note = "misses: " + ", ".join(f"{w:.4f}->{c}" for w, c in misses) if misses else ""
    return _result("degree-2", len(misses), tol, 10, len(misses), note)


def check_vertical_line_up(seed, tol=0.0, budget=1000, y_up=50.0):
    y = np.linspace(-20, 20, 41)
    bad, n = 0, 0
    for k in range(-2, 3):
        for lam2 in (1.1, 1.5, 2.0, 3.0):
            lam = k * math.pi + 1j * lam2
            z = (np.arange(-2, 3)[:, None] * math.pi + 1j * y[None, :]).ravel()
            up = np.zeros(z.size, dtype=bool)
            for _ in range(budget):
                z = f_array(lam, z)
                up |= z.imag > y_up
                if up.all():
                    break
            bad += int(np.count_nonzero(~up))
            n += z.size
    return _result("vertical-line-up", bad, tol, n, bad)


CHECKS = {
    "pi-equivariance": check_pi_equivariance,
    "conjugacy": check_conjugacy,
    "line-map": check_line_map,
    "phi-drift": check_phi_drift,
    "critical-set": check_critical_set,
    "fixed-multiplier": check_fixed_multiplier,
    "g-map": check_g_map,
    "estimates-1": check_estimates_1,
    "estimates-2": check_estimates_2,
    "estimates-3": check_estimates_3,
    "trap-invariance": check_trap_invariance,
    "half-line-map": check_half_line_map,
    "degree-2": check_degree_2,
    "vertical-line-up": check_vertical_line_up,
}


def run_check(name, seed=1, tol=None):
    """Run one registered check; ``tol`` overrides its shipped tolerance."""
    try:
        fn = CHECKS[name]
    except KeyError:
        raise KeyError(f"unknown check {name!r}; registered: {', '.join(CHECKS)}") from None
    return fn(seed) if tol is None else fn(seed, tol=tol)


def run_all(seed=1, tolerances=None):
    tolerances = tolerances or {}
    return VerifyReport([run_check(name, seed, tolerances.get(name)) for name in CHECKS])
