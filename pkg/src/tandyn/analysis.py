"""Closed-form dynamical data of f(z) = lam + z + tan z.

Fixed points, critical points and values, the common multiplier of the
fixed points, a parameter-region label, the one-dimensional maps that
govern vertical lines, and a Newton-based preimage counter.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import DEFAULT_LIMITS, f_array, f_eval, f_prime_array, tan_array

ASINH1 = math.asinh(1.0)
SQRT2 = math.sqrt(2.0)
# Im(lam) above which every lower critical value sits in the closed upper half plane
HIGH_STRIP = SQRT2 + ASINH1
TRAP_DEPTH = -0.6658
REGION_TOL = 1e-9


class Region(enum.IntEnum):
    REAL_AXIS = 0
    ATTRACTING_LOBE = 1
    BAKER_STRIP = 2
    BAKER_STRIP_ALIGNED = 3
    HIGH_STRIP = 4
    WANDERING_LINE = 5
    OTHER = 6


class Half(enum.Enum):
    UPPER = 1
    LOWER = -1


class NoFixedPoints(ValueError):
    pass


@dataclass(frozen=True)
class ParamInfo:
    lam: complex
    conjugated: bool
    region: Region
    k: int | None = None  # lattice index for WANDERING_LINE

    @property
    def is_baker_strip(self):
        return self.region in (Region.BAKER_STRIP, Region.BAKER_STRIP_ALIGNED)


def _near_int(x, tol=REGION_TOL):
    k = round(x)
    return abs(x - k) <= tol, int(k)


def classify_region(lam):
    """Region label and wandering index for lam with Im(lam) >= 0."""
    lam = complex(lam)
    if lam.imag == 0.0:
        return Region.REAL_AXIS, None
    if abs(2 + lam * lam) < 1:
        return Region.ATTRACTING_LOBE, None
    if 0 < lam.imag < 1:
        aligned, _ = _near_int(lam.real / math.pi, REGION_TOL / math.pi)
        return (Region.BAKER_STRIP_ALIGNED if aligned else Region.BAKER_STRIP), None
    if lam.imag > HIGH_STRIP + REGION_TOL:
        return Region.HIGH_STRIP, None
    if abs(lam.imag - HIGH_STRIP) <= REGION_TOL:
        on_pole_line, _ = _near_int((lam.real - math.pi / 2) / math.pi, REGION_TOL / math.pi)
        if not on_pole_line:
            return Region.HIGH_STRIP, None
    if abs(lam.imag - math.pi / 2) <= REGION_TOL:
        hit, k = _near_int(lam.real / math.pi, REGION_TOL / math.pi)
        if hit and k != 0:
            return Region.WANDERING_LINE, k
    return Region.OTHER, None


def normalize_lambda(lam):
    """Reflect lam into the closed upper half plane and label its region.

    f_lam and f_{-lam} are conjugate through z -> -z, so a parameter with
    Im(lam) < 0 is replaced by -lam and ``conjugated`` is set.
    """
    lam = complex(lam)
    if not (math.isfinite(lam.real) and math.isfinite(lam.imag)):
        raise ValueError(f"lambda must be finite, got {lam!r}")
    conjugated = lam.imag < 0
    if conjugated:
        lam = -lam
    region, k = classify_region(lam)
    return ParamInfo(lam, conjugated, region, k)


def multiplier(lam):
    """Multiplier shared by every fixed point: 2 + lam^2."""
    lam = complex(lam)
    return 2 + lam * lam


def _arctan_principal(w):
    # arctan w = log((1 + iw) / (1 - iw)) / 2i, real part moved into (-pi/2, pi/2]
    z = cmath.log((1 + 1j * w) / (1 - 1j * w)) / 2j
    shift = math.floor((math.pi / 2 - z.real) / math.pi)
    return z + shift * math.pi if shift else z


def principal_fixed_point(lam, limits=DEFAULT_LIMITS):
    """The fixed point with real part in (-pi/2, pi/2], Newton-polished once."""
    lam = complex(lam)
    if abs(lam - 1j) == 0 or abs(lam + 1j) == 0:
        raise NoFixedPoints(f"tan z = {-lam} has no solution")
    z = _arctan_principal(-lam)
    t = complex(tan_array(z, limits))
    d = 1 + t * t
    if d != 0 and math.isfinite(t.real):
        z = z - (lam + t) / d
    return z


def fixed_points(lam, m_lo, m_hi, limits=DEFAULT_LIMITS):
    """Fixed points z_m = arctan(-lam) + m*pi for m in [m_lo, m_hi]."""
    if m_lo > m_hi:
        raise ValueError("m_lo must not exceed m_hi")
    z0 = principal_fixed_point(lam, limits)
    return [z0 + m * math.pi for m in range(m_lo, m_hi + 1)]


def critical_points(half, n_lo, n_hi):
    if n_lo > n_hi:
        raise ValueError("n_lo must not exceed n_hi")
    sign = Half(half).value
    return [complex(math.pi / 2 + n * math.pi, sign * ASINH1) for n in range(n_lo, n_hi + 1)]


def critical_values(lam, half, n_lo, n_hi):
    """lam + pi/2 + n*pi +- i(asinh 1 + sqrt 2)."""
    if n_lo > n_hi:
        raise ValueError("n_lo must not exceed n_hi")
    sign = Half(half).value
    lam = complex(lam)
    return [lam + complex(math.pi / 2 + n * math.pi, sign * HIGH_STRIP) for n in range(n_lo, n_hi + 1)]


# -- one-dimensional maps -------------------------------------------------

_C8 = math.cos(math.pi / 8)
_S8 = math.sin(math.pi / 8)
_SH13 = math.sinh(1.3316)
_CH13 = math.cosh(1.3316)


def phi(y, lam2):
    """Imaginary part of f along a line Re z = m*pi: lam2 + y + tanh y."""
    return lam2 + np.asarray(y, dtype=float) + np.tanh(y)


def _require_negative(y):
    y = np.asarray(y, dtype=float)
    if np.any(y >= 0):
        raise ValueError("g and g' are defined for y < 0 only")
    return y


def g(y):
    """Imaginary part of f along Re z = m*pi + pi/2 when Im(lam) = pi/2."""
    y = _require_negative(y)
    return math.pi / 2 + y + 1 / np.tanh(y)


def g_prime(y):
    y = _require_negative(y)
    return 2 - 1 / np.tanh(y) ** 2


def h1(x):
    return _S8 / (np.cosh(2 * np.asarray(x, dtype=float)) - _C8)


def h2(x):
    x = np.asarray(x, dtype=float)
    return math.pi / 2 + x + np.sinh(2 * x) / (np.cosh(2 * x) - _C8)


def h3(x):
    x = np.asarray(x, dtype=float)
    return math.pi / 2 + TRAP_DEPTH - _SH13 / (np.cos(2 * x) + _CH13)


@dataclass(frozen=True)
class ScalarMapKind:
    name: str
    lam2: float | None = None

    def __post_init__(self):
        if self.name not in _SCALAR_MAPS:
            raise ValueError(f"unknown scalar map {self.name!r}; expected one of {sorted(_SCALAR_MAPS)}")
        if self.name == "phi" and self.lam2 is None:
            raise ValueError("phi needs lam2")


_SCALAR_MAPS = {"phi", "g", "g_prime", "h1", "h2", "h3"}


def scalar_map(kind, y):
    """Evaluate one of the auxiliary real maps; ``kind`` is a ScalarMapKind or its name."""
    if isinstance(kind, str):
        kind = ScalarMapKind(kind)
    if kind.name == "phi":
        out = phi(y, kind.lam2)
    else:
        out = {"g": g, "g_prime": g_prime, "h1": h1, "h2": h2, "h3": h3}[kind.name](y)
    return float(out) if np.ndim(out) == 0 else out


def solve_g_fixed_point(lo=-2.0, hi=-0.1, tol=1e-15):
    """Attracting fixed point y0 of g and its multiplier g'(y0).

    Bisection on g(y) - y = pi/2 + coth y down to a narrow bracket, then
    Newton (the derivative of pi/2 + coth y is -csch^2 y).
    """
    h = lambda y: math.pi / 2 + 1 / math.tanh(y)
    if not h(lo) > 0 > h(hi):
        raise ValueError("bracket does not straddle the fixed point")
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    for _ in range(20):
        step = h(y) / (-1 / math.sinh(y) ** 2)
        y -= step
        if abs(step) < tol:
            break
    return y, float(g_prime(y))


# -- preimages ----------------------------------------------------------------


class PreimageCount(NamedTuple):
    count: int
    roots: np.ndarray
    no_roots_found: bool


def _newton_solve(lam, w, seeds, limits, max_iter=80):
    z = seeds.astype(complex).copy()
    done = np.zeros(z.shape, dtype=bool)
    dead = np.zeros(z.shape, dtype=bool)
    scale = 1 + abs(w)
    for _ in range(max_iter):
        act = ~(done | dead)
        if not act.any():
            break
        za = z[act]
        r = f_array(lam, za, limits) - w
        d = f_prime_array(za, limits)
        with np.errstate(all="ignore"):
            step = r / d
        bad = ~np.isfinite(step) | ~np.isfinite(r)
        step = np.where(bad, 0, step)
        zn = za - step
        ok = np.abs(r) < 1e-13 * scale
        ok |= (np.abs(step) < 1e-14 * (1 + np.abs(za))) & ~bad
        z[act] = zn
        idx = np.flatnonzero(act)
        done[idx[ok]] = True
        dead[idx[bad | (np.abs(zn) > 1e6)]] = True
    res = np.abs(f_array(lam, z, limits) - w)
    good = done & np.isfinite(res) & (res < 1e-9 * scale)
    return z[good]


def count_preimages(lam, w, strip_center_re, strip_halfwidth, im_range, seeds_per_axis=40,
                    limits=DEFAULT_LIMITS, dedup_tol=1e-6, critical_tol=1e-4):
    """Count solutions of f(z) = w in a vertical strip by Newton from a seed grid.

    Converged roots are sorted lexicographically and merged within
    ``dedup_tol``; a root where |f'| < ``critical_tol`` counts twice.  The
    result is a lower bound, not a certified count.
    """
    lam, w = complex(lam), complex(w)
    y_lo, y_hi = im_range
    xs = np.linspace(strip_center_re - strip_halfwidth, strip_center_re + strip_halfwidth, seeds_per_axis + 2)[1:-1]
    ys = np.linspace(y_lo, y_hi, seeds_per_axis + 2)[1:-1]
    seeds = (xs[None, :] + 1j * ys[:, None]).ravel()
    roots = _newton_solve(lam, w, seeds, limits)
    inside = (np.abs(roots.real - strip_center_re) <= strip_halfwidth) & (roots.imag >= y_lo) & (roots.imag <= y_hi)
    roots = roots[inside]
    roots = roots[np.lexsort((roots.imag, roots.real))]
    distinct = []
    for r in roots:
        if not any(abs(r - q) < dedup_tol for q in distinct):
            distinct.append(r)
    distinct = np.array(distinct, dtype=complex)
    if distinct.size == 0:
        return PreimageCount(0, distinct, True)
    mult = np.where(np.abs(f_prime_array(distinct, limits)) < critical_tol, 2, 1)
    return PreimageCount(int(mult.sum()), distinct, False)


def fixed_point_residual(lam, z, limits=DEFAULT_LIMITS):
    fz = f_eval(lam, z, limits)
    return abs(fz - z)
