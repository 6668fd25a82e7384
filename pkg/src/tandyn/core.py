"""Evaluation of tan z, the map f(z) = lam + z + tan z, its derivative and orbits.

Scalar entry points return python ``complex`` values or the ``AT_INFINITY``
marker.  The ``*_array`` variants work elementwise on numpy arrays and flag
pole hits with ``inf + inf*j`` so they can be masked with ``np.isinf``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AT_INFINITY",
    "AtInfinity",
    "EvalLimits",
    "DEFAULT_LIMITS",
    "pole_distance",
    "near_pole",
    "tan_stable",
    "tan_array",
    "f_eval",
    "f_array",
    "f_prime",
    "f_prime_array",
    "orbit",
]


class AtInfinity:
    """Marker for results that left the plane (pole hits, blow-up)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_INFINITY"

    def __reduce__(self):
        return (AtInfinity, ())


AT_INFINITY = AtInfinity()

_INF = complex(math.inf, math.inf)


@dataclass(frozen=True)
class EvalLimits:
    y_sat: float = 20.0
    blowup: float = 1e15
    pole_eps: float = 1e-12

    def __post_init__(self):
        if not (self.y_sat >= 2 and self.blowup > 0 and self.pole_eps > 0):
            raise ValueError(f"invalid limits: {self}")


DEFAULT_LIMITS = EvalLimits()


def pole_distance(z):
    """Distance from z to the nearest real pole pi/2 + m*pi."""
    z = np.asarray(z, dtype=complex)
    m = np.round((z.real - np.pi / 2) / np.pi)
    return np.hypot(z.real - (np.pi / 2 + m * np.pi), z.imag)


def near_pole(z, limits=DEFAULT_LIMITS):
    return pole_distance(z) < limits.pole_eps


def _tan_parts(x, y, y_sat):
    # tan(x+iy) = (sin x cos x + i sinh y cosh y) / (cos^2 x + sinh^2 y),
    # the same split formula with the denominator cos 2x + cosh 2y halved
    # into a sum of squares (no cancellation next to the poles).
    s, c = np.sin(x), np.cos(x)
    ay = np.abs(y)
    big = ay >= y_sat
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        ys = np.where(big, 0.0, y)
        sh, ch = np.sinh(ys), np.cosh(ys)
        den = c * c + sh * sh
        re = s * c / den
        im = sh * ch / den
        # |y| >= y_sat: multiply through by 2 exp(-2|y|); exact, overflow free
        t = np.exp(-2.0 * ay)
        c2 = c * c - s * s
        s2 = 2.0 * s * c
        den_a = 1.0 + 2.0 * t * c2 + t * t
        re_a = 2.0 * t * s2 / den_a
        im_a = np.sign(y) * (1.0 - t * t) / den_a
    return np.where(big, re_a, re), np.where(big, im_a, im)


def tan_array(z, limits=DEFAULT_LIMITS):
    """Elementwise tan z; pole hits become inf+inf*j."""
    z = np.asarray(z, dtype=complex)
    re, im = _tan_parts(z.real, z.imag, limits.y_sat)
    out = re + 1j * im
    return np.where(near_pole(z, limits), _INF, out)


def tan_stable(z, limits=DEFAULT_LIMITS):
    """tan z for a finite complex z, or AT_INFINITY on a real pole."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"tan_stable needs a finite point, got {z!r}")
    w = complex(tan_array(z, limits))
    return AT_INFINITY if math.isinf(w.real) else w


def f_array(lam, z, limits=DEFAULT_LIMITS):
    return lam + np.asarray(z, dtype=complex) + tan_array(z, limits)


def f_eval(lam, z, limits=DEFAULT_LIMITS):
    """lam + z + tan z, propagating AT_INFINITY from a pole hit."""
    t = tan_stable(z, limits)
    if t is AT_INFINITY:
        return AT_INFINITY
    return complex(lam) + complex(z) + t


def f_prime_array(z, limits=DEFAULT_LIMITS):
    t = tan_array(z, limits)
    return 2.0 + t * t


def f_prime(z, limits=DEFAULT_LIMITS):
    """Derivative 1 + sec^2 z = 2 + tan^2 z (independent of lam)."""
    t = tan_stable(z, limits)
    if t is AT_INFINITY:
        return AT_INFINITY
    return 2.0 + t * t


def orbit(lam, z0, n, limits=DEFAULT_LIMITS):
    """[z0, f(z0), ..., f^n(z0)], cut short at a pole hit or blow-up.

    A pole hit appends AT_INFINITY as the last element; a point beyond
    ``limits.blowup`` is kept and iteration stops there.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    z = complex(z0)
    out = [z]
    for _ in range(n):
        if abs(z) > limits.blowup:
            break
        z = f_eval(lam, z, limits)
        out.append(z)
        if z is AT_INFINITY:
            break
    return out
