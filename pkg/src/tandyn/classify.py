"""Orbit fates from sufficient conditions.

Every label except ``UNDECIDED`` is backed by an invariant set: the closed
upper half plane minus the poles lies in the primary Baker domain, a deep
lower half plane lies in the second Baker domain of the strip 0 < Im(lam) < 1,
attracting fixed points are detected by convergence, and the regions R_m
are carried into R_{m+k} on the wandering lines.  Anything else is
``UNDECIDED`` rather than guessed.

The work is done by :func:`classify_array`, which iterates many seeds (and
possibly many parameters) at once with numpy.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .analysis import TRAP_DEPTH, Region, _arctan_principal, normalize_lambda
from .core import DEFAULT_LIMITS, f_array, pole_distance

__all__ = [
    "Fate",
    "ClassifyConfig",
    "OrbitOutcome",
    "in_trap_region",
    "classify_orbit",
    "classify",
    "classify_array",
]


class Fate(enum.IntEnum):
    UNDECIDED = 0
    PRIMARY_BAKER = 1
    LOWER_BAKER = 2
    ATTRACTING_FIXED = 3
    WANDERING_STRIP = 4
    POLE_HIT = 5


@dataclass(frozen=True)
class ClassifyConfig:
    budget: int = 1000
    y_up: float = 50.0
    y_down: float = -50.0
    fp_tol: float = 1e-9
    trap_patience: int = 5

    def __post_init__(self):
        if self.budget < 1 or not self.y_up > 0 > self.y_down or self.trap_patience < 1:
            raise ValueError(f"invalid config: {self}")


DEFAULT_CONFIG = ClassifyConfig()


@dataclass(frozen=True)
class OrbitOutcome:
    """Fate of one orbit.

    ``index`` holds the fate payload: the fixed-point translate m for
    ATTRACTING_FIXED, the sign of k for WANDERING_STRIP and the step for
    POLE_HIT; it is None otherwise.
    """

    fate: Fate
    steps: int
    last: complex
    index: int | None = None


_HALF_WIDTH = math.pi / 16


def in_trap_region(z, m, depth=TRAP_DEPTH):
    """|Re z - (m*pi + pi/2)| < pi/16 and Im z <= depth."""
    z = np.asarray(z, dtype=complex)
    out = (np.abs(z.real - (m * math.pi + math.pi / 2)) < _HALF_WIDTH) & (z.imag <= depth)
    return bool(out) if out.ndim == 0 else out


def _principal_fixed_re(lam):
    lam = np.atleast_1d(lam)
    return np.array([_arctan_principal(-complex(v)).real if v not in (1j, -1j) else 0.0 for v in lam])


def classify_array(lam, region, k, z0, cfg=DEFAULT_CONFIG, limits=DEFAULT_LIMITS):
    """Classify many orbits at once.

    ``lam``, ``region`` (Region codes), ``k`` (wandering index, 0 if none)
    and ``z0`` broadcast to a common 1-d shape; parameters must already be
    normalized (Im lam >= 0).  Returns ``(fate, steps, last, index)`` arrays.
    Rows never interact, so any split of the inputs gives the same answer.
    """
    z0 = np.atleast_1d(np.asarray(z0, dtype=complex)).ravel()
    n = z0.size
    lam = np.broadcast_to(np.asarray(lam, dtype=complex), (n,)).copy()
    region = np.broadcast_to(np.asarray(region, dtype=np.int8), (n,)).copy()
    k = np.broadcast_to(np.asarray(k, dtype=np.int64), (n,)).copy()

    fate = np.full(n, Fate.UNDECIDED, dtype=np.int8)
    steps = np.full(n, cfg.budget, dtype=np.int64)
    index = np.zeros(n, dtype=np.int64)
    last = z0.copy()

    lobe = region == Region.ATTRACTING_LOBE
    strip = (region == Region.BAKER_STRIP) | (region == Region.BAKER_STRIP_ALIGNED)
    wander = (region == Region.WANDERING_LINE) & (k != 0)
    fix_re = np.zeros(n)
    if lobe.any():
        fix_re[lobe] = _principal_fixed_re(lam[lobe])

    trap_run = np.zeros(n, dtype=np.int64)
    trap_m = np.zeros(n, dtype=np.int64)

    act = np.arange(n)
    z = z0.copy()
    for step in range(cfg.budget + 1):
        if act.size == 0:
            break
        za = z[act]
        done = np.zeros(act.size, dtype=bool)

        def settle(mask, tag, idx=None):
            ids = act[mask & ~done]
            fate[ids] = tag
            steps[ids] = step
            last[ids] = z[ids]
            if idx is not None:
                index[ids] = idx[(mask & ~done)]
            done[mask] = True

        pole = pole_distance(za) < limits.pole_eps
        settle(pole, Fate.POLE_HIT, np.full(act.size, step))
        settle(za.imag >= 0, Fate.PRIMARY_BAKER)
        settle(strip[act] & (za.imag < cfg.y_down), Fate.LOWER_BAKER)

        w = wander[act]
        if w.any():
            m_now = np.round((za.real - math.pi / 2) / math.pi).astype(np.int64)
            inside = w & in_trap_region(za, m_now)
            chained = (trap_run[act] == 0) | (m_now == trap_m[act] + k[act])
            run = np.where(inside, np.where(chained, trap_run[act] + 1, 1), 0)
            trap_run[act] = run
            trap_m[act] = m_now
            settle(run >= cfg.trap_patience, Fate.WANDERING_STRIP, np.sign(k[act]))

        blown = ~done & (np.abs(za) > limits.blowup)
        ids = act[blown]
        steps[ids] = step
        last[ids] = z[ids]
        done |= blown

        act = act[~done]
        if step == cfg.budget or act.size == 0:
            last[act] = z[act]
            break
        za = z[act]
        with np.errstate(all="ignore"):
            zn = f_array(lam[act], za, limits)
        # rule (c) compares consecutive iterates
        conv = lobe[act] & (np.abs(zn - za) < cfg.fp_tol)
        ids = act[conv]
        fate[ids] = Fate.ATTRACTING_FIXED
        steps[ids] = step + 1
        last[ids] = zn[conv]
        index[ids] = np.round((zn[conv].real - fix_re[ids]) / math.pi).astype(np.int64)
        z[act] = zn
        act = act[~conv]

    return fate, steps, last, index


def classify_orbit(param, z0, cfg=DEFAULT_CONFIG, limits=DEFAULT_LIMITS):
    """Fate of the orbit of z0 under f for an already normalized ParamInfo."""
    z0 = complex(z0)
    if not (math.isfinite(z0.real) and math.isfinite(z0.imag)):
        raise ValueError("z0 must be finite")
    fate, steps, last, index = classify_array(param.lam, param.region, param.k or 0, z0, cfg, limits)
    tag = Fate(int(fate[0]))
    idx = int(index[0]) if tag in (Fate.ATTRACTING_FIXED, Fate.WANDERING_STRIP, Fate.POLE_HIT) else None
    return OrbitOutcome(tag, int(steps[0]), complex(last[0]), idx)


def classify(lam, z0, cfg=DEFAULT_CONFIG, limits=DEFAULT_LIMITS):
    """Normalize lam, classify z0, and map the result back if lam was reflected.

    Reflection z -> -z sends fixed-point translate m to -m and reverses the
    direction of wandering, so those payloads are negated too.
    """
    param = normalize_lambda(lam)
    if not param.conjugated:
        return classify_orbit(param, z0, cfg, limits)
    out = classify_orbit(param, -complex(z0), cfg, limits)
    idx = out.index
    if out.fate in (Fate.ATTRACTING_FIXED, Fate.WANDERING_STRIP):
        idx = -idx
    return OrbitOutcome(out.fate, out.steps, -out.last, idx)
