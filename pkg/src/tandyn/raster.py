"""Dynamical-plane and parameter-plane rasters and the binary PPM writer."""
from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .analysis import HIGH_STRIP, Region, classify_region
from .classify import DEFAULT_CONFIG, Fate, classify_array
from .core import DEFAULT_LIMITS

__all__ = [
    "GridSpec",
    "Raster",
    "ParamMode",
    "render_dynamical",
    "render_parameter",
    "write_ppm",
    "to_rgb",
    "FATE_PALETTE",
    "REGION_PALETTE",
]


@dataclass(frozen=True)
class GridSpec:
    center: complex
    width: float
    height: float
    px_w: int
    px_h: int

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0 and self.px_w >= 1 and self.px_h >= 1):
            raise ValueError(f"invalid grid: {self}")

    @classmethod
    def from_bounds(cls, re_lo, re_hi, im_lo, im_hi, px_w, px_h):
        c = complex((re_lo + re_hi) / 2, (im_lo + im_hi) / 2)
        return cls(c, re_hi - re_lo, im_hi - im_lo, px_w, px_h)

    def re_axis(self):
        i = np.arange(self.px_w)
        return self.center.real + (i + 0.5 - self.px_w / 2) * self.width / self.px_w

    def im_axis(self):
        # row 0 is the top of the image
        j = np.arange(self.px_h)
        return self.center.imag - (j + 0.5 - self.px_h / 2) * self.height / self.px_h

    def samples(self):
        return self.re_axis()[None, :] + 1j * self.im_axis()[:, None]


@dataclass
class Raster:
    """Per-pixel labels (``Fate`` or ``Region`` codes) with step counts."""

    spec: GridSpec
    cells: np.ndarray
    steps: np.ndarray
    labels: type[enum.IntEnum] = Fate
    budget: int = DEFAULT_CONFIG.budget

    def __post_init__(self):
        shape = (self.spec.px_h, self.spec.px_w)
        if self.cells.shape != shape or self.steps.shape != shape:
            raise ValueError(f"cells must have shape {shape}")

    def counts(self):
        return {lab: int(np.count_nonzero(self.cells == lab)) for lab in self.labels}


class ParamMode(enum.Enum):
    ANALYTIC = "analytic"
    CRITICAL_ORBIT = "critical"


def _row_tiles(px_h, workers, tile_rows=None):
    tile_rows = tile_rows or max(1, math.ceil(px_h / (4 * max(1, workers))))
    return [(r, min(px_h, r + tile_rows)) for r in range(0, px_h, tile_rows)]


def _run_tiles(px_h, workers, job):
    tiles = _row_tiles(px_h, workers)
    if workers <= 1:
        for t in tiles:
            job(*t)
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            list(ex.map(lambda t: job(*t), tiles))


def render_dynamical(param, spec, cfg=DEFAULT_CONFIG, limits=DEFAULT_LIMITS, workers=1):
    """Classify the orbit of every pixel center under f_lam.

    For a reflected parameter the samples are negated before iterating,
    so the picture is of the map that was asked for.
    """
    z = spec.samples()
    if param.conjugated:
        z = -z
    cells = np.zeros(z.shape, dtype=np.int8)
    steps = np.zeros(z.shape, dtype=np.int64)

    def job(r0, r1):
        fate, st, _, _ = classify_array(param.lam, param.region, param.k or 0, z[r0:r1].ravel(), cfg, limits)
        cells[r0:r1] = fate.reshape(r1 - r0, -1)
        steps[r0:r1] = st.reshape(r1 - r0, -1)

    _run_tiles(spec.px_h, workers, job)
    return Raster(spec, cells, steps, Fate, cfg.budget)


def _normalize_grid(lam):
    flip = lam.imag < 0
    lam = np.where(flip, -lam, lam)
    region = np.empty(lam.shape, dtype=np.int8)
    k = np.zeros(lam.shape, dtype=np.int64)
    for idx, v in np.ndenumerate(lam):
        r, kk = classify_region(v)
        region[idx] = r
        k[idx] = kk or 0
    return lam, region, k


def render_parameter(spec, mode=ParamMode.ANALYTIC, cfg=DEFAULT_CONFIG, limits=DEFAULT_LIMITS, workers=1):
    """Colour the lam-plane by region label or by the fate of a lower critical value."""
    mode = ParamMode(mode)
    lam_all, region, k = _normalize_grid(spec.samples())
    if mode is ParamMode.ANALYTIC:
        return Raster(spec, region.astype(np.int8), np.zeros(region.shape, dtype=np.int64), Region, cfg.budget)

    cells = np.zeros(region.shape, dtype=np.int8)
    steps = np.zeros(region.shape, dtype=np.int64)
    cv = lam_all + complex(math.pi / 2, -HIGH_STRIP)

    def job(r0, r1):
        fate, st, _, _ = classify_array(lam_all[r0:r1].ravel(), region[r0:r1].ravel(), k[r0:r1].ravel(),
                                        cv[r0:r1].ravel(), cfg, limits)
        cells[r0:r1] = fate.reshape(r1 - r0, -1)
        steps[r0:r1] = st.reshape(r1 - r0, -1)

    _run_tiles(spec.px_h, workers, job)
    return Raster(spec, cells, steps, Fate, cfg.budget)


FATE_PALETTE = {
    Fate.UNDECIDED: (235, 235, 235),
    Fate.PRIMARY_BAKER: (200, 40, 40),
    Fate.LOWER_BAKER: (230, 200, 40),
    Fate.ATTRACTING_FIXED: (40, 70, 200),
    Fate.WANDERING_STRIP: (40, 160, 70),
    Fate.POLE_HIT: (0, 0, 0),
}

REGION_PALETTE = {
    Region.REAL_AXIS: (0, 0, 0),
    Region.ATTRACTING_LOBE: (40, 70, 200),
    Region.BAKER_STRIP: (230, 200, 40),
    Region.BAKER_STRIP_ALIGNED: (250, 140, 20),
    Region.HIGH_STRIP: (240, 230, 120),
    Region.WANDERING_LINE: (40, 160, 70),
    Region.OTHER: (200, 40, 40),
}


def to_rgb(raster, palette=None, shade_undecided=True):
    """(px_h, px_w, 3) uint8 image; undecided pixels darken with their step count."""
    if palette is None:
        palette = FATE_PALETTE if raster.labels is Fate else REGION_PALETTE
    missing = [lab for lab in raster.labels if lab not in palette]
    if missing:
        raise ValueError(f"palette has no colour for {missing}")
    lut = np.array([palette[lab] for lab in sorted(raster.labels)], dtype=np.float64)
    rgb = lut[raster.cells.astype(np.intp)]
    if shade_undecided and raster.labels is Fate:
        und = raster.cells == Fate.UNDECIDED
        if und.any():
            frac = np.clip(raster.steps / max(raster.budget, 1), 0, 1)
            rgb[und] *= (1 - 0.6 * frac[und])[:, None]
    return np.rint(rgb).astype(np.uint8)


def write_ppm(raster, palette, path):
    """Write a binary P6 file: header, then RGB triples row by row, top row first."""
    rgb = to_rgb(raster, palette)
    h, w = rgb.shape[:2]
    data = f"P6\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(rgb).tobytes()
    path = Path(path)
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path
