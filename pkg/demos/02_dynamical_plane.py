"""Dynamical-plane pictures.

Writes three PPM files in the current directory and prints fate counts.
"""
import math
import time

from tandyn import GridSpec, normalize_lambda, render_dynamical, write_ppm
from tandyn.raster import FATE_PALETTE

PI = math.pi
spec = GridSpec.from_bounds(-2 * PI, 2 * PI, -4, 4, 400, 256)

cases = {
    "lobe": 1.5j,                   # attracting fixed points below the axis
    "wandering": PI + 1j * PI / 2,  # wandering strips R_m
    "strip": PI + 0.5j,             # a second Baker domain deep below the axis
    "high": PI + 3j,                # only the upper Baker domain
}
for name, lam in cases.items():
    t = time.perf_counter()
    r = render_dynamical(normalize_lambda(lam), spec, workers=4)
    write_ppm(r, FATE_PALETTE, f"dyn_{name}.ppm")
    counts = {f.name: c for f, c in r.counts().items() if c}
    print(f"{name:10s} lam={lam:.4f}  {time.perf_counter() - t:.2f}s  {counts}")
