"""Orbits, fixed points and critical values.

Run from the repository root:  python demos/01_orbits_and_fixed_points.py
"""
import math

from tandyn import (
    Half,
    classify,
    critical_points,
    critical_values,
    fixed_points,
    multiplier,
    normalize_lambda,
    orbit,
    solve_g_fixed_point,
)

PI = math.pi

# The upper half plane drifts up: Im grows by at least Im(lam) every step.
lam = 1.5j
for n, z in enumerate(orbit(lam, 0.3 + 0.1j, 5)):
    print(f"n={n}  z={z:.6f}")

# |2 + lam^2| < 1 here, so each translate of the fixed point attracts.
print(normalize_lambda(lam))
print("multiplier", multiplier(lam))
for z in fixed_points(lam, -1, 1):
    print("fixed point", z)
zs = fixed_points(lam, 0, 0)[0]
print(classify(lam, zs + 0.05))
print(classify(lam, zs + PI + 0.05))     # the next translate: index 1

# On the line lam = pi + i*pi/2 the lower critical point c0 is carried
# one strip to the right each step and its height settles at y0.
lam = PI + 1j * PI / 2
(c0,) = critical_points(Half.LOWER, 0, 0)
print("c0 =", c0, " f(c0) =", critical_values(lam, Half.LOWER, 0, 0)[0])
pts = orbit(lam, c0, 40)
for n in (0, 1, 2, 10, 40):
    print(f"n={n:2d}  Re-(pi/2+n*pi)={pts[n].real - (PI / 2 + n * PI):+.1e}  Im={pts[n].imag:.10f}")
y0, slope = solve_g_fixed_point()
print(f"y0={y0:.10f}  g'(y0)={slope:.10f}")
print(classify(lam, c0))

# A parameter below the axis is reflected; the answer is mapped back.
print(classify(-lam, -c0))
