"""Numerical laboratory for the family f(z) = lam + z + tan z."""
from .analysis import (
    Half,
    NoFixedPoints,
    ParamInfo,
    Region,
    ScalarMapKind,
    count_preimages,
    critical_points,
    critical_values,
    fixed_points,
    multiplier,
    normalize_lambda,
    scalar_map,
    solve_g_fixed_point,
)
from .classify import ClassifyConfig, Fate, OrbitOutcome, classify, classify_orbit, in_trap_region
from .core import AT_INFINITY, EvalLimits, f_eval, f_prime, orbit, tan_stable
from .raster import GridSpec, ParamMode, Raster, render_dynamical, render_parameter, write_ppm
from .verify import CHECKS, CheckResult, VerifyReport, run_all, run_check

__version__ = "0.1.0"
