"""Command line: ``tandyn orbit|render|param|verify``."""
from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

from .analysis import normalize_lambda
from .classify import ClassifyConfig, classify
from .core import AT_INFINITY, DEFAULT_LIMITS, orbit
from .raster import FATE_PALETTE, REGION_PALETTE, GridSpec, ParamMode, render_dynamical, render_parameter, write_ppm
from .verify import CHECKS, VerifyReport, run_all, run_check


def complex_arg(text):
    """Parse "RE,IM" into a complex number."""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")
    try:
        re, im = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}") from None
    if not (math.isfinite(re) and math.isfinite(im)):
        raise argparse.ArgumentTypeError(f"non-finite value in {text!r}")
    return complex(re, im)


def pixels_arg(text):
    try:
        w, h = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH but got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("pixel counts must be >= 1")
    return w, h


def positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _grid_flags(p, center):
    p.add_argument("--center", type=complex_arg, default=center)
    p.add_argument("--width", type=positive_float, default=4 * math.pi)
    p.add_argument("--height", type=positive_float, default=None, help="defaults to width scaled by the pixel aspect")
    p.add_argument("--px", type=pixels_arg, default=(800, 800), metavar="WxH")
    p.add_argument("--max-iter", type=positive_int, default=1000)
    p.add_argument("--workers", type=positive_int, default=1)
    p.add_argument("--out", type=Path, required=True)


def build_parser():
    parser = argparse.ArgumentParser(prog="tandyn", description="Dynamics of z -> lam + z + tan z.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="print an orbit as CSV")
    p.add_argument("--lambda", dest="lam", type=complex_arg, required=True)
    p.add_argument("--z0", type=complex_arg, required=True)
    p.add_argument("--steps", type=int, default=20)

    p = sub.add_parser("render", help="render the dynamical plane to PPM")
    p.add_argument("--lambda", dest="lam", type=complex_arg, required=True)
    _grid_flags(p, complex(0, -1))

    p = sub.add_parser("param", help="render the parameter plane to PPM")
    _grid_flags(p, complex(0, 1.5))
    p.add_argument("--mode", choices=[m.value for m in ParamMode], default="analytic")

    p = sub.add_parser("verify", help="run numerical checks")
    p.add_argument("--check", default="all", choices=["all", *CHECKS])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", type=Path, default=None)
    return parser


def _grid(args):
    w, h = args.px
    height = args.height if args.height is not None else args.width * h / w
    return GridSpec(args.center, args.width, height, w, h)


def cmd_orbit(args, out):
    if args.steps < 0:
        raise ValueError("--steps must be >= 0")
    pts = orbit(args.lam, args.z0, args.steps, DEFAULT_LIMITS)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["step", "re", "im"])
    for i, z in enumerate(pts):
        if z is AT_INFINITY:
            writer.writerow([i, "inf", "inf"])
        else:
            writer.writerow([i, repr(z.real), repr(z.imag)])
    res = classify(args.lam, args.z0, ClassifyConfig(budget=max(args.steps, 1)))
    print(f"fate after {res.steps} steps: {res.fate.name}", file=sys.stderr)
    return 0


def cmd_render(args, out):
    param = normalize_lambda(args.lam)
    raster = render_dynamical(param, _grid(args), ClassifyConfig(budget=args.max_iter), workers=args.workers)
    write_ppm(raster, FATE_PALETTE, args.out)
    print(f"wrote {args.out}", file=out)
    return 0


def cmd_param(args, out):
    mode = ParamMode(args.mode)
    raster = render_parameter(_grid(args), mode, ClassifyConfig(budget=args.max_iter), workers=args.workers)
    write_ppm(raster, REGION_PALETTE if mode is ParamMode.ANALYTIC else FATE_PALETTE, args.out)
    print(f"wrote {args.out}", file=out)
    return 0


def cmd_verify(args, out):
    if args.check == "all":
        report = run_all(args.seed)
    else:
        report = VerifyReport([run_check(args.check, args.seed)])
    print(report.to_text(), file=out)
    if args.json is not None:
        args.json.write_text(report.to_json())
    return 0 if report.all_passed else 1


COMMANDS = {"orbit": cmd_orbit, "render": cmd_render, "param": cmd_param, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
