"""Command-line front end: verify, sweep, extremal, disc-image.

Exit status: 0 success, 1 verification failed, 2 usage/range error,
3 I/O failure.  Data goes to stdout or --out; diagnostics to stderr.
"""

import argparse
import csv
import io
import json
import math
import sys
from typing import NamedTuple

from . import bounds
from .errors import DomainError, UsageError
from .harness import DEFAULT_TOLERANCES, TrialConfig, run_all
from .hyperbolic import halfplane_disc_image, halfplane_disc_re_interval

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SWEEP_HEADER = ["t", "classical_lo", "classical_hi", "strong_lo", "strong_hi", "u1", "u2"]


class SweepRow(NamedTuple):
    t: float
    classical_lo: float
    classical_hi: float
    strong_lo: float
    strong_hi: float
    u1: float
    u2: float


def sweep_grid(t_min, t_max, step):
    if not (0 <= t_min < t_max < 1):
        raise DomainError("need 0 <= t-min < t-max < 1")
    if not step > 0:
        raise DomainError("step must be positive")
    n = int(math.floor((t_max - t_min) / step + 1e-9)) + 1
    return [t_min + k * step for k in range(n)]


def sweep_rows(c, t_min=0.0, t_max=0.99, step=0.01):
    c = bounds.check_c(c)
    rows = []
    for t in sweep_grid(t_min, t_max, step):
        cl = bounds.classical_harnack(t)
        st = bounds.stronger_harnack(t, c)
        rows.append(SweepRow(t, cl.lower, cl.upper, st.lower, st.upper,
                             bounds.extremal_u1(c, t), bounds.extremal_u2(c, t)))
    return rows


def format_sweep(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([format(float(v), ".17g") for v in row])
    return buf.getvalue()


def parse_sweep(text):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != SWEEP_HEADER:
        raise ValueError(f"unexpected header {header}")
    return [SweepRow(*map(float, rec)) for rec in reader if rec]


def extremal_table(c, x):
    c = bounds.check_c(c)
    if not 0 <= x < 1:
        raise DomainError("x must lie in [0, 1)")
    st = bounds.stronger_harnack(x, c)
    u1 = bounds.extremal_u1(c, x)
    u2 = bounds.extremal_u2(c, x)
    return [
        ("c", c),
        ("x", x),
        ("u1(x)", u1),
        ("u2(x)", u2),
        ("strong_hi", st.upper),
        ("strong_lo", st.lower),
        ("|grad u1(0)|", bounds.gradient_norm_extremal(c, "u1")),
        ("|grad u2(0)|", bounds.gradient_norm_extremal(c, "u2")),
        ("expected 2c", 2 * c),
        ("gap_u1", abs(u1 - st.upper) / st.upper),
        ("gap_u2", abs(u2 - st.lower) / st.lower),
    ]


def disc_image_info(b, r):
    disc = halfplane_disc_image(b, r)
    return {"b": b, "r": r, "center": disc.center.real, "radius": disc.radius,
            "re_interval": list(halfplane_disc_re_interval(b, r))}


def _parse_tol(text):
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    if name not in DEFAULT_TOLERANCES:
        raise argparse.ArgumentTypeError(f"unknown suite {name!r}")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value {value!r}") from None


def _emit(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_verify(args):
    config = TrialConfig(seed=args.seed, trials=args.trials, max_atoms=args.max_atoms,
                         rmax=args.rmax, weight_range=tuple(args.weight_range),
                         tolerances=dict(args.tol))
    report = run_all(config, workers=args.workers)
    _emit(report.to_json(), args.out)
    for rec in report.suites:
        status = "ok  " if rec.violations == 0 else "FAIL"
        print(f"{status} {rec.suite:30s} trials={rec.trials:<7d} violations={rec.violations:<6d} "
              f"worst_slack={rec.worst_slack:.3e}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sweep(args):
    _emit(format_sweep(sweep_rows(args.c, args.t_min, args.t_max, args.step)), args.out)
    return EXIT_OK


def cmd_extremal(args):
    lines = [f"{name:<14s} {value:.17g}" for name, value in extremal_table(args.c, args.x)]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_disc_image(args):
    info = disc_image_info(args.b, args.r)
    if args.json:
        sys.stdout.write(json.dumps(info) + "\n")
    else:
        lo, hi = info["re_interval"]
        sys.stdout.write(f"center      {info['center']:.17g}\n"
                         f"radius      {info['radius']:.17g}\n"
                         f"re_interval [{lo:.17g}, {hi:.17g}]\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="harnack", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every property suite and write a JSON report")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--trials", type=int, default=100_000)
    v.add_argument("--max-atoms", type=int, default=8)
    v.add_argument("--rmax", type=float, default=0.99)
    v.add_argument("--weight-range", type=float, nargs=2, default=(0.1, 10.0),
                   metavar=("LO", "HI"))
    v.add_argument("--tol", type=_parse_tol, action="append", default=[],
                   metavar="SUITE=VALUE", help="override a suite tolerance (repeatable)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--out", help="report path (default: stdout)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="CSV of bound envelopes versus |z|")
    s.add_argument("--c", type=float, required=True)
    s.add_argument("--t-min", type=float, default=0.0)
    s.add_argument("--t-max", type=float, default=0.99)
    s.add_argument("--step", type=float, default=0.01)
    s.add_argument("--out", help="CSV path (default: stdout)")
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("extremal", help="inspect the extremal functions u1, u2")
    e.add_argument("--c", type=float, required=True)
    e.add_argument("--x", type=float, required=True)
    e.set_defaults(func=cmd_extremal)

    d = sub.add_parser("disc-image", help="Euclidean disc of a hyperbolic disc in K")
    d.add_argument("--b", type=float, required=True)
    d.add_argument("--r", type=float, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_disc_image)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"harnack {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"harnack {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
