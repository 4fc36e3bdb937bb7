"""Command line: ``verify``, ``list-suites`` and ``demo``.

Exit codes: 0 every record passed, 1 some record failed, 2 usage or schema error.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .errors import FormsError
from .report import render_json, render_text
from .scenario import SUITES, load_scenario, parse_scenario
from .suites import SUITE_INFO, TOL_ENV, default_tol_scale, run_suites

DEMOS = ("minkowski", "frw-diag", "perturbed", "dim2", "dim3")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def demo_text(name):
    return resources.files("cliffordforms").joinpath("scenarios", f"{name}.scn").read_text(encoding="utf-8")


def _positive(kind):
    def conv(text):
        val = kind(text)
        if val <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return val
    return conv


def _run_options(p):
    p.add_argument("--suite", action="append", choices=SUITES, metavar="NAME",
                   help="run only this suite (repeatable); default: the scenario's list")
    p.add_argument("--points", type=_positive(int), help="number of Sobol points (overrides the scenario)")
    p.add_argument("--seed", type=int, help="Sobol seed (overrides the scenario)")
    p.add_argument("--tol-scale", type=_positive(float),
                   help=f"multiply every tolerance (default: ${TOL_ENV} or 1)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--clifford-draws", type=_positive(int), default=8,
                   help="random (U, V, W) draws per point in the clifford suite")
    p.add_argument("--debug-perturb-b", type=float, default=0.0, metavar="EPS",
                   help=argparse.SUPPRESS)


def build_parser():
    p = argparse.ArgumentParser(
        prog="cliffordforms",
        description="Numerically verify Clifford-form identities on a metric scenario.",
        epilog="exit status: 0 all checks passed, 1 some check failed, 2 usage or scenario error")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run identity suites on a scenario file")
    v.add_argument("scenario", type=Path)
    _run_options(v)
    sub.add_parser("list-suites", help="list the available suites")
    d = sub.add_parser("demo", help="run a bundled scenario")
    d.add_argument("name", choices=DEMOS)
    _run_options(d)
    return p


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "list-suites":
        for name in SUITES:
            print(f"{name:20s} {SUITE_INFO[name]}")
        return EXIT_PASS
    try:
        if args.command == "verify":
            scenario = load_scenario(args.scenario)
        else:
            scenario = parse_scenario(demo_text(args.name), f"{args.name}.scn")
        tol_scale = args.tol_scale if args.tol_scale is not None else default_tol_scale()
    except (OSError, FormsError, ValueError) as err:
        print(f"cliffordforms: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    run = run_suites(scenario, args.suite, args.points, args.seed, tol_scale, args.debug_perturb_b,
                     args.clifford_draws)
    render = render_json if args.format == "structured" else render_text
    try:
        _emit(render(run), args.out)
    except OSError as err:
        print(f"cliffordforms: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_PASS if run.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
