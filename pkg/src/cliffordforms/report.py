"""Text and structured (JSON) reports for a suite run.

Everything except the ``generated`` timestamp is a deterministic function of
the scenario, the options and the software versions.
"""

from __future__ import annotations

import datetime as _dt
import json
import platform
from collections import Counter

import numpy as np
import scipy

from . import __version__
from ._accel import USING_NUMBA
from .scenario import SUITES, scenario_to_dict
from .suites import Run

__all__ = ["environment", "to_structured", "render_text", "render_json", "summary"]


def environment():
    return {
        "cliffordforms": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "numba": USING_NUMBA,
    }


def _timestamp():
    return _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()


def summary(run: Run):
    """``{suite: {status: count}}`` in suite order."""
    counts = {}
    for r in run.records:
        counts.setdefault(r.suite, Counter())[r.status] += 1
    return {s: dict(sorted(counts[s].items())) for s in SUITES if s in counts}


def to_structured(run: Run, generated=None):
    return {
        "report": "cliffordforms verify",
        "generated": generated or _timestamp(),
        "environment": environment(),
        "scenario": scenario_to_dict(run.scenario),
        "sampler": {"kind": "explicit" if run.scenario.points.explicit is not None else "sobol",
                    "seed": run.seed, "box": list(run.scenario.points.box)},
        "tol_scale": run.tol_scale,
        "points": [[float(c) for c in p] for p in run.points],
        "records": [r.as_dict() for r in run.records],
        "summary": summary(run),
        "verdict": "pass" if run.ok else "fail",
    }


def render_json(run: Run, generated=None) -> str:
    return json.dumps(to_structured(run, generated), indent=2, sort_keys=False) + "\n"


def render_text(run: Run, generated=None) -> str:
    s = run.scenario
    env = environment()
    lines = [
        f"cliffordforms verify: {s.name}",
        f"generated: {generated or _timestamp()}",
        "environment: " + ", ".join(f"{k} {v}" for k, v in env.items()),
        f"source: {s.source}",
        f"dimension: {s.n}   variant: {s.variant or 'default'}   case: {s.fields.case}   m: {s.fields.m:g}",
        f"tolerance scale: {run.tol_scale:g}",
        f"points ({'explicit' if s.points.explicit is not None else f'sobol, seed {run.seed}'}):",
    ]
    for i, p in enumerate(run.points):
        lines.append(f"  {i}: (" + ", ".join(f"{c:+.6f}" for c in p) + ")")
    current = None
    for r in run.records:
        if r.suite != current:
            current = r.suite
            lines.append("")
            lines.append(f"[{current}]")
        mark = {"pass": "ok  ", "fail": "FAIL", "error": "ERR ", "skip": "skip"}[r.status]
        if r.status in ("pass", "fail"):
            lines.append(f"  {mark} p{r.point}  {r.value:9.2e} <= {r.tolerance:8.2e}  {r.identity}")
        else:
            lines.append(f"  {mark} p{r.point}  {r.identity}: {r.detail}")
    lines.append("")
    lines.append("summary:")
    for suite, counts in summary(run).items():
        lines.append(f"  {suite:20s} " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    lines.append(f"verdict: {'PASS' if run.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
