"""Scenario files: a metric, optional fields, sample points and the suites to run.

Scenarios are TOML documents (conventionally ``*.scn``)::

    name = "perturbed"
    n = 4
    suites = ["theorem2", "dirac"]      # optional, default: every suite

    [metric]                            # g_{ij} for i <= j; missing off-diagonals are 0
    g11 = "1 + 0.1*sin(x2)"
    g22 = "-1"
    ...

    [fields]                            # optional
    case = "ii"
    m = 0.5
    seed = 3                            # random Psi / A where not given
    psi = { "1" = "x1", "23" = ["0.5", "x2"] }   # blade -> re or [re, im]
    a = { "2,1" = "0.1*x3" }            # "mu,k" -> coefficient of t_k in A_mu

    [points]
    count = 5                           # Sobol points in box^n ...
    box = [-0.5, 0.5]
    seed = 0
    # explicit = [[0.1, 0.2, 0.0, 0.3]]  # ... or an explicit list

    [tolerances]                        # per-suite multipliers
    theorem2 = 1.0
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .connection import VARIANTS
from .errors import ParseError, SchemaError, SlotParseError
from .expr import parse_expr, to_source
from .geometry import MetricSpec

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["SUITES", "Scenario", "FieldSpec", "PointSpec", "load_scenario", "parse_scenario",
           "scenario_to_dict", "sample_points"]

SUITES = ("clifford", "geometry", "theorem2", "lie", "su3", "dirac", "conservation", "yang_mills",
          "gauge_cov", "contorsion_flatness", "lowdim")

_CASES = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True)
class FieldSpec:
    case: str = "ii"
    m: float = 0.0
    seed: int = 0
    psi: dict = field(default_factory=dict)  # blade tuple -> (re, im) source strings
    a: dict = field(default_factory=dict)  # (mu, k) -> source string, both 1-based


@dataclass(frozen=True)
class PointSpec:
    count: int = 5
    box: tuple = (-0.5, 0.5)
    seed: int = 0
    explicit: tuple | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    n: int
    metric: MetricSpec
    variant: str | None = None
    fields: FieldSpec = FieldSpec()
    points: PointSpec = PointSpec()
    suites: tuple = SUITES
    tolerances: dict = field(default_factory=dict)
    source: str = "<string>"

    def tol_factor(self, suite):
        return float(self.tolerances.get(suite, 1.0))


def _parse(slot, text, n):
    if not isinstance(text, (str, int, float)) or isinstance(text, bool):
        raise SchemaError(f"{slot}: expected an expression string, got {type(text).__name__}")
    try:
        return parse_expr(str(text), n)
    except ParseError as err:
        raise SlotParseError(slot, err) from err


def _metric(table, n):
    if not isinstance(table, dict):
        raise SchemaError("[metric] must be a table of g<i><j> entries")
    rows = [[None] * n for _ in range(n)]
    for key, text in table.items():
        if not (len(key) == 3 and key[0] == "g" and key[1:].isdigit()):
            raise SchemaError(f"metric.{key}: keys look like g12")
        i, j = int(key[1]), int(key[2])
        if not (1 <= i <= n and 1 <= j <= n):
            raise SchemaError(f"metric.{key}: index outside 1..{n} (the metric must be {n}x{n})")
        if i > j:
            raise SchemaError(f"metric.{key}: give the upper triangle only (g{j}{i})")
        rows[i - 1][j - 1] = _parse(f"metric.{key}", text, n)
    for i in range(n):
        if rows[i][i] is None:
            raise SchemaError(f"metric.g{i + 1}{i + 1} is missing")
        for j in range(i + 1, n):
            if rows[i][j] is None:
                rows[i][j] = parse_expr("0", n)
    return MetricSpec.from_rows(rows)


def _blade(slot, key, n):
    try:
        blade = tuple(int(c) for c in str(key))
    except ValueError:
        raise SchemaError(f"{slot}: blade labels are digit strings such as '23'") from None
    if any(not 1 <= b <= n for b in blade) or list(blade) != sorted(set(blade)):
        raise SchemaError(f"{slot}: blade {key!r} must be strictly increasing indices in 1..{n}")
    return blade


def _fields(table, n):
    if not isinstance(table, dict):
        raise SchemaError("[fields] must be a table")
    unknown = set(table) - {"case", "m", "seed", "psi", "a"}
    if unknown:
        raise SchemaError(f"[fields]: unknown keys {sorted(unknown)}")
    case = str(table.get("case", "ii"))
    if case not in _CASES:
        raise SchemaError(f"fields.case: {case!r} is not one of {', '.join(_CASES)}")
    psi = {}
    for key, val in table.get("psi", {}).items():
        slot = f"fields.psi.{key}"
        blade = _blade(slot, key, n)
        parts = list(val) if isinstance(val, list) else [val]
        if not 1 <= len(parts) <= 2:
            raise SchemaError(f"{slot}: give re or [re, im]")
        srcs = [to_source(_parse(slot, p, n)) for p in parts]
        psi[blade] = (srcs[0], srcs[1] if len(srcs) == 2 else None)
    a = {}
    for key, val in table.get("a", {}).items():
        slot = f"fields.a.{key}"
        try:
            mu, k = (int(v) for v in str(key).split(","))
        except ValueError:
            raise SchemaError(f"{slot}: keys look like '2,1' (mu, generator)") from None
        if not 1 <= mu <= n:
            raise SchemaError(f"{slot}: mu outside 1..{n}")
        a[(mu, k)] = to_source(_parse(slot, val, n))
    try:
        m, seed = float(table.get("m", 0.0)), int(table.get("seed", 0))
    except (TypeError, ValueError) as err:
        raise SchemaError(f"[fields]: {err}") from None
    return FieldSpec(case, m, seed, psi, a)


def _points(table, n):
    if not isinstance(table, dict):
        raise SchemaError("[points] must be a table")
    explicit = table.get("explicit")
    if explicit is not None:
        pts = []
        for p in explicit:
            if not isinstance(p, list) or len(p) != n:
                raise SchemaError(f"points.explicit: every point needs {n} coordinates")
            pts.append(tuple(float(c) for c in p))
        if not pts:
            raise SchemaError("points.explicit is empty")
        return PointSpec(len(pts), (-0.5, 0.5), int(table.get("seed", 0)), tuple(pts))
    count = int(table.get("count", 5))
    box = table.get("box", [-0.5, 0.5])
    if count < 1 or len(box) != 2 or not box[0] < box[1]:
        raise SchemaError("points: need count >= 1 and box = [lo, hi] with lo < hi")
    return PointSpec(count, (float(box[0]), float(box[1])), int(table.get("seed", 0)))


def parse_scenario(text: str, source="<string>") -> Scenario:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as err:
        raise SchemaError(f"{source}: {err}") from None
    unknown = set(doc) - {"name", "n", "variant", "suites", "metric", "fields", "points", "tolerances"}
    if unknown:
        raise SchemaError(f"unknown top-level keys {sorted(unknown)}")
    if "metric" not in doc:
        raise SchemaError("missing [metric] table")
    n = doc.get("n", 4)
    if not isinstance(n, int) or n not in (2, 3, 4):
        raise SchemaError(f"n must be 2, 3 or 4, got {n!r}")
    metric = _metric(doc["metric"], n)
    variant = doc.get("variant")
    if variant is not None and variant not in VARIANTS:
        raise SchemaError(f"variant {variant!r} is not one of {', '.join(VARIANTS)}")
    suites = tuple(doc.get("suites", SUITES))
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise SchemaError(f"unknown suites {bad}; see list-suites")
    tols = doc.get("tolerances", {})
    bad = [s for s in tols if s not in SUITES]
    if bad:
        raise SchemaError(f"tolerances for unknown suites {bad}")
    return Scenario(
        name=str(doc.get("name", Path(source).stem)),
        n=n,
        metric=metric,
        variant=variant,
        fields=_fields(doc.get("fields", {}), n),
        points=_points(doc.get("points", {}), n),
        suites=suites,
        tolerances={k: float(v) for k, v in tols.items()},
        source=str(source),
    )


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as err:
        raise SchemaError(f"{path}: {err}") from None
    return parse_scenario(text, str(path))


def sample_points(spec: PointSpec, n: int, count=None, seed=None) -> np.ndarray:
    """Scrambled Sobol points in ``box^n`` (or the explicit list)."""
    from scipy.stats import qmc

    if spec.explicit is not None and count is None and seed is None:
        return np.array(spec.explicit, dtype=float)
    count = spec.count if count is None else count
    seed = spec.seed if seed is None else seed
    sob = qmc.Sobol(d=n, scramble=True, seed=seed)
    m = max(0, int(np.ceil(np.log2(count))))
    pts = sob.random_base2(m)[:count]
    lo, hi = spec.box
    return lo + (hi - lo) * pts


def scenario_to_dict(s: Scenario) -> dict:
    """JSON-ready echo of a scenario."""
    n = s.n
    metric = {f"g{i}{j}": to_source(e) for i, j, e in s.metric.components}
    f = s.fields
    return {
        "name": s.name,
        "n": n,
        "variant": s.variant,
        "metric": metric,
        "fields": {
            "case": f.case, "m": f.m, "seed": f.seed,
            "psi": {"".join(map(str, b)): list(v) for b, v in sorted(f.psi.items())},
            "a": {f"{mu},{k}": v for (mu, k), v in sorted(f.a.items())},
        },
        "points": {"count": s.points.count, "box": list(s.points.box), "seed": s.points.seed,
                   "explicit": [list(p) for p in s.points.explicit] if s.points.explicit else None},
        "suites": list(s.suites),
        "tolerances": dict(sorted(s.tolerances.items())),
    }
