"""Pointwise Levi-Civita geometry of a metric given by closed-form expressions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DimensionMismatch, SignatureError, SingularMetric
from .expr import eval_jet, parse_expr, to_source
from .jet import Jet, jdet, jeinsum, jinv, jstack

__all__ = [
    "MetricSpec", "MetricJet", "metric_jet", "christoffel", "riemann",
    "curvature_two_form", "check_coordinate_conditions", "ConditionReport",
    "minkowski", "random_perturbed_metric", "random_smooth_expr", "geometry_residuals",
]


@dataclass(frozen=True)
class MetricSpec:
    """Symmetric table of expressions for g_{mu nu}; only mu <= nu is stored."""

    n: int
    components: tuple  # ((i, j, Expr), ...) with 1 <= i <= j <= n

    @classmethod
    def from_rows(cls, rows):
        """Build from a full square table of DSL strings or expressions.

        Entries below the diagonal may be ``None``; otherwise they must agree
        with their mirror image.
        """
        n = len(rows)
        if n not in (2, 3, 4):
            raise DimensionMismatch(f"metric dimension must be 2, 3 or 4, got {n}")
        comps = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch(f"metric row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i, n):
                e = rows[i][j]
                e = parse_expr(e, n) if isinstance(e, str) else e
                mirror = rows[j][i]
                if i != j and mirror is not None:
                    m = parse_expr(mirror, n) if isinstance(mirror, str) else mirror
                    if to_source(m) != to_source(e):
                        raise ValueError(f"metric is not symmetric at ({i + 1},{j + 1})")
                comps.append((i + 1, j + 1, e))
        return cls(n, tuple(comps))

    def expr(self, i, j):
        if i > j:
            i, j = j, i
        for a, b, e in self.components:
            if (a, b) == (i, j):
                return e
        raise KeyError((i, j))

    def rows(self):
        return [[to_source(self.expr(i, j)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def is_diagonal(self):
        from .expr import Num

        return all(isinstance(e, Num) and e.value == 0 for i, j, e in self.components if i != j)


class MetricJet:
    """Metric, inverse, determinant and Christoffel symbols at a point, carried as jets.

    ``order`` is the derivative order of the metric itself; the Christoffel
    symbols are one order lower and the Riemann tensor two orders lower.
    All index positions follow the usual convention with 0-based arrays:
    ``Gamma[l, m, n]`` is the symbol with upper index l.
    """

    def __init__(self, spec: MetricSpec, x, g: Jet):
        self.spec = spec
        self.n = spec.n
        self.x = tuple(float(v) for v in x)
        self.g = g
        self.order = g.order

    # jets -----------------------------------------------------------------
    @cached_property
    def ginv(self):
        return jinv(self.g)

    @cached_property
    def det(self):
        return jdet(self.g)

    @cached_property
    def sqrt_neg_det(self):
        """sqrt|g| (= sqrt(-g) in even Lorentzian dimension)."""
        d = self.det
        return (d if float(np.real(d.val)) > 0 else -d) ** 0.5

    @cached_property
    def gamma(self):
        return christoffel(self.ginv.truncate(self.order - 1), self.g.partial())

    # numeric views ----------------------------------------------------------
    @property
    def g_lo(self):
        return self.g.val

    @property
    def g_up(self):
        return self.ginv.val

    @property
    def dg(self):
        """``dg[l, m, n] = d_l g_{mn}``."""
        return self.g.parts[1]

    @property
    def ddg(self):
        """``ddg[k, l, m, n] = d_k d_l g_{mn}``."""
        return self.g.parts[2]

    @property
    def det_g(self):
        return float(self.det.val)

    @property
    def sqrt_neg_g(self):
        return float(self.sqrt_neg_det.val)

    @property
    def Gamma(self):
        return self.gamma.val

    @property
    def dGamma(self):
        """``dGamma[k, l, m, n] = d_k Gamma^l_{mn}``, assembled from second derivatives of g."""
        return self.gamma.parts[1]

    @cached_property
    def riemann_jet(self):
        return riemann(self.gamma)

    @property
    def Riemann_up(self):
        """``R[k, l, m, n] = R^k_{lmn}``."""
        return self.riemann_jet.val if isinstance(self.riemann_jet, Jet) else self.riemann_jet

    @property
    def Riemann_lo(self):
        return np.einsum("al,lbmn->abmn", self.g_lo, self.Riemann_up)

    def scale(self):
        return 1.0 + max(float(np.max(np.abs(p))) for p in self.g.parts)


def christoffel(ginv, dg):
    """Gamma^l_{mn} = 1/2 g^{lk} (d_m g_{kn} + d_n g_{km} - d_k g_{mn}); generic over jets."""
    t = dg.transpose((1, 0, 2)) if isinstance(dg, Jet) else np.transpose(dg, (1, 0, 2))
    # t[k, m, n] = d_m g_{kn}
    s = t + (t.swapaxes(1, 2) if isinstance(t, Jet) else np.swapaxes(t, 1, 2)) - dg
    return jeinsum("lk,kmn->lmn", ginv, s) * 0.5


def riemann(gamma):
    """R^k_{lmn} = d_m G^k_{nl} - d_n G^k_{ml} + G^k_{me} G^e_{nl} - G^k_{ne} G^e_{ml}.

    ``gamma`` must be a jet of order >= 1; the result has one order less.
    """
    dG = gamma.partial()  # dG[m, k, n, l] = d_m Gamma^k_{nl}
    g0 = gamma.truncate(gamma.order - 1)
    t1 = dG.transpose((1, 3, 0, 2))  # [k, l, m, n]
    quad = jeinsum("kme,enl->klmn", g0, g0)
    r = t1 - t1.swapaxes(2, 3) + quad - quad.swapaxes(2, 3)
    if r.order == 0:
        return r.val
    return r


def metric_jet(spec: MetricSpec, x, order: int = 2, check: bool = True) -> MetricJet:
    """Evaluate the metric and its derivatives up to ``order`` at ``x``."""
    n = spec.n
    if len(x) != n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, metric is {n}-dimensional")
    entries = {}
    for i, j, e in spec.components:
        entries[(i - 1, j - 1)] = eval_jet(e, x, order)
    rows = [jstack([entries[(min(i, j), max(i, j))] for j in range(n)]) for i in range(n)]
    g = jstack(rows)
    if check:
        _validate(g.val)
    return MetricJet(spec, x, g)


def _validate(g):
    n = g.shape[0]
    scale = max(float(np.max(np.abs(g))), 1e-300)
    det = np.linalg.det(g)
    if abs(det) < 1e-12 * scale**n:
        raise SingularMetric(f"metric determinant {det:.3e} is numerically zero")
    eig = np.linalg.eigvalsh(g)
    thresh = 1e-10 * np.max(np.abs(eig))
    if np.any(np.abs(eig) < thresh):
        raise SingularMetric("metric has a near-zero eigenvalue")
    pos = int(np.sum(eig > 0))
    if pos != 1 or det >= 0 and n % 2 == 0:
        raise SignatureError(f"expected one positive and {n - 1} negative eigenvalues, got {sorted(eig)}")


def curvature_two_form(jet: MetricJet):
    """C_{mu nu} as blade coefficients: array ``[mu, nu, blade]``.

    The coefficient of dx^a ^ dx^b (a < b) in C_{mu nu} is R_{ab mu nu}.
    """
    from .clifford import two_form_from_antisym

    return two_form_from_antisym(jet.Riemann_lo, jet.n)


@dataclass
class ConditionReport:
    values: dict = field(default_factory=dict)
    passed: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.passed.values())

    def failures(self):
        return [k for k, v in self.passed.items() if not v]


def check_coordinate_conditions(jet: MetricJet) -> ConditionReport:
    """Leading-minor sign conditions under which the explicit generators exist."""
    rep = ConditionReport()
    if jet.n == 2:
        g = jet.g_lo
        rep.values["g_11"] = float(g[0, 0])
        rep.passed["g_11"] = g[0, 0] > 0
        m = float(np.linalg.det(g))
        rep.values["det_g"] = m
        rep.passed["det_g"] = m < 0
        return rep
    gu = jet.g_up
    for k, want in zip((1, 2, 3), (1, -1, 1)):
        if k > jet.n:
            break
        m = float(np.linalg.det(gu[:k, :k]))
        name = f"minor{k}"
        rep.values[name] = m
        rep.passed[name] = bool(m * want > 0)
    return rep


def geometry_residuals(jet: MetricJet, tol_scale=1.0):
    """Christoffel symmetry, metric compatibility and the algebraic Riemann symmetries.

    Needs a jet of order >= 2.
    """
    from .residuals import Residuals, max_abs, tolerances

    tol = tolerances(jet.scale(), tol_scale)
    gam, g, dg = jet.Gamma, jet.g_lo, jet.dg
    r = jet.Riemann_lo  # R_{abmn}
    res = Residuals()
    res.add("Gamma^l_{mn} = Gamma^l_{nm}", max_abs(gam - np.swapaxes(gam, 1, 2)), tol["alg"])
    # nabla_l g_{mn}
    nab = dg - np.einsum("alm,an->lmn", gam, g) - np.einsum("aln,ma->lmn", gam, g)
    res.add("nabla g = 0", max_abs(nab), tol["d1"])
    res.add("R_{abmn} = -R_{bamn}", max_abs(r + np.swapaxes(r, 0, 1)), tol["d2"])
    res.add("R_{abmn} = -R_{abnm}", max_abs(r + np.swapaxes(r, 2, 3)), tol["d2"])
    res.add("R_{abmn} = R_{mnab}", max_abs(r - np.transpose(r, (2, 3, 0, 1))), tol["d2"])
    bianchi = r + np.transpose(r, (0, 2, 3, 1)) + np.transpose(r, (0, 3, 1, 2))
    res.add("R_{a[bmn]} = 0", max_abs(bianchi), tol["d2"])
    return res


# -- metric builders -------------------------------------------------------------

def minkowski(n=4):
    rows = [["0"] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = "1" if i == 0 else "-1"
    return MetricSpec.from_rows(rows)


def _coef(rng, lo=0.2, hi=1.0):
    return float(np.round(rng.uniform(lo, hi) * rng.choice([-1, 1]), 3))


def random_smooth_expr(rng, n, terms=3):
    """A random DSL string mixing low-degree polynomials and sines, coefficients <= 1."""
    pieces = []
    for _ in range(terms):
        kind = rng.integers(0, 4)
        i, j = (int(v) for v in rng.integers(1, n + 1, size=2))
        c = _coef(rng)
        if kind == 0:
            pieces.append(f"{c}*x{i}")
        elif kind == 1:
            pieces.append(f"{c}*x{i}*x{j}")
        elif kind == 2:
            pieces.append(f"{c}*sin({abs(_coef(rng))}*x{i} + {_coef(rng, 0.0, 1.0)})")
        else:
            pieces.append(f"{c}*cos({abs(_coef(rng))}*x{j})*x{i}")
    pieces.append(str(_coef(rng, 0.0, 1.0)))
    return " + ".join(pieces).replace("+ -", "- ")


def random_perturbed_metric(rng, n=4, eps=0.1):
    """g = eta + eps S(x) with S symmetric and smooth; valid near [-0.5, 0.5]^n."""
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            base = (1.0 if i == 0 else -1.0) if i == j else 0.0
            rows[i][j] = f"{base} + {eps}*({random_smooth_expr(rng, n)})"
    return MetricSpec.from_rows(rows)
