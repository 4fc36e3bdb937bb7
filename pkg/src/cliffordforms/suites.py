"""Verification suites: every identity check, run pointwise over a scenario.

A suite maps a :class:`PointContext` to :class:`~cliffordforms.residuals.Residuals`
(or raises :class:`Skip`).  :func:`run_suites` never lets a math error escape;
it turns exceptions into failing records.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import clifford as C
from .connection import (
    FormFieldExpr, LocalStructure, b_jet, check_flat, check_variant_assumptions, contorsion_from_b,
    contorsion_from_torsion, d_property_residuals, random_form_field, solve_b_linear,
    theorem2_residuals, theorem7_check, upsilon_commutator_check,
)
from .fields import (
    conservation_identity_check, conservation_residual, current_chain, dirac_residual, lagrangians,
    chain_residuals, plane_wave_psi, point_state, q_form, random_gauge_field, random_psi,
    theorem4_residual, ym_strength,
)
from .gauge import (
    CASE_DIMS, CASES, basis_su3, basis_T, gauge_transform_spin, gauge_transform_unitary,
    group_element_from_exprs, lie_residuals, ne_residuals, omega_case, spin_element_from_exprs,
    structure_x_independence, su3_closure, su3_mixed,
)
from .geometry import check_coordinate_conditions, geometry_residuals, minkowski, random_smooth_expr
from .residuals import Residuals, max_abs, tolerances
from .scenario import SUITES, Scenario, sample_points

__all__ = ["SUITES", "SUITE_INFO", "Record", "Run", "PointContext", "run_suites", "Skip", "b_noise"]

TOL_ENV = "CLIFFORDFORMS_TOL_SCALE"

SUITE_INFO = {
    "clifford": "algebra axioms and the three independent products agree",
    "geometry": "Christoffel symbols, metric compatibility, Riemann symmetries, generator conditions",
    "theorem2": "B_mu solves the curvature equation; D annihilates H, I, K; their algebra",
    "lie": "T_1..T_16 form a D-constant anti-Hermitian basis; N/E relations of cases i-v",
    "su3": "t_1..t_8 close into su(3); structure constants do not depend on x",
    "dirac": "Q = H P (-N), the current chain and Lagrangian reality",
    "conservation": "identities behind the conservation law; plane-wave solutions conserve J",
    "yang_mills": "divergence identity for the Yang-Mills residual",
    "gauge_cov": "unitary and Spin gauge covariance; transformed tuples re-pass",
    "contorsion_flatness": "modified connection is flat; D commutes with the algebra operations",
    "lowdim": "the n = 3 and n = 2 structure equations",
}


class Skip(Exception):
    """The suite does not apply to this scenario."""


@dataclass(frozen=True)
class Record:
    suite: str
    point: int
    identity: str
    value: float
    tolerance: float
    status: str  # pass, fail, error, skip
    detail: str = ""

    @property
    def passed(self):
        return self.status in ("pass", "skip")

    def as_dict(self):
        return {"suite": self.suite, "point": self.point, "identity": self.identity,
                "value": _num(self.value), "tolerance": _num(self.tolerance), "status": self.status,
                "detail": self.detail}


def _num(v):
    return v if math.isfinite(v) else repr(v)


@dataclass
class Run:
    scenario: Scenario
    points: np.ndarray
    seed: int
    tol_scale: float
    records: list

    @property
    def ok(self):
        return all(r.passed for r in self.records)


def b_noise(n, eps, seed=12345):
    """A fixed random perturbation of B_mu on the 2-form blades (negative control)."""
    rng = np.random.default_rng(seed)
    out = np.zeros((n, 1 << n))
    two = [b for b in range(1 << n) if bin(b).count("1") == 2]
    out[:, two] = eps * rng.standard_normal((n, len(two)))
    return out


class PointContext:
    """Everything a suite needs at one sample point; expensive pieces are cached."""

    def __init__(self, scenario: Scenario, x, index, tol_scale=1.0, perturb_b=0.0, all_points=None,
                 clifford_draws=8):
        self.scenario = scenario
        self.n = scenario.n
        self.x = tuple(float(v) for v in x)
        self.index = index
        self.tol_scale = tol_scale
        self.perturb_b = perturb_b
        self.all_points = all_points if all_points is not None else [self.x]
        self.clifford_draws = clifford_draws

    def rng(self, salt):
        return np.random.default_rng([self.scenario.fields.seed, self.index, sum(map(ord, salt))])

    def b_override(self, mjet):
        if not self.perturb_b:
            return None
        return b_jet(mjet, self.variant) + b_noise(self.n, self.perturb_b)

    @property
    def variant(self):
        return self.scenario.variant or {4: "general4", 3: "dim3", 2: "dim2"}[self.n]

    @cached_property
    def ls(self):
        ls = LocalStructure(self.scenario.metric, self.x, 2, self.variant)
        if self.perturb_b:
            ls = LocalStructure(self.scenario.metric, self.x, 2, self.variant,
                                b_override=self.b_override(ls.mjet), mjet=ls.mjet)
        return ls

    @cached_property
    def field_exprs(self):
        """(psi, a) for the scenario, random where not given; deterministic in the seed."""
        f = self.scenario.fields
        rng = np.random.default_rng(f.seed)
        psi = random_psi(rng, f.case, self.n) if not f.psi else FormFieldExpr.scalar_blades(self.n, f.psi)
        d = CASE_DIMS[f.case]
        a = random_gauge_field(rng, d, self.n)
        if f.a:
            a = [[f.a.get((mu + 1, k + 1)) for k in range(d)] for mu in range(self.n)]
        return psi, a

    def state(self, order=2):
        key = f"_state{order}"
        if key not in self.__dict__:
            psi, a = self.field_exprs
            f = self.scenario.fields
            self.__dict__[key] = point_state(self.scenario.metric, self.x, f.case, psi, a, f.m, order,
                                             self.variant)
        return self.__dict__[key]


def _need4(ctx, suite):
    if ctx.n != 4:
        raise Skip(f"{suite} applies to n = 4")


# -- suites ---------------------------------------------------------------------------------

def suite_clifford(ctx: PointContext):
    mjet = ctx.ls.mjet
    h = ctx.ls.H.val
    rng = ctx.rng("clifford")
    res = Residuals()
    for _ in range(ctx.clifford_draws):
        u, v, w = (C.random_form(rng, ctx.n) for _ in range(3))
        r = C.clifford_residuals(mjet, u, v, w, h, ctx.tol_scale)
        for k, val in r.values.items():
            # keep the draw closest to its tolerance
            if k not in res.values or val / r.tolerances[k] > res.values[k] / res.tolerances[k]:
                res.add(k, val, r.tolerances[k])
    return res


def suite_geometry(ctx: PointContext):
    mjet = ctx.ls.mjet
    res = geometry_residuals(mjet, ctx.tol_scale)
    tol = tolerances(mjet.scale(), ctx.tol_scale)
    res.add("[Y_mu, Y_nu] dx^l = -R^l_{r mu nu} dx^r", upsilon_commutator_check(mjet), tol["d2"])
    cond = check_coordinate_conditions(mjet)
    for name in cond.values:
        res.add(f"generator condition {name}", 0.0 if cond.passed[name] else abs(cond.values[name]), 0.0)
    return res


def _b_checks(ctx, res):
    ls = ctx.ls
    tol = tolerances(ls.scale(), ctx.tol_scale)
    if ctx.n == 3:
        # I commutes with H and I, so D H = D I = 0 leaves B_mu free along I
        return tol
    b = ls.B.val
    solved, _ = solve_b_linear(ls)
    # relative, with a floor so that a vanishing B (flat space) compares absolutely
    res.add("B from the linear system = closed form (relative)",
            max_abs(solved - b) / max(max_abs(b), 1e-12), 1e-9 * ctx.tol_scale)
    return tol


def suite_theorem2(ctx: PointContext):
    ls = ctx.ls
    res = theorem2_residuals(ctx.scenario.metric, ctx.x, tol_scale=ctx.tol_scale, ls=ls)
    tol = _b_checks(ctx, res)
    if ctx.n == 4 and not ctx.perturb_b:
        general = b_jet(ls.mjet, "general4").val
        for variant in ("temporal4", "diagonal"):
            try:
                check_variant_assumptions(ls.mjet, variant)
            except Exception:
                continue
            res.add(f"{variant} = general4", max_abs(b_jet(ls.mjet, variant).val - general),
                    tol["alg"])
    return res


def suite_lowdim(ctx: PointContext):
    if ctx.n == 4:
        raise Skip("lowdim applies to n = 2, 3")
    return suite_theorem2(ctx)


def suite_lie(ctx: PointContext):
    _need4(ctx, "lie")
    ls = ctx.ls
    res = Residuals().merge(lie_residuals(basis_T(ls, check=False), ctx.tol_scale), "T: ")
    for case in CASES:
        oc = omega_case(case, ls, check=False)
        res.merge(ne_residuals(oc, ls, ctx.tol_scale), f"case {case}: ")
        res.merge(lie_residuals(oc.basis, ctx.tol_scale), f"case {case} L0: ")
    return res


def suite_su3(ctx: PointContext):
    _need4(ctx, "su3")
    ls = ctx.ls
    b = basis_su3(ls, check=False)
    res = Residuals().merge(lie_residuals(b, ctx.tol_scale), "t: ")
    tol = tolerances(ls.scale(), ctx.tol_scale)
    res.add("[t_k, t_l] in su(3) for k, l <= 8", su3_closure(b), tol["alg"])
    res.add("[t_k, t_r] has no su(3) or t_16 part for k <= 8 < r", su3_mixed(b), tol["alg"])
    if ctx.index == 0 and len(ctx.all_points) > 1:
        dev = structure_x_independence(ctx.scenario.metric, ctx.all_points, "T", ctx.variant)
        res.add("structure constants independent of x", dev, 1e-9 * ctx.tol_scale)
    return res


def suite_dirac(ctx: PointContext):
    _need4(ctx, "dirac")
    st = ctx.state(2)
    res = chain_residuals(st, ctx.tol_scale)
    s = st.scale()
    res.add("Q = H P (-N)", max_abs(q_form(st) - st.mul(st.h, dirac_residual(st), st.case.N) * -1.0),
            1e-11 * s * ctx.tol_scale)
    l0, l1, _ = lagrangians(st)
    res.add("Im L0 = 0", abs(l0.imag), 1e-10 * s * ctx.tol_scale)
    res.add("Im L1 = 0", abs(l1.imag), 1e-10 * s * ctx.tol_scale)
    return res


def suite_conservation(ctx: PointContext):
    _need4(ctx, "conservation")
    res = conservation_identity_check(ctx.state(2), ctx.tol_scale)
    case = ctx.scenario.fields.case
    wave = point_state(minkowski(4), ctx.x, case, plane_wave_psi(case), None, 0.0, 2)
    tol = tolerances(wave.scale(), ctx.tol_scale)
    res.add("plane wave: P = 0", max_abs(dirac_residual(wave)), tol["d1"])
    res.add("plane wave: D J - [A, J] = 0", max_abs(conservation_residual(wave, current_chain(wave)[3])),
            tol["d2"])
    return res


def suite_yang_mills(ctx: PointContext):
    _need4(ctx, "yang_mills")
    st = ctx.state(3)
    res = Residuals()
    res.add("D_nu R^nu - [A_nu, R^nu] = 0", max_abs(theorem4_residual(st)),
            tolerances(st.scale(), ctx.tol_scale)["d2"])
    return res


def _covariance(res, tag, st, st2, g, g_inv, tol_scale):
    alg = st.alg
    tol = tolerances(st.scale(), tol_scale)

    def conj(v):
        return alg.mul(alg.mul(g_inv.val, v), g.val)

    res.add(f"{tag}: P' = P g", max_abs(dirac_residual(st2) - alg.mul(dirac_residual(st), g)), tol["d1"])
    res.add(f"{tag}: F' = g^-1 F g", max_abs(ym_strength(st2).val - conj(ym_strength(st).val)), tol["d1"])
    res.add(f"{tag}: J' = g^-1 J g", max_abs(current_chain(st2)[3].val - conj(current_chain(st)[3].val)),
            tol["d1"])
    res.merge(conservation_identity_check(st2, tol_scale), f"{tag}, transformed: ")
    return res


def suite_gauge_cov(ctx: PointContext):
    _need4(ctx, "gauge_cov")
    st = ctx.state(2)
    rng = ctx.rng("gauge")
    n = ctx.n
    res = Residuals()
    exprs = [f"0.5*({random_smooth_expr(rng, n, 2)})" for _ in range(st.case.d)]
    u, u_inv = group_element_from_exprs(st.ls, st.case, exprs)
    st_u = gauge_transform_unitary(st, u, u_inv)
    _covariance(res, "unitary", st, st_u, u, u_inv, ctx.tol_scale)
    before = np.array(lagrangians(st))
    res.add("unitary: Lagrangians invariant", float(np.max(np.abs(np.array(lagrangians(st_u)) - before))),
            1e-9 * st.scale() * ctx.tol_scale)
    w = {(a, b): f"0.4*({random_smooth_expr(rng, n, 2)})" for a in range(1, n + 1) for b in range(a + 1, n + 1)}
    s, s_inv = spin_element_from_exprs(st.ls, w)
    st_s = gauge_transform_spin(st, s, s_inv)
    _covariance(res, "spin", st, st_s, s, s_inv, ctx.tol_scale)
    res.merge(theorem2_residuals(ctx.scenario.metric, ctx.x, tol_scale=ctx.tol_scale, ls=st_s.ls),
              "spin, transformed: ")
    return res


def suite_contorsion_flatness(ctx: PointContext):
    ls = ctx.ls
    tol = tolerances(ls.scale(), ctx.tol_scale)
    rng = ctx.rng("flat")
    u = random_form_field(rng, ctx.n).jet(ls.x, 2)
    v = random_form_field(rng, ctx.n).jet(ls.x, 2)
    res = Residuals()
    for name, val in theorem7_check(ls, u).items():
        res.add(name, val, tol["d1"])
    noise = b_noise(ctx.n, ctx.perturb_b) if ctx.perturb_b else None
    res.add("R-check_{ab mu nu} = 0", check_flat(ctx.scenario.metric, ctx.x, ctx.variant, noise=noise), tol["d2"])
    mjet = ls.mjet
    k_up, tors = contorsion_from_b(ls.B.val, mjet)
    k_lo = np.einsum("la,amn->lmn", mjet.g_lo, k_up)
    res.add("K_{l mu n} = -K_{n mu l}", max_abs(k_lo + np.transpose(k_lo, (2, 1, 0))), tol["alg"])
    res.add("K from torsion = K", max_abs(contorsion_from_torsion(tors, mjet.g_lo, mjet.g_up) - k_up), tol["alg"])
    res.merge(d_property_residuals(ls, u, v, ctx.tol_scale))
    return res


SUITE_FUNCS = {
    "clifford": suite_clifford,
    "geometry": suite_geometry,
    "theorem2": suite_theorem2,
    "lie": suite_lie,
    "su3": suite_su3,
    "dirac": suite_dirac,
    "conservation": suite_conservation,
    "yang_mills": suite_yang_mills,
    "gauge_cov": suite_gauge_cov,
    "contorsion_flatness": suite_contorsion_flatness,
    "lowdim": suite_lowdim,
}


# -- orchestration ----------------------------------------------------------------------------

def default_tol_scale():
    raw = os.environ.get(TOL_ENV)
    if not raw:
        return 1.0
    try:
        val = float(raw)
    except ValueError:
        raise ValueError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not val > 0:
        raise ValueError(f"{TOL_ENV} must be positive")
    return val


def _records(suite, index, res: Residuals):
    out = []
    for name in res.values:
        val, tol = res.values[name], res.tolerances[name]
        out.append(Record(suite, index, name, val, tol, "pass" if val <= tol else "fail"))
    return out


def run_suites(s: Scenario, suites=None, points=None, seed=None, tol_scale=None, perturb_b=0.0,
               clifford_draws=8) -> Run:
    """Run ``suites`` (default: the scenario's) at every sample point."""
    suites = tuple(suites) if suites else s.suites
    for name in suites:
        if name not in SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}")
    tol_scale = default_tol_scale() if tol_scale is None else float(tol_scale)
    xs = sample_points(s.points, s.n, points, seed)
    used_seed = s.points.seed if seed is None else seed
    pts = [tuple(float(c) for c in x) for x in xs]
    records = []
    for index, x in enumerate(pts):
        for suite in sorted(suites, key=SUITES.index):
            ctx = PointContext(s, x, index, tol_scale * s.tol_factor(suite), perturb_b, pts, clifford_draws)
            try:
                res = SUITE_FUNCS[suite](ctx)
            except Skip as why:
                records.append(Record(suite, index, "(not applicable)", 0.0, 0.0, "skip", str(why)))
                continue
            except Exception as err:  # errors become failing records
                records.append(Record(suite, index, "(error)", math.nan, 0.0, "error",
                                      f"{type(err).__name__}: {err}"))
                continue
            records.extend(_records(suite, index, res))
    records.sort(key=lambda r: (SUITES.index(r.suite), r.point, r.identity))
    return Run(s, np.array(pts), used_seed, tol_scale, records)
