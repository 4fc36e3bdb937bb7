"""Dirac-type and Yang-Mills residuals, the current chain, conservation identities and Lagrangians.

A :class:`PointState` holds every field at one point as a jet of blade
coefficients, so derivatives, products and gauge transformations compose
without finite differences.  Free tensor indices (the mu of A_mu, the nu of
J^nu) are labels: Upsilon acts on the form part only, and the divergence
``(1/sqrt(-g)) D_mu (sqrt(-g) V^mu)`` supplies the Christoffel trace itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .connection import FormFieldExpr, LocalStructure, Residuals, max_abs, tolerances
from .expr import eval_jet, parse_expr
from .gauge import OmegaCase, omega_case, project_L0
from .geometry import MetricSpec, random_smooth_expr
from .jet import Jet, jeinsum, jstack

__all__ = [
    "PointState", "point_state", "alpha", "dirac_residual", "q_form", "current_chain", "divergence",
    "ym_strength", "raise_pair", "ym_residual", "theorem4_residual", "conservation_identity_check",
    "conservation_residual", "lagrangians", "random_psi", "random_gauge_field", "plane_wave_psi",
    "CASE_SHORTCUTS", "chain_residuals",
]


@dataclass
class PointState:
    """All fields at one point: Psi, A_mu (``(n, 2**n)``), B_mu, the case and the mass."""

    ls: LocalStructure
    case: OmegaCase
    psi: Jet
    a: Jet
    m: float
    b: Jet

    @property
    def alg(self):
        return self.ls.alg

    @property
    def h(self):
        return self.ls.H

    @property
    def n(self):
        return self.ls.n

    def D(self, u):
        """D_mu u = Upsilon_mu u - [B_mu, u] with this state's B."""
        up = self.ls.upsilon(u)
        return up - self.ls.bracket_B(u, self.b)

    def dag(self, u):
        return self.alg.dagger(u, self.h)

    def mul(self, *factors):
        out = factors[0]
        for f in factors[1:]:
            out = self.alg.mul(out, f)
        return out

    def scale(self):
        fields = max(max_abs(p) for x in (self.psi, self.a) for p in x.parts)
        return max(self.ls.scale(), 1.0 + fields)


def point_state(spec: MetricSpec, x, case_id="i", psi: FormFieldExpr | None = None, a_coeffs=None, m=0.0,
                order=3, variant=None, b_override=None) -> PointState:
    """Evaluate a state at ``x``.

    ``a_coeffs[mu][k]`` are DSL expressions (or ``None``) for A_mu = sum_k a^k_mu t_k.
    The metric, Psi and A are expanded to ``order`` derivatives.
    """
    ls = LocalStructure(spec, x, order, variant, b_override)
    case = omega_case(case_id, ls, check=False)
    n, dim = spec.n, 1 << spec.n
    xs = ls.x
    if psi is None:
        psi_jet = Jet.constant(np.zeros(dim, dtype=complex), n, order)
    else:
        psi_jet = psi.jet(xs, order)
    rows = []
    for mu in range(n):
        coeffs = []
        for k in range(case.d):
            e = a_coeffs[mu][k] if a_coeffs is not None else None
            if e is None:
                coeffs.append(Jet.constant(np.asarray(0.0), n, order))
            else:
                e = parse_expr(e, n) if isinstance(e, str) else e
                coeffs.append(eval_jet(e, xs, order))
        rows.append(jstack(coeffs))
    a = jeinsum("mk,kb->mb", jstack(rows), case.gens)
    return PointState(ls, case, psi_jet, a, float(m), ls.B)


def _dx(n):
    dx = np.zeros((n, 1 << n))
    for i in range(n):
        dx[i, 1 << i] = 1.0
    return dx


def alpha(st: PointState):
    """alpha^mu = H dx^mu, shape ``(n, 2**n)``."""
    return st.alg.mul(st.h, _dx(st.n))


def _covariant_part(st: PointState):
    """D_mu Psi + Psi A_mu + B_mu Psi, shape ``(n, 2**n)``."""
    psi = st.psi
    return st.D(psi) + st.alg.mul(psi, st.a) + st.alg.mul(st.b, psi)


def dirac_residual(st: PointState):
    """P = dx^mu (D_mu Psi + Psi A_mu + B_mu Psi) N - m Psi E."""
    x = _covariant_part(st)
    s = st.alg.mul(_dx(st.n), x).sum(0)
    return st.mul(s, st.case.N) - st.mul(st.psi, st.case.E) * st.m


def q_form(st: PointState):
    """Q = alpha^mu (D_mu Psi + Psi A_mu + B_mu Psi) + m H Psi E N."""
    x = _covariant_part(st)
    s = st.alg.mul(alpha(st), x).sum(0)
    return s + st.mul(st.h, st.psi, st.case.E, st.case.N) * st.m


def current_chain(st: PointState):
    """(J1, J2, J3, J) for every nu, each of shape ``(n, 2**n)``."""
    alg = st.alg
    n_, e_ = st.case.N, st.case.E
    psi = st.psi
    j1 = alg.mul(alg.mul(st.dag(psi), alpha(st)), psi)
    j2 = alg.anti(n_, j1) * 0.5
    j3 = alg.mul(e_, alg.anti(e_, j2)) * 0.5
    j = project_L0(j3, st.case, alg, st.h)
    return j1, j2, j3, j


def _shortcut_i(st, j1):
    return j1 * 1j


def _shortcut_iii(st, j1):
    h = st.h
    return st.alg.mul(h, st.alg.anti(h, j1 * 1j)) * 0.5


def _shortcut_iv(st, j1):
    return st.alg.anti(st.ls.ell, j1) * 0.5


def _shortcut_v(st, j1):
    h, i_ = st.h, st.ls.I
    return st.alg.mul(h, st.alg.anti(h, st.alg.anti(i_, j1))) * 0.25


def _shortcut_ii(st, j1):
    # the dagger on the first Psi is implied by the chain
    return project_L0(j1 * 1j, st.case, st.alg, st.h)


CASE_SHORTCUTS = {"i": _shortcut_i, "ii": _shortcut_ii, "iii": _shortcut_iii, "iv": _shortcut_iv,
                  "v": _shortcut_v}


def chain_residuals(st: PointState, tol_scale=1.0) -> Residuals:
    """Membership conditions along the current chain and agreement with the case shortcut."""
    alg = st.alg
    tol = tolerances(st.scale(), tol_scale)
    n_, e_, h = st.case.N.val, st.case.E.val, st.h.val
    j1, j2, j3, j = (x.val for x in current_chain(st))
    res = Residuals()
    res.add("J1^dagger = J1", max_abs(alg.dagger(j1, h) - j1), tol["alg"])
    res.add("[J2, N] = 0", max_abs(alg.comm(j2, n_)), tol["alg"])
    res.add("[J3, N] = [J3, E] = 0", max(max_abs(alg.comm(j3, n_)), max_abs(alg.comm(j3, e_))), tol["alg"])
    res.add("J in L0", max_abs(project_L0(j, st.case, alg, h) - j), tol["alg"])
    res.add("J = 1/4 sum (E{E,{N,J1}}, t_k) t_k",
            max_abs(project_L0(alg.mul(e_, alg.anti(e_, alg.anti(n_, j1))) * 0.25, st.case, alg, h) - j),
            tol["alg"])
    short = CASE_SHORTCUTS[st.case.case_id](st, current_chain(st)[0]).val
    res.add("case shortcut", max_abs(short - j), 1e-11 * st.scale() * tol_scale)
    return res


def divergence(st: PointState, v):
    """(1/sqrt(-g)) D_mu (sqrt(-g) V^mu) for ``v`` of shape ``(n, ..., 2**n)``."""
    sg = st.ls.mjet.sqrt_neg_det
    w = jeinsum(",m...->m...", sg, v)
    dw = st.D(w)  # [kappa, mu, ..., blade]
    tr = jeinsum("mm...->...", dw)
    return jeinsum(",...->...", sg.reciprocal(), tr)


def _bracket_sum(st: PointState, v):
    """sum_mu [A_mu, V^mu] for ``v`` of shape ``(n, ..., 2**n)``."""
    extra = v.ndim - 2
    a = st.a.reshape((st.n,) + (1,) * extra + (st.ls.dim,))
    return st.alg.comm(a, v).sum(0)


def conservation_residual(st: PointState, v):
    """(1/sqrt(-g)) D_mu (sqrt(-g) V^mu) - [A_mu, V^mu]."""
    return divergence(st, v) - _bracket_sum(st, v)


def ym_strength(st: PointState):
    """F_{mu nu} = D_mu A_nu - D_nu A_mu - [A_mu, A_nu]."""
    da = st.D(st.a)
    n, dim = st.n, st.ls.dim
    a = st.a
    aa = st.alg.comm(a.reshape((n, 1, dim)), a.reshape((1, n, dim)))
    return da - da.swapaxes(0, 1) - aa


def raise_pair(st: PointState, f):
    gi = st.ls.mjet.ginv
    return jeinsum("ma,nb,abc->mnc", gi, gi, f)


def ym_residual(st: PointState, j=None):
    """(R^nu, R^nu - J^nu) with R^nu = (1/sqrt(-g)) D_mu(sqrt(-g) F^{mu nu}) - [A_mu, F^{mu nu}]."""
    f_up = raise_pair(st, ym_strength(st))
    r = conservation_residual(st, f_up)
    if j is None:
        j = current_chain(st)[3]
    return r, r - j


def theorem4_residual(st: PointState):
    """(1/sqrt(-g)) D_mu(sqrt(-g) R^mu) - [A_mu, R^mu]; vanishes identically."""
    r, _ = ym_residual(st, j=0.0)
    return conservation_residual(st, r)


def conservation_identity_check(st: PointState, tol_scale=1.0) -> Residuals:
    """The identities behind the conservation law, valid for arbitrary (non-solution) fields."""
    alg = st.alg
    tol = tolerances(st.scale(), tol_scale)
    res = Residuals()
    n_, e_ = st.case.N, st.case.E
    psi = st.psi
    h = st.h
    p = dirac_residual(st)
    q = q_form(st)
    res.add("Q = H P (-N)", max_abs(q - st.mul(h, p, n_) * -1.0), 1e-11 * st.scale() * tol_scale)
    # Y_(1) computed from Q and from the divergence form
    y_left = alg.mul(st.dag(psi), q) + alg.mul(st.dag(q), psi)
    j1 = current_chain(st)[0]
    psi_h_psi = st.mul(st.dag(psi), h, psi)
    en = alg.mul(e_, n_)
    mass = alg.comm(psi_h_psi, en) * st.m
    y_right = conservation_residual(st, j1) + mass
    res.add("Y1 two ways", max_abs(y_left - y_right), tol["d2"])
    aux = alg.mul(e_, alg.anti(e_, alg.anti(n_, alg.comm(psi_h_psi, en))))
    res.add("E{E,{N,[Psi^dag H Psi, EN]}} = 0", max_abs(aux), tol["alg"])
    # the two helper formulas
    al = alpha(st)
    gam = st.ls.mjet.gamma
    trace_gamma = jeinsum("mmv->v", gam)
    d_alpha = jeinsum("mmb->b", st.D(al))
    b = st.b
    rhs = (-jeinsum("v,vb->b", trace_gamma, al) + alg.mul(al, b).sum(0) + alg.mul(st.dag(b), al).sum(0))
    res.add("D_mu alpha^mu formula", max_abs(d_alpha - rhs), tol["d1"])
    dj = jeinsum("mmb->b", st.D(j1)) + jeinsum("v,vb->b", trace_gamma, j1)
    res.add("divergence formula", max_abs(dj - divergence(st, j1)), tol["d1"])
    return res


def lagrangians(st: PointState):
    """(L0, L1, L) as complex numbers; L0 and L1 are real up to rounding."""
    alg = st.alg
    sg = st.ls.mjet.sqrt_neg_g
    p = dirac_residual(st).val
    psi = st.psi.val
    h = st.h.val
    l0 = sg / 4 * alg.mul(h, alg.mul(alg.star(psi), p) + alg.mul(alg.star(p), psi))[0]
    f = ym_strength(st).val
    gi = st.ls.mjet.g_up
    f_up = np.einsum("ma,nb,abc->mnc", gi, gi, f)
    l1 = sg / 4 * alg.mul(f, f_up).sum((0, 1))[0]
    return complex(l0), complex(l1), complex(l1 + 2 * st.n * l0)


# -- field builders --------------------------------------------------------------------------

def _member_blades(case_id, n):
    even = case_id in ("iii", "v")
    cplx = case_id in ("i", "ii", "iii")
    blades = [b for b in range(1 << n) if not even or K.blade_grades(n)[b] % 2 == 0]
    return blades, cplx


def random_psi(rng, case_id, n=4, amplitude=0.5) -> FormFieldExpr:
    """A random smooth Psi in the space of ``case_id`` (DSL coefficients)."""
    blades, cplx = _member_blades(case_id, n)
    terms = {}
    for b in blades:
        idx = tuple(i + 1 for i in K.blade_indices(n)[b])
        re_ = f"{amplitude}*({random_smooth_expr(rng, n, 2)})"
        im_ = f"{amplitude}*({random_smooth_expr(rng, n, 2)})" if cplx else None
        terms[idx] = (re_, im_)
    return FormFieldExpr.scalar_blades(n, terms)


def random_gauge_field(rng, d, n=4, amplitude=0.3):
    """``a[mu][k]``: random DSL coefficients of A_mu on the d generators of L0."""
    return [[f"{amplitude}*({random_smooth_expr(rng, n, 2)})" for _ in range(d)] for _ in range(n)]


def plane_wave_psi(case_id, k=(1.0, 1.0, 0.0, 0.0), n=4, index=0) -> FormFieldExpr:
    """Massless Minkowski solution Psi = cos(k.x) Phi with (k_mu dx^mu) Phi = 0, Phi in Omega.

    ``k`` (lower index) must be null; Phi is the ``index``-th vector of the
    kernel of left multiplication by k_mu dx^mu restricted to the space,
    computed by SVD.  The vector field is valid in every case because P
    reduces to -sin(k.x) (k_mu dx^mu) Phi N.
    """
    from .clifford import algebra
    from .geometry import metric_jet, minkowski

    spec = minkowski(n)
    alg = algebra(metric_jet(spec, (0.0,) * n, 0))
    kvec = np.zeros(1 << n)
    for mu in range(n):
        kvec[1 << mu] = k[mu]
    lm = alg.left_matrix(kvec)
    blades, cplx = _member_blades(case_id, n)
    # real-linear map on the real coordinates of Omega
    basis = [np.eye(1 << n)[b] for b in blades]
    basis += [1j * e for e in basis] if cplx else []
    cols = np.stack([np.concatenate([(lm @ v).real, (lm @ v).imag]) for v in basis], axis=1)
    _, s, vt = np.linalg.svd(cols)
    s = np.concatenate([s, np.zeros(vt.shape[0] - len(s))])
    kernel = vt[s < 1e-12 * s[0]]
    if len(kernel) <= index:
        raise ValueError(f"kernel has dimension {len(kernel)}; k may not be null")
    phi = kernel[index] @ np.array(basis)
    phase = " + ".join(f"{float(c)!r}*x{mu + 1}" for mu, c in enumerate(k) if c)
    terms = {}
    for b in range(1 << n):
        c = phi[b]
        if abs(c) < 1e-15:
            continue
        idx = tuple(i + 1 for i in K.blade_indices(n)[b])
        re_ = f"{float(c.real)!r}*cos({phase})" if abs(c.real) > 1e-15 else None
        im_ = f"{float(c.imag)!r}*cos({phase})" if abs(c.imag) > 1e-15 else None
        terms[idx] = (re_ or "0", im_)
    return FormFieldExpr.scalar_blades(n, terms)
