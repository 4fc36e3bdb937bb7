"""Upsilon derivatives, the connection field B_mu, the generators H, I, K and D_mu.

Everything here is evaluated pointwise on jets: a form field is a
:class:`~cliffordforms.jet.Jet` whose value has the blade axis last, and
derivatives lower the jet order by one.  Tensor indices carried by a field
(the mu of B_mu, the nu of J^nu, ...) are inert labels for Upsilon, which acts
on the form part only; Christoffel terms for free tensor indices appear
explicitly where an identity needs them (divergences, contorsion).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _bformulas
from . import _kernels as K
from .clifford import Form, algebra
from .errors import (
    ConditionViolated, DenominatorNearZero, DimensionMismatch, GaugeAssumptionViolated, SingularSystem,
)
from .expr import eval_jet, parse_expr
from .geometry import MetricSpec, check_coordinate_conditions, curvature_two_form, metric_jet, riemann
from .jet import Jet, jeinsum, jstack
from .residuals import Residuals, max_abs, tolerances

__all__ = [
    "FormTensor", "FormFieldExpr", "LocalStructure", "local_structure", "VARIANTS",
    "upsilon", "upsilon_commutator_check", "b_field_closed_form", "b_components",
    "secondary_generators", "generator_jets", "d_op", "theorem2_residuals", "solve_b_linear",
    "contorsion_from_b", "contorsion_from_torsion", "check_flat", "theorem7_check", "max_abs",
    "Residuals", "tolerances", "random_form_field", "d_property_residuals", "d_flatness",
]

VARIANTS = ("general4", "temporal4", "diagonal", "dim3", "dim2")


@dataclass(frozen=True)
class FormTensor:
    """Form-valued tensor at a point: ``data[i1, ..., ik, blade]``.

    ``up`` and ``lo`` count the contravariant and covariant slots, in that order.
    """

    data: np.ndarray
    n: int
    up: int = 0
    lo: int = 0
    x: tuple = ()

    def __post_init__(self):
        d = np.asarray(self.data, dtype=complex)
        if d.shape[-1] != 1 << self.n or d.ndim != self.up + self.lo + 1:
            raise DimensionMismatch(f"tensor data of shape {d.shape} does not match rank ({self.up},{self.lo})")
        object.__setattr__(self, "data", d)

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return Form(self.data[tuple(i - 1 for i in idx)], self.n)

    def max_abs(self):
        return max_abs(self.data)


class FormFieldExpr:
    """A form-valued tensor field whose blade coefficients are DSL expressions.

    ``terms`` maps ``(tensor_index, blade)`` to ``(re, im)``, where
    ``tensor_index`` is a tuple of 1-based labels, ``blade`` a tuple of 1-based
    form indices and each part an expression, a DSL string, or ``None``.
    """

    def __init__(self, n, shape=(), terms=None):
        self.n = n
        self.shape = tuple(shape)
        self.terms = {}
        for (tidx, blade), parts in (terms or {}).items():
            if not isinstance(parts, tuple):
                parts = (parts, None)
            re_, im_ = (parse_expr(p, n) if isinstance(p, str) else p for p in parts)
            tidx = tuple(tidx)
            if len(tidx) != len(self.shape):
                raise DimensionMismatch(f"tensor index {tidx} does not match shape {self.shape}")
            self.terms[(tidx, tuple(blade))] = (re_, im_)

    @classmethod
    def scalar_blades(cls, n, blades):
        """A plain form field: ``{blade: expr}`` or ``{blade: (re, im)}``."""
        return cls(n, (), {((), b): v for b, v in blades.items()})

    @property
    def real(self):
        return all(im is None for _, im in self.terms.values())

    def jet(self, x, order):
        dim = 1 << self.n
        val = np.zeros(self.shape + (dim,), dtype=complex)
        out = Jet.constant(val, self.n, order)
        parts = [p.copy() for p in out.parts]
        for (tidx, blade), (re_, im_) in self.terms.items():
            sign = K._perm_sign(np.argsort(blade)) if len(set(blade)) == len(blade) else 0
            if not sign:
                continue
            b = sum(1 << (i - 1) for i in blade)
            idx = tuple(i - 1 for i in tidx) + (b,)
            for e, unit in ((re_, 1.0), (im_, 1j)):
                if e is None:
                    continue
                j = eval_jet(e, x, order)
                for k in range(order + 1):
                    parts[k][(slice(None),) * k + idx] += sign * unit * j.parts[k]
        return Jet(parts, self.n)


# -- local structure at a point ---------------------------------------------------

class LocalStructure:
    """Metric jets, algebra tables, B_mu, H, I, K and the derivatives Upsilon, D at one point.

    ``order`` is the jet order of the metric; B and the Christoffel symbols
    are available to one order less.  ``b_override`` replaces the closed-form
    B (a jet or array of shape ``(n, 2**n)``), e.g. for negative controls;
    ``generators_override`` replaces (H, I, K), e.g. after a Spin transformation.
    """

    def __init__(self, spec: MetricSpec, x, order=2, variant=None, b_override=None, mjet=None,
                 generators_override=None):
        self.spec = spec
        self.n = spec.n
        self.x = tuple(float(v) for v in x)
        self.mjet = mjet if mjet is not None else metric_jet(spec, self.x, order)
        self.order = self.mjet.order
        self.alg = algebra(self.mjet)
        self.dim = 1 << self.n
        self.variant = variant or {4: "general4", 3: "dim3", 2: "dim2"}[self.n]
        self._b_override = b_override
        self._gens_override = generators_override

    # connection pieces
    @cached_property
    def lift(self):
        """``L[mu, B, A]``: action of Upsilon_mu on the blade A minus the partial derivative."""
        x = -self.mjet.gamma.transpose((1, 0, 2))  # x[mu, v, l] = -Gamma^v_{mu l}
        return jeinsum("mvl,vlba->mba", x, K.derivation_table(self.n))

    def upsilon(self, u):
        """Upsilon_mu u with mu as a new leading axis; the jet order drops by one."""
        lift = self.lift
        if isinstance(u, Jet):
            r = u.order - 1
            return u.partial().truncate(min(r, lift.order)) + jeinsum("mba,...a->m...b", lift.truncate(r), u.truncate(r))
        return jeinsum("mba,...a->m...b", lift, np.asarray(u))

    @cached_property
    def B(self):
        if self._b_override is not None:
            return self._b_override
        return b_jet(self.mjet, self.variant)

    def bracket_B(self, u, b=None):
        """``[B_mu, u]`` with mu as a new leading axis."""
        b = self.B if b is None else b
        extra = (u.ndim if isinstance(u, Jet) else np.ndim(u)) - 1
        bb = b.reshape((self.n,) + (1,) * extra + (self.dim,))
        if isinstance(bb, Jet) and isinstance(u, Jet):
            r = min(bb.order, u.order)
            bb, u = bb.truncate(r), u.truncate(r)
        return self.alg.comm(bb, u)

    def D(self, u):
        """D_mu u = Upsilon_mu u - [B_mu, u]."""
        up = self.upsilon(u)
        r = up.order
        b = self.B.truncate(r) if isinstance(self.B, Jet) else self.B
        uu = u.truncate(r) if isinstance(u, Jet) else u
        return up - self.bracket_B(uu, b)

    @cached_property
    def generators(self):
        if self._gens_override is not None:
            return tuple(self._gens_override) + (None,) * (3 - len(self._gens_override))
        return generator_jets(self.mjet)

    @property
    def H(self):
        return self.generators[0]

    @property
    def I(self):
        return self.generators[1]

    @property
    def K(self):
        return self.generators[2]

    @cached_property
    def ell(self):
        return self.alg.volume()

    @cached_property
    def C(self):
        """Curvature two-form ``C[mu, nu, blade]`` (values)."""
        return curvature_two_form(self.mjet)

    def scale(self):
        return self.mjet.scale()


def local_structure(spec, x, order=2, variant=None, b_override=None):
    return LocalStructure(spec, x, order, variant, b_override)


# -- closed-form B --------------------------------------------------------------------

def _require_zero(jetlike, what, tol):
    vals = [max_abs(p) for p in jetlike.parts] if isinstance(jetlike, Jet) else [max_abs(jetlike)]
    if max(vals) > tol:
        raise GaugeAssumptionViolated(f"{what} (defect {max(vals):.2e})")


def _denominators(g, variant):
    if variant in ("general4", "temporal4"):
        m2 = g[2, 2] * g[3, 3] - g[2, 3] ** 2
        m3 = np.linalg.det(np.asarray(g)[1:, 1:])
        return {"g44": g[3, 3], "g33*g44-g34^2": m2, "lower 3x3 minor": m3}
    if variant == "dim3":
        return {"g33": g[2, 2], "g22*g33-g23^2": g[1, 1] * g[2, 2] - g[1, 2] ** 2}
    if variant == "dim2":
        return {"g22": g[1, 1]}
    return {}


def b_components(g, dg, variant, n=None):
    """Raw ``{(a, b, m): value}`` from the closed forms for arrays or jets ``g``, ``dg``."""
    n = n or g.shape[-1]
    if variant == "diagonal":
        out = {}
        for a in range(n):
            for b in range(a + 1, n):
                for m in range(n):
                    out[(a + 1, b + 1, m + 1)] = (dg[a, b, m] - dg[b, a, m]) * -0.25
        return out
    func, dim = _bformulas.VARIANTS[variant]
    if dim != n:
        raise DimensionMismatch(f"variant {variant} is for n={dim}, metric has n={n}")
    return func(g, dg)


def check_variant_assumptions(mjet, variant):
    """Raise if the gauge assumptions or denominators of ``variant`` fail at this point."""
    n = mjet.n
    g0 = mjet.g_lo
    scale = mjet.scale()
    tol = 1e-12 * scale
    dims = {"general4": 4, "temporal4": 4, "dim3": 3, "dim2": 2}
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    if variant in dims and dims[variant] != n:
        raise DimensionMismatch(f"variant {variant} needs n={dims[variant]}, metric has n={n}")
    if variant == "temporal4":
        g = mjet.g
        _require_zero(g[0, 0] - 1.0, "temporal gauge needs g_11 = 1", tol)
        for j in range(1, 4):
            _require_zero(g[0, j], f"temporal gauge needs g_1{j + 1} = 0", tol)
    if variant == "diagonal":
        g = mjet.g
        for i in range(n):
            for j in range(i + 1, n):
                _require_zero(g[i, j], f"diagonal variant needs g_{i + 1}{j + 1} = 0", tol)
    for name, den in _denominators(g0, variant).items():
        if abs(den) < 1e-10 * scale:
            raise DenominatorNearZero(f"denominator {name} = {den:.3e} is numerically zero")


def b_jet(mjet, variant="general4", check=True):
    """B_mu blade coefficients as a jet of shape ``(n, 2**n)`` and order one below the metric."""
    if check:
        check_variant_assumptions(mjet, variant)
    n = mjet.n
    r = mjet.order - 1
    g = mjet.g.truncate(r)
    dg = mjet.g.partial()
    comps = b_components(g, dg, variant, n)
    zero = Jet.constant(np.asarray(0.0), n, r)
    rows = []
    for m in range(1, n + 1):
        coeffs = [zero] * (1 << n)
        for (a, b, mm), v in comps.items():
            if mm == m:
                coeffs[(1 << (a - 1)) | (1 << (b - 1))] = v if isinstance(v, Jet) else zero + v
        rows.append(jstack(coeffs))
    return jstack(rows)


def b_field_closed_form(spec: MetricSpec, x, variant="general4") -> FormTensor:
    mj = metric_jet(spec, x, 1)
    b = b_jet(mj, variant)
    return FormTensor(b.val, spec.n, 0, 1, tuple(x))


# -- secondary generators --------------------------------------------------------------

def generator_jets(mjet, check=True):
    """(H, I, K) as jets of blade coefficients; I and K are ``None`` when n is too small."""
    if check:
        rep = check_coordinate_conditions(mjet)
        if not rep.ok:
            raise ConditionViolated(f"coordinate conditions fail: {', '.join(rep.failures())}")
    n = mjet.n
    dim = 1 << n
    gi = mjet.ginv

    def u(i, j):
        return gi[i - 1, j - 1]

    def blade(*idx):
        e = np.zeros(dim)
        e[sum(1 << (i - 1) for i in idx)] = 1.0
        return e

    s11 = u(1, 1) ** 0.5
    h = blade(1) * (1.0 / s11)
    if n == 2:
        return h, None, None
    det3 = (-(u(1, 3) ** 2 * u(2, 2)) + 2 * u(1, 2) * u(1, 3) * u(2, 3) - u(1, 1) * u(2, 3) ** 2
            - u(1, 2) ** 2 * u(3, 3) + u(1, 1) * u(2, 2) * u(3, 3))
    # Interior product of g^{1 mu} with dx1^dx2^dx3.  The printed numerator carries the
    # opposite signs on the dx13 and dx12 terms, which breaks I^2 = -1 off the diagonal.
    num = blade(2, 3) * u(1, 1) - blade(1, 3) * u(1, 2) + blade(1, 2) * u(1, 3)
    i_ = num / (s11 * det3 ** 0.5)
    if n == 3:
        return h, i_, None
    k_num = (blade(3, 4) * u(1, 2) ** 2 - blade(2, 4) * u(1, 2) * u(1, 3)
             + blade(2, 3) * u(1, 2) * u(1, 4) - blade(3, 4) * u(1, 1) * u(2, 2)
             + blade(1, 4) * u(1, 3) * u(2, 2) - blade(1, 3) * u(1, 4) * u(2, 2)
             + blade(2, 4) * u(1, 1) * u(2, 3) - blade(1, 4) * u(1, 2) * u(2, 3)
             + blade(1, 2) * u(1, 4) * u(2, 3) - blade(2, 3) * u(1, 1) * u(2, 4)
             + blade(1, 3) * u(1, 2) * u(2, 4) - blade(1, 2) * u(1, 3) * u(2, 4))
    k_ = -(k_num * mjet.sqrt_neg_det) / (u(1, 2) ** 2 - u(1, 1) * u(2, 2)) ** 0.5
    return h, i_, k_


def secondary_generators(mjet, x=None):
    """H, I, K as :class:`Form` values (I, K omitted in lower dimensions)."""
    gens = generator_jets(mjet)
    out = tuple(Form(g.val, mjet.n, True) for g in gens if g is not None)
    return out


# -- Upsilon on expression fields --------------------------------------------------------

def upsilon(fld: FormFieldExpr, mjet, x=None) -> FormTensor:
    """Upsilon_mu applied to an expression field, the new covariant slot placed last."""
    ls = LocalStructure(mjet.spec, mjet.x, mjet=mjet)
    u = fld.jet(mjet.x, 1)
    val = ls.upsilon(u).val
    val = np.moveaxis(val, 0, -2)
    return FormTensor(val, mjet.n, 0, len(fld.shape) + 1, mjet.x)


def upsilon_commutator_check(mjet):
    """max |(Y_mu Y_nu - Y_nu Y_mu) dx^l + R^l_{r mu nu} dx^r| over all indices."""
    ls = LocalStructure(mjet.spec, mjet.x, mjet=mjet)
    n = mjet.n
    dx = np.zeros((n, 1 << n))
    for i in range(n):
        dx[i, 1 << i] = 1.0
    first = ls.upsilon(dx)  # [nu, lambda, blade], jet of order r-1
    second = ls.upsilon(first).val  # [mu, nu, lambda, blade]
    lhs = second - np.swapaxes(second, 0, 1)
    rhs = -np.einsum("lrmn,rb->mnlb", mjet.Riemann_up, dx)
    return max_abs(lhs - rhs)


def d_op(ls: LocalStructure, u):
    """D_mu u for a jet or constant field ``u``; mu becomes the leading axis."""
    return ls.D(u)


# -- curvature equation and generator checks ----------------------------------------------------------------------------

def curvature_equation(ls: LocalStructure, b=None):
    """Both spellings of the curvature equation as ``[mu, nu, blade]`` arrays minus ½C."""
    b = ls.B if b is None else b
    yb = ls.upsilon(b).val  # [mu, nu, blade] = Upsilon_mu B_nu
    bv = b.val if isinstance(b, Jet) else np.asarray(b)
    bb = ls.alg.comm(bv[:, None, :], bv[None, :, :])  # [B_mu, B_nu]
    half_c = 0.5 * ls.C
    spelled_upsilon = yb - np.swapaxes(yb, 0, 1) - bb - half_c
    db = yb - bb  # D_mu B_nu
    spelled_d = db - np.swapaxes(db, 0, 1) + bb - half_c
    return spelled_upsilon, spelled_d


def algebraic_relations(alg, h, i_=None, k_=None):
    one = np.zeros(alg.dim)
    one[0] = 1.0
    out = {"H^2=1": max_abs(alg.mul(h, h) - one)}
    if i_ is not None:
        out["I^2=-1"] = max_abs(alg.mul(i_, i_) + one)
        out["[H,I]=0"] = max_abs(alg.comm(h, i_))
    if k_ is not None:
        out["K^2=-1"] = max_abs(alg.mul(k_, k_) + one)
        out["[H,K]=0"] = max_abs(alg.comm(h, k_))
        out["{I,K}=0"] = max_abs(alg.anti(i_, k_))
    return out


def theorem2_residuals(spec: MetricSpec, x, variant=None, b_override=None, tol_scale=1.0, ls=None):
    """Residuals of the curvature equation, D-annihilation of H, I, K and their algebra."""
    ls = ls or LocalStructure(spec, x, 2, variant, b_override)
    scale = ls.scale()
    tol = tolerances(scale, tol_scale)
    res = Residuals()
    e_up, e_d = curvature_equation(ls)
    res.add("curvature (Upsilon form)", max_abs(e_up), tol["d2"])
    res.add("curvature (D form)", max_abs(e_d), tol["d2"])
    res.add("spellings agree", max_abs(e_up - e_d), tol["alg"])
    names = ("H", "I", "K")
    gens = [g for g in ls.generators if g is not None]
    for nm, g in zip(names, gens):
        res.add(f"D{nm}=0", max_abs(ls.D(g)), tol["d1"])
    vals = [g.val for g in gens] + [None] * (3 - len(gens))
    for nm, v in algebraic_relations(ls.alg, *vals).items():
        res.add(nm, v, tol["alg"])
    if ls.n == 4:
        res.add("D ell=0", max_abs(ls.D(ls.ell)), tol["d1"])
    return res


def solve_b_linear(ls: LocalStructure):
    """Solve D_mu H = D_mu I = D_mu K = 0 for b_{ab mu}; returns (B values, total rank)."""
    n, dim = ls.n, ls.dim
    gens = [g for g in ls.generators if g is not None]
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    up = [ls.upsilon(g).val for g in gens]  # each [mu, blade]
    gv = [g.val for g in gens]
    cols = []
    for a, b in pairs:
        e = np.zeros(dim)
        e[(1 << a) | (1 << b)] = 1.0
        cols.append(np.concatenate([ls.alg.comm(e, g) for g in gv]))
    mat = np.stack(cols, axis=1).real
    out = np.zeros((n, dim))
    rank = 0
    for mu in range(n):
        rhs = np.concatenate([u[mu] for u in up]).real
        sol, _, rk, sv = np.linalg.lstsq(mat, rhs, rcond=None)
        rank += int(rk)
        if rk < len(pairs) or sv[-1] < 1e-10 * sv[0]:
            raise SingularSystem(f"linear system for B_{mu + 1} has rank {rk} < {len(pairs)}")
        for (a, b), s in zip(pairs, sol):
            out[mu, (1 << a) | (1 << b)] = s
    return out, rank


# -- contorsion, torsion and flatness -------------------------------------------------------------

def b_tensor(b, n):
    """Full antisymmetric ``t[a, b, mu]`` from blade coefficients ``b[mu, blade]`` (array or jet)."""
    from .clifford import _antisym_two

    return jeinsum("cab,mc->abm", _antisym_two(n), b)


def contorsion_from_b(b, mjet):
    """(K^l_{mu nu}, T^l_{mu nu}) from b_{ab mu} = -½ K_{a mu b}; works on arrays and jets."""
    t = b_tensor(b, mjet.n)  # t[a, b, m] = b_{abm}
    k_lo = t.transpose((0, 2, 1)) * -2.0 if isinstance(t, Jet) else -2.0 * np.transpose(t, (0, 2, 1))
    ginv = mjet.ginv if isinstance(t, Jet) else mjet.g_up
    if isinstance(ginv, Jet) and isinstance(t, Jet):
        ginv = ginv.truncate(t.order)
    k_up = jeinsum("la,amn->lmn", ginv, k_lo)
    tors = k_up - (k_up.swapaxes(1, 2) if isinstance(k_up, Jet) else np.swapaxes(k_up, 1, 2))
    return k_up, tors


def contorsion_from_torsion(tors, g_lo, g_up):
    """K^l_{mu nu} = ½(T^l_{mu nu} + T_mu^l_nu + T_nu^l_mu)."""
    # T_mu^l_nu = g_{mu a} g^{l b} T^a_{b nu}, stored as [l, mu, nu]
    t2 = np.einsum("ma,lb,abn->lmn", g_lo, g_up, tors)
    t3 = np.einsum("na,lb,abm->lmn", g_lo, g_up, tors)
    return 0.5 * (tors + t2 + t3)


def check_flat(spec: MetricSpec, x, variant=None, b_override=None, noise=None):
    """max |R-check_{ab mu nu}| for the connection Gamma + K built from B.

    ``noise`` (array ``(n, 2**n)``) is added to B for a negative control.
    """
    ls = LocalStructure(spec, x, 2, variant, b_override)
    b = ls.B
    if noise is not None:
        b = b + np.asarray(noise)
    k_up, _ = contorsion_from_b(b, ls.mjet)
    gam = ls.mjet.gamma + k_up
    r_up = riemann(gam)
    r_lo = np.einsum("ka,klmn->almn", ls.mjet.g_lo, r_up)
    return max_abs(r_lo)


def theorem7_check(ls: LocalStructure, u):
    """Compare Upsilon-check U with Upsilon U - [B, U] and check K^nu_{mu l} dx^l = [B_mu, dx^nu].

    ``u`` is a jet field (shape ``(2**n,)``).  Returns a dict of residuals.
    """
    n, dim = ls.n, ls.dim
    k_up, _ = contorsion_from_b(ls.B, ls.mjet)
    gam_check = ls.mjet.gamma + k_up
    x = -gam_check.transpose((1, 0, 2))
    lift_check = jeinsum("mvl,vlba->mba", x, K.derivation_table(n))
    r = u.order - 1
    ups_check = u.partial().truncate(r) + jeinsum("mba,a->mb", lift_check.truncate(r), u.truncate(r))
    lhs = ups_check.val
    rhs = ls.D(u).val
    dx = np.zeros((n, dim))
    for i in range(n):
        dx[i, 1 << i] = 1.0
    kv = k_up.val  # K^nu_{mu l}
    ident_l = np.einsum("vml,lb->mvb", kv, dx)
    ident_r = ls.alg.comm(ls.B.val[:, None, :], dx[None, :, :])
    return {"Upsilon-check = Upsilon - [B,.]": max_abs(lhs - rhs),
            "K dx = [B, dx]": max_abs(ident_l - ident_r)}


# -- operator properties of D_mu ---------------------------------------------------------------------

def random_form_field(rng, n=4, amplitude=0.5, complex_=True) -> FormFieldExpr:
    """Every blade gets a random smooth DSL coefficient (real and imaginary parts)."""
    from .geometry import random_smooth_expr

    terms = {}
    for idx in K.blade_indices(n):
        blade = tuple(i + 1 for i in idx)
        re_ = f"{amplitude}*({random_smooth_expr(rng, n, 2)})"
        im_ = f"{amplitude}*({random_smooth_expr(rng, n, 2)})" if complex_ else None
        terms[blade] = (re_, im_)
    return FormFieldExpr.scalar_blades(n, terms)


def d_property_residuals(ls: LocalStructure, u, v, tol_scale=1.0) -> Residuals:
    """D_mu commutes with the Hodge star, *, dagger and Tr; it is a derivation of the product
    and of (U, V); D ell = 0; and D is flat on every dx^lambda.

    ``u`` and ``v`` are jets of form fields of order at least 1.
    """
    alg = ls.alg
    h = ls.H
    fields = max(max_abs(p) for x in (u, v) for p in x.parts)
    scale = max(ls.scale(), 1.0 + fields)
    tol = tolerances(scale, tol_scale)
    du, dv = ls.D(u), ls.D(v)
    res = Residuals()
    res.add("D(UV) = (DU)V + U(DV)", max_abs(ls.D(alg.mul(u, v)) - alg.mul(du, v) - alg.mul(u, dv)), tol["d1"])
    res.add("D(star U) = star(DU)", max_abs(ls.D(alg.hodge(u)) - alg.hodge(du)), tol["d1"])
    res.add("D(U*) = (DU)*", max_abs(ls.D(alg.star(u)) - alg.star(du)), tol["d1"])
    res.add("D(U^dagger) = (DU)^dagger", max_abs(ls.D(alg.dagger(u, h)) - alg.dagger(du, h)), tol["d1"])
    res.add("D Tr U = Tr DU", max_abs(u.partial()[..., 0] - alg.trace(du)), tol["d1"])
    uv = alg.mul(u, alg.dagger(v, h))[..., 0]
    rhs = alg.mul(du, alg.dagger(v, h))[..., 0] + alg.mul(u, alg.dagger(dv, h))[..., 0]
    res.add("d(U,V) = (DU,V) + (U,DV)", max_abs(uv.partial() - rhs), tol["d1"])
    if ls.n == 4:
        res.add("D ell = 0", max_abs(ls.D(ls.ell)), tol["d1"])
    res.add("[D_mu, D_nu] dx = 0", d_flatness(ls), tol["d2"])
    return res


def d_flatness(ls: LocalStructure):
    """max |(D_mu D_nu - D_nu D_mu) dx^lambda|; needs a metric jet of order 2."""
    n = ls.n
    dx = np.zeros((n, ls.dim))
    for i in range(n):
        dx[i, 1 << i] = 1.0
    second = ls.D(ls.D(dx)).val  # [mu, nu, lambda, blade]
    return max_abs(second - np.swapaxes(second, 0, 1))
