"""Anti-Hermitian bases, structure constants, the five (N, E, L0) cases and gauge transforms.

Generators are carried as jets of blade coefficients, so ``D_mu t_k = 0`` can
be checked directly.  Words such as ``"ilHK"`` denote Clifford products of the
letters ``H``, ``I``, ``K``, ``l`` (the volume form) and the imaginary unit ``i``.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .connection import LocalStructure, Residuals, max_abs, tolerances
from .errors import ClosureDefect, GeneratorDefect, NotInGroup, NotInSpin
from .jet import Jet, jeinsum, jstack

__all__ = [
    "CASE_DIMS",
    "T_WORDS", "SU3_GENERATORS", "CASES", "LieBasis", "OmegaCase", "word", "basis_T", "basis_su3",
    "omega_case", "project_L0", "scalar_products", "lie_residuals", "ne_residuals", "su3_closure", "su3_mixed",
    "subalgebra_dims", "structure_x_independence", "group_element", "spin_element",
    "group_element_from_exprs", "spin_element_from_exprs",
    "gauge_transform_unitary", "gauge_transform_spin",
]

T_WORDS = ("iH", "I", "K", "HI", "HK", "IK", "HIK", "l", "ilH", "ilI", "ilK", "lHI", "lHK", "ilIK", "lHIK", "i")

_R2, _R3, _R6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)

# t_k as combinations of the words above; t_1..t_8 span su(3)
SU3_GENERATORS = (
    ({"HIK": 1, "IK": 1}, _R2),
    ({"HK": 1, "K": 1}, _R2),
    ({"HI": -1, "I": -1}, _R2),
    ({"l": 1, "ilI": -1}, _R2),
    ({"lHI": 1, "ilH": 1}, _R2),
    ({"lHK": -1, "ilIK": 1}, _R2),
    ({"lHIK": -1, "ilK": -1}, _R2),
    ({"HI": -1, "iH": -2, "I": 1}, _R6),
    ({"lHK": 1, "ilIK": 1}, _R2),
    ({"lHIK": -1, "ilK": 1}, _R2),
    ({"l": 1, "ilI": 1}, _R2),
    ({"lHI": -1, "ilH": 1}, _R2),
    ({"HIK": -1, "IK": 1}, _R2),
    ({"HK": -1, "K": 1}, _R2),
    ({"HI": 1, "iH": -1, "I": -1}, _R3),
    ({"i": 1}, 1.0),
)

# case id -> (space, N word, E word, L0 generator words or "T"/"su3")
CASES = {
    "i": ("complex", "i", "", "T"),
    "ii": ("complex", "i", "", "su3"),
    "iii": ("complex-even", "i", "H", ("i", "I", "K", "IK")),
    "iv": ("real", "l", "", ("l", "I", "K", "IK")),
    "v": ("real-even", "I", "H", ("I",)),
}

# dim L0 per case
CASE_DIMS = {"i": 16, "ii": 8, "iii": 4, "iv": 4, "v": 1}


def word(ls: LocalStructure, w: str):
    """Clifford product of the letters of ``w`` as a jet; the empty word is 1."""
    one = np.zeros(ls.dim, dtype=complex)
    one[0] = 1.0
    out = ls.H * 0 + one
    letters = {"H": ls.H, "I": ls.I, "K": ls.K, "l": ls.ell}
    for ch in w:
        out = out * 1j if ch == "i" else ls.alg.mul(out, letters[ch])
    return out


def scalar_products(alg, u, v, h):
    """Matrix ``(u_k, v_l) = Tr(u_k v_l^dagger)`` for stacks of forms (arrays or jets)."""
    vd = alg.dagger(v, h)
    jets = [x for x in (u, vd) if isinstance(x, Jet)]
    if jets:
        tab = alg.table_jet(min(x.order for x in jets))
        return jeinsum("ka,lb,ab->kl", u, vd, tab[..., 0])
    return np.einsum("ka,lb,ab->kl", u, vd, alg.table[..., 0])


@dataclass
class LieBasis:
    """Ordered generators (jets, shape ``(d, 2**n)``) with structure constants at the point."""

    names: tuple
    gens: Jet
    h: Jet
    ls: LocalStructure

    @property
    def d(self):
        return len(self.names)

    @property
    def values(self):
        return self.gens.val

    @property
    def gram(self):
        hv = self.h.val
        return scalar_products(self.ls.alg, self.values, self.values, hv)

    def commutators(self):
        v = self.values
        return self.ls.alg.comm(v[:, None, :], v[None, :, :])

    def structure_constants(self, onto=None):
        """``c[q, k, l]`` with ``[t_k, t_l] = sum_q c[q, k, l] t_q``; projections on ``onto``."""
        onto = self if onto is None else onto
        com = self.commutators()
        d = self.d
        hv = self.h.val
        proj = scalar_products(self.ls.alg, com.reshape(d * d, -1), onto.values, hv)
        return np.transpose(proj.reshape(d, d, onto.d), (2, 0, 1))

    def subset(self, idx):
        idx = list(idx)
        return LieBasis(tuple(self.names[i] for i in idx), self.gens[idx], self.h, self.ls)


def _basis(ls, names, gens):
    return LieBasis(tuple(names), jstack(list(gens)), ls.H, ls)


def basis_T(ls: LocalStructure, check=True) -> LieBasis:
    """The 16 anti-Hermitian products T_1..T_16."""
    b = _basis(ls, T_WORDS, [word(ls, w) for w in T_WORDS])
    if check:
        _require(lie_residuals(b), GeneratorDefect, 1e-9 * ls.scale())
    return b


def basis_su3(ls: LocalStructure, check=True) -> LieBasis:
    """t_1..t_16; the first eight close into su(3)."""
    tb = basis_T(ls, check=False)
    pos = {w: k for k, w in enumerate(T_WORDS)}
    r = np.zeros((16, 16))
    for k, (combo, norm) in enumerate(SU3_GENERATORS):
        for w, c in combo.items():
            r[k, pos[w]] = c / norm
    gens = jeinsum("kp,pb->kb", r, tb.gens)
    names = tuple(f"t{k + 1}" for k in range(16))
    b = LieBasis(names, gens, ls.H, ls)
    if check:
        tol = 1e-9 * ls.scale()
        if max_abs(r @ r.T - np.eye(16)) > 1e-14:
            raise GeneratorDefect("change of basis from T to t is not orthogonal")
        _require(lie_residuals(b), GeneratorDefect, tol)
        leak = su3_closure(b)
        if leak > tol:
            raise ClosureDefect(f"[t_k, t_l] for k, l <= 8 leaks {leak:.2e} outside su(3)")
    return b


def su3_closure(b: LieBasis):
    """Largest projection of [t_k, t_l] (k, l <= 8) onto t_9..t_16."""
    c = b.subset(range(8)).structure_constants(onto=b.subset(range(8, 16)))
    return max_abs(c)


def su3_mixed(b: LieBasis):
    """Largest projection of [t_k, t_r] (k <= 8 < r) onto t_1..t_8 and t_16."""
    com = b.ls.alg.comm(b.values[:8, None, :], b.values[None, 8:, :]).reshape(64, -1)
    onto = b.subset(list(range(8)) + [15])
    return max_abs(scalar_products(b.ls.alg, com, onto.values, b.h.val))


def _require(res: Residuals, exc, tol):
    bad = {k: v for k, v in res.values.items() if v > tol}
    if bad:
        raise exc("; ".join(f"{k} = {v:.2e}" for k, v in bad.items()))


def lie_residuals(b: LieBasis, tol_scale=1.0) -> Residuals:
    """D t_k = 0, anti-Hermiticity, orthonormality, closure, and reality of the constants."""
    ls = b.ls
    tol = tolerances(ls.scale(), tol_scale)
    res = Residuals()
    res.add("D t_k = 0", max_abs(ls.D(b.gens)), tol["d1"])
    v = b.values
    res.add("t_k^dagger = -t_k", max_abs(ls.alg.dagger(v, b.h.val) + v), tol["alg"])
    res.add("(t_k, t_l) = delta", max_abs(b.gram - np.eye(b.d)), tol["alg"])
    c = b.structure_constants()
    res.add("c real", max_abs(c.imag), tol["alg"])
    recon = np.einsum("qkl,qb->klb", c.real, v)
    res.add("[t_k, t_l] = c t_q", max_abs(b.commutators() - recon), tol["alg"])
    return res


# -- Omega cases -----------------------------------------------------------------------

@dataclass
class OmegaCase:
    case_id: str
    space: str
    N: Jet
    E: Jet
    basis: LieBasis

    @property
    def d(self):
        return self.basis.d

    @property
    def gens(self):
        return self.basis.gens

    def member_mask(self, n):
        """(allow imaginary parts, blade mask) for elements of the space."""
        even = (K.blade_grades(n) % 2 == 0) if "even" in self.space else np.ones(1 << n, dtype=bool)
        return not self.space.startswith("real"), even

    def membership_defect(self, u):
        u = u.val if isinstance(u, Jet) else np.asarray(u)
        cplx, mask = self.member_mask(int(np.log2(u.shape[-1])))
        bad = np.abs(u[..., ~mask]).max(initial=0.0)
        if not cplx:
            bad = max(bad, np.abs(u.imag).max(initial=0.0))
        return float(bad)


def omega_case(case_id: str, ls: LocalStructure, check=True) -> OmegaCase:
    """N, E and the generators of L0 for the case ``"i"`` ... ``"v"``."""
    if case_id not in CASES:
        raise ValueError(f"unknown case {case_id!r}; choose from {', '.join(CASES)}")
    space, nw, ew, l0 = CASES[case_id]
    if l0 == "T":
        basis = basis_T(ls, check=False)
    elif l0 == "su3":
        basis = basis_su3(ls, check=False).subset(range(8))
    else:
        basis = _basis(ls, l0, [word(ls, w) for w in l0])
    oc = OmegaCase(case_id, space, word(ls, nw), word(ls, ew), basis)
    if check:
        tol = 1e-9 * ls.scale()
        _require(ne_residuals(oc, ls), GeneratorDefect, tol)
        _require(lie_residuals(basis), GeneratorDefect, tol)
    return oc


def ne_residuals(oc: OmegaCase, ls: LocalStructure, tol_scale=1.0) -> Residuals:
    alg = ls.alg
    tol = tolerances(ls.scale(), tol_scale)
    h = ls.H.val
    n_, e_ = oc.N.val, oc.E.val
    one = np.zeros(ls.dim)
    one[0] = 1.0
    res = Residuals()
    res.add("N^2 = -1", max_abs(alg.mul(n_, n_) + one), tol["alg"])
    res.add("E^2 = 1", max_abs(alg.mul(e_, e_) - one), tol["alg"])
    res.add("[N, E] = 0", max_abs(alg.comm(n_, e_)), tol["alg"])
    res.add("N^dagger = -N", max_abs(alg.dagger(n_, h) + n_), tol["alg"])
    res.add("E^dagger = E", max_abs(alg.dagger(e_, h) - e_), tol["alg"])
    res.add("D N = 0", max_abs(ls.D(oc.N)), tol["d1"])
    res.add("D E = 0", max_abs(ls.D(oc.E)), tol["d1"])
    g = oc.basis.values
    res.add("[t_k, N] = [t_k, E] = 0", max(max_abs(alg.comm(g, n_)), max_abs(alg.comm(g, e_))), tol["alg"])
    res.add("t_k in Omega", oc.membership_defect(g), tol["alg"])
    return res


def project_L0(u, oc: OmegaCase, alg, h):
    """sum_k (u, t_k) t_k over the generators of L0 (arrays or jets, blade axis last)."""
    gens = oc.gens
    flat_shape = u.shape[:-1]
    uu = u.reshape((-1, u.shape[-1])) if flat_shape else u.reshape((1, u.shape[-1]))
    coef = scalar_products(alg, uu, gens, h)  # [item, k]
    out = jeinsum("ik,kb->ib", coef, gens)
    return out.reshape(flat_shape + (u.shape[-1],))


def _real_span(vectors, tol=1e-9):
    """Orthonormal real basis (as complex vectors) of the real span of ``vectors``."""
    m = np.concatenate([vectors.real, vectors.imag], axis=1)
    if m.size == 0:
        return np.zeros((0, vectors.shape[1]), dtype=complex)
    _, s, vt = np.linalg.svd(m, full_matrices=False)
    r = int(np.sum(s > tol * max(1.0, s[0])))
    half = vectors.shape[1]
    return vt[:r, :half] + 1j * vt[:r, half:]


def _real_nullspace(ops, basis, tol=1e-9):
    """Real combinations of ``basis`` rows killed by every real-linear map in ``ops``."""
    cols = []
    for b in basis:
        cols.append(np.concatenate([np.concatenate([f(b).real, f(b).imag]) for f in ops]))
    m = np.stack(cols, axis=1)
    _, s, vt = np.linalg.svd(m)
    s = np.concatenate([s, np.zeros(vt.shape[0] - len(s))])
    null = vt[s <= tol * max(1.0, s[0])]
    return null @ basis


def subalgebra_dims(oc: OmegaCase, ls: LocalStructure):
    """Real dimensions of Omega_-, L_max, L0 and the derived algebra [L0, L0], found numerically."""
    alg = ls.alg
    h = ls.H.val
    n_, e_ = oc.N.val, oc.E.val
    cplx, mask = oc.member_mask(ls.n)
    units = [np.eye(ls.dim)[b] for b in range(ls.dim) if mask[b]]
    space = units + ([1j * e for e in units] if cplx else [])
    space = np.array(space, dtype=complex)
    omega_minus = _real_nullspace([lambda u: alg.dagger(u, h) + u], space)
    lmax = _real_nullspace([lambda u: alg.comm(u, n_), lambda u: alg.comm(u, e_)], omega_minus)
    g = oc.basis.values
    derived = _real_span(alg.comm(g[:, None, :], g[None, :, :]).reshape(-1, ls.dim))
    return {"Omega_-": len(omega_minus), "L_max": len(lmax), "L0": len(_real_span(g)), "[L0,L0]": len(derived)}


def structure_x_independence(spec, points, case_id="ii", variant=None):
    """Largest pairwise deviation of the structure constants of L0 across ``points``."""
    consts = []
    for x in points:
        ls = LocalStructure(spec, x, 1, variant)
        if case_id == "T":
            b = basis_T(ls, check=False)
        else:
            b = omega_case(case_id, ls, check=False).basis
        consts.append(b.structure_constants().real)
    ref = consts[0]
    return max((max_abs(c - ref) for c in consts[1:]), default=0.0)


# -- group elements and gauge transformations ----------------------------------------------------------------

def group_element(ls: LocalStructure, oc: OmegaCase, coeffs, order=None):
    """U = exp(sum_k f_k t_k) with ``coeffs[k]`` scalar jets (or numbers); returns (U, U^-1)."""
    gens = oc.gens if order is None else oc.gens.truncate(order)
    f = jstack([c if isinstance(c, Jet) else np.asarray(c, dtype=float) for c in coeffs])
    u = jeinsum("k,kb->b", f, gens)
    return ls.alg.exp(u), ls.alg.exp(-u)


def spin_element(ls: LocalStructure, bivector):
    """S = exp(w) for a real 2-form field ``w`` (jet); returns (S, S^-1 = S*)."""
    s = ls.alg.exp(bivector)
    return s, ls.alg.star(s)


def _expr_jets(exprs, ls, order):
    from .expr import eval_jet, parse_expr

    order = ls.order if order is None else order
    return [eval_jet(parse_expr(e, ls.n) if isinstance(e, str) else e, ls.x, order) for e in exprs]


def group_element_from_exprs(ls: LocalStructure, oc: OmegaCase, exprs, order=None):
    """U = exp(sum_k f_k(x) t_k) for DSL strings ``exprs`` (one per generator of L0)."""
    if len(exprs) != oc.d:
        raise ValueError(f"need {oc.d} coefficient expressions, got {len(exprs)}")
    return group_element(ls, oc, _expr_jets(exprs, ls, order))


def spin_element_from_exprs(ls: LocalStructure, exprs, order=None):
    """S = exp(sum_{a<b} w_ab(x) dx^a ^ dx^b) for ``exprs = {(a, b): DSL}`` (1-based a < b)."""
    pairs = list(exprs)
    jets = _expr_jets([exprs[p] for p in pairs], ls, order)
    e = np.zeros((len(pairs), ls.dim))
    for row, (a, b) in enumerate(pairs):
        e[row, (1 << (a - 1)) | (1 << (b - 1))] = 1.0
    w = jeinsum("k,kb->b", jstack(jets), e)
    return spin_element(ls, w)


def _check_unitary(ls, oc, u, u_inv, tol):
    alg = ls.alg
    uv, uiv = u.val, u_inv.val
    h = ls.H.val
    one = np.zeros(ls.dim)
    one[0] = 1.0
    defects = {
        "U^dagger = U^-1": max_abs(alg.dagger(uv, h) - uiv),
        "U U^-1 = 1": max_abs(alg.mul(uv, uiv) - one),
        "[U, N] = 0": max_abs(alg.comm(uv, oc.N.val)),
        "[U, E] = 0": max_abs(alg.comm(uv, oc.E.val)),
    }
    bad = {k: v for k, v in defects.items() if v > tol}
    if bad:
        raise NotInGroup("; ".join(f"{k}: {v:.2e}" for k, v in bad.items()))


def gauge_transform_unitary(state, u, u_inv, check=True):
    """Psi U, U^-1 A U - U^-1 D U; B, N, E and the metric data are unchanged.

    ``state`` is a :class:`~cliffordforms.fields.PointState`; ``u`` and
    ``u_inv`` are jets of the group element and its inverse.
    """
    ls, alg = state.ls, state.ls.alg
    if check:
        _check_unitary(ls, state.case, u, u_inv, 1e-9 * state.scale())
    du = state.D(u)  # [mu, blade]
    a_new = alg.mul(alg.mul(u_inv, state.a), u) - alg.mul(u_inv, du)
    psi_new = alg.mul(state.psi, u)
    return dataclasses.replace(state, psi=psi_new, a=a_new)


def gauge_transform_spin(state, s, s_inv, check=True):
    """Conjugate every field by S and shift B by -S^-1 Upsilon S (H, I, K and N, E rotate too)."""
    ls, alg = state.ls, state.ls.alg
    if check:
        sv = s.val
        one = np.zeros(ls.dim)
        one[0] = 1.0
        tol = 1e-9 * state.scale()
        odd = max_abs(sv[K.blade_grades(ls.n) % 2 == 1])
        if odd > tol or max_abs(alg.mul(alg.star(sv), sv) - one) > tol:
            raise NotInSpin("S must be even with S* S = 1")

    def conj(x):
        return alg.mul(alg.mul(s_inv, x), s)

    b_new = conj(state.b) - alg.mul(s_inv, ls.upsilon(s))
    gens = tuple(conj(g) for g in ls.generators if g is not None)
    ls_new = LocalStructure(ls.spec, ls.x, ls.order, ls.variant, b_override=b_new, mjet=ls.mjet,
                            generators_override=gens)
    basis = dataclasses.replace(state.case.basis, gens=conj(state.case.gens), h=gens[0], ls=ls_new)
    case = dataclasses.replace(state.case, N=conj(state.case.N), E=conj(state.case.E), basis=basis)
    return dataclasses.replace(state, ls=ls_new, case=case, psi=alg.mul(state.psi, s), a=conj(state.a),
                               b=b_new)
