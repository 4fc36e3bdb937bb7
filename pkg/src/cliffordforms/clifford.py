"""Pointwise Clifford algebra of differential forms.

Forms are stored as ``2**n`` complex coefficients in blade-bitmask order, one
coefficient per strictly increasing index set.  The metric enters through an
:class:`Algebra` attached to a :class:`~cliffordforms.geometry.MetricJet`; it
holds the Hodge matrix and the structure tensor ``M[A, B, C]`` (coefficient of
blade C in e_A e_B) as jets, so products of fields can be differentiated.

Two independent products serve as cross-checks: the generic blade-contraction
product from :mod:`cliffordforms._kernels` and a 4x4 gamma-matrix
representation built from an orthonormal coframe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels as K
from .errors import (
    BadConjugator, DimensionMismatch, FrameError, GradeError, NoConvergence, NotInvertible,
)
from .jet import Jet, as_jet, jeinsum, jstack

__all__ = [
    "Form", "Algebra", "algebra", "wedge", "hodge", "volume_form", "com", "clifford_mul",
    "clifford_mul_generic", "trace", "involution", "hermitian_conj", "scalar_product",
    "clifford_exp", "clifford_inverse", "GammaRep", "gamma_rep", "rep_apply",
    "two_form_from_antisym", "blade_index", "involution_signs", "random_form", "clifford_residuals",
]


def blade_index(indices):
    """Bitmask position of the blade with the given 1-based indices (any order, sign ignored)."""
    return sum(1 << (i - 1) for i in indices)


@lru_cache(maxsize=None)
def involution_signs(n):
    g = K.blade_grades(n)
    s = np.where((g * (g - 1) // 2) % 2 == 0, 1.0, -1.0)
    s.setflags(write=False)
    return s


@lru_cache(maxsize=None)
def _pair_selector(n):
    """``P[a, b, c] = 1`` when blade c is {a, b} with a < b (0-based)."""
    p = np.zeros((n, n, 1 << n))
    for a in range(n):
        for b in range(a + 1, n):
            p[a, b, (1 << a) | (1 << b)] = 1.0
    p.setflags(write=False)
    return p


@lru_cache(maxsize=None)
def _antisym_two(n):
    """``A[c, a, b]``: full antisymmetric components of the grade-2 blade c."""
    dim = 1 << n
    t = np.zeros((dim, n, n))
    for a in range(n):
        for b in range(a + 1, n):
            c = (1 << a) | (1 << b)
            t[c, a, b] = 1.0
            t[c, b, a] = -1.0
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def _vector_embed(n):
    """``V[i, c] = 1`` when c is the blade dx^(i+1)."""
    v = np.zeros((n, 1 << n))
    for i in range(n):
        v[i, 1 << i] = 1.0
    v.setflags(write=False)
    return v


@lru_cache(maxsize=None)
def _complement_perm(n):
    """``P[Bc, B] = sign(B, B^c)``: the wedge sign of B followed by its complement."""
    dim = 1 << n
    full = dim - 1
    p = np.zeros((dim, dim))
    w = K.wedge_table(n)
    for b in range(dim):
        p[full ^ b, b] = w[b, full ^ b, full]
    p.setflags(write=False)
    return p


@lru_cache(maxsize=None)
def _grade_masks(n):
    g = K.blade_grades(n)
    return {(r, s): ((g == r)[:, None, None] & (g == s)[None, :, None]).astype(float)
            for r in range(n + 1) for s in range(n + 1)}


def two_form_from_antisym(t, n):
    """Blade coefficients of ½ t_{ab...} dx^a ^ dx^b for ``t`` antisymmetric in its first two axes.

    Returns shape ``t.shape[2:] + (2**n,)``; works on arrays and jets.
    """
    return jeinsum("abc,ab...->...c", _pair_selector(n), t)


# -- the Form value type ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Form:
    """A nonhomogeneous differential form at one point.

    ``real=True`` promises (and enforces) vanishing imaginary parts.
    """

    coeffs: np.ndarray
    n: int = 4
    real: bool = False

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.shape != (1 << self.n,):
            raise DimensionMismatch(f"expected {1 << self.n} coefficients for n={self.n}, got shape {c.shape}")
        if self.real:
            if np.any(c.imag != 0):
                raise ValueError("real form with nonzero imaginary part")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # construction
    @classmethod
    def zero(cls, n=4, real=False):
        return cls(np.zeros(1 << n), n, real)

    @classmethod
    def scalar(cls, value, n=4):
        c = np.zeros(1 << n, dtype=complex)
        c[0] = value
        return cls(c, n, np.imag(value) == 0)

    @classmethod
    def blade(cls, *indices, n=4, coeff=1.0):
        """``coeff * dx^i1 ^ dx^i2 ^ ...`` for 1-based indices (any order)."""
        c = np.zeros(1 << n, dtype=complex)
        if len(set(indices)) == len(indices):
            idx = sorted(indices)
            sign = K._perm_sign(np.argsort(indices))
            c[blade_index(idx)] = sign * coeff
        return cls(c, n, np.imag(coeff) == 0)

    @classmethod
    def from_dict(cls, terms, n=4):
        """``{(1, 2): 0.5, (): 1.0}`` style construction."""
        out = cls.zero(n)
        for idx, v in terms.items():
            out = out + cls.blade(*idx, n=n, coeff=v)
        return out

    # algebraic sugar (metric-free operations only)
    def _wrap(self, c, real=None):
        return Form(c, self.n, self.real if real is None else real)

    def _check(self, other):
        if other.n != self.n:
            raise DimensionMismatch(f"forms of dimension {self.n} and {other.n}")

    def __add__(self, other):
        if not isinstance(other, Form):
            other = Form.scalar(other, self.n)
        self._check(other)
        return Form(self.coeffs + other.coeffs, self.n, self.real and other.real)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._wrap(-self.coeffs)

    def __mul__(self, k):
        if isinstance(k, Form):
            raise TypeError("use clifford_mul or wedge to multiply forms")
        return Form(self.coeffs * k, self.n, self.real and np.imag(k) == 0)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1.0 / k)

    def grade(self, k):
        c = np.where(K.blade_grades(self.n) == k, self.coeffs, 0)
        return self._wrap(c)

    def grades(self, tol=0.0):
        g = K.blade_grades(self.n)
        return sorted({int(g[i]) for i in np.flatnonzero(np.abs(self.coeffs) > tol)})

    def conj(self):
        return self._wrap(np.conj(self.coeffs))

    def max_abs(self):
        return float(np.max(np.abs(self.coeffs)))

    def allclose(self, other, atol=1e-12):
        if not isinstance(other, Form):
            other = Form.scalar(other, self.n)
        return float(np.max(np.abs(self.coeffs - other.coeffs))) <= atol

    def __repr__(self):
        idx = K.blade_indices(self.n)
        terms = []
        for a in np.flatnonzero(np.abs(self.coeffs) > 0):
            name = "^".join(f"dx{i + 1}" for i in idx[a]) or "1"
            terms.append(f"({self.coeffs[a]:.6g}){name}")
        return "Form(" + " + ".join(terms or ["0"]) + ")"


def _coeffs(u):
    return u.coeffs if isinstance(u, Form) else u


# -- metric-dependent structure --------------------------------------------------------

class Algebra:
    """Metric-dependent tables at one point, with jets of the requested order."""

    def __init__(self, mjet):
        self.mjet = mjet
        self.n = mjet.n
        self.dim = 1 << self.n

    @cached_property
    def compound(self):
        """``C[B, A] = det(g^{B, A})`` as a jet: raises all indices of blade coefficients."""
        return compound_matrix(self.mjet.ginv)

    @cached_property
    def hodge_matrix(self):
        """``S[B, A]``: coefficient of blade B in the Hodge dual of blade A (jet)."""
        return jeinsum("cb,ba->ca", _complement_perm(self.n), self.compound) * self.mjet.sqrt_neg_det

    @cached_property
    def generic_table(self):
        return K.generic_product_table(self.mjet.g_up)

    def table_jet(self, order=None):
        """Structure tensor as a jet of the given order (default: full metric order)."""
        order = self.mjet.order if order is None else order
        if self.n != 4 and order == 0:
            return self.generic_table
        return self._table_jets(order)

    @lru_cache(maxsize=None)
    def _table_jets(self, order):
        ginv = self.mjet.ginv.truncate(order)
        if self.n != 4:
            return generic_table_jet(ginv, self.n)
        s = self.hodge_matrix.truncate(order)
        return grade_pair_table(s, ginv, self.n)

    @cached_property
    def table(self):
        """Value of the grade-pair structure tensor (generic table for n != 4)."""
        if self.n != 4:
            return self.generic_table
        t = self._table_jets(0)
        return t.val if isinstance(t, Jet) else t

    # operations on raw coefficient arrays / jets with blade as the last axis
    def mul(self, u, v):
        if isinstance(u, Jet) or isinstance(v, Jet):
            r = min(x.order for x in (u, v) if isinstance(x, Jet))
            return jeinsum("...a,...b,abc->...c", u, v, self.table_jet(r))
        return np.einsum("...a,...b,abc->...c", u, v, self.table)

    def comm(self, u, v):
        return self.mul(u, v) - self.mul(v, u)

    def anti(self, u, v):
        return self.mul(u, v) + self.mul(v, u)

    def hodge(self, u):
        if isinstance(u, Jet):
            return jeinsum("ba,...a->...b", self.hodge_matrix.truncate(u.order), u)
        return np.einsum("ba,...a->...b", self.hodge_matrix.val, u)

    def star(self, u):
        """The involution U* (gradewise sign and complex conjugation)."""
        s = involution_signs(self.n)
        return (u.conj() if isinstance(u, Jet) else np.conj(u)) * s

    def dagger(self, u, h):
        return self.mul(self.mul(h, self.star(u)), h)

    def trace(self, u):
        return u[..., 0]

    def volume(self):
        """ℓ as a jet."""
        top = np.zeros(self.dim)
        top[-1] = 1.0
        return self.mjet.sqrt_neg_det * top

    def left_matrix(self, u):
        """``L[c, b]``: matrix of X -> u X."""
        return np.einsum("a,abc->cb", u, self.table)

    def right_matrix(self, u):
        return np.einsum("b,abc->ca", u, self.table)

    def exp(self, u, max_terms=200):
        """Power series exponential; jets are summed term by term without scaling."""
        if isinstance(u, Jet):
            one = np.zeros(self.dim)
            one[0] = 1.0
            out = u * 0 + one
            term = out
            for k in range(1, max_terms + 1):
                term = self.mul(term, u) * (1.0 / k)
                out = out + term
                if term.max_abs() < 1e-17 * max(1.0, out.max_abs()):
                    return out
            raise NoConvergence("exponential series did not converge")
        return _exp_array(self, np.asarray(u, dtype=complex), max_terms)

    def inverse(self, u):
        lm = self.left_matrix(u)
        one = np.zeros(self.dim)
        one[0] = 1.0
        if np.linalg.cond(lm) > 1e12:
            raise NotInvertible("left multiplication is numerically singular")
        x = np.linalg.solve(lm, one)
        scale = 1.0 + float(np.max(np.abs(u))) * float(np.max(np.abs(x)))
        if (np.max(np.abs(self.mul(u, x) - one)) > 1e-10 * scale
                or np.max(np.abs(self.mul(x, u) - one)) > 1e-10 * scale):
            raise NotInvertible("left and right inverses differ")
        return x


def _exp_array(alg, u, max_terms):
    norm = float(np.max(np.abs(u))) if u.size else 0.0
    s = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    v = u / (2**s)
    out = np.zeros_like(v)
    out[..., 0] = 1.0
    term = out.copy()
    for k in range(1, max_terms + 1):
        term = alg.mul(term, v) / k
        out = out + term
        if np.max(np.abs(term)) < 1e-16 * np.max(np.abs(out)):
            break
    else:
        raise NoConvergence(f"exponential series needs more than {max_terms} terms")
    for _ in range(s):
        out = alg.mul(out, out)
    return out


def compound_matrix(x):
    """Induced map of the matrix ``x`` (jet or array) on all blades: ``C[B, A] = det x[B, A]``."""
    n = x.shape[-1]
    dim = 1 << n
    w = K.wedge_table(n)
    vec = _vector_embed(n)
    cols = [None] * dim
    e0 = np.zeros(dim)
    e0[0] = 1.0
    cols[0] = e0 if not isinstance(x, Jet) else Jet.constant(e0, x.n, x.order)
    for a in range(1, dim):
        i = (a & -a).bit_length() - 1
        rest = a ^ (1 << i)
        xi = x[:, i]  # image of dx^(i+1): sum_b x[b, i] dx^b
        v = jeinsum("b,bc->c", xi, vec)
        cols[a] = jeinsum("c,d,cde->e", v, cols[rest], w) if isinstance(v, Jet) else np.einsum("c,d,cde->e", v, cols[rest], w)
    return jstack(cols, axis=1)


def _com_tensor(ginv, n):
    a2 = _antisym_two(n)
    # wedge of two 1-forms as blades: WV[i, j, c] = coefficient of blade c in dx^i ^ dx^j
    wv = np.zeros((n, n, 1 << n))
    for i in range(n):
        for j in range(n):
            if i != j:
                wv[i, j, (1 << i) | (1 << j)] = 1.0 if i < j else -1.0
    x = jeinsum("aij,ik->ajk", a2, ginv)
    x = jeinsum("ajk,bkl->abjl", x, a2)
    return jeinsum("abjl,jlc->abc", x, wv) * -2.0


def grade_pair_table(s, ginv, n=4):
    """Assemble the structure tensor from the grade-pair rules.

    ``s`` is the Hodge matrix and ``ginv`` the inverse metric (arrays or jets).
    """
    w = K.wedge_table(n)
    # U ^ *V, then starred: *(U ^ *V)
    u_sv = jeinsum("db,adc->abc", s, w)
    s_u_sv = jeinsum("ce,abe->abc", s, u_sv)
    # *U ^ V, then starred
    su_v = jeinsum("da,dbc->abc", s, w)
    s_su_v = jeinsum("ce,abe->abc", s, su_v)
    # *U ^ *V
    su_sv = jeinsum("eb,aec->abc", s, su_v)
    com = _com_tensor(ginv, n)

    m = _grade_masks(n)
    g = np.arange(n + 1)
    out = 0
    for r in g:
        for t in g:
            mask = m[(r, t)]
            if r == 0 or t == 0:
                rule = w
            elif r == 1:
                rule = w - s_u_sv
            elif t == 1:
                rule = w + s_su_v
            elif (r, t) == (2, 2):
                rule = w + s_u_sv + com * 0.5
            elif (r, t) == (2, 3):
                rule = su_sv - s_u_sv
            elif (r, t) in ((2, 4), (3, 4), (4, 2)):
                rule = su_sv
            elif (r, t) == (3, 2):
                rule = -su_sv - s_su_v
            elif (r, t) == (3, 3):
                rule = su_sv + s_u_sv
            else:  # (4, 3), (4, 4)
                rule = -su_sv
            out = out + rule * mask
    return out


@lru_cache(maxsize=None)
def _interior_table(n):
    """``T[v, B, A]``: sign with which i^a(blade A) contains g^{av} times blade B."""
    dim = 1 << n
    t = np.zeros((n, dim, dim))
    for a_blade, idx in enumerate(K.blade_indices(n)):
        for pos, v in enumerate(idx):
            t[v, a_blade & ~(1 << v), a_blade] = 1.0 if pos % 2 == 0 else -1.0
    t.setflags(write=False)
    return t


def generic_table_jet(ginv, n):
    """Blade structure tensor ``T[a, b, c]`` for any n, generic over jets of ``g^{mu nu}``.

    Left multiplication by dx^a is the wedge plus the interior product; a blade
    dx^a ^ W with a below every index of W acts as L(dx^a) L(W) - L(i^a W).
    """
    dim = 1 << n
    interior = jeinsum("iv,vba->iba", ginv, _interior_table(n))  # [a, B, A]
    wedge = np.transpose(K.wedge_table(n)[[1 << a for a in range(n)]], (0, 2, 1))  # [a, C, B]
    vec = interior + wedge
    grades = K.blade_grades(n)
    left = {0: as_jet(np.eye(dim), n, ginv.order) if isinstance(ginv, Jet) else np.eye(dim)}
    for blade in sorted(range(1, dim), key=lambda b: grades[b]):
        a = (blade & -blade).bit_length() - 1
        rest = blade & ~(1 << a)
        lm = jeinsum("cd,db->cb", vec[a], left[rest])
        lower = [c for c in range(dim) if grades[c] == grades[rest] - 1 and c & rest == c]
        if lower:
            contracted = interior[a][lower, rest]  # i^a of the remaining blade
            lm = lm - jeinsum("c,cdb->db", contracted, jstack([left[c] for c in lower]))
        left[blade] = lm
    full = jstack([left[b] for b in range(dim)])
    return full.transpose((0, 2, 1)) if isinstance(full, Jet) else np.transpose(full, (0, 2, 1))


def algebra(mjet) -> Algebra:
    """The (cached) algebra tables attached to a metric jet."""
    alg = mjet.__dict__.get("_algebra")
    if alg is None:
        alg = Algebra(mjet)
        mjet.__dict__["_algebra"] = alg
    return alg


# -- public pointwise operations -------------------------------------------------------

def _same(u, v):
    if u.n != v.n:
        raise DimensionMismatch(f"forms of dimension {u.n} and {v.n}")


def _out(u, v, c):
    real = u.real and v.real and not np.any(np.imag(c) != 0)
    return Form(c, u.n, real)


def wedge(u: Form, v: Form) -> Form:
    _same(u, v)
    c = np.einsum("a,b,abc->c", u.coeffs, v.coeffs, K.wedge_table(u.n))
    return _out(u, v, c)


def hodge(u: Form, mjet) -> Form:
    if u.n != mjet.n:
        raise DimensionMismatch("form and metric dimensions differ")
    c = algebra(mjet).hodge(u.coeffs)
    return Form(c, u.n, u.real)


def volume_form(mjet) -> Form:
    c = np.zeros(1 << mjet.n)
    c[-1] = mjet.sqrt_neg_g
    return Form(c, mjet.n, True)


def com(u: Form, v: Form, mjet) -> Form:
    for f in (u, v):
        if np.max(np.abs(f.coeffs - f.grade(2).coeffs)) > 1e-14:
            raise GradeError("Com takes two 2-forms")
    _same(u, v)
    t = _com_tensor(mjet.g_up, u.n)
    return _out(u, v, np.einsum("a,b,abc->c", u.coeffs, v.coeffs, t))


def clifford_mul(u: Form, v: Form, mjet) -> Form:
    _same(u, v)
    if u.n != mjet.n:
        raise DimensionMismatch("form and metric dimensions differ")
    return _out(u, v, algebra(mjet).mul(u.coeffs, v.coeffs))


def clifford_mul_generic(u: Form, v: Form, mjet) -> Form:
    _same(u, v)
    if u.n != mjet.n:
        raise DimensionMismatch("form and metric dimensions differ")
    t = algebra(mjet).generic_table
    c = K.batched_product(t, u.coeffs[None], v.coeffs[None])[0]
    return _out(u, v, c)


def trace(u: Form) -> complex:
    return complex(u.coeffs[0])


def involution(u: Form) -> Form:
    return Form(np.conj(u.coeffs) * involution_signs(u.n), u.n, u.real)


def _check_conjugator(h, mjet, tol=1e-10):
    alg = algebra(mjet)
    hh = alg.mul(h.coeffs, h.coeffs)
    hh[0] -= 1.0
    if np.max(np.abs(hh)) > tol:
        raise BadConjugator(f"conjugator does not square to 1 (defect {np.max(np.abs(hh)):.2e})")


def hermitian_conj(u: Form, h: Form, mjet) -> Form:
    _check_conjugator(h, mjet)
    return Form(algebra(mjet).dagger(u.coeffs, h.coeffs), u.n, u.real)


def scalar_product(u: Form, v: Form, h: Form, mjet) -> complex:
    """(U, V) = Tr(U V†)."""
    _check_conjugator(h, mjet)
    alg = algebra(mjet)
    return complex(alg.mul(u.coeffs, alg.dagger(v.coeffs, h.coeffs))[0])


def clifford_exp(u: Form, mjet) -> Form:
    return Form(algebra(mjet).exp(u.coeffs), u.n, False)


def clifford_inverse(u: Form, mjet) -> Form:
    return Form(algebra(mjet).inverse(u.coeffs), u.n, False)


# -- gamma-matrix representation ------------------------------------------------------

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def dirac_gammas():
    """Dirac matrices with gamma^0 = diag(I, -I); {gamma^a, gamma^b} = 2 eta^{ab}."""
    i2, z = np.eye(2), np.zeros((2, 2))
    g0 = np.block([[i2, z], [z, -i2]]).astype(complex)
    gk = [np.block([[z, s], [-s, z]]) for s in _SIGMA]
    return [g0] + gk


@dataclass(frozen=True)
class GammaRep:
    tetrad: np.ndarray  # e^a_mu
    frame: np.ndarray  # E[mu, a]: dx^mu = E[mu, a] theta^a
    vectors: tuple  # rep(dx^mu)
    blades: np.ndarray  # rep of every blade, shape (16, 4, 4)


def gamma_rep(mjet) -> GammaRep:
    """Orthonormalize dx^1..dx^4 under g^{mu nu} and map them onto Dirac matrices."""
    if mjet.n != 4:
        raise DimensionMismatch("the gamma representation is four dimensional")
    gu = mjet.g_up
    eta = np.array([1.0, -1.0, -1.0, -1.0])
    theta = np.zeros((4, 4))  # theta^a = theta[a, mu] dx^mu
    for k in range(4):
        v = np.zeros(4)
        v[k] = 1.0
        for a in range(k):
            v = v - eta[a] * (theta[a] @ gu @ v) * theta[a]
        nrm = v @ gu @ v
        if nrm * eta[k] <= 1e-12 * np.max(np.abs(gu)):
            raise FrameError(f"orthonormalization degenerates at step {k + 1} (norm {nrm:.3e})")
        theta[k] = v / math.sqrt(nrm * eta[k])
    frame = np.linalg.inv(theta)  # dx^mu = frame[mu, a] theta^a
    gam = dirac_gammas()
    vecs = tuple(sum(frame[m, a] * gam[a] for a in range(4)) for m in range(4))
    blades = np.zeros((16, 4, 4), dtype=complex)
    for b, idx in enumerate(K.blade_indices(4)):
        if not idx:
            blades[b] = np.eye(4)
            continue
        acc = np.zeros((4, 4), dtype=complex)
        for perm in _perms(len(idx)):
            mat = np.eye(4, dtype=complex)
            for p in perm:
                mat = mat @ vecs[idx[p]]
            acc += K._perm_sign(perm) * mat
        blades[b] = acc / math.factorial(len(idx))
    return GammaRep(theta, frame, vecs, blades)


@lru_cache(maxsize=None)
def _perms(k):
    import itertools

    return tuple(itertools.permutations(range(k)))


def rep_apply(rep: GammaRep, u) -> np.ndarray:
    return np.einsum("a,aij->ij", _coeffs(u), rep.blades)


# -- axiom and cross-product checks ------------------------------------------------------------

def random_form(rng, n=4, amplitude=1.0):
    dim = 1 << n
    return amplitude * (rng.standard_normal(dim) + 1j * rng.standard_normal(dim))


def clifford_residuals(mjet, u, v, w, h, tol_scale=1.0):
    """Algebra axioms on coefficient arrays ``u, v, w`` at the point of ``mjet``.

    ``h`` is a conjugator (H^2 = 1) used for the dagger and the scalar product.
    For n = 4 the grade-pair product is also compared with the generic blade
    product and with the gamma-matrix representation.
    """
    from .residuals import Residuals, max_abs

    alg = algebra(mjet)
    n = mjet.n
    scale = 1.0 + max(max_abs(x) for x in (u, v, w, mjet.g_lo, mjet.g_up))
    alg_tol = 1e-10 * scale * tol_scale
    res = Residuals()
    mul = alg.mul
    res.add("associativity", max_abs(mul(mul(u, v), w) - mul(u, mul(v, w))), alg_tol)
    res.add("distributivity", max_abs(mul(u, v + w) - mul(u, v) - mul(u, w)), alg_tol)
    dx = np.zeros((n, 1 << n))
    for i in range(n):
        dx[i, 1 << i] = 1.0
    anti = alg.anti(dx[:, None, :], dx[None, :, :])
    want = np.zeros_like(anti)
    want[..., 0] = 2 * mjet.g_up
    res.add("dx^mu dx^nu + dx^nu dx^mu = 2 g^{mu nu}", max_abs(anti - want), alg_tol)
    grades = K.blade_grades(n)
    sign = np.sign(mjet.det_g)
    ss = np.where((grades * (n - grades)) % 2 == 0, 1.0, -1.0) * sign
    res.add("star star = (-1)^(k(n-k)) sign(g)", max_abs(alg.hodge(alg.hodge(u)) - ss * u), alg_tol)
    if n == 4:
        ell = alg.volume()
        ell = ell.val if isinstance(ell, Jet) else ell
        one = np.zeros(16)
        one[0] = 1.0
        res.add("ell^2 = -1", max_abs(mul(ell, ell) + one), alg_tol)
        even = np.where(grades % 2 == 0, u, 0)
        odd = u - even
        res.add("ell commutes with even, anticommutes with odd",
                max(max_abs(alg.comm(ell, even)), max_abs(alg.anti(ell, odd))), alg_tol)
    res.add("Tr(UV - VU) = 0", abs(alg.comm(u, v)[0]), alg_tol)
    res.add("(UV)* = V* U*", max_abs(alg.star(mul(u, v)) - mul(alg.star(v), alg.star(u))), alg_tol)
    res.add("U^dagger dagger = U", max_abs(alg.dagger(alg.dagger(u, h), h) - u), alg_tol)
    uu = mul(u, alg.dagger(u, h))[0]
    res.add("(U,U) > 0 and real", max(0.0, -uu.real) + abs(uu.imag), alg_tol)
    if n == 4:
        cross = 1e-11 * scale * tol_scale
        grade_pair = mul(u, v)
        generic = K.batched_product(alg.generic_table, u[None], v[None])[0]
        res.add("grade-pair = generic product", max_abs(grade_pair - generic), cross)
        rep = gamma_rep(mjet)
        mats = rep_apply(rep, grade_pair) - rep_apply(rep, u) @ rep_apply(rep, v)
        res.add("grade-pair = gamma product", max_abs(mats), cross)
        res.add("generic = gamma product",
                max_abs(rep_apply(rep, generic) - rep_apply(rep, u) @ rep_apply(rep, v)), cross)
    return res
