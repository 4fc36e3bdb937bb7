"""Hot numeric kernels over blade bitmasks.

Blade ``A`` is the bitmask of its (0-based) indices; coefficients are stored in
bitmask order.  Kernels are compiled with numba unless disabled (see
:mod:`cliffordforms._accel`); the fallbacks run the same code uncompiled or an
equivalent numpy expression.
"""

from functools import lru_cache

import numpy as np

from ._accel import USING_NUMBA, njit

__all__ = [
    "blade_grades", "blade_indices", "wedge_table", "derivation_table",
    "generic_product_table", "batched_product", "USING_NUMBA",
]


@njit(cache=True)
def _popcount(a):
    c = 0
    while a:
        c += a & 1
        a >>= 1
    return c


@njit(cache=True)
def _below(a, i):
    """Number of set bits of ``a`` strictly below bit ``i``."""
    return _popcount(a & ((1 << i) - 1))


@njit(cache=True)
def _wedge_sign(a, b):
    if a & b:
        return 0
    # sign of the shuffle that sorts a's indices followed by b's
    s = 0
    bb = b
    i = 0
    while bb:
        if bb & 1:
            s += _popcount(a >> (i + 1))
        bb >>= 1
        i += 1
    return -1 if s & 1 else 1


@njit(cache=True)
def _generic_table(ginv, n):
    """Structure constants of the Clifford product with e_i e_j + e_j e_i = 2 ginv[i, j].

    Builds rows in order of blade grade using e_i ^ X = e_i X - e_i _| X.
    """
    dim = 1 << n
    t = np.zeros((dim, dim, dim))
    order = np.argsort(np.array([_popcount(a) for a in range(dim)]), kind="mergesort")
    for a in order:
        if a == 0:
            for b in range(dim):
                t[0, b, b] = 1.0
            continue
        i = 0
        while not (a >> i) & 1:
            i += 1
        rest = a ^ (1 << i)
        for b in range(dim):
            # e_i (e_rest e_b): left multiplication of a multivector by a vector
            for c in range(dim):
                x = t[rest, b, c]
                if x == 0.0:
                    continue
                if not (c >> i) & 1:
                    sgn = -1.0 if _below(c, i) & 1 else 1.0
                    t[a, b, c | (1 << i)] += sgn * x
                r = 0
                for j in range(n):
                    if (c >> j) & 1:
                        g = ginv[i, j]
                        if g != 0.0:
                            sgn = -1.0 if r & 1 else 1.0
                            t[a, b, c ^ (1 << j)] += sgn * g * x
                        r += 1
            # minus (e_i _| e_rest) e_b
            r = 0
            for j in range(n):
                if (rest >> j) & 1:
                    g = ginv[i, j]
                    if g != 0.0:
                        sgn = -1.0 if r & 1 else 1.0
                        low = rest ^ (1 << j)
                        for c in range(dim):
                            t[a, b, c] -= sgn * g * t[low, b, c]
                    r += 1
    return t


def generic_product_table(ginv):
    """``T[A, B, C]``: coefficient of blade C in e_A e_B for inverse metric ``ginv``."""
    ginv = np.ascontiguousarray(ginv, dtype=np.float64)
    return _generic_table(ginv, ginv.shape[0])


@njit(cache=True)
def _batched_product_nb(table, u, v):
    nb, dim = u.shape
    out = np.zeros((nb, dim), dtype=np.complex128)
    for s in range(nb):
        for a in range(dim):
            ua = u[s, a]
            if ua == 0:
                continue
            for b in range(dim):
                w = ua * v[s, b]
                if w == 0:
                    continue
                for c in range(dim):
                    m = table[a, b, c]
                    if m != 0.0:
                        out[s, c] += m * w
    return out


def batched_product(table, u, v):
    """Row-wise products ``u[s] v[s]`` for a real structure tensor."""
    u = np.ascontiguousarray(u, dtype=np.complex128)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    if USING_NUMBA:
        return _batched_product_nb(np.ascontiguousarray(table, dtype=np.float64), u, v)
    return np.einsum("abc,sa,sb->sc", table, u, v)


# -- static tables (plain Python, cached) ---------------------------------------

@lru_cache(maxsize=None)
def blade_grades(n):
    return np.array([bin(a).count("1") for a in range(1 << n)])


@lru_cache(maxsize=None)
def blade_indices(n):
    """Ascending 0-based index tuple of every blade."""
    return tuple(tuple(i for i in range(n) if (a >> i) & 1) for a in range(1 << n))


@lru_cache(maxsize=None)
def wedge_table(n):
    dim = 1 << n
    w = np.zeros((dim, dim, dim))
    for a in range(dim):
        for b in range(dim):
            s = _wedge_sign(a, b)
            if s:
                w[a, b, a | b] = s
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def derivation_table(n):
    """``E[v, l, B, A]``: the exterior derivation induced by dx^v -> dx^l, acting on blade A.

    A linear map X on 1-forms (dx^v -> sum_l X[v, l] dx^l) extends to forms by
    the Leibniz rule; its matrix on blade coefficients is ``einsum('vl,vlBA', X, E)``.
    """
    dim = 1 << n
    e = np.zeros((n, n, dim, dim))
    idx = blade_indices(n)
    for a in range(dim):
        for pos, v in enumerate(idx[a]):
            for l in range(n):
                seq = list(idx[a])
                seq[pos] = l
                if len(set(seq)) < len(seq):
                    continue
                perm = np.argsort(seq)
                sign = _perm_sign(perm)
                b = sum(1 << k for k in seq)
                e[v, l, b, a] += sign
    e.setflags(write=False)
    return e


def _perm_sign(perm):
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign
