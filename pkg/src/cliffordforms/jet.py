"""Truncated multivariate Taylor jets over numpy arrays.

A :class:`Jet` of order ``r`` in ``n`` variables stores a value array of shape
``S`` together with its partial derivatives up to order ``r``.  The ``k``-th
part has shape ``(n,)*k + S``; derivative axes always come first and are
symmetric.  Arithmetic propagates derivatives exactly (Leibniz and Faa di
Bruno rules), truncating to the smallest order among the operands.

Plain numpy arrays and Python scalars act as constants of infinite order, so
most of the geometry code is written once and runs on either.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

__all__ = ["Jet", "jeinsum", "jinv", "jdet", "jstack", "as_jet", "order_of", "value_of"]

_LETTERS = "zyxwvutsrqponmlkjihgfedcbaZYXWVUTSRQPONMLKJIHGFEDCBA"


def _pad(part, k, ndim):
    """Insert unit axes after the ``k`` derivative axes so the value part has ``ndim`` axes."""
    extra = ndim - (part.ndim - k)
    if extra <= 0:
        return part
    shape = part.shape[:k] + (1,) * extra + part.shape[k:]
    return part.reshape(shape)


@lru_cache(maxsize=None)
def _placements(r, j):
    """Axis permutations that scatter ``j`` leading axes over all positions among ``r``."""
    perms = []
    for pos in itertools.combinations(range(r), j):
        rest = [p for p in range(r) if p not in pos]
        src = [0] * r
        for t, p in enumerate(pos):
            src[p] = t
        for u, p in enumerate(rest):
            src[p] = j + u
        perms.append(tuple(src))
    return tuple(perms)


def _symmetrize(t, r, j):
    if j == 0 or j == r:
        return t
    tail = tuple(range(r, t.ndim))
    out = None
    for src in _placements(r, j):
        term = np.transpose(t, src + tail)
        out = term if out is None else out + term
    return out


class Jet:
    """Value plus exact partial derivatives up to a fixed order."""

    __slots__ = ("parts", "n")
    __array_priority__ = 1000

    def __init__(self, parts, n):
        self.parts = tuple(np.asarray(p) for p in parts)
        self.n = int(n)

    # -- construction -----------------------------------------------------
    @classmethod
    def constant(cls, value, n, order):
        value = np.asarray(value)
        parts = [value] + [np.zeros((n,) * k + value.shape, dtype=value.dtype) for k in range(1, order + 1)]
        return cls(parts, n)

    @classmethod
    def coordinate(cls, x, i, order):
        """The jet of the coordinate function ``x_i`` (0-based) at the point ``x``."""
        n = len(x)
        parts = [np.asarray(float(x[i]))]
        if order >= 1:
            d = np.zeros(n)
            d[i] = 1.0
            parts.append(d)
        for k in range(2, order + 1):
            parts.append(np.zeros((n,) * k))
        return cls(parts, n)

    # -- basic properties -------------------------------------------------
    @property
    def order(self):
        return len(self.parts) - 1

    @property
    def val(self):
        return self.parts[0]

    @property
    def shape(self):
        return self.parts[0].shape

    @property
    def ndim(self):
        return self.parts[0].ndim

    @property
    def dtype(self):
        return self.parts[0].dtype

    def __repr__(self):
        return f"Jet(order={self.order}, n={self.n}, shape={self.shape})"

    def truncate(self, order):
        if order >= self.order:
            return self
        return Jet(self.parts[: order + 1], self.n)

    def partial(self):
        """Gradient as a jet of one lower order; the new leading value axis is the derivative index."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        return Jet(self.parts[1:], self.n)

    def map_parts(self, fn):
        return Jet([fn(p, k) for k, p in enumerate(self.parts)], self.n)

    # -- indexing and reshaping ------------------------------------------
    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return Jet([p[(slice(None),) * k + idx] for k, p in enumerate(self.parts)], self.n)

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], tuple):
            shape = shape[0]
        return Jet([p.reshape(p.shape[:k] + tuple(shape)) for k, p in enumerate(self.parts)], self.n)

    def swapaxes(self, a, b):
        a %= self.ndim
        b %= self.ndim
        return Jet([np.swapaxes(p, a + k, b + k) for k, p in enumerate(self.parts)], self.n)

    def transpose(self, axes):
        return Jet([np.transpose(p, tuple(range(k)) + tuple(a + k for a in axes)) for k, p in enumerate(self.parts)], self.n)

    def sum(self, axis):
        axis = axis % self.ndim
        return Jet([p.sum(axis=axis + k) for k, p in enumerate(self.parts)], self.n)

    def conj(self):
        return Jet([np.conj(p) for p in self.parts], self.n)

    @property
    def real(self):
        return Jet([p.real for p in self.parts], self.n)

    @property
    def imag(self):
        return Jet([p.imag for p in self.parts], self.n)

    def astype(self, dtype):
        return Jet([p.astype(dtype) for p in self.parts], self.n)

    def max_abs(self):
        """Largest magnitude over all parts; used for scale estimates."""
        return max(float(np.max(np.abs(p))) if p.size else 0.0 for p in self.parts)

    # -- arithmetic ---------------------------------------------------------
    def _binary_parts(self, other):
        if isinstance(other, Jet):
            r = min(self.order, other.order)
            return r, other
        return self.order, None

    def __add__(self, other):
        if isinstance(other, Jet):
            r = min(self.order, other.order)
            nd = max(self.ndim, other.ndim)
            return Jet([_pad(self.parts[k], k, nd) + _pad(other.parts[k], k, nd) for k in range(r + 1)], self.n)
        other = np.asarray(other)
        nd = max(self.ndim, other.ndim)
        parts = [self.parts[0] + other]
        parts += [_pad(p, k, nd) + np.zeros(other.shape, dtype=other.dtype) for k, p in enumerate(self.parts) if k]
        return Jet(parts, self.n)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-p for p in self.parts], self.n)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            return _leibniz(self, other, _outer_mul)
        other = np.asarray(other)
        nd = max(self.ndim, other.ndim)
        return Jet([_pad(p, k, nd) * other for k, p in enumerate(self.parts)], self.n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / np.asarray(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, p):
        if isinstance(p, (int, np.integer)) or (isinstance(p, float) and p.is_integer() and abs(p) < 64):
            p = int(p)
            if p == 0:
                return Jet.constant(np.ones_like(self.val), self.n, self.order)
            if p < 0:
                return (self ** (-p)).reciprocal()
            result, base = None, self
            while p:
                if p & 1:
                    result = base if result is None else result * base
                p >>= 1
                if p:
                    base = base * base
            return result
        x = self.val
        coeffs = [x**p]
        c = 1.0
        for k in range(1, self.order + 1):
            c *= p - k + 1
            coeffs.append(c * x ** (p - k))
        return self.compose(coeffs)

    def reciprocal(self):
        x = self.val
        coeffs = [1.0 / x]
        for k in range(1, self.order + 1):
            coeffs.append((-1) ** k * math.factorial(k) / x ** (k + 1))
        return self.compose(coeffs)

    def compose(self, derivs):
        """Apply an elementwise function given its derivatives ``derivs[k] = f^(k)(val)``."""
        r = self.order
        h = Jet([np.zeros_like(self.parts[0])] + list(self.parts[1:]), self.n)
        out = Jet.constant(np.asarray(derivs[0]) + np.zeros_like(self.val), self.n, r)
        power = None
        for k in range(1, r + 1):
            power = h if power is None else power * h
            out = out + power * (np.asarray(derivs[k]) / math.factorial(k))
        return out


def _outer_mul(x, kx, y, ky):
    """Elementwise product with x's derivative axes before y's."""
    nd = max(x.ndim - kx, y.ndim - ky)
    x = _pad(x, kx, nd)
    y = _pad(y, ky, nd)
    xs = x.reshape(x.shape[:kx] + (1,) * ky + x.shape[kx:])
    ys = y.reshape((1,) * kx + y.shape)
    return xs * ys


def _leibniz(a, b, f):
    r = min(a.order, b.order)
    parts = []
    for k in range(r + 1):
        acc = None
        for j in range(k + 1):
            t = _symmetrize(f(a.parts[j], j, b.parts[k - j], k - j), k, j)
            acc = t if acc is None else acc + t
        parts.append(acc)
    return Jet(parts, a.n)


def order_of(x):
    return x.order if isinstance(x, Jet) else None


def value_of(x):
    return x.val if isinstance(x, Jet) else np.asarray(x)


def as_jet(x, n, order):
    if isinstance(x, Jet):
        return x.truncate(order)
    return Jet.constant(np.asarray(x), n, order)


def jeinsum(subscripts, *operands):
    """``np.einsum`` extended multilinearly to jets.

    Constant operands contribute no derivative axes.  The result is a jet of
    the minimum order among the jet operands, or a plain array if none are jets.
    """
    jets = [i for i, op in enumerate(operands) if isinstance(op, Jet)]
    # pairwise contraction pays off once three tensors meet
    opt = "greedy" if len(operands) > 2 else False
    if not jets:
        return np.einsum(subscripts, *operands, optimize=opt)
    r = min(operands[i].order for i in jets)
    n = operands[jets[0]].n
    ins, out = subscripts.split("->")
    ins = ins.split(",")
    free = [c for c in _LETTERS if c not in subscripts]
    vals = [op.val if isinstance(op, Jet) else np.asarray(op) for op in operands]
    parts = [np.einsum(subscripts, *vals, optimize=opt)]
    for k in range(1, r + 1):
        letters = free[:k]
        acc = None
        for assign in itertools.product(jets, repeat=k):
            counts = {}
            for p, i in enumerate(assign):
                counts.setdefault(i, []).append(letters[p])
            subs, ops = [], []
            for i, op in enumerate(operands):
                if i in counts:
                    subs.append("".join(counts[i]) + ins[i])
                    ops.append(op.parts[len(counts[i])])
                else:
                    subs.append(ins[i])
                    ops.append(vals[i])
            term = np.einsum(",".join(subs) + "->" + "".join(letters) + out, *ops, optimize=opt)
            acc = term if acc is None else acc + term
        parts.append(acc)
    return Jet(parts, n)


def jinv(a):
    """Inverse over the last two axes; exact jet propagation via a nilpotent Neumann series."""
    if not isinstance(a, Jet):
        return np.linalg.inv(a)
    a0inv = np.linalg.inv(a.val)
    h = Jet([np.zeros_like(a.val)] + list(a.parts[1:]), a.n)
    e = jeinsum("...ij,...jk->...ik", a0inv, h)
    term = Jet.constant(a0inv, a.n, a.order)
    out = term
    for _ in range(a.order):
        term = -jeinsum("...ij,...jk->...ik", e, term)
        out = out + term
    return out


def jdet(a):
    """Determinant over the last two axes via ``det(A0) exp(tr log(1 + A0^-1 dA))``."""
    if not isinstance(a, Jet):
        return np.linalg.det(a)
    r = a.order
    d0 = np.linalg.det(a.val)
    a0inv = np.linalg.inv(a.val)
    h = Jet([np.zeros_like(a.val)] + list(a.parts[1:]), a.n)
    e = jeinsum("...ij,...jk->...ik", a0inv, h)
    log = None
    power = None
    for k in range(1, r + 1):
        power = e if power is None else jeinsum("...ij,...jk->...ik", power, e)
        tr = jeinsum("...ii->...", power) * ((-1) ** (k + 1) / k)
        log = tr if log is None else log + tr
    # log has zero value part, so its exponential series truncates at order r.
    out = Jet.constant(np.ones_like(d0), a.n, r)
    power = None
    for k in range(1, r + 1):
        power = log if power is None else power * log
        out = out + power * (1.0 / math.factorial(k))
    return out * d0


def jstack(items, axis=0):
    """Stack arrays and jets along a new value axis."""
    jets = [x for x in items if isinstance(x, Jet)]
    if not jets:
        return np.stack([np.asarray(x) for x in items], axis=axis)
    r = min(j.order for j in jets)
    n = jets[0].n
    items = [as_jet(x, n, r) for x in items]
    nd = max(x.ndim for x in items)
    axis = axis % (nd + 1)
    dtype = np.result_type(*[x.dtype for x in items])
    parts = []
    for k in range(r + 1):
        arrs = [np.broadcast_to(_pad(x.parts[k], k, nd), x.parts[k].shape[:k] + np.broadcast_shapes(*[y.shape for y in items])).astype(dtype) for x in items]
        parts.append(np.stack(arrs, axis=axis + k))
    return Jet(parts, n)
