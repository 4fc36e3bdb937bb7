import cmath
import math

import numpy as np
import pytest

from cliffordforms import _kernels as K
from cliffordforms.clifford import (
    Form, algebra, clifford_exp, clifford_inverse, clifford_mul, clifford_mul_generic, clifford_residuals, com,
    gamma_rep, hermitian_conj, hodge, involution, random_form, rep_apply, scalar_product, trace, volume_form,
    wedge,
)
from cliffordforms.errors import BadConjugator, GradeError, NotInvertible
from cliffordforms.geometry import MetricSpec, metric_jet, minkowski

from conftest import frw, perturbed_metrics

X = (0.1, -0.2, 0.3, 0.05)


@pytest.fixture(scope="module")
def flat():
    return metric_jet(minkowski(), X, 0)


@pytest.fixture(scope="module")
def curved():
    spec, x = perturbed_metrics(1, seed=11, eps=0.2)[0]
    return metric_jet(spec, x, 0)


def blade(*idx, coeff=1.0):
    return Form.blade(*idx, coeff=coeff)


def close(u, v, atol=1e-13):
    return np.max(np.abs(u.coeffs - v.coeffs)) <= atol


def test_wedge_basics():
    assert close(wedge(blade(1), blade(2)), blade(1, 2))
    assert close(wedge(blade(1), blade(1)), Form.zero())
    assert close(wedge(blade(1) + blade(2), blade(2)), blade(1, 2))
    assert close(wedge(blade(2), blade(1)), blade(1, 2, coeff=-1))


def test_hodge_conventions(flat):
    assert close(hodge(Form.scalar(1.0), flat), volume_form(flat))
    assert close(hodge(hodge(blade(1), flat), flat), blade(1))
    # epsilon_1234 = +1 and g^11 g^22 = -1
    assert close(hodge(blade(1, 2), flat), blade(3, 4, coeff=-1))


def test_volume_form(flat, curved):
    ell = volume_form(flat)
    assert close(ell, blade(1, 2, 3, 4))
    assert close(clifford_mul(ell, ell, flat), Form.scalar(-1.0))
    ell = volume_form(curved)
    odd = clifford_mul(ell, blade(1), curved) + clifford_mul(blade(1), ell, curved)
    even = clifford_mul(ell, blade(1, 2), curved) - clifford_mul(blade(1, 2), ell, curved)
    assert odd.max_abs() < 1e-13 and even.max_abs() < 1e-13
    assert close(clifford_inverse(ell, curved), -ell, 1e-12)


def test_commutator_of_two_forms(flat):
    u, v = blade(1, 2), blade(2, 3)
    assert close(com(u, u, flat), Form.zero())
    assert close(com(u, v, flat), clifford_mul(u, v, flat) - clifford_mul(v, u, flat))
    assert close(com(blade(1, 2), blade(3, 4), metric_jet(frw(), X, 0)), Form.zero())
    with pytest.raises(GradeError):
        com(blade(1), v, flat)


def test_products_in_flat_space(flat):
    assert close(clifford_mul(blade(1), blade(1), flat), Form.scalar(1.0))
    assert close(clifford_mul(blade(2), blade(2), flat), Form.scalar(-1.0))
    assert close(clifford_mul(blade(2, 3), blade(2, 3), flat), Form.scalar(-1.0))
    u = Form(np.arange(16) + 1j, 4)
    one = Form.scalar(1.0)
    assert close(clifford_mul(one, u, flat), u) and close(clifford_mul(u, one, flat), u)


def test_generic_product_in_two_dimensions():
    mj = metric_jet(MetricSpec.from_rows([["1", "0"], ["0", "-1"]]), (0.0, 0.0), 0)
    e1, e2 = Form.blade(1, n=2), Form.blade(2, n=2)
    assert close(clifford_mul_generic(e1, e2, mj), Form.blade(1, 2, n=2))
    e12 = Form.blade(1, 2, n=2)
    # e1 e2 e1 e2 = -g^11 g^22 = +1
    assert close(clifford_mul_generic(e12, e12, mj), Form.scalar(1.0, n=2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_anticommutator_any_dimension(n):
    spec, x = perturbed_metrics(1, n=n, seed=5, eps=0.2)[0]
    mj = metric_jet(spec, x, 0)
    for mu in range(1, n + 1):
        for nu in range(1, n + 1):
            a, b = Form.blade(mu, n=n), Form.blade(nu, n=n)
            s = clifford_mul_generic(a, b, mj) + clifford_mul_generic(b, a, mj)
            assert close(s, Form.scalar(2 * mj.g_up[mu - 1, nu - 1], n=n), 1e-13)


def test_grade_pair_equals_generic(curved, rng):
    for _ in range(5):
        u, v = Form(random_form(rng), 4), Form(random_form(rng), 4)
        assert close(clifford_mul(u, v, curved), clifford_mul_generic(u, v, curved), 1e-12)


def test_trace(flat, rng):
    assert trace(Form.scalar(1.0)) == 1
    assert trace(blade(1, 2)) == 0
    u, v = Form(random_form(rng), 4), Form(random_form(rng), 4)
    assert abs(trace(clifford_mul(u, v, flat) - clifford_mul(v, u, flat))) < 1e-12
    w = Form(random_form(rng), 4)
    conj = clifford_mul(clifford_mul(clifford_inverse(w, flat), u, flat), w, flat)
    assert trace(conj) == pytest.approx(trace(u), abs=1e-11)


def test_involution(curved, rng):
    assert close(involution(blade(1)), blade(1))
    assert close(involution(blade(1, 2)), blade(1, 2, coeff=-1))
    assert close(involution(Form.scalar(1j)), Form.scalar(-1j))
    u, v = Form(random_form(rng), 4), Form(random_form(rng), 4)
    lhs = involution(clifford_mul(u, v, curved))
    rhs = clifford_mul(involution(v), involution(u), curved)
    assert close(lhs, rhs, 1e-12)


def test_hermitian_conjugate(flat, rng):
    h = blade(1)
    assert close(hermitian_conj(blade(1), h, flat), blade(1))
    assert close(hermitian_conj(Form.scalar(1j), h, flat), Form.scalar(-1j))
    u = Form(random_form(rng), 4)
    assert close(hermitian_conj(hermitian_conj(u, h, flat), h, flat), u, 1e-12)
    with pytest.raises(BadConjugator):
        hermitian_conj(u, blade(2), flat)


def test_scalar_product(flat):
    h = blade(1)
    assert scalar_product(Form.scalar(1.0), Form.scalar(1.0), h, flat) == 1
    u = blade(1) + blade(2, coeff=1j)
    val = scalar_product(u, u, h, flat)
    assert val.imag == 0 and val.real > 0


def test_exponential(flat):
    assert close(clifford_exp(Form.zero(), flat), Form.scalar(1.0))
    assert close(clifford_exp(Form.scalar(1j * math.pi / 2), flat), Form.scalar(1j), 1e-14)
    w = blade(1, 2, coeff=0.3)
    s = clifford_exp(w, flat)
    assert close(involution(s), clifford_exp(involution(w), flat), 1e-14)
    assert close(clifford_mul(involution(s), s, flat), Form.scalar(1.0), 1e-14)
    # dx1^dx2 squares to +1 in Minkowski, so the exponential is hyperbolic
    assert s.coeffs[0] == pytest.approx(math.cosh(0.3)) and s.coeffs[3] == pytest.approx(math.sinh(0.3))


def test_large_exponential_uses_scaling(flat):
    w = blade(2, 3, coeff=7.0)  # squares to -1: a rotation by 7 rad
    s = clifford_exp(w, flat)
    assert s.coeffs[0] == pytest.approx(math.cos(7.0), abs=1e-12)
    assert s.coeffs[6] == pytest.approx(math.sin(7.0), abs=1e-12)


def test_inverse(flat):
    assert close(clifford_inverse(Form.scalar(1.0), flat), Form.scalar(1.0))
    assert close(clifford_inverse(blade(1), flat), blade(1))
    with pytest.raises(NotInvertible):
        clifford_inverse(Form.scalar(1.0) + blade(1), flat)  # (1 + dx1)(1 - dx1) = 0


def test_gamma_representation(curved):
    rep = gamma_rep(curved)
    np.testing.assert_allclose(rep_apply(rep, Form.scalar(1.0)), np.eye(4))
    for mu in range(4):
        for nu in range(4):
            a, b = rep.vectors[mu], rep.vectors[nu]
            np.testing.assert_allclose(a @ b + b @ a, 2 * curved.g_up[mu, nu] * np.eye(4), atol=1e-13)
    flat_rep = gamma_rep(metric_jet(minkowski(), X, 0))
    np.testing.assert_allclose(flat_rep.vectors[0] @ flat_rep.vectors[0], np.eye(4), atol=1e-15)


def test_three_products_agree(curved, rng):
    alg = algebra(curved)
    rep = gamma_rep(curved)
    u, v = random_form(rng), random_form(rng)
    grade_pair = alg.mul(u, v)
    generic = K.batched_product(alg.generic_table, u[None], v[None])[0]
    assert np.max(np.abs(grade_pair - generic)) < 1e-11
    gam = rep_apply(rep, u) @ rep_apply(rep, v)
    assert np.max(np.abs(rep_apply(rep, grade_pair) - gam)) < 1e-11


@pytest.mark.parametrize("n", [2, 3, 4])
def test_axiom_residuals(n, rng):
    from cliffordforms.connection import generator_jets

    for spec, x in perturbed_metrics(2, n=n, seed=n):
        mj = metric_jet(spec, x, 0)
        h = generator_jets(mj)[0].val
        res = clifford_residuals(mj, *(random_form(rng, n) for _ in range(3)), h)
        assert res.ok, res.failures()


def test_table_jet_matches_finite_differences():
    # first derivatives of the generic structure tensor in n = 3
    spec, x = perturbed_metrics(1, n=3, seed=2, eps=0.3)[0]
    t = algebra(metric_jet(spec, x, 1)).table_jet(1)
    h = 1e-6
    for k in range(3):
        e = np.eye(3)[k] * h
        plus = algebra(metric_jet(spec, np.add(x, e), 0)).generic_table
        minus = algebra(metric_jet(spec, np.subtract(x, e), 0)).generic_table
        np.testing.assert_allclose(t.parts[1][k], (plus - minus) / (2 * h), atol=1e-8)


def test_complex_phase_of_scalar_series(flat):
    z = 0.7 - 0.2j
    assert clifford_exp(Form.scalar(z), flat).coeffs[0] == pytest.approx(cmath.exp(z))
