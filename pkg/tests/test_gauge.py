import numpy as np
import pytest

from cliffordforms.connection import LocalStructure, theorem2_residuals
from cliffordforms.errors import NotInGroup, NotInSpin
from cliffordforms.fields import alpha, dirac_residual, point_state, random_gauge_field, random_psi, ym_strength
from cliffordforms.gauge import (
    CASE_DIMS, CASES, T_WORDS, basis_su3, basis_T, gauge_transform_spin, gauge_transform_unitary,
    group_element, lie_residuals, ne_residuals, omega_case, project_L0, spin_element, su3_closure, su3_mixed,
    structure_x_independence, subalgebra_dims,
)
from cliffordforms.geometry import minkowski
from cliffordforms.jet import Jet

from conftest import perturbed_metrics

X = (0.1, 0.2, -0.1, 0.3)


@pytest.fixture(scope="module")
def flat():
    return LocalStructure(minkowski(), X, 1)


@pytest.fixture(scope="module")
def curved():
    spec, x = perturbed_metrics(1, seed=17)[0]
    return LocalStructure(spec, x, 2)


def test_basis_T(flat, curved):
    for ls in (flat, curved):
        b = basis_T(ls)
        assert lie_residuals(b).ok
    b = basis_T(flat)
    assert b.names == T_WORDS
    assert b.gram[0, 0] == pytest.approx(1.0)
    c = b.structure_constants()
    np.testing.assert_allclose(c, -np.swapaxes(c, 1, 2), atol=1e-14)
    # T_16 = i is central
    assert np.max(np.abs(b.commutators()[15])) < 1e-14


def test_su3(flat, curved):
    for ls in (flat, curved):
        b = basis_su3(ls)
        np.testing.assert_allclose(b.gram, np.eye(16), atol=1e-12)
        assert su3_closure(b) < 1e-12 and su3_mixed(b) < 1e-12
    b = basis_su3(flat)
    c = b.subset(range(8)).structure_constants(onto=b.subset(range(16)))
    assert np.max(np.abs(c[8:, 0, 1])) < 1e-14
    # the structure tensor of t_1..t_8 has rank 8
    t = b.subset(range(8)).structure_constants().real.reshape(8, 64)
    assert np.linalg.matrix_rank(t, tol=1e-10) == 8


def test_structure_constants_do_not_depend_on_x():
    spec, _ = perturbed_metrics(1, seed=19)[0]
    pts = np.random.default_rng(1).uniform(-0.5, 0.5, (3, 4))
    assert structure_x_independence(spec, pts, "T") < 1e-9


def test_case_table(curved):
    assert CASES["v"][1:3] == ("I", "H") and CASE_DIMS["v"] == 1
    assert CASES["iv"][1:3] == ("l", "") and CASE_DIMS["iv"] == 4
    for case in CASES:
        oc = omega_case(case, curved)
        assert oc.d == CASE_DIMS[case]
        assert ne_residuals(oc, curved).ok


# Omega_-, L_max, L0, [L0, L0]; frozen from the numerical classification
DIMS = {"i": (16, 16, 16, 15), "ii": (16, 16, 8, 8), "iii": (8, 4, 4, 3), "iv": (10, 4, 4, 3), "v": (4, 1, 1, 0)}


@pytest.mark.parametrize("case", list(DIMS))
def test_subalgebra_dimensions(case, flat):
    d = subalgebra_dims(omega_case(case, flat), flat)
    assert (d["Omega_-"], d["L_max"], d["L0"], d["[L0,L0]"]) == DIMS[case]


def test_projection(flat):
    oc = omega_case("ii", flat)
    alg, h = flat.alg, flat.H.val

    def proj(u):
        return _val(project_L0(u, oc, alg, h))

    t1 = oc.gens.val[0]
    np.testing.assert_allclose(proj(t1), t1, atol=1e-14)
    t9 = basis_su3(flat).values[8]
    assert np.max(np.abs(proj(t9))) < 1e-14
    u = np.random.default_rng(2).standard_normal(16) * (1 + 1j)
    p = proj(u)
    np.testing.assert_allclose(proj(p), p, atol=1e-12)


def test_exponential_is_unitary(curved):
    oc = omega_case("ii", curved)
    u, u_inv = group_element(curved, oc, np.linspace(-0.7, 0.9, 8))
    u, u_inv = _val(u), _val(u_inv)
    alg, h = curved.alg, curved.H.val
    one = np.eye(16)[0]
    assert np.max(np.abs(alg.mul(alg.dagger(u, h), u) - one)) < 1e-9
    np.testing.assert_allclose(u_inv, alg.dagger(u, h), atol=1e-12)


def test_alpha_is_hermitian(curved):
    st = point_state(curved.spec, curved.x, "i", order=1)
    a = alpha(st).val
    np.testing.assert_allclose(st.alg.dagger(a, st.h.val), a, atol=1e-14)


def _val(x):
    return x.val if isinstance(x, Jet) else x


def _state(case, order=2, seed=0):
    rng = np.random.default_rng(seed)
    spec, x = perturbed_metrics(1, seed=23)[0]
    return point_state(spec, x, case, random_psi(rng, case), random_gauge_field(rng, CASE_DIMS[case]), 0.6, order)


def _const_jet(v, st):
    return Jet.constant(np.asarray(v, dtype=complex), 4, st.ls.order)


def test_identity_transforms():
    st = _state("v")
    one = _const_jet(np.eye(16)[0], st)
    for f in (gauge_transform_unitary, gauge_transform_spin):
        out = f(st, one, one)
        np.testing.assert_allclose(out.psi.val, st.psi.val, atol=1e-15)
        np.testing.assert_allclose(out.a.val, st.a.val, atol=1e-15)


def test_constant_unitary_conjugates_a():
    st = _state("iii")
    # constant coefficients on D-constant generators: D U = 0 and A' = U^-1 A U
    u, u_inv = group_element(st.ls, st.case, [0.4, 0.0, -0.3, 0.2])
    alg = st.alg
    assert np.max(np.abs(st.D(u).val)) < 1e-12
    out = gauge_transform_unitary(st, u, u_inv)
    want = alg.mul(alg.mul(u_inv.val, st.a.val), u.val)
    np.testing.assert_allclose(out.a.val, want, atol=1e-12)
    p = dirac_residual(st).val
    np.testing.assert_allclose(dirac_residual(out).val, alg.mul(p, u.val), atol=1e-9)


def test_rejects_non_group_elements():
    st = _state("v")
    bad = _const_jet(np.eye(16)[0] * 2, st)
    with pytest.raises(NotInGroup):
        gauge_transform_unitary(st, bad, bad)
    odd = _const_jet(np.eye(16)[1], st)
    with pytest.raises(NotInSpin):
        gauge_transform_spin(st, odd, odd)


def test_constant_spin_rotation():
    st = _state("ii")
    w = np.zeros(16)
    w[6] = 0.5  # dx2^dx3
    s, s_inv = spin_element(st.ls, _const_jet(w, st))
    out = gauge_transform_spin(st, s, s_inv)
    alg = st.alg
    res = theorem2_residuals(st.ls.spec, st.ls.x, ls=out.ls)
    assert res.ok, res.failures()
    f, f2 = ym_strength(st).val, ym_strength(out).val
    np.testing.assert_allclose(f2, alg.mul(alg.mul(s_inv.val, f), s.val), atol=1e-9)
