import numpy as np
import pytest

from cliffordforms.connection import FormFieldExpr
from cliffordforms.fields import (
    alpha, chain_residuals, conservation_identity_check, conservation_residual, current_chain, dirac_residual,
    lagrangians, plane_wave_psi, point_state, q_form, random_gauge_field, random_psi, theorem4_residual,
    ym_residual, ym_strength,
)
from cliffordforms.gauge import CASE_DIMS, CASES, group_element_from_exprs, gauge_transform_unitary
from cliffordforms.geometry import minkowski, random_smooth_expr

from conftest import frw, perturbed_metrics

X = (0.15, -0.1, 0.2, 0.05)


def maxabs(x):
    return float(np.max(np.abs(getattr(x, "val", x))))


def random_state(case, seed=0, order=2, m=0.6):
    rng = np.random.default_rng(seed)
    spec, x = perturbed_metrics(1, seed=50 + seed)[0]
    return point_state(spec, x, case, random_psi(rng, case), random_gauge_field(rng, CASE_DIMS[case]), m, order)


def test_zero_fields():
    st = point_state(frw(), X, "ii", m=0.4)
    assert maxabs(dirac_residual(st)) == 0 and maxabs(q_form(st)) == 0
    assert all(maxabs(j) == 0 for j in current_chain(st))
    assert maxabs(ym_strength(st)) == 0
    r, res = ym_residual(st)
    assert maxabs(r) == 0 and maxabs(res) == 0
    assert lagrangians(st) == (0, 0, 0)
    assert max(conservation_identity_check(st).values.values()) < 1e-14


def test_constant_psi_in_flat_space():
    psi = FormFieldExpr.scalar_blades(4, {(): ("0.3", "0.1"), (1, 2): "0.7", (2, 3, 4): ("0", "-0.2")})
    st = point_state(minkowski(), X, "i", psi, m=0.8, order=1)
    want = -0.8 * st.mul(st.psi.val, st.case.E.val)
    np.testing.assert_allclose(dirac_residual(st).val, want, atol=1e-15)


@pytest.mark.parametrize("case", list(CASES))
def test_plane_wave(case):
    st = point_state(minkowski(), X, case, plane_wave_psi(case), order=2)
    assert maxabs(dirac_residual(st)) < 1e-10
    assert maxabs(q_form(st)) < 1e-10
    assert abs(lagrangians(st)[0]) < 1e-12
    j = current_chain(st)[3]
    assert maxabs(conservation_residual(st, j)) < 1e-7


def test_plane_wave_needs_null_vector():
    with pytest.raises(ValueError):
        plane_wave_psi("i", k=(1.0, 0.5, 0.0, 0.0))


@pytest.mark.parametrize("case", list(CASES))
def test_q_is_hp_times_minus_n(case):
    st = random_state(case, seed=1)
    diff = q_form(st) - st.mul(st.h, dirac_residual(st), st.case.N) * -1.0
    assert maxabs(diff) <= 1e-11 * st.scale()


@pytest.mark.parametrize("case", list(CASES))
def test_current_chain(case):
    res = chain_residuals(random_state(case, seed=2))
    assert res.ok, res.failures()


def test_case_i_and_v_currents_by_formula():
    st = random_state("i", seed=3)
    a = alpha(st)
    j1 = st.mul(st.dag(st.psi), a, st.psi)
    np.testing.assert_allclose(current_chain(st)[3].val, (j1 * 1j).val, atol=1e-13)
    st = random_state("v", seed=3)
    alg, h, i_ = st.alg, st.h.val, st.ls.I.val
    j1 = st.mul(st.dag(st.psi), alpha(st), st.psi).val
    want = 0.25 * alg.mul(h, alg.anti(h, alg.anti(i_, j1)))
    np.testing.assert_allclose(current_chain(st)[3].val, want, atol=1e-13)


def test_field_strength_special_cases():
    rng = np.random.default_rng(4)
    const = [[f"{v:.3f}" for v in rng.uniform(-1, 1, 8)] for _ in range(4)]
    st = point_state(minkowski(), X, "ii", a_coeffs=const, order=1)
    a = st.a.val
    want = -st.alg.comm(a[:, None, :], a[None, :, :])
    np.testing.assert_allclose(ym_strength(st).val, want, atol=1e-13)
    # abelian case v: F = (d_mu a_nu - d_nu a_mu) I
    coeffs = [["0.3*x2"], ["x1^2"], ["0"], ["sin(x3)"]]
    st = point_state(frw(), X, "v", a_coeffs=coeffs, order=2)
    x1, x2, x3, _ = X
    da = np.zeros((4, 4))
    da[1, 0], da[0, 1] = 0.3, 2 * x1  # da[mu, nu] = d_mu a_nu
    da[2, 3] = np.cos(x3)
    want = np.einsum("mn,b->mnb", da - da.T, st.case.gens.val[0])
    np.testing.assert_allclose(ym_strength(st).val, want, atol=1e-13)
    # constant abelian A in flat space has R = 0
    st = point_state(minkowski(), X, "v", a_coeffs=[["0.2"], ["-0.1"], ["0.4"], ["0.3"]], order=2)
    assert maxabs(ym_residual(st, j=0.0)[0]) < 1e-14


def test_divergence_identity_for_random_a():
    st = random_state("ii", seed=5, order=3)
    assert maxabs(theorem4_residual(st)) <= 1e-7 * st.scale()


@pytest.mark.parametrize("case", ["i", "iv", "v"])
def test_conservation_identities(case):
    res = conservation_identity_check(random_state(case, seed=6))
    assert res.ok, res.failures()


def test_lagrangians_real_and_gauge_invariant():
    st = random_state("iv", seed=7)
    l0, l1, l = lagrangians(st)
    assert abs(l0.imag) < 1e-10 and abs(l1.imag) < 1e-10
    assert l == pytest.approx(l1 + 8 * l0)
    rng = np.random.default_rng(8)
    u, u_inv = group_element_from_exprs(st.ls, st.case, [random_smooth_expr(rng, 4, 2) for _ in range(4)])
    after = lagrangians(gauge_transform_unitary(st, u, u_inv))
    assert np.max(np.abs(np.subtract(after, (l0, l1, l)))) < 1e-9
