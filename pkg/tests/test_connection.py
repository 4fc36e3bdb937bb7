import math

import numpy as np
import pytest

from cliffordforms.clifford import Form
from cliffordforms.connection import (
    FormFieldExpr, LocalStructure, b_field_closed_form, b_jet, check_flat, check_variant_assumptions,
    contorsion_from_b, contorsion_from_torsion, d_property_residuals, random_form_field, secondary_generators,
    solve_b_linear, theorem2_residuals, theorem7_check, upsilon, upsilon_commutator_check,
)
from cliffordforms.errors import DimensionMismatch, GaugeAssumptionViolated
from cliffordforms.geometry import MetricSpec, metric_jet, minkowski

from conftest import frw, perturbed_metrics

X = (0.2, 0.1, -0.3, 0.25)


def temporal_metric():
    return MetricSpec.from_rows([
        ["1", "0", "0", "0"],
        [None, "-1 + 0.1*sin(x1 + x3)", "0.05*x1*x4", "0.1*x2"],
        [None, None, "-1 - 0.2*x1*x2", "0.03*cos(x4)"],
        [None, None, None, "-1 + 0.1*x3"],
    ])


def test_minkowski_generators():
    h, i, k = secondary_generators(metric_jet(minkowski(), X))
    assert np.allclose(h.coeffs, Form.blade(1).coeffs)
    assert np.allclose(i.coeffs, Form.blade(2, 3).coeffs)
    assert np.allclose(k.coeffs, Form.blade(3, 4, coeff=-1).coeffs)


def test_two_dimensional_generator():
    spec = MetricSpec.from_rows([["1.5 + 0.1*x2", "0.2"], [None, "-1"]])
    mj = metric_jet(spec, (0.1, 0.3))
    (h,) = secondary_generators(mj)
    assert h.coeffs[1] == pytest.approx(1 / math.sqrt(mj.g_up[0, 0]))
    ls = LocalStructure(spec, (0.1, 0.3))
    assert abs(ls.alg.mul(h.coeffs, h.coeffs)[0] - 1) < 1e-14


def test_minkowski_b_vanishes():
    for variant in ("general4", "temporal4", "diagonal"):
        assert not b_field_closed_form(minkowski(), X, variant).data.any()
    ls = LocalStructure(minkowski(), X)
    solved, rank = solve_b_linear(ls)
    assert rank == 24 and not solved.any()


def test_diagonal_b_by_hand():
    # a = 1 + 0.3 x1 at x1 = 0.2: b_{1jj} = a a' / 2 = 0.159 on dx1^dxj of B_j
    b = b_field_closed_form(frw(), X, "diagonal").data
    for j in (2, 3, 4):
        assert b[j - 1, 1 | (1 << (j - 1))].real == pytest.approx(0.159, rel=1e-13)
    assert np.count_nonzero(np.abs(b) > 1e-15) == 3
    np.testing.assert_allclose(b_field_closed_form(frw(), X, "general4").data, b, atol=1e-15)


def test_variant_agreement_on_conforming_metric():
    spec = temporal_metric()
    mj = metric_jet(spec, X)
    check_variant_assumptions(mj, "temporal4")
    np.testing.assert_allclose(b_jet(mj, "temporal4").val, b_jet(mj, "general4").val, atol=1e-13)
    with pytest.raises(GaugeAssumptionViolated):
        check_variant_assumptions(metric_jet(perturbed_metrics(1)[0][0], X), "temporal4")
    with pytest.raises(DimensionMismatch):
        check_variant_assumptions(mj, "dim3")


def test_linear_solve_reproduces_closed_form():
    for spec, x in perturbed_metrics(3, seed=21):
        ls = LocalStructure(spec, x)
        solved, rank = solve_b_linear(ls)
        assert rank == 24
        b = ls.B.val
        assert np.max(np.abs(solved - b)) <= 1e-9 * np.max(np.abs(b))


def test_upsilon_of_constant_fields():
    spec, x = perturbed_metrics(1, seed=4, eps=0.3)[0]
    mj = metric_jet(spec, x)
    scalar = upsilon(FormFieldExpr.scalar_blades(4, {(): "2.5"}), mj, x)
    assert not scalar.data.any()
    for nu in range(1, 5):
        out = upsilon(FormFieldExpr.scalar_blades(4, {(nu,): "1"}), mj, x).data  # [mu, blade]
        want = np.zeros((4, 16))
        for lam in range(4):
            want[:, 1 << lam] = -mj.Gamma[nu - 1, :, lam]
        np.testing.assert_allclose(out, want, atol=1e-15)


def test_upsilon_in_flat_space_is_partial():
    fld = FormFieldExpr.scalar_blades(4, {(1, 2): "x1^2*x3", (4,): ("x2", "x4^2")})
    out = upsilon(fld, metric_jet(minkowski(), X), X).data
    x1, x2, x3, x4 = X
    assert out[0, 3] == pytest.approx(2 * x1 * x3) and out[2, 3] == pytest.approx(x1**2)
    assert out[1, 8] == pytest.approx(1.0) and out[3, 8] == pytest.approx(2j * x4)


def test_upsilon_commutator():
    assert upsilon_commutator_check(metric_jet(minkowski(), X)) == 0
    assert upsilon_commutator_check(metric_jet(frw(), X)) < 1e-9
    for spec, x in perturbed_metrics(2, seed=8, eps=0.3):
        assert upsilon_commutator_check(metric_jet(spec, x)) < 1e-9


def test_theorem2_minkowski_exact():
    res = theorem2_residuals(minkowski(), X)
    assert res.ok and max(res.values.values()) == 0


@pytest.mark.parametrize("case", ["frw", "perturbed"])
def test_theorem2_curved(case):
    pairs = [(frw(), X)] if case == "frw" else perturbed_metrics(2, seed=13)
    for spec, x in pairs:
        res = theorem2_residuals(spec, x)
        assert res.ok, res.failures()
        assert max(res.values.values()) < 1e-8 * LocalStructure(spec, x).scale()


def test_contorsion():
    mj = metric_jet(minkowski(), X)
    k, t = contorsion_from_b(np.zeros((4, 16)), mj)
    assert not k.any() and not t.any()
    spec, x = perturbed_metrics(1, seed=9)[0]
    ls = LocalStructure(spec, x)
    k_up, tors = contorsion_from_b(ls.B.val, ls.mjet)
    k_lo = np.einsum("la,amn->lmn", ls.mjet.g_lo, k_up)
    np.testing.assert_allclose(k_lo, -np.transpose(k_lo, (2, 1, 0)), atol=1e-15)
    np.testing.assert_allclose(contorsion_from_torsion(tors, ls.mjet.g_lo, ls.mjet.g_up), k_up, atol=1e-15)


def test_flatness_and_its_power():
    assert check_flat(minkowski(), X) == 0
    spec, x = perturbed_metrics(1, seed=10)[0]
    assert check_flat(spec, x) < 1e-8
    noise = np.zeros((4, 16))
    noise[:, 3] = 1.0
    r1 = check_flat(spec, x, noise=1e-4 * noise)
    r2 = check_flat(spec, x, noise=2e-4 * noise)
    assert r1 > 1e-6 and r2 / r1 == pytest.approx(2.0, rel=1e-2)


def test_modified_derivative_identity(rng):
    ls = LocalStructure(minkowski(), X)
    u = random_form_field(rng).jet(ls.x, 2)
    assert max(theorem7_check(ls, u).values()) == 0
    spec, x = perturbed_metrics(1, seed=12)[0]
    ls = LocalStructure(spec, x)
    dx = FormFieldExpr.scalar_blades(4, {(3,): "1"}).jet(ls.x, 2)
    assert max(theorem7_check(ls, dx).values()) < 1e-10
    u = random_form_field(rng).jet(ls.x, 2)
    assert max(theorem7_check(ls, u).values()) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 4])
def test_operator_properties(n, rng):
    spec, x = perturbed_metrics(1, n=n, seed=30 + n)[0]
    ls = LocalStructure(spec, x)
    u, v = (random_form_field(rng, n).jet(ls.x, 2) for _ in range(2))
    res = d_property_residuals(ls, u, v)
    assert res.ok, res.failures()


@pytest.mark.parametrize("n,variant", [(3, "dim3"), (2, "dim2")])
def test_low_dimensions(n, variant):
    for spec, x in perturbed_metrics(3, n=n, seed=40 + n):
        res = theorem2_residuals(spec, x, variant)
        assert res.ok, res.failures()
        assert check_flat(spec, x, variant) < 1e-7
