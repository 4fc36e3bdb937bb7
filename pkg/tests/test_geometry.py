import math

import numpy as np
import pytest

from cliffordforms.errors import DimensionMismatch, SignatureError, SingularMetric
from cliffordforms.geometry import (
    MetricSpec, check_coordinate_conditions, curvature_two_form, geometry_residuals, metric_jet, minkowski,
)

from conftest import frw, perturbed_metrics

X = (0.3, 0.1, 0.2, 0.4)


def test_minkowski_is_flat():
    j = metric_jet(minkowski(), X)
    assert not j.Gamma.any() and not j.Riemann_up.any()
    assert j.det_g == -1.0 and j.sqrt_neg_g == 1.0
    assert not curvature_two_form(j).any()


def test_exponential_scale_factor_christoffels():
    # a = exp(x1): Gamma^1_22 = a a' = e^{2 x1}, Gamma^2_12 = a'/a = 1, R_1212 = a a'' = e^{2 x1}
    j = metric_jet(frw("exp(x1)"), X)
    e2 = math.exp(2 * X[0])
    assert j.Gamma[0, 1, 1] == pytest.approx(e2, rel=1e-14)
    assert j.Gamma[1, 0, 1] == pytest.approx(1.0, rel=1e-14)
    assert j.Riemann_lo[0, 1, 0, 1] == pytest.approx(e2, rel=1e-13)


def test_christoffels_match_finite_differences():
    spec, x = perturbed_metrics(1, seed=3, eps=0.3)[0]
    j = metric_jet(spec, x)
    h = 1e-5
    fd = np.zeros((4, 4, 4))
    for l in range(4):
        e = np.eye(4)[l] * h
        fd[l] = (metric_jet(spec, np.add(x, e), 0).g_lo - metric_jet(spec, np.subtract(x, e), 0).g_lo) / (2 * h)
    np.testing.assert_allclose(j.dg, fd, atol=1e-9)
    gam = 0.5 * np.einsum("lk,mkn->lmn", j.g_up, fd) + 0.5 * np.einsum("lk,nkm->lmn", j.g_up, fd) \
        - 0.5 * np.einsum("lk,kmn->lmn", j.g_up, fd)
    np.testing.assert_allclose(j.Gamma, gam, atol=1e-9)


def test_curvature_two_form_bookkeeping():
    j = metric_jet(frw(), X)
    c = curvature_two_form(j)
    np.testing.assert_allclose(c + np.swapaxes(c, 0, 1), 0, atol=1e-15)
    # coefficient of dx1^dx2 (bitmask 3) in C_12 is R_1212
    assert c[0, 1, 3] == pytest.approx(j.Riemann_lo[0, 1, 0, 1])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_riemann_symmetries(n):
    for spec, x in perturbed_metrics(3, n=n, eps=0.3):
        assert geometry_residuals(metric_jet(spec, x)).ok


def test_conditions_minkowski():
    rep = check_coordinate_conditions(metric_jet(minkowski(), X))
    assert rep.ok
    assert rep.values == {"minor1": 1.0, "minor2": -1.0, "minor3": 1.0}


def test_condition_one_fails_for_spacelike_x1():
    spec = MetricSpec.from_rows([["-1", "0", "0", "0"], [None, "1", "0", "0"], [None, None, "-1", "0"],
                                 [None, None, None, "-1"]])
    rep = check_coordinate_conditions(metric_jet(spec, X))
    assert rep.failures() == ["minor1"]


def test_conditions_in_two_dimensions():
    good = MetricSpec.from_rows([["1", "0.2"], ["0.2", "-1"]])
    assert check_coordinate_conditions(metric_jet(good, (0.0, 0.0))).ok
    bad = MetricSpec.from_rows([["-1", "0.2"], ["0.2", "1"]])
    assert not check_coordinate_conditions(metric_jet(bad, (0.0, 0.0), check=False)).ok


def test_degenerate_metric():
    spec = MetricSpec.from_rows([["0", "0", "0", "0"], [None, "-1", "0", "0"], [None, None, "-1", "0"],
                                 [None, None, None, "-1"]])
    with pytest.raises(SingularMetric):
        metric_jet(spec, X)


def test_wrong_signature():
    spec = MetricSpec.from_rows([["1", "0", "0", "0"], [None, "1", "0", "0"], [None, None, "-1", "0"],
                                 [None, None, None, "-1"]])
    with pytest.raises(SignatureError):
        metric_jet(spec, X)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        MetricSpec.from_rows([["1", "0"], ["0"]])
    with pytest.raises(DimensionMismatch):
        metric_jet(minkowski(), (0.0, 0.0, 0.0))
    with pytest.raises(ValueError):
        MetricSpec.from_rows([["1", "x1"], ["x2", "-1"]])
