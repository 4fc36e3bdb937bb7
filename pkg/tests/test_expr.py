import math

import numpy as np
import pytest

from cliffordforms.errors import DomainError, ExprSyntaxError, UnknownIdentifier
from cliffordforms.expr import BinOp, Call, Num, Var, eval_jet, eval_jet2, eval_value, parse_expr, to_source


def test_parse_tree():
    e = parse_expr("x1^2 + sin(x2)")
    assert e == BinOp("+", BinOp("^", Var(1), Num(2.0)), Call("sin", Var(2)))


def test_unknown_coordinate():
    with pytest.raises(UnknownIdentifier):
        parse_expr("x5", 4)
    with pytest.raises(UnknownIdentifier):
        parse_expr("x4", 3)


def test_syntax_error_column():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("1 +")
    assert info.value.col == 4


@pytest.mark.parametrize("src", ["2*", "(x1", "x1 x2", "sin x1", "3 ^"])
def test_rejects_malformed(src):
    with pytest.raises(ExprSyntaxError):
        parse_expr(src)


def test_round_trip_source():
    for src in ("x1^2+sin(x2)", "-(1+0.3*x1)^2", "exp(2*x1)*cos(x3)/x4"):
        e = parse_expr(src)
        assert parse_expr(to_source(e)) == e


def test_bilinear_jet():
    j = eval_jet2(parse_expr("x1*x2"), (3.0, 5.0, 0.0, 0.0))
    assert j.value == 15.0
    np.testing.assert_array_equal(j.grad, [5, 3, 0, 0])
    want = np.zeros((4, 4))
    want[0, 1] = want[1, 0] = 1.0
    np.testing.assert_array_equal(j.hess, want)


def test_constant_jet():
    j = eval_jet2(parse_expr("7"), (0.1, 0.2, 0.3, 0.4))
    assert j.value == 7.0 and not j.grad.any() and not j.hess.any()


def test_sine_matches_finite_differences():
    e = parse_expr("sin(x3)")
    x = np.array([0.0, 0.0, 0.7, 0.0])
    j = eval_jet2(e, x)
    assert j.grad[2] == pytest.approx(math.cos(0.7), rel=1e-15)
    assert j.hess[2, 2] == pytest.approx(-math.sin(0.7), rel=1e-15)
    h = 1e-4
    step = np.eye(4)[2] * h
    fd1 = (eval_value(e, x + step) - eval_value(e, x - step)) / (2 * h)
    fd2 = (eval_value(e, x + step) - 2 * eval_value(e, x) + eval_value(e, x - step)) / h**2
    assert fd1 == pytest.approx(j.grad[2], rel=1e-6)
    assert fd2 == pytest.approx(j.hess[2, 2], rel=1e-6)


def test_third_order_jet_of_composite():
    # f = exp(x1) * x2^3: every partial is known in closed form
    x = (0.4, 1.3, 0.0, 0.0)
    j = eval_jet(parse_expr("exp(x1)*x2^3"), x, 3)
    e, y = math.exp(0.4), 1.3
    assert j.val == pytest.approx(e * y**3)
    d3 = j.parts[3]
    assert d3[0, 0, 0] == pytest.approx(e * y**3)
    assert d3[0, 1, 1] == pytest.approx(6 * e * y)
    assert d3[1, 1, 1] == pytest.approx(6 * e)
    assert d3[0, 0, 1] == pytest.approx(3 * e * y**2)


@pytest.mark.parametrize("src,x", [("sqrt(x1)", (-1.0, 0, 0, 0)), ("log(x1)", (0.0, 0, 0, 0)),
                                   ("1/x2", (0.0, 0.0, 0, 0))])
def test_domain_errors(src, x):
    with pytest.raises(DomainError):
        eval_jet(parse_expr(src), x, 2)
