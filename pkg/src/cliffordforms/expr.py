"""A small closed-form expression language with exact jet evaluation.

Grammar (lowest to highest precedence)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' unary)?          # right associative
    atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'

Names are the coordinates ``x1..xn``, the constant ``pi`` and the functions in
:data:`FUNCTIONS`.  Anything else is rejected while parsing.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, ExprSyntaxError, UnknownIdentifier
from .jet import Jet

__all__ = [
    "Num", "Var", "Neg", "BinOp", "Call", "Expr", "FUNCTIONS",
    "parse_expr", "to_source", "variables", "eval_value", "eval_jet", "eval_jet2", "Jet2",
]

FUNCTIONS = ("sin", "cos", "tan", "exp", "log", "sqrt", "sinh", "cosh")
CONSTANTS = {"pi": math.pi}


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    index: int  # 1-based coordinate index


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]


# -- tokenizer -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\*\*|[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(source):
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {source[pos]!r}", line, col, ("number", "name", "operator"))
        text = m.group()
        kind = m.lastgroup
        if kind != "ws":
            if text == "**":
                text = "^"
            toks.append(_Tok(kind, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, source, n):
        self.toks = _tokenize(source)
        self.i = 0
        self.n = n

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise ExprSyntaxError(f"expected {' or '.join(expected)}, got {got}", t.line, t.col, tuple(expected))

    def eat(self, text):
        if self.tok.text != text or self.tok.kind == "eof":
            self.fail((repr(text),))
        self.i += 1

    def parse(self):
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail(("operator", "end of input"))
        return e

    def expr(self):
        e = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.tok.text
            self.i += 1
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.tok.text
            self.i += 1
            e = BinOp(op, e, self.unary())
        return e

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.i += 1
            return Neg(self.unary())
        if self.tok.kind == "op" and self.tok.text == "+":
            self.i += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.i += 1
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Num(float(t.text))
        if t.kind == "name":
            self.i += 1
            if t.text in FUNCTIONS:
                self.eat("(")
                arg = self.expr()
                self.eat(")")
                return Call(t.text, arg)
            if t.text in CONSTANTS:
                return Num(CONSTANTS[t.text])
            m = re.fullmatch(r"x([1-9]\d*)", t.text)
            if m and int(m.group(1)) <= self.n:
                return Var(int(m.group(1)))
            raise UnknownIdentifier(t.text, t.line, t.col)
        if t.kind == "op" and t.text == "(":
            self.i += 1
            e = self.expr()
            self.eat(")")
            return e
        self.fail(("number", "name", "'('", "'-'"))


def parse_expr(source: str, n: int = 4) -> Expr:
    """Parse ``source`` into an expression tree over the coordinates ``x1..xn``."""
    return _Parser(source, n).parse()


# -- printing -------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def _fmt_num(v):
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def to_source(e: Expr) -> str:
    """Render an expression back to DSL text with minimal parentheses."""
    return _show(e, 0)


def _show(e, ctx):
    if isinstance(e, Num):
        s = _fmt_num(e.value)
        # negative literals only arise from constant folding; keep them grouped
        return f"({s})" if e.value < 0 else s
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Call):
        return f"{e.func}({_show(e.arg, 0)})"
    if isinstance(e, Neg):
        s = "-" + _show(e.arg, _PREC["neg"])
        return f"({s})" if ctx > _PREC["neg"] else s
    p = _PREC[e.op]
    if e.op == "^":
        s = f"{_show(e.left, p + 1)}^{_show(e.right, _PREC['neg'])}"
    else:
        s = f"{_show(e.left, p)}{e.op}{_show(e.right, p + 1)}"
    return f"({s})" if ctx > p else s


def variables(e: Expr) -> frozenset:
    if isinstance(e, Var):
        return frozenset((e.index,))
    if isinstance(e, Num):
        return frozenset()
    if isinstance(e, (Neg, Call)):
        return variables(e.arg)
    return variables(e.left) | variables(e.right)


# -- evaluation -----------------------------------------------------------------

def _derivs(func, v, order):
    """``[f(v), f'(v), ..., f^(order)(v)]`` for the whitelisted functions."""
    if func == "sin":
        cyc = [np.sin(v), np.cos(v), -np.sin(v), -np.cos(v)]
        return [cyc[k % 4] for k in range(order + 1)]
    if func == "cos":
        cyc = [np.cos(v), -np.sin(v), -np.cos(v), np.sin(v)]
        return [cyc[k % 4] for k in range(order + 1)]
    if func == "exp":
        return [np.exp(v)] * (order + 1)
    if func == "sinh":
        return [np.sinh(v) if k % 2 == 0 else np.cosh(v) for k in range(order + 1)]
    if func == "cosh":
        return [np.cosh(v) if k % 2 == 0 else np.sinh(v) for k in range(order + 1)]
    if func == "log":
        if v <= 0:
            raise DomainError(f"log of non-positive value {v!r}")
        return [np.log(v)] + [(-1) ** (k - 1) * math.factorial(k - 1) / v**k for k in range(1, order + 1)]
    if func == "sqrt":
        if v < 0 or (v == 0 and order > 0):
            raise DomainError(f"sqrt of {'negative' if v < 0 else 'zero'} value {v!r}")
        out, c = [np.sqrt(v)], 1.0
        for k in range(1, order + 1):
            c *= 0.5 - k + 1
            out.append(c * v ** (0.5 - k))
        return out
    if func == "tan":
        t = np.tan(v)
        if not np.isfinite(t) or abs(np.cos(v)) < 1e-300:
            raise DomainError(f"tan pole at {v!r}")
        # derivatives of tan as polynomials in t: P_{k+1} = (1 + t^2) P_k'
        poly = np.polynomial.Polynomial([0.0, 1.0])
        sec2 = np.polynomial.Polynomial([1.0, 0.0, 1.0])
        out = []
        for _ in range(order + 1):
            out.append(poly(t))
            poly = sec2 * poly.deriv()
        return out
    raise ValueError(f"unknown function {func}")


def _const_value(e):
    if not variables(e):
        return eval_value(e, ())
    return None


def _eval(e, x, order):
    if isinstance(e, Num):
        return Jet.constant(np.asarray(e.value), len(x), order)
    if isinstance(e, Var):
        return Jet.coordinate(x, e.index - 1, order)
    if isinstance(e, Neg):
        return -_eval(e.arg, x, order)
    if isinstance(e, Call):
        a = _eval(e.arg, x, order)
        return a.compose(_derivs(e.func, float(a.val), order))
    left = _eval(e.left, x, order)
    if e.op == "^":
        p = _const_value(e.right)
        if p is None:
            # a^b = exp(b log a)
            if left.val <= 0:
                raise DomainError(f"non-constant power of non-positive base {float(left.val)!r}")
            logs = left.compose(_derivs("log", float(left.val), order))
            prod = _eval(e.right, x, order) * logs
            return prod.compose(_derivs("exp", float(prod.val), order))
        if float(p).is_integer():
            if p < 0 and left.val == 0:
                raise DomainError("division by zero in negative power")
            return left ** int(p)
        if left.val < 0 or (left.val == 0 and order > 0):
            raise DomainError(f"fractional power of {float(left.val)!r}")
        return left ** float(p)
    right = _eval(e.right, x, order)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if right.val == 0:
        raise DomainError("division by zero")
    return left / right


def eval_jet(e: Expr, x, order: int = 2) -> Jet:
    """Value and all partial derivatives of ``e`` up to ``order`` at the point ``x``."""
    x = tuple(float(v) for v in x)
    missing = [i for i in variables(e) if i > len(x)]
    if missing:
        raise UnknownIdentifier(f"x{missing[0]}", 0, 0)
    return _eval(e, x, order)


@dataclass(frozen=True)
class Jet2:
    value: float
    grad: np.ndarray
    hess: np.ndarray


def eval_jet2(e: Expr, x) -> Jet2:
    j = eval_jet(e, x, 2)
    hess = j.parts[2]
    hess = 0.5 * (hess + hess.T)
    return Jet2(float(j.val), j.parts[1].copy(), hess)


def eval_value(e: Expr, x) -> float:
    """Plain float evaluation (no derivatives)."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return float(x[e.index - 1])
    if isinstance(e, Neg):
        return -eval_value(e.arg, x)
    if isinstance(e, Call):
        v = eval_value(e.arg, x)
        return float(_derivs(e.func, v, 0)[0])
    a, b = eval_value(e.left, x), eval_value(e.right, x)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if e.op == "/":
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    if a < 0 and not float(b).is_integer():
        raise DomainError(f"fractional power of {a!r}")
    if a == 0 and b < 0:
        raise DomainError("division by zero in negative power")
    return a**b
