"""Closed-form connection components b_{abm}, transcribed mechanically.

Generated by a converter from the typeset formulas; do not edit by hand.
Each function takes the metric ``g[i, j]`` and its first derivatives
``dg[k, i, j] = d_k g_ij`` (0-based, arrays or jets) and returns
``{(a, b, m): value}`` with 1-based a < b.
"""


# fmt: off
# flake8: noqa

def general4(g, dg):
    d1g22 = dg[0, 1, 1]
    d1g23 = dg[0, 1, 2]
    d1g24 = dg[0, 1, 3]
    d1g33 = dg[0, 2, 2]
    d1g34 = dg[0, 2, 3]
    d1g44 = dg[0, 3, 3]
    d2g11 = dg[1, 0, 0]
    d2g12 = dg[1, 0, 1]
    d2g13 = dg[1, 0, 2]
    d2g14 = dg[1, 0, 3]
    d2g22 = dg[1, 1, 1]
    d2g23 = dg[1, 1, 2]
    d2g24 = dg[1, 1, 3]
    d2g33 = dg[1, 2, 2]
    d2g34 = dg[1, 2, 3]
    d2g44 = dg[1, 3, 3]
    d3g11 = dg[2, 0, 0]
    d3g12 = dg[2, 0, 1]
    d3g13 = dg[2, 0, 2]
    d3g14 = dg[2, 0, 3]
    d3g22 = dg[2, 1, 1]
    d3g23 = dg[2, 1, 2]
    d3g24 = dg[2, 1, 3]
    d3g33 = dg[2, 2, 2]
    d3g34 = dg[2, 2, 3]
    d3g44 = dg[2, 3, 3]
    d4g11 = dg[3, 0, 0]
    d4g12 = dg[3, 0, 1]
    d4g13 = dg[3, 0, 2]
    d4g14 = dg[3, 0, 3]
    d4g22 = dg[3, 1, 1]
    d4g23 = dg[3, 1, 2]
    d4g24 = dg[3, 1, 3]
    d4g33 = dg[3, 2, 2]
    d4g34 = dg[3, 2, 3]
    d4g44 = dg[3, 3, 3]
    g12 = g[0, 1]
    g13 = g[0, 2]
    g14 = g[0, 3]
    g22 = g[1, 1]
    g23 = g[1, 2]
    g24 = g[1, 3]
    g33 = g[2, 2]
    g34 = g[2, 3]
    g44 = g[3, 3]
    out = {}
    out[(1, 2, 1)] = (d1g44*g14*g23*g24**2*g33*g34 - d1g44*g13*g24**3*g33*g34 - 2*d1g44*g14*g23**2*g24*g34**2 + 2*d1g44*g13*g23*g24**2*g34**2 + d1g44*g14*g22*g23*g34**3 - d1g44*g13*g22*g24*g34**3 + d1g44*g14*g23**2*g24*g33*g44 - d1g44*g13*g23*g24**2*g33*g44 - 2*d1g34*g14*g23*g24**2*g33*g44 + 2*d1g34*g13*g24**3*g33*g44 - d1g44*g14*g22*g24*g33**2*g44 + d1g44*g12*g24**2*g33**2*g44 + 2*d1g34*g14*g23**2*g24*g34*g44 - 2*d1g34*g13*g23*g24**2*g34*g44 + d1g33*g14*g23*g24**2*g34*g44 - d1g33*g13*g24**3*g34*g44 + 2*d1g44*g13*g22*g24*g33*g34*g44 + 2*d1g34*g14*g22*g24*g33*g34*g44 - 2*d1g44*g12*g23*g24*g33*g34*g44 - 2*d1g34*g12*g24**2*g33*g34*g44 - d1g44*g13*g22*g23*g34**2*g44 - 2*d1g34*g14*g22*g23*g34**2*g44 + d1g44*g12*g23**2*g34**2*g44 + 2*d1g24*g14*g23**2*g34**2*g44 - d1g33*g14*g22*g24*g34**2*g44 + 2*d1g34*g12*g23*g24*g34**2*g44 - 2*d1g24*g13*g23*g24*g34**2*g44 - 2*d1g23*g14*g23*g24*g34**2*g44 + d1g33*g12*g24**2*g34**2*g44 + 2*d1g23*g13*g24**2*g34**2*g44 - 2*d1g24*g14*g22*g33*g34**2*g44 + 2*d1g24*g12*g24*g33*g34**2*g44 + d1g22*g14*g24*g33*g34**2*g44 - d2g11*g24**2*g33*g34**2*g44 + 2*d1g24*g13*g22*g34**3*g44 + 2*d1g23*g14*g22*g34**3*g44 - 2*d1g24*g12*g23*g34**3*g44 - d1g22*g14*g23*g34**3*g44 - 2*d1g23*g12*g24*g34**3*g44 - d1g22*g13*g24*g34**3*g44 + 2*d2g11*g23*g24*g34**3*g44 + d1g22*g12*g34**4*g44 - d2g11*g22*g34**4*g44 - d1g33*g14*g23**2*g24*g44**2 + d1g33*g13*g23*g24**2*g44**2 - 2*d1g24*g14*g23**2*g33*g44**2 - 2*d1g34*g13*g22*g24*g33*g44**2 + 2*d1g34*g12*g23*g24*g33*g44**2 + 2*d1g24*g13*g23*g24*g33*g44**2 + 2*d1g23*g14*g23*g24*g33*g44**2 - 2*d1g23*g13*g24**2*g33*g44**2 + 2*d1g24*g14*g22*g33**2*g44**2 - 2*d1g24*g12*g24*g33**2*g44**2 - d1g22*g14*g24*g33**2*g44**2 + d2g11*g24**2*g33**2*g44**2 + 2*d1g34*g13*g22*g23*g34*g44**2 + d1g33*g14*g22*g23*g34*g44**2 - 2*d1g34*g12*g23**2*g34*g44**2 + d1g33*g13*g22*g24*g34*g44**2 - 2*d1g33*g12*g23*g24*g34*g44**2 - 2*d1g24*g13*g22*g33*g34*g44**2 - 2*d1g23*g14*g22*g33*g34*g44**2 + 2*d1g24*g12*g23*g33*g34*g44**2 + d1g22*g14*g23*g33*g34*g44**2 + 2*d1g23*g12*g24*g33*g34*g44**2 + d1g22*g13*g24*g33*g34*g44**2 - 2*d2g11*g23*g24*g33*g34*g44**2 - 2*d1g23*g13*g22*g34**2*g44**2 + 2*d1g23*g12*g23*g34**2*g44**2 + d1g22*g13*g23*g34**2*g44**2 - d2g11*g23**2*g34**2*g44**2 - 2*d1g22*g12*g33*g34**2*g44**2 + 2*d2g11*g22*g33*g34**2*g44**2 - d1g33*g13*g22*g23*g44**3 + d1g33*g12*g23**2*g44**3 + 2*d1g23*g13*g22*g33*g44**3 - 2*d1g23*g12*g23*g33*g44**3 - d1g22*g13*g23*g33*g44**3 + d2g11*g23**2*g33*g44**3 + d1g22*g12*g33**2*g44**3 - d2g11*g22*g33**2*g44**3)/ (4*g44*(-g34**2 + g33*g44)*(g24**2*g33 - 2*g23*g24*g34 + g22*g34**2 + g23**2*g44 - g22*g33*g44))
    out[(1, 2, 2)] = (d2g44*g14*g23*g24**2*g33*g34 - d2g44*g13*g24**3*g33*g34 - 2*d2g44*g14*g23**2*g24*g34**2 + 2*d2g44*g13*g23*g24**2*g34**2 + d2g44*g14*g22*g23*g34**3 - d2g44*g13*g22*g24*g34**3 + d2g44*g14*g23**2*g24*g33*g44 - d2g44*g13*g23*g24**2*g33*g44 - 2*d2g34*g14*g23*g24**2*g33*g44 + 2*d2g34*g13*g24**3*g33*g44 - d2g44*g14*g22*g24*g33**2*g44 + d2g44*g12*g24**2*g33**2*g44 + 2*d2g34*g14*g23**2*g24*g34*g44 - 2*d2g34*g13*g23*g24**2*g34*g44 + d2g33*g14*g23*g24**2*g34*g44 - d2g33*g13*g24**3*g34*g44 + 2*d2g44*g13*g22*g24*g33*g34*g44 + 2*d2g34*g14*g22*g24*g33*g34*g44 - 2*d2g44*g12*g23*g24*g33*g34*g44 - 2*d2g34*g12*g24**2*g33*g34*g44 - d2g44*g13*g22*g23*g34**2*g44 - 2*d2g34*g14*g22*g23*g34**2*g44 + d2g44*g12*g23**2*g34**2*g44 + 2*d2g24*g14*g23**2*g34**2*g44 - d2g33*g14*g22*g24*g34**2*g44 + 2*d2g34*g12*g23*g24*g34**2*g44 - 2*d2g24*g13*g23*g24*g34**2*g44 - 2*d2g23*g14*g23*g24*g34**2*g44 + d2g33*g12*g24**2*g34**2*g44 + 2*d2g23*g13*g24**2*g34**2*g44 - 2*d2g24*g14*g22*g33*g34**2*g44 + 2*d2g24*g12*g24*g33*g34**2*g44 + d2g22*g14*g24*g33*g34**2*g44 + d1g22*g24**2*g33*g34**2*g44 - 2*d2g12*g24**2*g33*g34**2*g44 + 2*d2g24*g13*g22*g34**3*g44 + 2*d2g23*g14*g22*g34**3*g44 - 2*d2g24*g12*g23*g34**3*g44 - d2g22*g14*g23*g34**3*g44 - 2*d2g23*g12*g24*g34**3*g44 - d2g22*g13*g24*g34**3*g44 - 2*d1g22*g23*g24*g34**3*g44 + 4*d2g12*g23*g24*g34**3*g44 + d2g22*g12*g34**4*g44 + d1g22*g22*g34**4*g44 - 2*d2g12*g22*g34**4*g44 - d2g33*g14*g23**2*g24*g44**2 + d2g33*g13*g23*g24**2*g44**2 - 2*d2g24*g14*g23**2*g33*g44**2 - 2*d2g34*g13*g22*g24*g33*g44**2 + 2*d2g34*g12*g23*g24*g33*g44**2 + 2*d2g24*g13*g23*g24*g33*g44**2 + 2*d2g23*g14*g23*g24*g33*g44**2 - 2*d2g23*g13*g24**2*g33*g44**2 + 2*d2g24*g14*g22*g33**2*g44**2 - 2*d2g24*g12*g24*g33**2*g44**2 - d2g22*g14*g24*g33**2*g44**2 - d1g22*g24**2*g33**2*g44**2 + 2*d2g12*g24**2*g33**2*g44**2 + 2*d2g34*g13*g22*g23*g34*g44**2 + d2g33*g14*g22*g23*g34*g44**2 - 2*d2g34*g12*g23**2*g34*g44**2 + d2g33*g13*g22*g24*g34*g44**2 - 2*d2g33*g12*g23*g24*g34*g44**2 - 2*d2g24*g13*g22*g33*g34*g44**2 - 2*d2g23*g14*g22*g33*g34*g44**2 + 2*d2g24*g12*g23*g33*g34*g44**2 + d2g22*g14*g23*g33*g34*g44**2 + 2*d2g23*g12*g24*g33*g34*g44**2 + d2g22*g13*g24*g33*g34*g44**2 + 2*d1g22*g23*g24*g33*g34*g44**2 - 4*d2g12*g23*g24*g33*g34*g44**2 - 2*d2g23*g13*g22*g34**2*g44**2 + 2*d2g23*g12*g23*g34**2*g44**2 + d2g22*g13*g23*g34**2*g44**2 + d1g22*g23**2*g34**2*g44**2 - 2*d2g12*g23**2*g34**2*g44**2 - 2*d2g22*g12*g33*g34**2*g44**2 - 2*d1g22*g22*g33*g34**2*g44**2 + 4*d2g12*g22*g33*g34**2*g44**2 - d2g33*g13*g22*g23*g44**3 + d2g33*g12*g23**2*g44**3 + 2*d2g23*g13*g22*g33*g44**3 - 2*d2g23*g12*g23*g33*g44**3 - d2g22*g13*g23*g33*g44**3 - d1g22*g23**2*g33*g44**3 + 2*d2g12*g23**2*g33*g44**3 + d2g22*g12*g33**2*g44**3 + d1g22*g22*g33**2*g44**3 - 2*d2g12*g22*g33**2*g44**3)/(4*g44*(-g34**2 + g33*g44)* (g24**2*g33 - 2*g23*g24*g34 + g22*g34**2 + g23**2*g44 - g22*g33*g44))
    out[(1, 2, 3)] = (d3g44*g14*g23*g24**2*g33*g34 - d3g44*g13*g24**3*g33*g34 - 2*d3g44*g14*g23**2*g24*g34**2 + 2*d3g44*g13*g23*g24**2*g34**2 + d3g44*g14*g22*g23*g34**3 - d3g44*g13*g22*g24*g34**3 + d3g44*g14*g23**2*g24*g33*g44 - d3g44*g13*g23*g24**2*g33*g44 - 2*d3g34*g14*g23*g24**2*g33*g44 + 2*d3g34*g13*g24**3*g33*g44 - d3g44*g14*g22*g24*g33**2*g44 + d3g44*g12*g24**2*g33**2*g44 + 2*d3g34*g14*g23**2*g24*g34*g44 - 2*d3g34*g13*g23*g24**2*g34*g44 + d3g33*g14*g23*g24**2*g34*g44 - d3g33*g13*g24**3*g34*g44 + 2*d3g44*g13*g22*g24*g33*g34*g44 + 2*d3g34*g14*g22*g24*g33*g34*g44 - 2*d3g44*g12*g23*g24*g33*g34*g44 - 2*d3g34*g12*g24**2*g33*g34*g44 - d3g44*g13*g22*g23*g34**2*g44 - 2*d3g34*g14*g22*g23*g34**2*g44 + d3g44*g12*g23**2*g34**2*g44 + 2*d3g24*g14*g23**2*g34**2*g44 - d3g33*g14*g22*g24*g34**2*g44 + 2*d3g34*g12*g23*g24*g34**2*g44 - 2*d3g24*g13*g23*g24*g34**2*g44 - 2*d3g23*g14*g23*g24*g34**2*g44 + d3g33*g12*g24**2*g34**2*g44 + 2*d3g23*g13*g24**2*g34**2*g44 - 2*d3g24*g14*g22*g33*g34**2*g44 + 2*d3g24*g12*g24*g33*g34**2*g44 + d3g22*g14*g24*g33*g34**2*g44 + d1g23*g24**2*g33*g34**2*g44 - d2g13*g24**2*g33*g34**2*g44 - d3g12*g24**2*g33*g34**2*g44 + 2*d3g24*g13*g22*g34**3*g44 + 2*d3g23*g14*g22*g34**3*g44 - 2*d3g24*g12*g23*g34**3*g44 - d3g22*g14*g23*g34**3*g44 - 2*d3g23*g12*g24*g34**3*g44 - d3g22*g13*g24*g34**3*g44 - 2*d1g23*g23*g24*g34**3*g44 + 2*d2g13*g23*g24*g34**3*g44 + 2*d3g12*g23*g24*g34**3*g44 + d3g22*g12*g34**4*g44 + d1g23*g22*g34**4*g44 - d2g13*g22*g34**4*g44 - d3g12*g22*g34**4*g44 - d3g33*g14*g23**2*g24*g44**2 + d3g33*g13*g23*g24**2*g44**2 - 2*d3g24*g14*g23**2*g33*g44**2 - 2*d3g34*g13*g22*g24*g33*g44**2 + 2*d3g34*g12*g23*g24*g33*g44**2 + 2*d3g24*g13*g23*g24*g33*g44**2 + 2*d3g23*g14*g23*g24*g33*g44**2 - 2*d3g23*g13*g24**2*g33*g44**2 + 2*d3g24*g14*g22*g33**2*g44**2 - 2*d3g24*g12*g24*g33**2*g44**2 - d3g22*g14*g24*g33**2*g44**2 - d1g23*g24**2*g33**2*g44**2 + d2g13*g24**2*g33**2*g44**2 + d3g12*g24**2*g33**2*g44**2 + 2*d3g34*g13*g22*g23*g34*g44**2 + d3g33*g14*g22*g23*g34*g44**2 - 2*d3g34*g12*g23**2*g34*g44**2 + d3g33*g13*g22*g24*g34*g44**2 - 2*d3g33*g12*g23*g24*g34*g44**2 - 2*d3g24*g13*g22*g33*g34*g44**2 - 2*d3g23*g14*g22*g33*g34*g44**2 + 2*d3g24*g12*g23*g33*g34*g44**2 + d3g22*g14*g23*g33*g34*g44**2 + 2*d3g23*g12*g24*g33*g34*g44**2 + d3g22*g13*g24*g33*g34*g44**2 + 2*d1g23*g23*g24*g33*g34*g44**2 - 2*d2g13*g23*g24*g33*g34*g44**2 - 2*d3g12*g23*g24*g33*g34*g44**2 - 2*d3g23*g13*g22*g34**2*g44**2 + 2*d3g23*g12*g23*g34**2*g44**2 + d3g22*g13*g23*g34**2*g44**2 + d1g23*g23**2*g34**2*g44**2 - d2g13*g23**2*g34**2*g44**2 - d3g12*g23**2*g34**2*g44**2 - 2*d3g22*g12*g33*g34**2*g44**2 - 2*d1g23*g22*g33*g34**2*g44**2 + 2*d2g13*g22*g33*g34**2*g44**2 + 2*d3g12*g22*g33*g34**2*g44**2 - d3g33*g13*g22*g23*g44**3 + d3g33*g12*g23**2*g44**3 + 2*d3g23*g13*g22*g33*g44**3 - 2*d3g23*g12*g23*g33*g44**3 - d3g22*g13*g23*g33*g44**3 - d1g23*g23**2*g33*g44**3 + d2g13*g23**2*g33*g44**3 + d3g12*g23**2*g33*g44**3 + d3g22*g12*g33**2*g44**3 + d1g23*g22*g33**2*g44**3 - d2g13*g22*g33**2*g44**3 - d3g12*g22*g33**2*g44**3)/(4*g44*(-g34**2 + g33*g44)* (g24**2*g33 - 2*g23*g24*g34 + g22*g34**2 + g23**2*g44 - g22*g33*g44))
    out[(1, 2, 4)] = (d4g44*g14*g23*g24**2*g33*g34 - d4g44*g13*g24**3*g33*g34 - 2*d4g44*g14*g23**2*g24*g34**2 + 2*d4g44*g13*g23*g24**2*g34**2 + d4g44*g14*g22*g23*g34**3 - d4g44*g13*g22*g24*g34**3 + d4g44*g14*g23**2*g24*g33*g44 - d4g44*g13*g23*g24**2*g33*g44 - 2*d4g34*g14*g23*g24**2*g33*g44 + 2*d4g34*g13*g24**3*g33*g44 - d4g44*g14*g22*g24*g33**2*g44 + d4g44*g12*g24**2*g33**2*g44 + 2*d4g34*g14*g23**2*g24*g34*g44 - 2*d4g34*g13*g23*g24**2*g34*g44 + d4g33*g14*g23*g24**2*g34*g44 - d4g33*g13*g24**3*g34*g44 + 2*d4g44*g13*g22*g24*g33*g34*g44 + 2*d4g34*g14*g22*g24*g33*g34*g44 - 2*d4g44*g12*g23*g24*g33*g34*g44 - 2*d4g34*g12*g24**2*g33*g34*g44 - d4g44*g13*g22*g23*g34**2*g44 - 2*d4g34*g14*g22*g23*g34**2*g44 + d4g44*g12*g23**2*g34**2*g44 + 2*d4g24*g14*g23**2*g34**2*g44 - d4g33*g14*g22*g24*g34**2*g44 + 2*d4g34*g12*g23*g24*g34**2*g44 - 2*d4g24*g13*g23*g24*g34**2*g44 - 2*d4g23*g14*g23*g24*g34**2*g44 + d4g33*g12*g24**2*g34**2*g44 + 2*d4g23*g13*g24**2*g34**2*g44 - 2*d4g24*g14*g22*g33*g34**2*g44 + 2*d4g24*g12*g24*g33*g34**2*g44 + d4g22*g14*g24*g33*g34**2*g44 + d1g24*g24**2*g33*g34**2*g44 - d2g14*g24**2*g33*g34**2*g44 - d4g12*g24**2*g33*g34**2*g44 + 2*d4g24*g13*g22*g34**3*g44 + 2*d4g23*g14*g22*g34**3*g44 - 2*d4g24*g12*g23*g34**3*g44 - d4g22*g14*g23*g34**3*g44 - 2*d4g23*g12*g24*g34**3*g44 - d4g22*g13*g24*g34**3*g44 - 2*d1g24*g23*g24*g34**3*g44 + 2*d2g14*g23*g24*g34**3*g44 + 2*d4g12*g23*g24*g34**3*g44 + d4g22*g12*g34**4*g44 + d1g24*g22*g34**4*g44 - d2g14*g22*g34**4*g44 - d4g12*g22*g34**4*g44 - d4g33*g14*g23**2*g24*g44**2 + d4g33*g13*g23*g24**2*g44**2 - 2*d4g24*g14*g23**2*g33*g44**2 - 2*d4g34*g13*g22*g24*g33*g44**2 + 2*d4g34*g12*g23*g24*g33*g44**2 + 2*d4g24*g13*g23*g24*g33*g44**2 + 2*d4g23*g14*g23*g24*g33*g44**2 - 2*d4g23*g13*g24**2*g33*g44**2 + 2*d4g24*g14*g22*g33**2*g44**2 - 2*d4g24*g12*g24*g33**2*g44**2 - d4g22*g14*g24*g33**2*g44**2 - d1g24*g24**2*g33**2*g44**2 + d2g14*g24**2*g33**2*g44**2 + d4g12*g24**2*g33**2*g44**2 + 2*d4g34*g13*g22*g23*g34*g44**2 + d4g33*g14*g22*g23*g34*g44**2 - 2*d4g34*g12*g23**2*g34*g44**2 + d4g33*g13*g22*g24*g34*g44**2 - 2*d4g33*g12*g23*g24*g34*g44**2 - 2*d4g24*g13*g22*g33*g34*g44**2 - 2*d4g23*g14*g22*g33*g34*g44**2 + 2*d4g24*g12*g23*g33*g34*g44**2 + d4g22*g14*g23*g33*g34*g44**2 + 2*d4g23*g12*g24*g33*g34*g44**2 + d4g22*g13*g24*g33*g34*g44**2 + 2*d1g24*g23*g24*g33*g34*g44**2 - 2*d2g14*g23*g24*g33*g34*g44**2 - 2*d4g12*g23*g24*g33*g34*g44**2 - 2*d4g23*g13*g22*g34**2*g44**2 + 2*d4g23*g12*g23*g34**2*g44**2 + d4g22*g13*g23*g34**2*g44**2 + d1g24*g23**2*g34**2*g44**2 - d2g14*g23**2*g34**2*g44**2 - d4g12*g23**2*g34**2*g44**2 - 2*d4g22*g12*g33*g34**2*g44**2 - 2*d1g24*g22*g33*g34**2*g44**2 + 2*d2g14*g22*g33*g34**2*g44**2 + 2*d4g12*g22*g33*g34**2*g44**2 - d4g33*g13*g22*g23*g44**3 + d4g33*g12*g23**2*g44**3 + 2*d4g23*g13*g22*g33*g44**3 - 2*d4g23*g12*g23*g33*g44**3 - d4g22*g13*g23*g33*g44**3 - d1g24*g23**2*g33*g44**3 + d2g14*g23**2*g33*g44**3 + d4g12*g23**2*g33*g44**3 + d4g22*g12*g33**2*g44**3 + d1g24*g22*g33**2*g44**3 - d2g14*g22*g33**2*g44**3 - d4g12*g22*g33**2*g44**3)/(4*g44*(-g34**2 + g33*g44)* (g24**2*g33 - 2*g23*g24*g34 + g22*g34**2 + g23**2*g44 - g22*g33*g44))
    out[(1, 3, 1)] = (d1g44*g14*g33*g34 - d1g44*g13*g34**2 - 2*d1g34*g14*g33*g44 + 2*d1g34*g13*g34*g44 + d1g33*g14*g34*g44 - d3g11*g34**2*g44 - d1g33*g13*g44**2 + d3g11*g33*g44**2)/(4*g44*(-g34**2 + g33*g44))
    out[(1, 3, 2)] = (d2g44*g14*g33*g34 - d2g44*g13*g34**2 - 2*d2g34*g14*g33*g44 + 2*d2g34*g13*g34*g44 + d2g33*g14*g34*g44 + d1g23*g34**2*g44 - d2g13*g34**2*g44 - d3g12*g34**2*g44 - d2g33*g13*g44**2 - d1g23*g33*g44**2 + d2g13*g33*g44**2 + d3g12*g33*g44**2)/(4*g44*(-g34**2 + g33*g44))
    out[(1, 3, 3)] = (d3g44*g14*g33*g34 - d3g44*g13*g34**2 - 2*d3g34*g14*g33*g44 + 2*d3g34*g13*g34*g44 + d3g33*g14*g34*g44 + d1g33*g34**2*g44 - 2*d3g13*g34**2*g44 - d3g33*g13*g44**2 - d1g33*g33*g44**2 + 2*d3g13*g33*g44**2)/(4*g44*(-g34**2 + g33*g44))
    out[(1, 3, 4)] = (d4g44*g14*g33*g34 - d4g44*g13*g34**2 - 2*d4g34*g14*g33*g44 + 2*d4g34*g13*g34*g44 + d4g33*g14*g34*g44 + d1g34*g34**2*g44 - d3g14*g34**2*g44 - d4g13*g34**2*g44 - d4g33*g13*g44**2 - d1g34*g33*g44**2 + d3g14*g33*g44**2 + d4g13*g33*g44**2)/(4*g44*(-g34**2 + g33*g44))
    out[(1, 4, 1)] = (-(d1g44*g14) + d4g11*g44)/(4*g44)
    out[(1, 4, 2)] = (-(d2g44*g14) - d1g24*g44 + d2g14*g44 + d4g12*g44)/(4*g44)
    out[(1, 4, 3)] = (-(d3g44*g14) - d1g34*g44 + d3g14*g44 + d4g13*g44)/(4*g44)
    out[(1, 4, 4)] = (-(d4g44*g14) - d1g44*g44 + 2*d4g14*g44)/(4*g44)
    out[(2, 3, 1)] = (-(d1g44*g24*g33*g34) + d1g44*g23*g34**2 + 2*d1g34*g24*g33*g44 - 2*d1g34*g23*g34*g44 - d1g33*g24*g34*g44 + d1g23*g34**2*g44 - d2g13*g34**2*g44 + d3g12*g34**2*g44 + d1g33*g23*g44**2 - d1g23*g33*g44**2 + d2g13*g33*g44**2 - d3g12*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 3, 2)] = (-(d2g44*g24*g33*g34) + d2g44*g23*g34**2 + 2*d2g34*g24*g33*g44 - 2*d2g34*g23*g34*g44 - d2g33*g24*g34*g44 + d3g22*g34**2*g44 + d2g33*g23*g44**2 - d3g22*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 3, 3)] = (-(d3g44*g24*g33*g34) + d3g44*g23*g34**2 + 2*d3g34*g24*g33*g44 - 2*d3g34*g23*g34*g44 - d3g33*g24*g34*g44 - d2g33*g34**2*g44 + 2*d3g23*g34**2*g44 + d3g33*g23*g44**2 + d2g33*g33*g44**2 - 2*d3g23*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 3, 4)] = (-(d4g44*g24*g33*g34) + d4g44*g23*g34**2 + 2*d4g34*g24*g33*g44 - 2*d4g34*g23*g34*g44 - d4g33*g24*g34*g44 - d2g34*g34**2*g44 + d3g24*g34**2*g44 + d4g23*g34**2*g44 + d4g33*g23*g44**2 + d2g34*g33*g44**2 - d3g24*g33*g44**2 - d4g23*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 4, 1)] = (-(d1g44*g24) + d1g24*g44 - d2g14*g44 + d4g12*g44)/(4*g44)
    out[(2, 4, 2)] = (-(d2g44*g24) + d4g22*g44)/(4*g44)
    out[(2, 4, 3)] = (-(d3g44*g24) - d2g34*g44 + d3g24*g44 + d4g23*g44)/(4*g44)
    out[(2, 4, 4)] = (-(d4g44*g24) - d2g44*g44 + 2*d4g24*g44)/(4*g44)
    out[(3, 4, 1)] = (-(d1g44*g34) + d1g34*g44 - d3g14*g44 + d4g13*g44)/(4*g44)
    out[(3, 4, 2)] = (-(d2g44*g34) + d2g34*g44 - d3g24*g44 + d4g23*g44)/(4*g44)
    out[(3, 4, 3)] = (-(d3g44*g34) + d4g33*g44)/(4*g44)
    out[(3, 4, 4)] = (-(d4g44*g34) - d3g44*g44 + 2*d4g34*g44)/(4*g44)
    return out


def temporal4(g, dg):
    d1g22 = dg[0, 1, 1]
    d1g23 = dg[0, 1, 2]
    d1g24 = dg[0, 1, 3]
    d1g33 = dg[0, 2, 2]
    d1g34 = dg[0, 2, 3]
    d1g44 = dg[0, 3, 3]
    d2g33 = dg[1, 2, 2]
    d2g34 = dg[1, 2, 3]
    d2g44 = dg[1, 3, 3]
    d3g22 = dg[2, 1, 1]
    d3g23 = dg[2, 1, 2]
    d3g24 = dg[2, 1, 3]
    d3g33 = dg[2, 2, 2]
    d3g34 = dg[2, 2, 3]
    d3g44 = dg[2, 3, 3]
    d4g22 = dg[3, 1, 1]
    d4g23 = dg[3, 1, 2]
    d4g24 = dg[3, 1, 3]
    d4g33 = dg[3, 2, 2]
    d4g34 = dg[3, 2, 3]
    d4g44 = dg[3, 3, 3]
    g23 = g[1, 2]
    g24 = g[1, 3]
    g33 = g[2, 2]
    g34 = g[2, 3]
    g44 = g[3, 3]
    out = {}
    out[(1, 2, 1)] = 0
    out[(1, 2, 2)] = -d1g22/4
    out[(1, 2, 3)] = -d1g23/4
    out[(1, 2, 4)] = -d1g24/4
    out[(1, 3, 1)] = 0
    out[(1, 3, 2)] = -d1g23/4
    out[(1, 3, 3)] = -d1g33/4
    out[(1, 3, 4)] = -d1g34/4
    out[(1, 4, 1)] = 0
    out[(1, 4, 2)] = -d1g24/4
    out[(1, 4, 3)] = -d1g34/4
    out[(1, 4, 4)] = -d1g44/4
    out[(2, 3, 1)] = -(d1g44*g24*g33*g34 - d1g44*g23*g34**2 - 2*d1g34*g24*g33*g44 + 2*d1g34*g23*g34*g44 + d1g33*g24*g34*g44 - d1g23*g34**2*g44 - d1g33*g23*g44**2 + d1g23*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 3, 2)] = -(d2g44*g24*g33*g34 - d2g44*g23*g34**2 - 2*d2g34*g24*g33*g44 + 2*d2g34*g23*g34*g44 + d2g33*g24*g34*g44 - d3g22*g34**2*g44 - d2g33*g23*g44**2 + d3g22*g33*g44**2)/(4*g44*(g34**2 - g33*g44))
    out[(2, 3, 3)] = -((d3g44*g24*g33*g34 - d3g44*g23*g34**2 - 2*d3g34*g24*g33*g44 + 2*d3g34*g23*g34*g44 + d3g33*g24*g34*g44 + d2g33*g34**2*g44 - 2*d3g23*g34**2*g44- d3g33*g23*g44**2 - d2g33*g33*g44**2 + 2*d3g23*g33*g44**2)/(4*g34**2*g44 - 4*g33*g44**2))
    out[(2, 3, 4)] = -((d4g44*g24*g33*g34 - d4g44*g23*g34**2 - 2*d4g34*g24*g33*g44 + 2*d4g34*g23*g34*g44 + d4g33*g24*g34*g44 + d2g34*g34**2*g44 - d3g24*g34**2*g44- d4g23*g34**2*g44 - d4g33*g23*g44**2 -d2g34*g33*g44**2 + d3g24*g33*g44**2 + d4g23*g33*g44**2)/ (4*g34**2*g44 - 4*g33*g44**2))
    out[(2, 4, 1)] = (-(d1g44*g24) + d1g24*g44)/(4*g44)
    out[(2, 4, 2)] = (-(d2g44*g24) + d4g22*g44)/(4*g44)
    out[(2, 4, 3)] = (-(d3g44*g24) - d2g34*g44 + d3g24*g44 + d4g23*g44)/(4*g44)
    out[(2, 4, 4)] = (-(d4g44*g24) - d2g44*g44 + 2*d4g24*g44)/(4*g44)
    out[(3, 4, 1)] = -(d1g44*g34 - d1g34*g44)/(4*g44)
    out[(3, 4, 2)] = -(d2g44*g34 - d2g34*g44 + d3g24*g44 - d4g23*g44)/(4*g44)
    out[(3, 4, 3)] = -(d3g44*g34 - d4g33*g44)/(4*g44)
    out[(3, 4, 4)] = -(d4g44*g34 + d3g44*g44 - 2*d4g34*g44)/(4*g44)
    return out


def dim3(g, dg):
    d1g22 = dg[0, 1, 1]
    d1g23 = dg[0, 1, 2]
    d1g33 = dg[0, 2, 2]
    d2g11 = dg[1, 0, 0]
    d2g12 = dg[1, 0, 1]
    d2g13 = dg[1, 0, 2]
    d2g22 = dg[1, 1, 1]
    d2g23 = dg[1, 1, 2]
    d2g33 = dg[1, 2, 2]
    d3g11 = dg[2, 0, 0]
    d3g12 = dg[2, 0, 1]
    d3g13 = dg[2, 0, 2]
    d3g22 = dg[2, 1, 1]
    d3g23 = dg[2, 1, 2]
    d3g33 = dg[2, 2, 2]
    g12 = g[0, 1]
    g13 = g[0, 2]
    g22 = g[1, 1]
    g23 = g[1, 2]
    g33 = g[2, 2]
    out = {}
    out[(1, 2, 1)] = (d1g33*g13*g22*g23 - d1g33*g12*g23**2 - 2*d1g23*g13*g22*g33 + 2*d1g23*g12*g23*g33 + d1g22*g13*g23*g33 - d2g11*g23**2*g33 - d1g22*g12*g33**2 + d2g11*g22*g33**2)/ (4*g33*(-g23**2 + g22*g33))
    out[(1, 2, 2)] = (d2g33*g13*g22*g23 - d2g33*g12*g23**2 - 2*d2g23*g13*g22*g33 + 2*d2g23*g12*g23*g33 + d2g22*g13*g23*g33 + d1g22*g23**2*g33 - 2*d2g12*g23**2*g33 - d2g22*g12*g33**2 - d1g22*g22*g33**2 + 2*d2g12*g22*g33**2)/ (4*g33*(-g23**2 + g22*g33))
    out[(1, 2, 3)] = (d3g33*g13*g22*g23 - d3g33*g12*g23**2 - 2*d3g23*g13*g22*g33 + 2*d3g23*g12*g23*g33 + d3g22*g13*g23*g33 + d1g23*g23**2*g33 - d2g13*g23**2*g33 - d3g12*g23**2*g33 - d3g22*g12*g33**2 - d1g23*g22*g33**2 + d2g13*g22*g33**2 + d3g12*g22*g33**2)/ (4*g33*(-g23**2 + g22*g33))
    out[(1, 3, 1)] = (-(d1g33*g13) + d3g11*g33)/ (4*g33)
    out[(1, 3, 2)] = (-(d2g33*g13) - d1g23*g33 + d2g13*g33 + d3g12*g33)/(4*g33)
    out[(1, 3, 3)] = (-(d3g33*g13) - d1g33*g33 + 2*d3g13*g33)/(4*g33)
    out[(2, 3, 1)] = -(d1g33*g23 - d1g23*g33 + d2g13*g33 - d3g12*g33)/(4*g33)
    out[(2, 3, 2)] = -(d2g33*g23 - d3g22*g33)/ (4*g33)
    out[(2, 3, 3)] = -(d3g33*g23 + d2g33*g33 - 2*d3g23*g33)/(4*g33)
    return out


def dim2(g, dg):
    d1g22 = dg[0, 1, 1]
    d2g11 = dg[1, 0, 0]
    d2g12 = dg[1, 0, 1]
    d2g22 = dg[1, 1, 1]
    g12 = g[0, 1]
    g22 = g[1, 1]
    out = {}
    out[(1, 2, 1)] = -(d1g22*g12 - d2g11*g22)/(4*g22)
    out[(1, 2, 2)] = -(d2g22*g12 + d1g22*g22 - 2*d2g12*g22)/(4*g22)
    return out


VARIANTS = {"general4": (general4, 4), "temporal4": (temporal4, 4), "dim3": (dim3, 3), "dim2": (dim2, 2)}
