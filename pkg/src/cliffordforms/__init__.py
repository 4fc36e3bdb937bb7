"""Clifford algebra of differential forms on pseudo-Riemannian space, with numerical
certificates for its structure equations, conservation laws and gauge covariance."""

__version__ = "0.1.0"

from .clifford import Algebra, Form, algebra, clifford_mul, gamma_rep, hodge, wedge  # noqa: E402
from .connection import (  # noqa: E402
    FormFieldExpr, LocalStructure, b_field_closed_form, secondary_generators, solve_b_linear,
    theorem2_residuals,
)
from .errors import FormsError, ParseError, SchemaError  # noqa: E402
from .expr import eval_jet, parse_expr  # noqa: E402
from .fields import PointState, dirac_residual, point_state  # noqa: E402
from .gauge import omega_case  # noqa: E402
from .geometry import MetricSpec, metric_jet, minkowski  # noqa: E402
from .residuals import Residuals  # noqa: E402
from .scenario import Scenario, load_scenario, parse_scenario  # noqa: E402

__all__ = [
    "__version__", "Algebra", "Form", "algebra", "clifford_mul", "gamma_rep", "hodge", "wedge",
    "FormFieldExpr", "LocalStructure", "b_field_closed_form", "secondary_generators",
    "solve_b_linear", "theorem2_residuals", "FormsError", "ParseError", "SchemaError",
    "eval_jet", "parse_expr", "PointState", "dirac_residual", "point_state", "omega_case",
    "MetricSpec", "metric_jet", "minkowski", "Residuals", "Scenario", "load_scenario",
    "parse_scenario",
]
