"""Named residuals with tolerances, shared by every identity check."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .jet import Jet

__all__ = ["Residuals", "tolerances", "max_abs"]


def max_abs(x):
    if isinstance(x, Jet):
        x = x.val
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def tolerances(scale, factor=1.0):
    """Algebraic, first-derivative and second-derivative tolerances for an input ``scale``."""
    return {"alg": 1e-10 * scale * factor, "d1": 1e-9 * scale * factor, "d2": 1e-7 * scale * factor}


@dataclass
class Residuals:
    values: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def add(self, name, value, tol):
        self.values[name] = float(value)
        self.tolerances[name] = float(tol)

    @property
    def ok(self):
        # NaN never passes
        return all(self.values[k] <= self.tolerances[k] for k in self.values)

    def failures(self):
        return {k: (v, self.tolerances[k]) for k, v in self.values.items() if not v <= self.tolerances[k]}

    def merge(self, other, prefix=""):
        for k, v in other.values.items():
            self.add(prefix + k, v, other.tolerances[k])
        return self

    def worst_ratio(self):
        return max((v / t if t > 0 else np.inf * (v > 0) for v, t in
                    ((self.values[k], self.tolerances[k]) for k in self.values)), default=0.0)
