import numpy as np
import pytest

from cliffordforms.geometry import MetricSpec, random_perturbed_metric


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def frw(a="(1 + 0.3*x1)"):
    """diag(1, -a^2, -a^2, -a^2) with a = a(x1)."""
    s = f"-{a}^2"
    return MetricSpec.from_rows([["1", "0", "0", "0"], [None, s, "0", "0"], [None, None, s, "0"],
                                 [None, None, None, s]])


def perturbed_metrics(count, n=4, seed=7, eps=0.1):
    rng = np.random.default_rng(seed)
    return [(random_perturbed_metric(rng, n, eps), tuple(rng.uniform(-0.5, 0.5, n))) for _ in range(count)]


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
