"""Shared fixtures for the test suite."""

import numpy as np
import pytest

from sgfem1d import (InterfaceProblem, assemble, build_space,
                     build_uniform_mesh, manufactured_source)


@pytest.fixture(scope="session")
def benchmark_problem():
    """The manufactured source problem: gamma=1/3, kappa=(1,4)."""
    u, f = manufactured_source()
    prob = InterfaceProblem(gamma=1.0 / 3.0, kappa0=1.0, kappa1=4.0, source=f)
    return u, f, prob


@pytest.fixture(scope="session")
def small_sgfem_system(benchmark_problem):
    """Assembled SGFEM system for p=2, N=10 (non-fitting)."""
    _, _, prob = benchmark_problem
    mesh = build_uniform_mesh(10, prob.gamma)
    space = build_space(mesh, 2)
    return space, assemble(space, prob)


def rng(seed=0):
    return np.random.default_rng(seed)


ACCEPTANCE_CRITERIA = {
    1: "source-problem H1 errors and rates",
    2: "eigenvalue errors and rates, benchmark 1",
    3: "eigenvalue errors and rates, benchmark 2",
    4: "eigenfunction errors and rates, benchmark 1",
    5: "transcendental reference eigenpairs",
    6: "closed-form rational spectrum",
    7: "exact representation of kinked polynomials",
    8: "conforming eigenvalue upper bound",
    9: "scaled conditioning growth",
    10: "assembly/solver invariant suite",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion."""
    outcomes = {}
    for status in ("passed", "failed", "error", "xfailed", "xpassed"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_criterion_" not in nodeid:
                continue
            num = int(nodeid.split("test_criterion_")[1][:2])
            outcomes.setdefault(num, set()).add(status)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(outcomes):
        status = outcomes[num]
        if status <= {"passed"}:
            verdict = "PASS"
        elif status <= {"passed", "xfailed"}:
            verdict = "FAIL (expected: documented reference-data defect)"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(
            f"criterion {num:2d} ({ACCEPTANCE_CRITERIA[num]}): {verdict}")
