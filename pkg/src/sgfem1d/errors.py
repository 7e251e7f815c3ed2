"""Interface-aware error norms, eigenfunction alignment, and rate fits."""

from dataclasses import dataclass

import numpy as np

from .basis import eval_solution
from .exceptions import (DegenerateAlignmentError, InsufficientDataError,
                         InvalidArgumentError)
from .quadrature import gauss_rule, panel_list

# Errors below MACHINE_FLOOR are dominated by rounding in the dense
# generalized eigensolve (the plateau sits near 5e-12 at N=160) and are
# excluded from rate fits.  TABLE_FLOOR is the smaller threshold used when
# comparing individual errors against published reference values, which
# were computed with a different solver whose plateau is lower.
MACHINE_FLOOR = 1e-11
TABLE_FLOOR = 5e-13


@dataclass(frozen=True)
class ErrorRecord:
    N: int
    p: int
    method: str
    quantity: str
    value: float


def _panel_sum(space, integrand, n):
    rule = gauss_rule(n)
    total = 0.0
    for k, lo, hi in panel_list(space.mesh):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        xq = mid + half * rule.points
        total += half * np.sum(rule.weights * integrand(xq))
    return total


def h1_semi_error(uh, space, exact):
    """sqrt(int (u' - u_h')^2) with interface-split quadrature."""
    n = space.p + 4

    def integrand(xq):
        duh = eval_solution(space, uh, xq, deriv=1)
        return (exact.deriv(xq) - duh) ** 2

    return np.sqrt(_panel_sum(space, integrand, n))


def l2_error(uh, space, exact):
    """L2 norm of u - u_h with interface-split quadrature."""
    n = space.p + 4

    def integrand(xq):
        vh = eval_solution(space, uh, xq, deriv=0)
        return (exact.value(xq) - vh) ** 2

    return np.sqrt(_panel_sum(space, integrand, n))


def align_eigenfunction(uh, space, exact):
    """Flip the sign of uh, if needed, so its L2 inner product with the
    exact eigenfunction is positive."""
    n = space.p + 4

    def integrand(xq):
        return eval_solution(space, uh, xq, 0) * exact.value(xq)

    inner = _panel_sum(space, integrand, n)
    if abs(inner) < 0.1:
        raise DegenerateAlignmentError(
            f"inner product {inner:.3e} too small; eigenpair mismatch?")
    return uh if inner > 0.0 else uh.scaled(-1.0)


def relative_eigenvalue_error(lambda_h, lam):
    if lam <= 0.0:
        raise InvalidArgumentError(f"exact eigenvalue must be positive, got {lam}")
    return abs(lambda_h - lam) / lam


def fit_rate(records):
    """Least-squares slope of log(error) versus log(1/N) over a refinement
    ladder, skipping values at the rounding floor."""
    recs = sorted(records, key=lambda r: r.N)
    if len({r.N for r in recs}) < 3:
        raise InsufficientDataError("need >= 3 distinct refinement levels")
    usable = [r for r in recs if r.value > MACHINE_FLOOR]
    if len(usable) < 2:
        raise InsufficientDataError("all values at the rounding floor")
    logs_h = np.log([1.0 / r.N for r in usable])
    logs_e = np.log([r.value for r in usable])
    return float(np.polyfit(logs_h, logs_e, 1)[0])
