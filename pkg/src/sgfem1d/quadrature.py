"""Gauss-Legendre rules and interface-split piecewise integration."""

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidArgumentError


@dataclass(frozen=True)
class QuadRule:
    """n-point Gauss-Legendre rule on [-1, 1]."""

    n: int
    points: np.ndarray
    weights: np.ndarray


def gauss_rule(n):
    """n-point Gauss-Legendre rule, nodes by Newton iteration on P_n."""
    if not 1 <= n <= 30:
        raise InvalidArgumentError(f"point count must be in 1..30, got {n}")
    # Chebyshev initial guesses, then Newton on the Legendre polynomial.
    k = np.arange(n)
    x = np.cos(np.pi * (k + 0.75) / (n + 0.5))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for m in range(2, n + 1):
            p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    # recompute derivative at converged nodes for the weights
    p0 = np.ones_like(x)
    p1 = x.copy()
    for m in range(2, n + 1):
        p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    return QuadRule(n=n, points=x[order], weights=w[order])


def panel_list(mesh):
    """Integration panels: every element, with the interface element split
    at gamma on non-fitting meshes.  Each entry is (element_index, lo, hi)."""
    panels = []
    for j in range(1, mesh.N + 1):
        a, b = mesh.element_bounds(j)
        if j == mesh.r and not mesh.fitting:
            panels.append((j, a, mesh.gamma))
            panels.append((j, mesh.gamma, b))
        else:
            panels.append((j, a, b))
    return panels


def integrate_panel(f, lo, hi, rule):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    xq = mid + half * rule.points
    return half * np.sum(rule.weights * f(xq))


def integrate_piecewise(f, mesh, n):
    """Integrate f over [0, 1] with Gauss panels split at the interface.

    f must accept numpy arrays of points.
    """
    rule = gauss_rule(n)
    total = 0.0
    for _, lo, hi in panel_list(mesh):
        total += integrate_panel(f, lo, hi, rule)
    return total
