"""Block stiffness/mass assembly for FEM and SGFEM.

The full matrices carry the FEM degrees of freedom first, then the
enrichment ones, and are sliced into the four blocks afterwards.  All
integrals use panel-wise Gauss quadrature split at the interface so every
integrand is a (piecewise) polynomial on each panel; p+2 points per panel
integrate the enrichment products exactly.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .basis import lagrange_all, eval_enrichment
from .exceptions import (CoefficientNotPositiveError, InvalidArgumentError,
                         MissingSourceError)
from .quadrature import gauss_rule, panel_list


@dataclass
class InterfaceProblem:
    """Piecewise diffusion coefficient with interface at gamma and an
    optional source term.  kappa0/kappa1 may be constants or callables."""

    gamma: float
    kappa0: object = 1.0
    kappa1: object = 1.0
    source: Optional[Callable] = None

    def kappa(self, x):
        x = np.asarray(x, dtype=float)
        k0 = self.kappa0(x) if callable(self.kappa0) else self.kappa0
        k1 = self.kappa1(x) if callable(self.kappa1) else self.kappa1
        return np.where(x <= self.gamma, k0, k1)


@dataclass
class BlockSystem:
    """Assembled stiffness and mass matrices in 2x2 block form."""

    K_FF: np.ndarray
    K_FE: np.ndarray
    K_EF: np.ndarray
    K_EE: np.ndarray
    M_FF: np.ndarray
    M_FE: np.ndarray
    M_EF: np.ndarray
    M_EE: np.ndarray
    F_F: Optional[np.ndarray] = None
    F_E: Optional[np.ndarray] = None

    @property
    def K(self):
        return np.block([[self.K_FF, self.K_FE], [self.K_EF, self.K_EE]])

    @property
    def M(self):
        return np.block([[self.M_FF, self.M_FE], [self.M_EF, self.M_EE]])

    @property
    def F(self):
        if self.F_F is None:
            return None
        return np.concatenate([self.F_F, self.F_E])


def _basis_table(space, panel, rule):
    """Values/derivatives of every active basis function on a panel.

    Returns (rows, vals, ders, xq, wq) where rows[i] is the global row of
    the i-th active function (FEM rows 0..n_fem-1, enrichment rows after).
    """
    mesh, p = space.mesh, space.p
    k, lo, hi = panel
    a, b = mesh.element_bounds(k)
    h = b - a
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    xq = mid + half * rule.points
    wq = half * rule.weights
    t = (xq - a) / h
    phi = lagrange_all(p, t, 0)
    dphi = lagrange_all(p, t, 1) / h

    rows, vals, ders = [], [], []
    for i, gid in enumerate(space.element_dofs(k)):
        if 1 <= gid <= space.n_fem:
            rows.append(gid - 1)
            vals.append(phi[i])
            ders.append(dphi[i])
    if space.enriched and k == mesh.r:
        w = np.array([eval_enrichment(space, x, 0) for x in xq])
        dw = np.array([eval_enrichment(space, x, 1) for x in xq])
        for pos, gid in enumerate(space.enriched_set):
            i = gid - (k - 1) * p
            rows.append(space.n_fem + pos)
            vals.append(w * phi[i])
            ders.append(dw * phi[i] + w * dphi[i])
    return rows, np.array(vals), np.array(ders), xq, wq


def assemble(space, prob):
    """Assemble the block stiffness/mass system (and load if a source is
    present)."""
    mesh = space.mesh
    if abs(prob.gamma - mesh.gamma) > 1e-13:
        raise InvalidArgumentError("problem and mesh disagree on gamma")
    nf, ne = space.n_fem, space.n_enr
    ndof = nf + ne
    K = np.zeros((ndof, ndof))
    M = np.zeros((ndof, ndof))
    F = np.zeros(ndof) if prob.source is not None else None
    rule = gauss_rule(space.p + 2)
    # the source term need not be polynomial, so the load uses a finer rule
    rule_load = gauss_rule(space.p + 6)

    for panel in panel_list(mesh):
        rows, vals, ders, xq, wq = _basis_table(space, panel, rule)
        kap = prob.kappa(xq)
        if np.any(kap <= 0.0):
            raise CoefficientNotPositiveError(
                f"kappa <= 0 sampled on panel {panel}")
        idx = np.ix_(rows, rows)
        K[idx] += (ders * (kap * wq)) @ ders.T
        M[idx] += (vals * wq) @ vals.T
        if F is not None:
            rows_l, vals_l, _, xq_l, wq_l = _basis_table(space, panel, rule_load)
            F[rows_l] += vals_l @ (wq_l * prob.source(xq_l))

    # enforce exact symmetry (summation order would otherwise leave
    # last-bit asymmetry)
    K = 0.5 * (K + K.T)
    M = 0.5 * (M + M.T)
    return BlockSystem(
        K_FF=K[:nf, :nf], K_FE=K[:nf, nf:], K_EF=K[nf:, :nf], K_EE=K[nf:, nf:],
        M_FF=M[:nf, :nf], M_FE=M[:nf, nf:], M_EF=M[nf:, :nf], M_EE=M[nf:, nf:],
        F_F=None if F is None else F[:nf],
        F_E=None if F is None else F[nf:])


def assemble_load(space, prob):
    """Load sub-vectors (F_F, F_E) for the source problem."""
    if prob.source is None:
        raise MissingSourceError("problem has no source term")
    nf, ne = space.n_fem, space.n_enr
    F = np.zeros(nf + ne)
    rule = gauss_rule(space.p + 6)
    for panel in panel_list(space.mesh):
        rows, vals, _, xq, wq = _basis_table(space, panel, rule)
        F[rows] += vals @ (wq * prob.source(xq))
    return F[:nf], F[nf:]
