"""Degree-p C0 nodal basis, interface enrichment, and local representation.

The FEM space uses Lagrange shape functions on p+1 equispaced nodes per
element with C0 gluing; the two boundary shape functions are dropped so
homogeneous Dirichlet conditions are built in (n_fem = p*N - 1 interior
degrees of freedom).

The enrichment is w = I_h w* - w* with w* = |x - gamma|, supported on the
interface element only and positive there.  The enriched space adds the
p+1 products w * N_j for the nodal functions of the interface element.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DiscontinuousInputError, InvalidArgumentError
from .mesh import locate


def lagrange_all(p, t, deriv=0):
    """Values (or first derivatives) of all p+1 equispaced Lagrange shape
    functions on [0, 1] at reference coordinates t.

    Returns an array of shape (p+1,) + shape(t).
    """
    t = np.asarray(t, dtype=float)
    ts = np.linspace(0.0, 1.0, p + 1)
    out = np.empty((p + 1,) + t.shape)
    for i in range(p + 1):
        others = [m for m in range(p + 1) if m != i]
        denom = np.prod([ts[i] - ts[m] for m in others])
        if deriv == 0:
            num = np.ones_like(t)
            for m in others:
                num = num * (t - ts[m])
            out[i] = num / denom
        else:
            s = np.zeros_like(t)
            for skip in others:
                term = np.ones_like(t)
                for m in others:
                    if m != skip:
                        term = term * (t - ts[m])
                s = s + term
            out[i] = s / denom
    return out


@dataclass(frozen=True)
class EnrichedSpace:
    """Degree-p approximation space on a mesh, optionally SGFEM-enriched.

    enriched_set holds the global basis indices whose nodal functions are
    multiplied by the enrichment (the nodes of the interface element that
    are interior to the domain).
    """

    p: int
    mesh: object
    n_fem: int
    enriched_set: tuple
    n_enr: int
    enriched: bool

    def global_node_x(self, g):
        """Coordinate of global node g (0 <= g <= p*N)."""
        p, mesh = self.p, self.mesh
        k, i = divmod(g, p)
        if k == mesh.N:  # right domain boundary
            return mesh.nodes[-1]
        a, b = mesh.nodes[k], mesh.nodes[k + 1]
        return a + (b - a) * i / p

    def element_dofs(self, k):
        """Global indices of the p+1 nodes of element k (1-based)."""
        return np.arange((k - 1) * self.p, k * self.p + 1)


@dataclass
class DofVector:
    """Coefficients of a function in the enriched space."""

    u_F: np.ndarray
    u_E: np.ndarray

    def scaled(self, s):
        return DofVector(u_F=s * self.u_F, u_E=s * self.u_E)


def build_space(mesh, p, enrich=True):
    """Construct the degree-p space; enrichment is dropped on fitting meshes."""
    if p < 1:
        raise InvalidArgumentError(f"degree must be >= 1, got {p}")
    n_fem = p * mesh.N - 1
    if enrich and not mesh.fitting:
        cand = np.arange((mesh.r - 1) * p, mesh.r * p + 1)
        rset = tuple(int(g) for g in cand if 1 <= g <= n_fem)
        return EnrichedSpace(p=p, mesh=mesh, n_fem=n_fem, enriched_set=rset,
                             n_enr=len(rset), enriched=True)
    return EnrichedSpace(p=p, mesh=mesh, n_fem=n_fem, enriched_set=(),
                         n_enr=0, enriched=False)


def eval_fem_basis(space, j, x, deriv=0):
    """Value or first derivative of the j-th interior global shape function."""
    if not 1 <= j <= space.n_fem:
        raise IndexError(f"basis index {j} outside 1..{space.n_fem}")
    mesh, p = space.mesh, space.p
    k = locate(mesh, x)
    i = j - (k - 1) * p
    if not 0 <= i <= p:
        return 0.0
    a, b = mesh.element_bounds(k)
    t = (x - a) / (b - a)
    v = lagrange_all(p, np.array(t), deriv)[i]
    if deriv:
        v = v / (b - a)
    return float(v)


def eval_enrichment(space, x, deriv=0):
    """The enrichment w = I_h w* - w* (w* = |x - gamma|), or its one-sided
    slope (right limit at gamma and at the left element endpoint, left limit
    at the right endpoint).  Zero outside the interface element and on
    fitting meshes.
    """
    mesh = space.mesh
    if mesh.fitting:
        return 0.0
    a, b = mesh.element_bounds(mesh.r)
    if x < a or x > b:
        return 0.0
    g = mesh.gamma
    h = b - a
    if deriv == 0:
        interp = (g - a) + (x - a) * ((b - g) - (g - a)) / h
        return interp - abs(x - g)
    slope_interp = ((b - g) - (g - a)) / h
    # d|x-gamma|/dx with right-limit convention at gamma
    dwstar = -1.0 if x < g else 1.0
    return slope_interp - dwstar


def reference_enrichment(nu, t, deriv=0):
    """Enrichment on the reference interval [0, 1] with kink at nu:
    2(1-nu)t on [0, nu], 2nu(1-t) on [nu, 1]."""
    t = np.asarray(t, dtype=float)
    if deriv == 0:
        return np.where(t <= nu, 2.0 * (1.0 - nu) * t, 2.0 * nu * (1.0 - t))
    return np.where(t < nu, 2.0 * (1.0 - nu), -2.0 * nu)


def represent_piecewise_poly(a, b, nu, p):
    """Coefficients (alpha, beta) with
    P(x) = sum_j alpha_j x^j + beta_j w(x) x^j on [0, 1],
    for the continuous piecewise polynomial P = (P0 on [0, nu], P1 on [nu, 1])
    with monomial coefficients a and b.  b[0] is overwritten to enforce
    continuity at nu.  beta[p] = 0 always; solved by back-substitution.
    """
    if not 0.0 < nu < 1.0:
        raise InvalidArgumentError(f"nu must lie in (0, 1), got {nu}")
    a = np.asarray(a, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    if a.shape != (p + 1,) or b.shape != (p + 1,):
        raise InvalidArgumentError("coefficient arrays must have length p+1")
    # continuity at nu fixes b0
    b[0] = a[0] + sum((a[l] - b[l]) * nu**l for l in range(1, p + 1))

    # Matching monomial coefficients on each piece gives, after eliminating
    # alpha, the recursion beta_{k-1} = (a_k - b_k)/2 + nu*beta_k.
    beta = np.zeros(p + 1)
    for k in range(p, 0, -1):
        beta[k - 1] = 0.5 * (a[k] - b[k]) + nu * beta[k]
    alpha = np.empty(p + 1)
    alpha[0] = a[0]
    for k in range(1, p + 1):
        alpha[k] = a[k] - 2.0 * (1.0 - nu) * beta[k - 1]
    return alpha, beta


def _poly_interp_coeffs(f, lo, hi, p, to_ref):
    """Monomial coefficients (in the reference coordinate of the interface
    element) of the degree-p interpolant of f on [lo, hi]."""
    xs = np.linspace(lo, hi, p + 1)
    ts = to_ref(xs)
    vals = np.array([f(x) for x in xs], dtype=float)
    # Vandermonde solve; p is small so this is exact enough.
    V = np.vander(ts, p + 1, increasing=True)
    return np.linalg.solve(V, vals)


def build_interface_interpolant(u0, u1, space):
    """Piecewise degree-p Lagrange interpolant of the piecewise-smooth
    function (u0 on [0, gamma], u1 on [gamma, 1]) in the enriched space.

    Standard nodal interpolation away from the interface element; on the
    interface element the two sub-interval interpolants are converted to
    FEM + enrichment coefficients through represent_piecewise_poly.
    """
    mesh, p = space.mesh, space.p
    g = mesh.gamma
    v0, v1 = u0(g), u1(g)
    if abs(v0 - v1) > 1e-10 * (1.0 + abs(v0)):
        raise DiscontinuousInputError(
            f"u0(gamma)={v0} and u1(gamma)={v1} disagree")
    if not space.enriched:
        raise InvalidArgumentError("space must be enriched (non-fitting mesh)")

    def u(x):
        return u0(x) if x < g else u1(x)

    uF = np.array([u(space.global_node_x(j)) for j in range(1, space.n_fem + 1)])
    uE = np.zeros(space.n_enr)

    r = mesh.r
    a, b = mesh.element_bounds(r)
    h = b - a
    nu = (g - a) / h
    to_ref = lambda x: (np.asarray(x) - a) / h

    c0 = _poly_interp_coeffs(u0, a, g, p, to_ref)
    c1 = _poly_interp_coeffs(u1, g, b, p, to_ref)
    # nodal interpolant restricted to the interface element, same coordinates
    co = _poly_interp_coeffs(u, a, b, p, to_ref)

    alpha, beta = represent_piecewise_poly(c0 - co, c1 - co, nu, p)

    tloc = np.linspace(0.0, 1.0, p + 1)
    q = np.polynomial.polynomial.polyval(tloc, alpha)
    # polynomial correction vanishes at the element endpoints; add it only at
    # the interior nodes so neighbours stay untouched
    dofs = space.element_dofs(r)
    for i in range(1, p):
        gidx = dofs[i]
        if 1 <= gidx <= space.n_fem:
            uF[gidx - 1] += q[i]
    # actual enrichment = h * reference enrichment, so coefficients shrink by h
    gb = np.polynomial.polynomial.polyval(tloc, beta) / h
    for pos, gidx in enumerate(space.enriched_set):
        i = gidx - (r - 1) * p
        uE[pos] = gb[i]
    return DofVector(u_F=uF, u_E=uE)


def eval_solution(space, dofs, x, deriv=0):
    """Evaluate a DofVector at points x all lying inside one element
    (1-based index found from the first point).  Returns an array."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    mesh, p = space.mesh, space.p
    k = locate(mesh, 0.5 * (x.min() + x.max()))
    a, b = mesh.element_bounds(k)
    h = b - a
    t = (x - a) / h
    phi = lagrange_all(p, t, deriv)
    if deriv:
        phi = phi / h
    gidx = space.element_dofs(k)
    out = np.zeros_like(x)
    for i, gid in enumerate(gidx):
        if 1 <= gid <= space.n_fem:
            out += dofs.u_F[gid - 1] * phi[i]
    if space.enriched and k == mesh.r and space.n_enr:
        w = np.array([eval_enrichment(space, xi, 0) for xi in x])
        if deriv:
            dw = np.array([eval_enrichment(space, xi, 1) for xi in x])
        phi0 = lagrange_all(p, t, 0)
        dphi0 = lagrange_all(p, t, 1) / h if deriv else None
        for pos, gid in enumerate(space.enriched_set):
            i = gid - (k - 1) * p
            if deriv:
                out += dofs.u_E[pos] * (dw * phi0[i] + w * dphi0[i])
            else:
                out += dofs.u_E[pos] * w * phi0[i]
    return out
