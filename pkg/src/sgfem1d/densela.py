"""Dense symmetric linear algebra: SPD solve, generalized eigensolve,
scaled condition numbers.

The generalized problem K v = lambda M v is reduced through the Cholesky
factor of K to a standard symmetric problem and handed to LAPACK's
symmetric eigensolver (Householder reduction + implicit-shift QL), then
back-transformed, sorted, M-normalized, and sign-fixed.  Reducing through
K rather than M keeps full relative accuracy for the smallest lambdas
(they become the largest eigenvalues of the reduced matrix).
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import (ConvergenceFailureError, InvalidArgumentError,
                         NotPositiveDefiniteError)


@dataclass
class EigenSolution:
    """Ascending eigenvalues and M-orthonormal eigenvectors (as columns)."""

    values: np.ndarray
    vectors: np.ndarray


def cholesky(A):
    """Lower-triangular L with L L^T = A; raises if A is not SPD."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidArgumentError("matrix must be square")
    if not np.allclose(A, A.T, rtol=1e-12, atol=1e-12 * max(1.0, np.abs(A).max())):
        raise InvalidArgumentError("matrix must be symmetric")
    try:
        return np.linalg.cholesky(A)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(str(exc)) from exc


def solve_spd(K, F):
    """Solve K U = F via Cholesky forward/back substitution."""
    L = cholesky(K)
    y = scipy.linalg.solve_triangular(L, np.asarray(F, dtype=float), lower=True)
    return scipy.linalg.solve_triangular(L.T, y, lower=False)


def generalized_eigs(K, M, k):
    """k smallest eigenpairs of K v = lambda M v for SPD K, M.

    The pencil is inverted: M v = (1/lambda) K v is reduced through the
    Cholesky factor of K, so the wanted smallest lambdas are the *largest*
    eigenvalues of the reduced matrix and keep full relative accuracy down
    to the rounding floor.  Eigenvectors are M-normalized and the entry of
    largest magnitude of each is made positive.
    """
    K = np.asarray(K, dtype=float)
    M = np.asarray(M, dtype=float)
    n = K.shape[0]
    if k > n:
        raise InvalidArgumentError(f"requested {k} pairs from a {n}x{n} system")
    L = cholesky(K)
    # B = L^{-1} M L^{-T}; eigenvalues are 1/lambda
    Y = scipy.linalg.solve_triangular(L, M, lower=True)
    B = scipy.linalg.solve_triangular(L, Y.T, lower=True).T
    B = 0.5 * (B + B.T)
    try:
        mus, vecs = scipy.linalg.eigh(B)
    except scipy.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    if mus[0] <= 0.0:
        raise NotPositiveDefiniteError("reduced problem has nonpositive eigenvalue")
    X = scipy.linalg.solve_triangular(L.T, vecs[:, ::-1][:, :k], lower=False)
    vals = 1.0 / mus[::-1][:k]
    for j in range(k):
        x = X[:, j]
        x /= np.sqrt(x @ (M @ x))
        if x[np.argmax(np.abs(x))] < 0.0:
            x *= -1.0
        X[:, j] = x
    return EigenSolution(values=vals, vectors=X)


def scaled_condition_number(A):
    """lambda_max / lambda_min of D^{-1/2} A D^{-1/2} with D = diag(A)."""
    A = np.asarray(A, dtype=float)
    d = np.diag(A)
    if np.any(d <= 0.0):
        raise NotPositiveDefiniteError("diagonal has nonpositive entries")
    s = 1.0 / np.sqrt(d)
    S = A * np.outer(s, s)
    vals = scipy.linalg.eigvalsh(0.5 * (S + S.T))
    if vals[0] <= 0.0:
        raise NotPositiveDefiniteError("scaled matrix not positive definite")
    return vals[-1] / vals[0]
