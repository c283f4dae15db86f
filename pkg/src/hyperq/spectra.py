"""Incidence and signless Laplacian matrices, and their eigenvalues.

Matrices are built in exact int64 arithmetic. Floating point enters only
in the eigensolvers: power iteration for the principal eigenpair, a cyclic
Jacobi rotation solver for the full spectrum, and deflated power iteration
for the second eigenvalue when the matrix is too large for the dense path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .config import SolverConfig
from .errors import (
    DimensionMismatch,
    InternalIdentityViolation,
    NoConvergence,
    TooLarge,
)
from .hypergraph import Hypergraph, clique_multigraph, degree_profile


def incidence_matrix(H: Hypergraph) -> np.ndarray:
    """n x m 0/1 matrix, columns in canonical edge order."""
    B = np.zeros((H.n, H.m), dtype=np.int64)
    for j, e in enumerate(H.edges):
        B[list(e), j] = 1
    return B


def signless_laplacian(H: Hypergraph) -> np.ndarray:
    """Q = B B^T, cross-checked against D + A_C before returning."""
    B = incidence_matrix(H)
    Q = B @ B.T
    other = np.diag(np.asarray(degree_profile(H).degrees, dtype=np.int64))
    other = other + clique_multigraph(H).pair_counts
    if not np.array_equal(Q, other):
        raise InternalIdentityViolation("B B^T differs from D + A_C")
    return Q


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    x: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    lambda2: float | None = None
    # Q was identically zero; x is the uniform vector
    zero_matrix: bool = False

    def with_lambda2(self, lambda2: float) -> "SpectralResult":
        return replace(self, lambda2=float(lambda2))


def principal_eigenpair(Q, tol: float = 1e-10, max_iter: int = 100_000) -> SpectralResult:
    """Power iteration from the all-ones vector.

    Q is positive semidefinite, so its largest eigenvalue is also the one
    of largest modulus and no shift is needed. Stops once the max-norm
    residual of the Rayleigh quotient is within ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    Q = np.asarray(Q, dtype=float)
    n = Q.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    if not Q.any():
        return SpectralResult(0.0, x, 0.0, 0, zero_matrix=True)

    for it in range(1, max_iter + 1):
        y = Q @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            x.setflags(write=False)
            return SpectralResult(rho, x, residual, it)
        x = y / np.linalg.norm(y)
    raise NoConvergence(f"power iteration: residual {residual:.3e} after {max_iter} steps")


def jacobi_eigh(A, rel_tol: float = 1e-12, max_sweeps: int = 100, vectors: bool = False):
    """Cyclic threshold Jacobi for a dense symmetric matrix.

    Sweeps the strict upper triangle row by row, annihilating each entry
    above the threshold ``rel_tol * ||A||_F`` with one plane rotation.
    Returns eigenvalues in descending order, plus the matching column
    eigenvectors when ``vectors`` is set.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    V = np.eye(n) if vectors else None
    thresh = rel_tol * np.linalg.norm(A)
    iu = np.triu_indices(n, 1)

    for _ in range(max_sweeps):
        if n < 2 or np.max(np.abs(A[iu])) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= thresh:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ap, aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
                if V is not None:
                    vp, vq = V[:, p].copy(), V[:, q].copy()
                    V[:, p] = c * vp - s * vq
                    V[:, q] = s * vp + c * vq
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    if vectors:
        return w[order], V[:, order]
    return w[order]


def full_spectrum(Q, dense_limit: int = 512) -> np.ndarray:
    """All eigenvalues of Q, descending."""
    Q = np.asarray(Q)
    if Q.shape[0] > dense_limit:
        raise TooLarge(f"order {Q.shape[0]} exceeds dense limit {dense_limit}")
    return jacobi_eigh(Q)


def deflated_second_eigenvalue(Q, spectral: SpectralResult, tol: float = 1e-10,
                               max_iter: int = 100_000) -> float:
    """Power iteration on Q - rho x x^T, kept orthogonal to x."""
    Q = np.asarray(Q, dtype=float)
    x = spectral.x
    M = Q - spectral.rho * np.outer(x, x)
    v = np.random.default_rng(0).standard_normal(Q.shape[0])
    v -= (x @ v) * x
    v /= np.linalg.norm(v)
    for _ in range(max_iter):
        y = M @ v
        y -= (x @ y) * x
        lam = float(v @ y)
        if np.max(np.abs(y - lam * v)) <= tol:
            return lam
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        v = y / norm
    raise NoConvergence(f"deflated power iteration did not converge in {max_iter} steps")


def second_eigenvalue(Q, spectral: SpectralResult, cfg: SolverConfig = SolverConfig()) -> float:
    Q = np.asarray(Q)
    if Q.shape[0] < 2:
        raise DimensionMismatch("a 1x1 matrix has no second eigenvalue")
    if Q.shape[0] <= cfg.dense_limit:
        return float(full_spectrum(Q, cfg.dense_limit)[1])
    return deflated_second_eigenvalue(Q, spectral, cfg.tol, cfg.max_iter)


def spectral_analysis(H: Hypergraph, cfg: SolverConfig = SolverConfig()) -> SpectralResult:
    """Principal eigenpair of Q(H) with the second eigenvalue attached."""
    Q = signless_laplacian(H)
    res = principal_eigenpair(Q, cfg.tol, cfg.max_iter)
    if H.n >= 2:
        res = res.with_lambda2(second_eigenvalue(Q, res, cfg))
    return res


@dataclass(frozen=True)
class EdgeSums:
    values: np.ndarray
    sum_squares: float


def edge_sums(H: Hypergraph, x) -> EdgeSums:
    """Per-edge sums x(e) and sum_e x(e)^2, checked against x^T Q x."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise DimensionMismatch(f"vector of length {x.shape} for {H.n} vertices")
    B = incidence_matrix(H)
    values = B.T @ x
    total = float(values @ values)
    Q = signless_laplacian(H)
    quad = float(x @ Q @ x)
    # floor for cancellation when x has mixed signs
    scale = float(np.abs(x) @ Q @ np.abs(x))
    if not math.isclose(total, quad, rel_tol=1e-9, abs_tol=1e-12 * scale):
        raise InternalIdentityViolation(f"sum of squared edge sums {total} != x^T Q x {quad}")
    return EdgeSums(values, total)
