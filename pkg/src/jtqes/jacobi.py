"""Dense symmetric eigensolver: cyclic Jacobi rotations.

Plain, robust, and adequate for the moderate matrix sizes this package
diagonalizes directly.  The Fock-space oracle uses LAPACK for its inner
convergence loop (the sector matrices are banded and large); this solver
is the self-contained reference implementation and is cross-checked against
it in the tests.
"""

from __future__ import annotations

import numpy as np


class SymmetricMatrix:
    """Dense real symmetric matrix; symmetry is enforced at construction."""

    def __init__(self, a):
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("expected a square matrix")
        if not np.all(np.isfinite(a)):
            raise ValueError("non-finite entries")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        self.a = a

    @property
    def dimension(self) -> int:
        return self.a.shape[0]

    def __array__(self, dtype=None, copy=None):
        out = self.a if dtype is None else self.a.astype(dtype)
        return out.copy() if copy else out


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0)))


def symmetric_eigen(m, tol: float = 1e-12, max_sweeps: int = 64):
    """Eigendecomposition by cyclic Jacobi sweeps.

    Returns (eigenvalues ascending, eigenvector matrix with orthonormal
    columns).  Iterates until the off-diagonal Frobenius norm drops below
    tol times the matrix norm.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m, dtype=float, copy=True)
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entries")
    n = a.shape[0]
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return np.zeros(n), v
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]
