"""Cyclic Jacobi eigensolver for real symmetric matrices.

Works on a single ``(N, N)`` matrix or a stack ``(B, N, N)``; the rotation
sequence is the same for every matrix in the stack, so one sweep is a fixed
number of vectorised numpy operations regardless of batch size.
"""
from __future__ import annotations

import numpy as np

OFF_TOL = 1e-13
MAX_SWEEPS = 30


def off_norm(a: np.ndarray) -> np.ndarray:
    """Frobenius norm of the off-diagonal part (per matrix in a stack)."""
    off = a * (1.0 - np.eye(a.shape[-1]))
    return np.sqrt(np.sum(off * off, axis=(-2, -1)))


def jacobi_eigh(a, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues (descending) and eigenvectors (columns) of symmetric ``a``.

    Sweeps stop once every matrix has off-diagonal Frobenius norm at most
    ``tol * ||a||_F``.  Raises ``ArithmeticError`` if that does not happen
    within ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float, copy=True)
    single = a.ndim == 2
    if single:
        a = a[None]
    if a.shape[-1] != a.shape[-2]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, np.swapaxes(a, -1, -2), rtol=0.0, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    batch, size, _ = a.shape
    v = np.broadcast_to(np.eye(size), a.shape).copy()
    thresh = tol * np.sqrt(np.sum(a * a, axis=(-2, -1)))
    # entries this small cannot push the off-norm above thresh
    skip = thresh / max(size, 1)

    for _ in range(max_sweeps + 1):
        if np.all(off_norm(a) <= thresh):
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[:, p, q]
                live = np.abs(apq) > skip
                if not live.any():
                    continue
                app = a[:, p, p]
                aqq = a[:, q, q]
                safe = np.where(live, apq, 1.0)
                with np.errstate(over="ignore"):
                    theta = (aqq - app) / (2.0 * safe)
                big = np.abs(theta) > 1e150
                root = np.sqrt(np.where(big, 1.0, theta * theta) + 1.0)
                t = np.where(
                    big,
                    0.5 / np.where(big, theta, 1.0),
                    np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + root),
                )
                t = np.where(live, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                c2 = c[:, None]
                s2 = s[:, None]

                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c2 * col_p - s2 * col_q
                a[:, :, q] = s2 * col_p + c2 * col_q
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c2 * row_p - s2 * row_q
                a[:, q, :] = s2 * row_p + c2 * row_q
                a[:, p, q] = np.where(live, 0.0, a[:, p, q])
                a[:, q, p] = a[:, p, q]

                vp = v[:, :, p].copy()
                vq = v[:, :, q].copy()
                v[:, :, p] = c2 * vp - s2 * vq
                v[:, :, q] = s2 * vp + c2 * vq
    else:
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diagonal(a, axis1=-2, axis2=-1).copy()
    order = np.argsort(-w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    if single:
        return w[0], v[0]
    return w, v
