"""Floating-point Seidel spectra, main angles and the rank-one update identities.

Hermitian matrices M = X + iY are diagonalised through the real symmetric
embedding [[X, -Y], [Y, X]]; an eigenvector u + iw of M corresponds to the
pair (u; w) and (-w; u) of the embedding, so every eigenvalue of M shows up
twice there.  For a Seidel matrix X = 0 and Y = K.

Main angles come from projecting the all-ones vector onto eigenspace bases,
never from the exact polynomials, so this module stays an independent check
on :mod:`seidel_skew.exact`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, GroupingAmbiguous, PoleAtSample
from .exact import adjacency_char_poly, seidel_char_poly
from .jacobi import jacobi_eigh
from .tournament import Tournament

DEFAULT_GROUPING_TOL = 1e-7
POLE_TOL = 1e-12
_BATCH_CHUNK = 1024


@dataclass(frozen=True)
class SpectralData:
    distinct_eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    main_angles: tuple[float, ...]
    grouping_tol: float
    eigenvectors: tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    def to_json(self) -> dict:
        return {
            "distinct_eigenvalues": list(self.distinct_eigenvalues),
            "multiplicities": list(self.multiplicities),
            "main_angles": list(self.main_angles),
            "grouping_tol": self.grouping_tol,
        }


def seidel_matrix(t: Tournament) -> np.ndarray:
    return 1j * np.array(t.skew_part(), dtype=float).reshape(t.n, t.n)


def _embed(m: np.ndarray) -> np.ndarray:
    x, y = m.real, m.imag
    return np.block([[x, -y], [y, x]])


def _group(values: np.ndarray, tol: float) -> list[list[int]]:
    """Split descending ``values`` into runs whose consecutive gaps are <= tol."""
    groups = [[0]] if len(values) else []
    for k in range(1, len(values)):
        gap = values[k - 1] - values[k]
        if tol / 2 <= gap <= 2 * tol:
            raise GroupingAmbiguous(
                f"eigenvalue gap {gap:.3g} is too close to grouping_tol {tol:.3g}"
            )
        if gap <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def _from_embedding(w: np.ndarray, v: np.ndarray, n: int, tol: float) -> SpectralData:
    eigenvalues, mults, bases = [], [], []
    for idx in _group(w, tol):
        if len(idx) % 2:
            raise GroupingAmbiguous(
                f"embedding eigenvalue near {w[idx[0]]:.6g} has odd multiplicity {len(idx)}"
            )
        m = len(idx) // 2
        block = v[:, idx]
        z = block[:n] + 1j * block[n:]
        u, _, _ = np.linalg.svd(z, full_matrices=False)
        basis = u[:, :m].copy()
        basis.setflags(write=False)
        eigenvalues.append(float(np.mean(w[idx])))
        mults.append(m)
        bases.append(basis)
    sd = SpectralData(tuple(eigenvalues), tuple(mults), (), tol, tuple(bases))
    return SpectralData(
        sd.distinct_eigenvalues, sd.multiplicities, tuple(main_angles(sd, n)), tol, sd.eigenvectors
    )


def _check_tol(tol: float) -> None:
    if not 0 < tol <= 1e-3:
        raise ValueError(f"grouping_tol must lie in (0, 1e-3], got {tol}")


def hermitian_eigen(m, grouping_tol: float = DEFAULT_GROUPING_TOL) -> SpectralData:
    """Spectral data of any Hermitian matrix via the real embedding."""
    _check_tol(grouping_tol)
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionMismatch("matrix must be square")
    if not np.allclose(m, m.conj().T, atol=1e-12, rtol=0):
        raise ValueError("matrix is not Hermitian")
    if n == 0:
        return SpectralData((), (), (), grouping_tol, ())
    w, v = jacobi_eigh(_embed(m))
    return _from_embedding(w, v, n, grouping_tol)


def seidel_eigen(t: Tournament, grouping_tol: float = DEFAULT_GROUPING_TOL) -> SpectralData:
    return hermitian_eigen(seidel_matrix(t), grouping_tol)


def seidel_eigen_batch(
    tournaments: Sequence[Tournament], grouping_tol: float = DEFAULT_GROUPING_TOL
) -> list[SpectralData]:
    """:func:`seidel_eigen` for many same-size tournaments, vectorised."""
    _check_tol(grouping_tol)
    if not tournaments:
        return []
    n = tournaments[0].n
    if any(t.n != n for t in tournaments):
        raise DimensionMismatch("batch tournaments must share one size")
    if n == 0:
        return [SpectralData((), (), (), grouping_tol, ()) for _ in tournaments]
    out = []
    for start in range(0, len(tournaments), _BATCH_CHUNK):
        chunk = tournaments[start : start + _BATCH_CHUNK]
        k = np.array([t.skew_part() for t in chunk], dtype=float)
        emb = np.zeros((len(chunk), 2 * n, 2 * n))
        emb[:, :n, n:] = -k
        emb[:, n:, :n] = k
        w, v = jacobi_eigh(emb)
        out.extend(_from_embedding(w[i], v[i], n, grouping_tol) for i in range(len(chunk)))
    return out


def main_angles(sd: SpectralData, n: int) -> list[float]:
    """beta_i = ||P_i 1|| / sqrt(n) from the orthonormal eigenspace bases."""
    if n == 0:
        return []
    ones = np.ones(n)
    out = []
    for basis in sd.eigenvectors:
        if basis.shape[0] != n:
            raise DimensionMismatch(f"eigenvectors have length {basis.shape[0]}, expected {n}")
        coords = basis.conj().T @ ones
        out.append(min(1.0, math.sqrt(float(np.sum(np.abs(coords) ** 2)) / n)))
    return out


def angle_weighted_square_sum(sd: SpectralData) -> float:
    return sum(th * th * b * b for th, b in zip(sd.distinct_eigenvalues, sd.main_angles))


def almost_regular_spectral_test(
    t: Tournament, tol: float = 1e-8, sd: SpectralData | None = None
) -> bool:
    """|sum theta_i^2 beta_i^2 - 1| <= tol; odd sizes are never almost regular."""
    if t.n % 2 or t.n == 0:
        return False
    if sd is None:
        sd = seidel_eigen(t)
    return abs(angle_weighted_square_sum(sd) - 1.0) <= tol


def _check_poles(eigenvalues: Iterable[float], x: complex) -> None:
    for tau in eigenvalues:
        if abs(tau - x) <= POLE_TOL:
            raise PoleAtSample(f"sample {x} coincides with eigenvalue {tau}")


def rank_one_update_eval(sd: SpectralData, c: complex, x: complex) -> complex:
    """P_M(x) (1 + c sum_i n beta_i^2 / (tau_i - x)), i.e. det(M + cJ - xI)."""
    _check_poles(sd.distinct_eigenvalues, x)
    n = sd.size
    pm = complex(1.0)
    for tau, m in zip(sd.distinct_eigenvalues, sd.multiplicities):
        pm *= (tau - x) ** m
    resolvent = sum(
        n * b * b / (tau - x) for tau, b in zip(sd.distinct_eigenvalues, sd.main_angles)
    )
    return pm * (1 + c * resolvent)


def direct_update_det(m, c: complex, x: complex) -> complex:
    """det(M + cJ - xI) by LU; the independent side of the rank-one identity."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    return complex(np.linalg.det(m + c * np.ones((n, n)) - x * np.eye(n)))


def corollary1_sides(t: Tournament, x: complex, sd: SpectralData | None = None):
    """(P_A(x), (-i/2)^n P_S(z) (1 + i sum n beta^2 / (theta - z))) with z = i(2x+1)."""
    if sd is None:
        sd = seidel_eigen(t)
    n = t.n
    z = 1j * (2 * x + 1)
    _check_poles(sd.distinct_eigenvalues, z)
    left = complex(adjacency_char_poly(t)(x))
    ps = complex(seidel_char_poly(t)(z))
    corr = 1 + 1j * sum(
        n * b * b / (th - z) for th, b in zip(sd.distinct_eigenvalues, sd.main_angles)
    )
    right = (-0.5j) ** n * ps * corr
    return left, right


def relative_residual(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def corollary1_check(
    t: Tournament, samples: Iterable[complex], sd: SpectralData | None = None
) -> float:
    if sd is None:
        sd = seidel_eigen(t)
    worst = 0.0
    for x in samples:
        left, right = corollary1_sides(t, complex(x), sd)
        worst = max(worst, relative_residual(left, right))
    return worst


def thm1_eigvec_check(
    t: Tournament, v: Sequence[int], eigenvalue: int = 1, conjugate: bool = False
) -> float:
    """max |(S w - eigenvalue * w)_x| for w = 1 + (i-1)v (or its conjugate).

    Runs over the Gaussian integers, so a true eigenvector gives exactly 0.0.
    """
    n = t.n
    if len(v) != n:
        raise DimensionMismatch(f"border vector has length {len(v)}, expected {n}")
    re = [1 - b for b in v]
    im = [-b for b in v] if conjugate else [b for b in v]
    k = t.skew_part()
    worst = 0.0
    for x in range(n):
        # S w = iK(re + i im) = -K im + i K re
        s_re = -sum(kx * b for kx, b in zip(k[x], im))
        s_im = sum(kx * b for kx, b in zip(k[x], re))
        d_re = s_re - eigenvalue * re[x]
        d_im = s_im - eigenvalue * im[x]
        worst = max(worst, math.hypot(d_re, d_im))
    return worst


def polynomial_root_residual(t: Tournament, sd: SpectralData) -> float:
    """max |P_S(theta)| / max|coeff| * (1 + |theta|)^-n over numeric eigenvalues."""
    ps = seidel_char_poly(t)
    scale = max(abs(c) for c in ps.coeffs)
    worst = 0.0
    for th in sd.distinct_eigenvalues:
        worst = max(worst, abs(ps(th)) / (scale * (1 + abs(th)) ** t.n))
    return worst

