"""Exact characteristic polynomials and spectrum certificates.

Every characteristic polynomial uses the convention P_M(x) = det(M - xI), so
an n x n matrix gives leading coefficient (-1)^n.  The Seidel matrix
S = iK (K = A - A^T) is never formed; its polynomial is read off the integer
polynomial of K.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ImaginaryResidue
from .polynomial import IntPolynomial, RatPolynomial
from .tournament import (
    SkewHadamard,
    Tournament,
    common_out_neighbours,
    is_doubly_regular,
    is_regular,
    score_vector,
)


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


_INT64_SAFE = float(1 << 60)


def _faddeev_step_int64(a: np.ndarray, nk: np.ndarray, c_prev: int) -> np.ndarray:
    nk = nk.copy()
    nk[np.diag_indices_from(nk)] += c_prev
    return a @ nk


def char_poly_int(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(M - xI) by the Faddeev-LeVerrier recurrence.

    With det(xI - M) = sum c_k x^k, c_n = 1:
        N_1 = M,  c_{n-1} = -tr(N_1)
        N_k = M (N_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(N_k) / k
    The division by k is exact for integer matrices; a remainder means a bug.

    Steps run in int64 while an a-priori entry bound (max row sum of |M|
    times the previous bound) stays below 2^60, then continue over Python
    ints, so the result is exact either way.
    """
    n = len(m)
    mat = [[int(v) for v in row] for row in m]
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    if n == 0:
        return IntPolynomial([1])
    c = [0] * (n + 1)
    c[n] = 1
    row_norm = max(sum(abs(v) for v in row) for row in mat)
    bound = float(max(abs(v) for row in mat for v in row))
    fast = n * bound < _INT64_SAFE
    if fast:
        a64 = np.array(mat, dtype=np.int64)
        nk = a64
    else:
        nk = [row[:] for row in mat]
    for k in range(1, n + 1):
        if k > 1:
            if fast:
                bound = row_norm * (bound + abs(c[n - k + 1]))
                if n * bound >= _INT64_SAFE:
                    fast = False
                    nk = [[int(v) for v in row] for row in nk.tolist()]
            if fast:
                nk = _faddeev_step_int64(a64, nk, c[n - k + 1])
            else:
                for i in range(n):
                    nk[i][i] += c[n - k + 1]
                nk = _matmul(mat, nk)
        if fast:
            tr = int(np.trace(nk))
        else:
            tr = sum(nk[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError(f"Faddeev-LeVerrier remainder {r} at step {k}")
        c[n - k] = q
    sign = -1 if n % 2 else 1
    return IntPolynomial(sign * ck for ck in c)


def skew_char_poly(t: Tournament) -> IntPolynomial:
    return char_poly_int(t.skew_part())


def seidel_from_skew_poly(pk: IntPolynomial, n: int) -> IntPolynomial:
    """P_S(x) = i^n p_K(-ix), coefficient j picks up i^(n-j)."""
    out = []
    for j in range(n + 1):
        cj = pk.coeff(j)
        if (n - j) % 2:
            if cj != 0:
                raise ImaginaryResidue(f"coefficient {j} of p_K is {cj}, expected 0")
            out.append(0)
        else:
            out.append(cj if ((n - j) // 2) % 2 == 0 else -cj)
    return IntPolynomial(out)


def seidel_char_poly(t: Tournament) -> IntPolynomial:
    return seidel_from_skew_poly(skew_char_poly(t), t.n)


def adjacency_char_poly(t: Tournament) -> IntPolynomial:
    return char_poly_int(t.rows)


def skew_times_ones(t: Tournament) -> list[int]:
    """K.1, i.e. out-degree minus in-degree per vertex."""
    return [2 * s - (t.n - 1) for s in score_vector(t)]


def skew_squared_times_ones(t: Tournament) -> list[int]:
    k = t.skew_part()
    k1 = [sum(row) for row in k]
    return [sum(a * b for a, b in zip(row, k1)) for row in k]


def trace_identity_check(t: Tournament) -> bool:
    """tr(K K^T) == n^2 - n."""
    k = t.skew_part()
    return sum(v * v for row in k for v in row) == t.n * t.n - t.n


# -- target polynomials -------------------------------------------------------

_X = IntPolynomial.x()


@lru_cache(maxsize=None)
def drt_seidel_target(n: int) -> IntPolynomial:
    """-x (x^2 - n)^((n-1)/2) for odd n."""
    return -_X * (_X * _X - n) ** ((n - 1) // 2)


@lru_cache(maxsize=None)
def thm1_seidel_target(n: int) -> IntPolynomial:
    """(x^2 - 1)(x^2 - n)^((n-3)/2) for odd n >= 3 (size n-1 tournament)."""
    return (_X * _X - 1) * (_X * _X - n) ** ((n - 3) // 2)


@lru_cache(maxsize=None)
def drt_adjacency_target(n: int) -> RatPolynomial:
    """-(x - (n-1)/2)(x^2 + x + (n+1)/4)^((n-1)/2)."""
    x = RatPolynomial.x()
    return -(x - Fraction(n - 1, 2)) * (x * x + x + Fraction(n + 1, 4)) ** ((n - 1) // 2)


@lru_cache(maxsize=None)
def thm3_adjacency_target(n: int) -> RatPolynomial:
    """(-1)^(n-1) (x^2 + x + (n+1)/4)^((n-3)/2) (x^2 - (n-3)/2 x - (n-3)/4)."""
    x = RatPolynomial.x()
    sign = -1 if (n - 1) % 2 else 1
    pair = (x * x + x + Fraction(n + 1, 4)) ** ((n - 3) // 2)
    extra = x * x - Fraction(n - 3, 2) * x - Fraction(n - 3, 4)
    return sign * pair * extra


# -- certificates -------------------------------------------------------------


class Condition(str, Enum):
    DRT_SEIDEL = "DRT_SEIDEL"
    THM1_SEIDEL = "THM1_SEIDEL"
    THM3_ADJ = "THM3_ADJ"
    DRT_COMBINATORIAL = "DRT_COMBINATORIAL"
    HADAMARD = "HADAMARD"


@dataclass(frozen=True)
class CertificateReport:
    condition_name: Condition
    passed: bool
    computed_poly: IntPolynomial | RatPolynomial | None = None
    target_poly: IntPolynomial | RatPolynomial | None = None
    auxiliary: dict[str, list[int]] = field(default_factory=dict)
    failure_reason: str = ""
    notes: str = ""

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "condition_name": self.condition_name.value,
            "pass": self.passed,
            "computed_poly": None if self.computed_poly is None else self.computed_poly.to_json(),
            "target_poly": None if self.target_poly is None else self.target_poly.to_json(),
            "auxiliary": {k: [str(v) for v in vec] for k, vec in self.auxiliary.items()},
            "failure_reason": self.failure_reason,
            "notes": self.notes,
        }


def certify_drt_spectrum(t: Tournament) -> CertificateReport:
    """P_S = -x(x^2-n)^((n-1)/2) and K.1 = 0.

    K.1 = 0 puts the all-ones vector inside the 0-eigenspace of S, which is
    exactly the main-angle pattern (0, 1, 0).
    """
    n = t.n
    cond = Condition.DRT_SEIDEL
    notes = "K.1 = 0 places 1 in the kernel of S, forcing main angles (0, 1, 0)"
    if n % 2 == 0:
        return CertificateReport(cond, False, failure_reason=f"size {n} is not odd", notes=notes)
    computed = seidel_char_poly(t)
    target = drt_seidel_target(n)
    k1 = skew_times_ones(t)
    reasons = []
    if computed != target:
        reasons.append("Seidel characteristic polynomial differs from target")
    if any(k1):
        reasons.append("K.1 is not the zero vector")
    return CertificateReport(
        cond, not reasons, computed, target, {"K.1": k1}, "; ".join(reasons), notes
    )


def certify_thm1_spectrum(t: Tournament) -> CertificateReport:
    """P_S = (x^2-1)(x^2-n)^((n-3)/2) and K^2.1 = -1, with n = size + 1.

    Write 1 = a + u + v + b over the sqrt(n), 1, -1, -sqrt(n) eigenspaces.
    S^2.1 = 1 gives (n-1)(a+b) = 0, so a = b = 0 and |u|^2 + |v|^2 = m.
    1^T S 1 = 0 by skew-symmetry gives |u|^2 = |v|^2, hence both main
    angles at +-1 equal 1/sqrt(2).
    """
    m = t.n
    n = m + 1
    cond = Condition.THM1_SEIDEL
    notes = "K^2.1 = -1 kills the +-sqrt(n) components of 1; skew-symmetry splits the rest evenly"
    if m % 2 == 1:
        return CertificateReport(cond, False, failure_reason=f"size {m} is not even", notes=notes)
    if n < 3:
        return CertificateReport(cond, False, failure_reason=f"size {m} is too small", notes=notes)
    computed = seidel_char_poly(t)
    target = thm1_seidel_target(n)
    k2 = skew_squared_times_ones(t)
    reasons = []
    if computed != target:
        reasons.append("Seidel characteristic polynomial differs from target")
    if any(v != -1 for v in k2):
        reasons.append("K^2.1 is not the all -1 vector")
    return CertificateReport(
        cond, not reasons, computed, target, {"K^2.1": k2}, "; ".join(reasons), notes
    )


def certify_thm3_adjacency(t: Tournament) -> CertificateReport:
    m = t.n
    n = m + 1
    cond = Condition.THM3_ADJ
    if m % 2 == 1:
        return CertificateReport(cond, False, failure_reason=f"size {m} is not even")
    if n < 3:
        return CertificateReport(cond, False, failure_reason=f"size {m} is too small")
    computed = adjacency_char_poly(t)
    target = thm3_adjacency_target(n)
    ok = computed == target
    reason = "" if ok else "adjacency characteristic polynomial differs from target"
    return CertificateReport(cond, ok, computed, target, {}, reason)


def certify_drt_combinatorial(t: Tournament) -> CertificateReport:
    scores = list(score_vector(t))
    ok = is_doubly_regular(t)
    reason = ""
    if not ok:
        reason = "not regular" if not is_regular(t) else "common out-neighbour counts vary"
    counts = sorted(
        {common_out_neighbours(t, u, v) for u in range(t.n) for v in range(u + 1, t.n)}
    )
    return CertificateReport(
        Condition.DRT_COMBINATORIAL,
        ok,
        auxiliary={"scores": scores, "common_out_neighbour_counts": counts},
        failure_reason=reason,
    )


def certify_hadamard(h: SkewHadamard) -> CertificateReport:
    """Exact residuals of H H^T - nI and H + H^T - 2I, flattened row-major."""
    n = h.n
    rows = [list(r) for r in h.rows]
    gram = _matmul(rows, [list(c) for c in zip(*rows)])
    gram_res = [gram[x][y] - (n if x == y else 0) for x in range(n) for y in range(n)]
    skew_res = [
        rows[x][y] + rows[y][x] - (2 if x == y else 0) for x in range(n) for y in range(n)
    ]
    reasons = []
    if any(gram_res):
        reasons.append("H H^T != nI")
    if any(skew_res):
        reasons.append("H + H^T != 2I")
    return CertificateReport(
        Condition.HADAMARD,
        not reasons,
        auxiliary={"HH^T-nI": gram_res, "H+H^T-2I": skew_res},
        failure_reason="; ".join(reasons),
    )
