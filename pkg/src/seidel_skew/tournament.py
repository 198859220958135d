"""Tournaments, skew Hadamard matrices and the conversions between them.

A tournament is stored as its 0/1 adjacency matrix plus one out-neighbour
bitmask per vertex (bit ``y`` of ``masks[x]`` is set iff ``x -> y``).  All
objects here are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import (
    BadModulus,
    IndexOutOfRange,
    NormalizationFailed,
    NotAlmostRegular,
    NotATournament,
    NotDoublyRegular,
    NotSkewHadamard,
)


class Tournament:
    """Complete oriented graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_masks")

    def __init__(self, rows: Sequence[Sequence[int]]):
        n = len(rows)
        grid = tuple(tuple(int(b) for b in row) for row in rows)
        for x, row in enumerate(grid):
            if len(row) != n:
                raise NotATournament(f"row {x} has length {len(row)}, expected {n}")
            if row[x] != 0:
                raise NotATournament(f"nonzero diagonal entry at vertex {x}")
            for y, b in enumerate(row):
                if b not in (0, 1):
                    raise NotATournament(f"entry ({x},{y}) is {b}, not 0/1")
        for x, y in combinations(range(n), 2):
            if grid[x][y] + grid[y][x] != 1:
                raise NotATournament(
                    f"pair ({x},{y}) has A_xy + A_yx = {grid[x][y] + grid[y][x]}"
                )
        self._n = n
        self._rows = grid
        self._masks = tuple(
            sum(1 << y for y, b in enumerate(row) if b) for row in grid
        )

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Tournament":
        n = len(masks)
        return cls([[(m >> y) & 1 for y in range(n)] for m in masks])

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def beats(self, x: int, y: int) -> bool:
        return bool(self._rows[x][y])

    def skew_part(self) -> list[list[int]]:
        """K = A - A^T as a fresh integer matrix."""
        r = self._rows
        return [[r[x][y] - r[y][x] for y in range(self._n)] for x in range(self._n)]

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "/".join("".join(map(str, r)) for r in self._rows)
        return f"Tournament({self._n}, {body or '-'})"


@dataclass(frozen=True)
class SkewHadamard:
    """Square +-1 matrix; validity is checked by :func:`is_skew_hadamard`."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("Hadamard matrix must be square")
            if any(v not in (1, -1) for v in r):
                raise ValueError("Hadamard entries must be +1 or -1")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)


def from_adjacency(n: int, bits: Sequence[Sequence[int]]) -> Tournament:
    if len(bits) != n:
        raise NotATournament(f"expected {n} rows, got {len(bits)}")
    return Tournament(bits)


def transitive_tournament(n: int) -> Tournament:
    """Vertex x beats every y > x; scores (n-1, ..., 1, 0)."""
    return Tournament([[1 if y > x else 0 for y in range(n)] for x in range(n)])


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def quadratic_residues(q: int) -> frozenset[int]:
    return frozenset((a * a) % q for a in range(1, q))


def paley_tournament(q: int) -> Tournament:
    """x -> y iff y - x is a nonzero square mod q (q prime, q = 3 mod 4)."""
    if not _is_prime(q) or q % 4 != 3:
        raise BadModulus(f"{q} is not a prime congruent to 3 mod 4")
    res = quadratic_residues(q)
    return Tournament(
        [[1 if (y - x) % q in res else 0 for y in range(q)] for x in range(q)]
    )


def score_vector(t: Tournament) -> tuple[int, ...]:
    return tuple(sum(r) for r in t.rows)


def is_regular(t: Tournament) -> bool:
    n = t.n
    if n % 2 == 0:
        return False
    half = (n - 1) // 2
    return all(s == half for s in score_vector(t))


def is_almost_regular(t: Tournament) -> bool:
    n = t.n
    if n % 2 == 1 or n == 0:
        return False
    scores = score_vector(t)
    high = sum(1 for s in scores if s == n // 2)
    low = sum(1 for s in scores if s == (n - 2) // 2)
    return high == n // 2 and low == n // 2


def common_out_neighbours(t: Tournament, u: int, v: int) -> int:
    return bin(t.masks[u] & t.masks[v]).count("1")


def is_doubly_regular(t: Tournament) -> bool:
    """Regular, with every pair of vertices sharing the same number of
    common out-neighbours (necessarily (n-3)/4)."""
    if not is_regular(t):
        return False
    counts = {common_out_neighbours(t, u, v) for u, v in combinations(range(t.n), 2)}
    return len(counts) <= 1


def delete_vertex(t: Tournament, v: int) -> Tournament:
    if not 0 <= v < t.n:
        raise IndexOutOfRange(f"vertex {v} out of range for size {t.n}")
    keep = [x for x in range(t.n) if x != v]
    return Tournament([[t.rows[x][y] for y in keep] for x in keep])


def deletion_border(t: Tournament, v: int) -> list[int]:
    """Out-neighbour indicator of ``v`` restricted to the other vertices,
    in the vertex order used by :func:`delete_vertex`."""
    if not 0 <= v < t.n:
        raise IndexOutOfRange(f"vertex {v} out of range for size {t.n}")
    return [t.rows[v][y] for y in range(t.n) if y != v]


def extend_to_regular(t: Tournament) -> Tournament:
    """Append a vertex that beats the high-score vertices and loses to the rest."""
    if not is_almost_regular(t):
        raise NotAlmostRegular("tournament is not almost regular")
    m = t.n
    scores = score_vector(t)
    new_beats = [1 if s == m // 2 else 0 for s in scores]
    rows = [list(r) + [1 - new_beats[x]] for x, r in enumerate(t.rows)]
    rows.append(new_beats + [0])
    return Tournament(rows)


def _border(t: Tournament) -> list[list[int]]:
    """Adjacency of the size n+1 tournament in which a new vertex 0 loses
    to everything and ``t`` occupies the lower-right block."""
    n = t.n
    rows = [[0] * (n + 1)]
    for x in range(n):
        rows.append([1] + list(t.rows[x]))
    return rows


def drt_to_skew_hadamard(t: Tournament) -> SkewHadamard:
    if not is_doubly_regular(t):
        raise NotDoublyRegular("input tournament is not doubly regular")
    a = _border(t)
    return SkewHadamard(tuple(tuple(1 - 2 * b for b in row) for row in a))


def is_skew_hadamard(h) -> bool:
    """Exact integer check of H H^T = nI and H + H^T = 2I."""
    rows = h.rows if isinstance(h, SkewHadamard) else [list(r) for r in h]
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    if any(v not in (1, -1) for r in rows for v in r):
        return False
    for x in range(n):
        for y in range(x, n):
            if rows[x][y] + rows[y][x] != (2 if x == y else 0):
                return False
    for x in range(n):
        for y in range(x, n):
            dot = sum(a * b for a, b in zip(rows[x], rows[y]))
            if dot != (n if x == y else 0):
                return False
    return True


def normalize_skew_hadamard(h: SkewHadamard) -> SkewHadamard:
    """Negate row j and column j for every j with H[0][j] = -1.

    The simultaneous row/column negation keeps both defining identities.
    """
    rows = [list(r) for r in h.rows]
    n = len(rows)
    if n == 0:
        return h
    flips = [j for j in range(n) if rows[0][j] == -1]
    for j in flips:
        for y in range(n):
            rows[j][y] = -rows[j][y]
        for x in range(n):
            rows[x][j] = -rows[x][j]
    if any(v != 1 for v in rows[0]):
        raise NormalizationFailed("first row is not all ones after normalization")
    return SkewHadamard(tuple(tuple(r) for r in rows))


def skew_hadamard_to_drt(h: SkewHadamard) -> Tournament:
    if not is_skew_hadamard(h):
        raise NotSkewHadamard("matrix is not a skew Hadamard matrix")
    if h.n == 0:
        raise NotSkewHadamard("empty matrix")
    norm = normalize_skew_hadamard(h)
    a = [[(1 - v) // 2 for v in row] for row in norm.rows]
    return Tournament([row[1:] for row in a[1:]])
