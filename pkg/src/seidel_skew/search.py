"""Exhaustive and seeded-random enumeration of labelled tournaments.

A tournament of size n is coded by an integer whose bit k orients the k-th
pair (i, j), i < j, in lexicographic order: bit set means i -> j.

Work is split into contiguous code ranges (chunks).  Chunks are processed
independently, optionally in worker processes, and merged in chunk order,
so the result never depends on the worker count.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .errors import CounterexampleFound, TooLarge
from .exact import certify_thm1_spectrum, certify_thm3_adjacency, trace_identity_check
from .prng import random_bits
from .tournament import (
    Tournament,
    delete_vertex,
    extend_to_regular,
    is_almost_regular,
    is_doubly_regular,
    is_regular,
)

MAX_CODE_BITS = 62
CHUNK_SIZE = 1 << 16
EXPERIMENT_MAX_BITS = 32
WORKERS_ENV = "SEIDEL_SKEW_WORKERS"

PREDICATES = ("regular", "almost_regular", "doubly_regular", "thm1_pass", "thm3_pass")


@dataclass(frozen=True)
class TournamentCode:
    n: int
    code: int

    def __post_init__(self):
        if not 0 <= self.code < (1 << num_pairs(self.n)):
            raise ValueError(f"code {self.code} out of range for size {self.n}")


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def encode(t: Tournament) -> TournamentCode:
    code = 0
    for k, (i, j) in enumerate(pair_list(t.n)):
        if t.rows[i][j]:
            code |= 1 << k
    return TournamentCode(t.n, code)


def decode(tc: TournamentCode) -> Tournament:
    n = tc.n
    masks = [0] * n
    for k, (i, j) in enumerate(pair_list(n)):
        if (tc.code >> k) & 1:
            masks[i] |= 1 << j
        else:
            masks[j] |= 1 << i
    return Tournament.from_masks(masks)


def _guard(n: int, limit: int = MAX_CODE_BITS) -> int:
    bits = num_pairs(n)
    if n < 0:
        raise ValueError("size must be non-negative")
    if bits > limit:
        raise TooLarge(f"size {n} needs 2^{bits} codes, limit is 2^{limit}")
    return bits


def enumerate_tournaments(n: int) -> Iterator[TournamentCode]:
    bits = _guard(n)
    for code in range(1 << bits):
        yield TournamentCode(n, code)


def random_tournament(n: int, seed: int) -> Tournament:
    """Pair k (lexicographic) is oriented i -> j iff SplitMix64(seed, k) has its top bit set."""
    if n < 1:
        raise ValueError("size must be at least 1")
    masks = [0] * n
    for k, (i, j) in enumerate(pair_list(n)):
        if random_bits(seed, k, 1):
            masks[i] |= 1 << j
        else:
            masks[j] |= 1 << i
    return Tournament.from_masks(masks)


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    return max(1, workers)


def _run_chunks(fn: Callable, jobs: list[tuple], workers: int) -> list:
    if workers == 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def _chunks(total: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]


def chunk_scores(n: int, codes: np.ndarray) -> np.ndarray:
    """Score vectors of coded tournaments, shape (len(codes), n)."""
    codes = codes.astype(np.uint64)
    scores = np.zeros((len(codes), n), dtype=np.int64)
    for k, (i, j) in enumerate(pair_list(n)):
        bit = ((codes >> np.uint64(k)) & np.uint64(1)).astype(np.int64)
        scores[:, i] += bit
        scores[:, j] += 1 - bit
    return scores


def _score_masks(n: int, scores: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if n % 2:
        regular = np.all(scores == (n - 1) // 2, axis=1)
        return regular, np.zeros(len(scores), dtype=bool)
    high = np.sum(scores == n // 2, axis=1)
    low = np.sum(scores == (n - 2) // 2, axis=1)
    almost = (high == n // 2) & (low == n // 2) if n else np.zeros(len(scores), dtype=bool)
    return np.zeros(len(scores), dtype=bool), almost


def passes_thm1(t: Tournament) -> bool:
    """Fast-reject pipeline: score filter, trace identity, exact certificate."""
    if not is_almost_regular(t):
        return False
    if not trace_identity_check(t):
        return False
    return certify_thm1_spectrum(t).passed


# -- census -------------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    n: int
    total: int
    counts: dict[str, int]
    elapsed: float = field(default=0.0, compare=False)
    workers: int = field(default=1, compare=False)

    def to_json(self) -> dict:
        """Deterministic fields only; timing and worker count are excluded."""
        return {"n": self.n, "total": self.total, "counts": dict(self.counts)}


def _census_chunk(n: int, lo: int, hi: int) -> dict[str, int]:
    codes = np.arange(lo, hi, dtype=np.uint64)
    regular, almost = _score_masks(n, chunk_scores(n, codes))
    counts = dict.fromkeys(PREDICATES, 0)
    counts["regular"] = int(regular.sum())
    counts["almost_regular"] = int(almost.sum())
    for code in codes[regular]:
        if is_doubly_regular(decode(TournamentCode(n, int(code)))):
            counts["doubly_regular"] += 1
    if n % 2 == 0 and n >= 2:
        for code in range(lo, hi):
            t = decode(TournamentCode(n, code))
            if certify_thm3_adjacency(t).passed:
                counts["thm3_pass"] += 1
        for code in codes[almost]:
            if passes_thm1(decode(TournamentCode(n, int(code)))):
                counts["thm1_pass"] += 1
    return counts


def census(n: int, workers: int | None = None, chunk_size: int = CHUNK_SIZE) -> CensusReport:
    bits = _guard(n)
    workers = resolve_workers(workers)
    start = time.perf_counter()
    jobs = [(n, lo, hi) for lo, hi in _chunks(1 << bits, chunk_size)]
    counts = dict.fromkeys(PREDICATES, 0)
    for part in _run_chunks(_census_chunk, jobs, workers):
        for key, value in part.items():
            counts[key] += value
    return CensusReport(n, 1 << bits, counts, time.perf_counter() - start, workers)


# -- searches -----------------------------------------------------------------


def _exhaustive_chunk(n: int, lo: int, hi: int) -> list[int]:
    codes = np.arange(lo, hi, dtype=np.uint64)
    _, almost = _score_masks(n, chunk_scores(n, codes))
    return [
        int(c) for c in codes[almost] if passes_thm1(decode(TournamentCode(n, int(c))))
    ]


def _random_chunk(n: int, seed: int, lo: int, hi: int) -> list[int]:
    bits = num_pairs(n)
    hits = []
    for k in range(lo, hi):
        code = random_bits(seed, k, bits)
        if passes_thm1(decode(TournamentCode(n, code))):
            hits.append(code)
    return hits


def search_thm1(
    n: int,
    mode: str = "exhaustive",
    budget: int = 0,
    seed: int = 0,
    workers: int | None = None,
    chunk_size: int = CHUNK_SIZE,
) -> list[TournamentCode]:
    """Codes of size-n tournaments passing the vertex-deletion Seidel certificate,
    ascending and without repeats."""
    bits = _guard(n)
    workers = resolve_workers(workers)
    if mode == "exhaustive":
        jobs = [(n, lo, hi) for lo, hi in _chunks(1 << bits, chunk_size)]
        parts = _run_chunks(_exhaustive_chunk, jobs, workers)
    elif mode == "random":
        if budget < 1:
            raise ValueError("random search needs budget >= 1")
        jobs = [(n, seed, lo, hi) for lo, hi in _chunks(budget, chunk_size)]
        parts = _run_chunks(_random_chunk, jobs, workers)
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    found = sorted({code for part in parts for code in part})
    return [TournamentCode(n, c) for c in found]


def _drt_chunk(n: int, lo: int, hi: int) -> list[int]:
    codes = np.arange(lo, hi, dtype=np.uint64)
    regular, _ = _score_masks(n, chunk_scores(n, codes))
    return [
        int(c) for c in codes[regular] if is_doubly_regular(decode(TournamentCode(n, int(c))))
    ]


def labelled_drts(
    n: int, workers: int | None = None, chunk_size: int = CHUNK_SIZE,
    max_bits: int = MAX_CODE_BITS,
) -> list[TournamentCode]:
    bits = _guard(n, max_bits)
    jobs = [(n, lo, hi) for lo, hi in _chunks(1 << bits, chunk_size)]
    parts = _run_chunks(_drt_chunk, jobs, resolve_workers(workers))
    return [TournamentCode(n, c) for part in parts for c in part]


def deletion_images(drts: list[TournamentCode]) -> dict[int, list[tuple[int, int]]]:
    """code of D - v  ->  sorted list of (code of D, v)."""
    images: dict[int, list[tuple[int, int]]] = {}
    for tc in drts:
        d = decode(tc)
        for v in range(d.n):
            img = encode(delete_vertex(d, v)).code
            images.setdefault(img, []).append((tc.code, v))
    return {k: sorted(images[k]) for k in sorted(images)}


def equivalence_experiment(
    n_drt: int,
    workers: int | None = None,
    chunk_size: int = CHUNK_SIZE,
    max_bits: int = EXPERIMENT_MAX_BITS,
) -> dict:
    """Check both directions of the DRT / Seidel-spectrum equivalence at one order.

    Forward: every vertex deletion of every labelled DRT of size n_drt passes
    the vertex-deletion certificate.  Converse: every size n_drt - 1 tournament that
    passes extends to a DRT.  Any failure raises CounterexampleFound.
    """
    if n_drt < 3 or n_drt % 4 != 3:
        raise ValueError(f"n_drt must be 3 mod 4, got {n_drt}")
    _guard(n_drt, max_bits)
    _guard(n_drt - 1, max_bits)

    drts = labelled_drts(n_drt, workers, chunk_size, max_bits)
    images = deletion_images(drts)
    for img, sources in images.items():
        if not passes_thm1(decode(TournamentCode(n_drt - 1, img))):
            drt_code, v = sources[0]
            raise CounterexampleFound(
                f"deleting vertex {v} of DRT code {drt_code} fails the certificate"
            )

    hits = search_thm1(n_drt - 1, "exhaustive", workers=workers, chunk_size=chunk_size)
    extension = {}
    for tc in hits:
        ext = extend_to_regular(decode(tc))
        if not (is_regular(ext) and is_doubly_regular(ext)):
            raise CounterexampleFound(f"extension of code {tc.code} is not doubly regular")
        extension[tc.code] = encode(ext).code

    hit_set = {tc.code for tc in hits}
    return {
        "n_drt": n_drt,
        "forward": {
            "drt_count": len(drts),
            "deletions": len(drts) * n_drt,
            "distinct_images": len(images),
            "all_pass": True,
        },
        "converse": {
            "thm1_hits": len(hits),
            "all_extend_to_drt": True,
        },
        "images_equal_hits": set(images) == hit_set,
        "hits_not_from_deletion": sorted(hit_set - set(images)),
        "deletion_sources": {str(k): [list(s) for s in v] for k, v in images.items()},
        "extension": {str(k): v for k, v in sorted(extension.items())},
    }
