"""Exhaustive minimal-height search over primitive (P, Q) pairs.

Every coprime pair ``Q < P`` of opposite parity represents the squarefree
part ``N`` of ``T = P Q (P - Q) (P + Q)``.  The four cofactors are pairwise
coprime, so the squarefree part of ``T`` is the product of the squarefree
parts of the cofactors, each of which is below ``2 * bound``.  Those are
read from sieved tables, and the pairs for a fixed ``P`` are processed as
one numpy vector.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import factor
from .table_io import CongruentRecord, make_record

__all__ = [
    "SearchConfig",
    "squarefree_tables",
    "pair_to_record",
    "iter_pairs",
    "partition_ranges",
    "search_range",
    "build_min_height_table",
]

log = logging.getLogger(__name__)

# Above this bound P*Q*(P-Q)*(P+Q) may overflow int64.
MAX_VECTOR_BOUND = 55_000


@dataclass(frozen=True)
class SearchConfig:
    bound: int
    n_max: int | None = None
    partitions: int = 1

    def __post_init__(self):
        if self.bound < 2:
            raise ValueError(f"bound must be >= 2, got {self.bound}")
        if self.partitions < 1:
            raise ValueError(f"partitions must be >= 1, got {self.partitions}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")


def squarefree_tables(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays ``s, m`` of length ``limit + 1`` with ``i = s[i] * m[i]**2``."""
    s = np.arange(limit + 1, dtype=np.int64)
    m = np.ones(limit + 1, dtype=np.int64)
    for i in range(2, math.isqrt(limit) + 1):
        ii = i * i
        idx = np.arange(ii, limit + 1, ii)
        while idx.size:
            hit = idx[s[idx] % ii == 0]
            s[hit] //= ii
            m[hit] *= i
            idx = hit
    return s, m


def iter_pairs(bound: int, p_lo: int = 2, p_hi: int | None = None):
    """Primitive opposite-parity pairs ``Q < P`` with ``p_lo <= P < p_hi``."""
    p_hi = bound if p_hi is None else p_hi
    for P in range(max(p_lo, 2), p_hi):
        for Q in range(1 + P % 2, P, 2):
            if math.gcd(P, Q) == 1:
                yield P, Q


def pair_to_record(P: int, Q: int) -> CongruentRecord:
    """Record for the ``N`` represented by ``(P, Q)``, by factoring each cofactor."""
    exponents: dict[int, int] = {}
    for cofactor in (P, Q, P - Q, P + Q):
        for p, e in factor(cofactor).items():
            exponents[p] = exponents.get(p, 0) + e
    N = math.prod(p for p, e in exponents.items() if e % 2)
    return make_record(N, P, Q)


def partition_ranges(bound: int, partitions: int) -> list[tuple[int, int]]:
    """Contiguous ``[lo, hi)`` P-ranges with roughly equal pair counts."""
    cuts = [2] + [max(2, round(bound * math.sqrt(i / partitions)))
                  for i in range(1, partitions)] + [bound]
    cuts = sorted(set(cuts))
    return [(lo, hi) for lo, hi in zip(cuts, cuts[1:]) if lo < hi]


def _reduce(cols: np.ndarray) -> np.ndarray:
    # cols rows are (N, height, P, Q); keep the lexicographic minimum per N.
    if cols.shape[1] == 0:
        return cols
    order = np.lexsort(cols[::-1])
    cols = cols[:, order]
    first = np.ones(cols.shape[1], dtype=bool)
    first[1:] = cols[0, 1:] != cols[0, :-1]
    return cols[:, first]


def search_range(bound: int, p_lo: int, p_hi: int, n_max: int | None = None) -> np.ndarray:
    """Best ``(N, height, P, Q)`` columns for pairs with ``p_lo <= P < p_hi``."""
    if bound > MAX_VECTOR_BOUND:
        raise ValueError(f"bound {bound} exceeds the int64-safe limit {MAX_VECTOR_BOUND}")
    sf, sq = squarefree_tables(2 * bound)
    chunks = []
    pending = 0
    for P in range(max(p_lo, 2), p_hi):
        Q = np.arange(1 + P % 2, P, 2, dtype=np.int64)
        Q = Q[np.gcd(Q, P) == 1]
        if not Q.size:
            continue
        lo, hi = P - Q, P + Q
        N = sf[P] * sf[Q] * sf[lo] * sf[hi]
        keep = None if n_max is None else N <= n_max
        if keep is not None:
            Q, lo, hi, N = Q[keep], lo[keep], hi[keep], N[keep]
            if not Q.size:
                continue
        D = sq[P] * sq[Q] * sq[lo] * sq[hi]
        A = lo * hi
        B = 2 * P * Q
        h = np.maximum(A // np.gcd(A, D), B // np.gcd(B, D))
        chunks.append(np.stack([N, h, np.full_like(Q, P), Q]))
        pending += Q.size
        if pending > 4_000_000:
            chunks = [_reduce(np.concatenate(chunks, axis=1))]
            pending = chunks[0].shape[1]
    if not chunks:
        return np.empty((4, 0), dtype=np.int64)
    return _reduce(np.concatenate(chunks, axis=1))


def _search_task(args):
    return search_range(*args)


def _fast_record(N: int, P: int, Q: int, sf: np.ndarray, sq: np.ndarray) -> CongruentRecord:
    A, B = P * P - Q * Q, 2 * P * Q
    D = int(sq[P] * sq[Q] * sq[P - Q] * sq[P + Q])
    ga, gb = math.gcd(A, D), math.gcd(B, D)
    a1, a2, b1, b2 = A // ga, D // ga, B // gb, D // gb
    if a1 * b2 > b1 * a2:
        a1, a2, b1, b2 = b1, b2, a1, a2
    return CongruentRecord(N, P, Q, a1, a2, b1, b2,
                           int(sf[P]), int(sq[P]), int(sf[Q]), int(sq[Q]), max(a1, b1))


def build_min_height_table(cfg: SearchConfig) -> dict[int, CongruentRecord]:
    """Minimal-height record per ``N`` over all pairs with ``Q < P < bound``.

    Ties are broken by the smallest ``P`` and then ``Q``, so the result does
    not depend on the partition count.
    """
    ranges = partition_ranges(cfg.bound, cfg.partitions)
    tasks = [(cfg.bound, lo, hi, cfg.n_max) for lo, hi in ranges]
    log.info("searching Q < P < %d in %d partition(s)", cfg.bound, len(tasks))
    if cfg.partitions > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.partitions) as pool:
            parts = list(pool.map(_search_task, tasks))
    else:
        parts = [_search_task(t) for t in tasks]
    parts.append(np.empty((4, 0), dtype=np.int64))
    best = _reduce(np.concatenate(parts, axis=1))
    log.info("reduced to %d congruent numbers", best.shape[1])
    sf, sq = squarefree_tables(2 * cfg.bound)
    return {int(N): _fast_record(int(N), int(P), int(Q), sf, sq)
            for N, _, P, Q in best.T.tolist()}
