"""Exhaustive verification of the maps and distance expansion tables.

Every scan below enumerates the unordered pairs (u, v) of distinct binary
vectors of length n, with u lexicographically before v and the leftmost bit
most significant. That ordering is part of the deterministic contract: the
first violation reported by a scan is the first one in this order, no matter
how many workers run.

Scans may be partitioned across threads. Each worker owns a private integer
accumulator and the merge is plain addition, so results are independent of
the schedule. The worker count comes from the DIMKIT_THREADS environment
variable (0 or absent means auto) unless a call passes one explicitly.

All 2^n images are computed once per scan, about 2^n * n bytes. Enumeration
is capped at n = 24 to keep that cache within a few hundred MB; full table
generation is practical up to about n = 14 on a desktop.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .core import BinaryVector
from .maps import UnsupportedLength, _swap_schedule, classify

MAX_ENUM_LENGTH = 24
MAX_LEMMA_LENGTH = 20
THREADS_ENV_VAR = "DIMKIT_THREADS"

_GENERATION_CHUNK = 1 << 16


class EnumerationTooLarge(ValueError):
    """Raised when an exhaustive scan would exceed the enumeration ceiling."""


def pairs_total(n: int) -> int:
    """Number of unordered pairs of distinct length-n binary vectors."""
    return (1 << (n - 1)) * ((1 << n) - 1)


def resolve_workers(workers: int | None = None) -> int:
    """Worker count for a scan: explicit argument, else DIMKIT_THREADS, else auto."""
    if workers is None:
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is not None and raw.strip():
            try:
                workers = int(raw)
            except ValueError:
                raise ValueError(
                    f"{THREADS_ENV_VAR} must be an integer, got {raw!r}"
                ) from None
    if workers is None or workers == 0:
        return os.cpu_count() or 1
    if workers < 0:
        raise ValueError(f"worker count must be >= 0, got {workers}")
    return workers


def _require_enumerable(n: int) -> None:
    if n < 4:
        raise UnsupportedLength(
            f"no distance-increasing maps of length < 4 can exist; got n = {n}"
        )
    if n > MAX_ENUM_LENGTH:
        raise EnumerationTooLarge(
            f"scanning all pairs of 2^{n} vectors exceeds the n <= {MAX_ENUM_LENGTH} ceiling"
        )


def all_images(n: int) -> np.ndarray:
    """Images of all 2^n vectors under the length-n map, as a (2^n, n) int8 array.

    Row k holds the image of the vector whose integer encoding is k (leftmost
    bit most significant). Rows are generated in fixed-size chunks so peak
    temporary memory stays small; chunk boundaries cannot affect the values.
    """
    _require_enumerable(n)
    schedule = _swap_schedule(classify(n))
    count = 1 << n
    images = np.tile(np.arange(1, n + 1, dtype=np.int8), (count, 1))
    for start in range(0, count, _GENERATION_CHUNK):
        stop = min(start + _GENERATION_CHUNK, count)
        codes = np.arange(start, stop, dtype=np.int64)
        block = images[start:stop]
        for bit, i, j in schedule:
            mask = ((codes >> (n - bit)) & 1).astype(bool)
            tmp = block[mask, i - 1]
            block[mask, i - 1] = block[mask, j - 1]
            block[mask, j - 1] = tmp
    return images


def _chunk_ranges(total_rows: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total_rows))
    step = -(-total_rows // pieces)
    return [(lo, min(lo + step, total_rows)) for lo in range(0, total_rows, step)]


def _count_chunk(images: np.ndarray, n: int, lo: int, hi: int) -> np.ndarray:
    """Accumulate (d_in, d_out) pair counts for outer rows u in [lo, hi)."""
    count = images.shape[0]
    width = n + 1
    acc = np.zeros(width * width, dtype=np.int64)
    for u in range(lo, hi):
        partners = np.arange(u + 1, count, dtype=np.int64)
        d_in = np.bitwise_count(partners ^ u).astype(np.int64)
        d_out = np.count_nonzero(images[u + 1 :] != images[u], axis=1)
        acc += np.bincount(d_in * width + d_out, minlength=width * width)
    return acc


def _violation_chunk(
    images: np.ndarray, n: int, lo: int, hi: int, stop_at_first: bool
) -> tuple[int, int, int, int] | None:
    """First (u, v, d_in, d_out) violating the distance-increase rule, row order."""
    count = images.shape[0]
    first = None
    for u in range(lo, hi):
        partners = np.arange(u + 1, count, dtype=np.int64)
        d_in = np.bitwise_count(partners ^ u).astype(np.int64)
        d_out = np.count_nonzero(images[u + 1 :] != images[u], axis=1)
        bad = ((d_in < n) & (d_out <= d_in)) | ((d_in == n) & (d_out != n))
        if bad.any():
            k = int(np.argmax(bad))
            first = (u, u + 1 + k, int(d_in[k]), int(d_out[k]))
            if stop_at_first:
                return first
            break
    return first


class Violation(NamedTuple):
    """One pair breaking the distance-increase rule."""

    u: BinaryVector
    v: BinaryVector
    d_in: int
    d_out: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive pair scan for one length."""

    n: int
    is_dim: bool
    pairs_checked: int
    first_violation: Violation | None

    def __post_init__(self) -> None:
        if self.is_dim != (self.first_violation is None):
            raise ValueError("is_dim must mirror the absence of a violation")


@dataclass(frozen=True)
class DistanceExpansionTable:
    """The n x n matrix counting unordered pairs by input and output distance.

    Entry (i, j), 1-based, is the number of unordered pairs of binary vectors
    at Hamming distance i whose images sit at permutation distance j.
    """

    n: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n or any(len(row) != self.n for row in self.counts):
            raise ValueError(f"counts must be an {self.n} x {self.n} matrix")

    def entry(self, i: int, j: int) -> int:
        """D_ij with 1-based indices."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"indices ({i}, {j}) outside 1..{self.n}")
        return self.counts[i - 1][j - 1]

    def row_sum(self, i: int) -> int:
        return sum(self.counts[i - 1])

    def expected_row_sum(self, i: int) -> int:
        """Total unordered pairs at input distance i: 2^(n-1) * C(n, i)."""
        return (1 << (self.n - 1)) * comb(self.n, i)

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def certifies_dim(self) -> bool:
        """True when no mass sits at j <= i for i < n, nor at j < n for i = n."""
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                bad = (j <= i and i < self.n) or (i == self.n and j < self.n)
                if bad and self.counts[i - 1][j - 1] != 0:
                    return False
        return True


def _scan_pieces(n: int, workers: int) -> list[tuple[int, int]]:
    total_rows = (1 << n) - 1  # the last row has no partner
    return _chunk_ranges(total_rows, workers * 8)


def _verify_images(
    images: np.ndarray, n: int, early_exit: bool, workers: int | None
) -> VerificationReport:
    """Scan an arbitrary image table; shared by verify_dim and the tests."""
    worker_count = resolve_workers(workers)
    pieces = _scan_pieces(n, worker_count)
    first: tuple[int, int, int, int] | None = None
    if worker_count == 1:
        for lo, hi in pieces:
            found = _violation_chunk(images, n, lo, hi, early_exit)
            if found is not None:
                first = found
                if early_exit:
                    break
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            if early_exit:
                # Waves keep chunk order, so the earliest chunk with a hit
                # wins and later chunks never run.
                for wave_start in range(0, len(pieces), worker_count):
                    wave = pieces[wave_start : wave_start + worker_count]
                    futures = [
                        pool.submit(_violation_chunk, images, n, lo, hi, True)
                        for lo, hi in wave
                    ]
                    hits = [f.result() for f in futures]
                    hits = [h for h in hits if h is not None]
                    if hits:
                        first = min(hits)
                        break
            else:
                futures = [
                    pool.submit(_violation_chunk, images, n, lo, hi, False)
                    for lo, hi in pieces
                ]
                hits = [f.result() for f in futures]
                hits = [h for h in hits if h is not None]
                if hits:
                    first = min(hits)
    if first is None:
        return VerificationReport(n, True, pairs_total(n), None)
    u, v, d_in, d_out = first
    violation = Violation(
        BinaryVector.from_int(u, n), BinaryVector.from_int(v, n), d_in, d_out
    )
    if early_exit:
        # Pairs examined in canonical order up to and including (u, v).
        checked = u * ((1 << n) - 1) - u * (u - 1) // 2 + (v - u)
    else:
        checked = pairs_total(n)
    return VerificationReport(n, False, checked, violation)


def verify_dim(
    n: int, early_exit: bool = True, workers: int | None = None
) -> VerificationReport:
    """Exhaustively check the distance-increase rule for the length-n map.

    A pair violates when d(u, v) < n but the image distance fails to exceed
    it, or when d(u, v) = n but the image distance is not exactly n. With
    early_exit=False the scan always covers every pair, so pairs_checked
    doubles as a census even when a violation exists.
    """
    _require_enumerable(n)
    return _verify_images(all_images(n), n, early_exit, workers)


def expansion_table(n: int, workers: int | None = None) -> DistanceExpansionTable:
    """Count all unordered pairs by (input distance, image distance).

    Precomputes the 2^n images once, then accumulates pairwise counts. The
    result is exact and identical for every worker count.
    """
    _require_enumerable(n)
    images = all_images(n)
    worker_count = resolve_workers(workers)
    pieces = _scan_pieces(n, worker_count)
    width = n + 1
    acc = np.zeros(width * width, dtype=np.int64)
    if worker_count == 1:
        for lo, hi in pieces:
            acc += _count_chunk(images, n, lo, hi)
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            futures = [
                pool.submit(_count_chunk, images, n, lo, hi) for lo, hi in pieces
            ]
            for future in futures:
                acc += future.result()
    grid = acc.reshape(width, width)
    if grid[0, :].any() or grid[:, 0].any():
        raise RuntimeError(
            "scan produced a pair at distance 0; the map is not injective"
        )
    counts = tuple(
        tuple(int(grid[i, j]) for j in range(1, width)) for i in range(1, width)
    )
    return DistanceExpansionTable(n, counts)


def check_lemma1(n_max: int) -> bool:
    """Exhaustively test the run-count identities on all short binary sequences.

    For every sequence a of every length 2..n_max, checks that the adjacent
    pair sum a_1*a_2 + ... + a_{n-1}*a_n equals weight(a) minus the number of
    1-runs, and that the cyclic pair sum (wrap term added) is at most
    weight(a) minus 1 when a contains both symbols. Uses integer bit tricks
    only, independent of the tuple-based helpers in core.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if n_max > MAX_LEMMA_LENGTH:
        raise EnumerationTooLarge(
            f"checking all sequences up to length {n_max} exceeds the "
            f"n_max <= {MAX_LEMMA_LENGTH} ceiling"
        )
    for length in range(2, n_max + 1):
        for a in range(1 << length):
            weight = a.bit_count()
            runs = (a & ~(a << 1)).bit_count()
            pair_sum = (a & (a >> 1)).bit_count()
            if pair_sum != weight - runs:
                return False
            wrap = (a >> (length - 1)) & a & 1
            mixed = 1 if 0 < weight < length else 0
            if pair_sum + wrap > weight - mixed:
                return False
    return True
