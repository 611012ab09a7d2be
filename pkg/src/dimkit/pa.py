"""Permutation arrays built by mapping binary codes.

The image of a binary code under a distance-increasing map is a permutation
array whose minimum distance strictly exceeds the code's, except that a code
of full distance n maps to distance exactly n. Row order follows codeword
order so certification can align pairs positionally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BinaryVector,
    DimensionMismatch,
    Permutation,
    hamming_distance_bits,
    hamming_distance_perm,
)
from .maps import UnsupportedLength, dim_map

MAX_CODEWORDS = 1 << 16


class DegenerateCode(ValueError):
    """Raised for codes with too few codewords to have a minimum distance."""


@dataclass(frozen=True)
class BinaryCode:
    """A list of distinct binary codewords sharing one length."""

    codewords: tuple[BinaryVector, ...]

    def __post_init__(self) -> None:
        codewords = tuple(self.codewords)
        object.__setattr__(self, "codewords", codewords)
        if not codewords:
            raise ValueError("a code needs at least one codeword")
        n = len(codewords[0])
        for w in codewords:
            if len(w) != n:
                raise DimensionMismatch(
                    f"codeword lengths differ: {len(w)} != {n}"
                )
        # Duplicates are rejected rather than deduplicated, to surface data errors.
        if len(set(codewords)) != len(codewords):
            raise ValueError("duplicate codewords in code")

    @property
    def length(self) -> int:
        return len(self.codewords[0])

    def __len__(self) -> int:
        return len(self.codewords)


@dataclass(frozen=True)
class PermutationArray:
    """Distinct permutations of one length, with their minimum distance."""

    rows: tuple[Permutation, ...]
    min_distance: int

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a permutation array needs at least one row")
        n = len(rows[0])
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch(f"row lengths differ: {len(row)} != {n}")
        if len(set(rows)) != len(rows):
            raise ValueError("duplicate rows in permutation array")

    @property
    def length(self) -> int:
        return len(self.rows[0])

    def __len__(self) -> int:
        return len(self.rows)


def code_min_distance(code: BinaryCode) -> int:
    """Minimum Hamming distance over all unordered codeword pairs."""
    words = code.codewords
    if len(words) < 2:
        raise DegenerateCode("minimum distance needs at least 2 codewords")
    best = code.length
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d = hamming_distance_bits(words[i], words[j])
            if d < best:
                best = d
    return best


def _rows_min_distance(rows: tuple[Permutation, ...]) -> int:
    best = len(rows[0])
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            d = hamming_distance_perm(rows[i], rows[j])
            if d < best:
                best = d
    return best


def construct_pa(code: BinaryCode) -> PermutationArray:
    """Map every codeword and compute the resulting minimum distance.

    Requires length >= 4 and at least 2 codewords. The row count is capped
    at 2^16 because the distance scan is quadratic.
    """
    if code.length < 4:
        raise UnsupportedLength(
            f"permutation arrays need code length >= 4, got {code.length}"
        )
    if len(code) < 2:
        raise DegenerateCode("permutation array construction needs >= 2 codewords")
    if len(code) > MAX_CODEWORDS:
        raise ValueError(f"code has {len(code)} codewords, cap is {MAX_CODEWORDS}")
    rows = tuple(dim_map(w) for w in code.codewords)
    return PermutationArray(rows, _rows_min_distance(rows))


def certify(pa: PermutationArray, code: BinaryCode) -> bool:
    """Check the pairwise distance-increase guarantee for an array and its code.

    Assumes pa was built from code with matching row order. True when every
    unordered pair of rows sits strictly farther apart than the matching
    codewords, except codeword pairs at full distance n, whose rows must sit
    at distance exactly n.
    """
    if len(pa) != len(code):
        raise DimensionMismatch(
            f"row count {len(pa)} does not match codeword count {len(code)}"
        )
    if pa.length != code.length:
        raise DimensionMismatch(
            f"row length {pa.length} does not match code length {code.length}"
        )
    n = code.length
    words = code.codewords
    rows = pa.rows
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d_in = hamming_distance_bits(words[i], words[j])
            d_out = hamming_distance_perm(rows[i], rows[j])
            if d_in == n:
                if d_out != n:
                    return False
            elif d_out <= d_in:
                return False
    return True
