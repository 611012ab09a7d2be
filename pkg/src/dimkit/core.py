"""Domain types and small combinatorial helpers shared by every other module.

Two kinds of values live here: binary vectors of length n (tuples over
{0, 1}) and permutations of {1, ..., n}. Both carry the Hamming distance.
Positions are 1-based in documentation and error messages; the leftmost
character of a vector's text form is u_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class DimensionMismatch(ValueError):
    """Raised when two operands that must share a length do not."""


def _require_same_length(n: int, m: int) -> None:
    if n != m:
        raise DimensionMismatch(f"length mismatch: {n} != {m}")


@dataclass(frozen=True)
class BinaryVector:
    """An immutable binary vector (u_1, ..., u_n) with every u_i in {0, 1}."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) < 1:
            raise ValueError("binary vector must have length >= 1")
        for pos, b in enumerate(bits, start=1):
            if b not in (0, 1):
                raise ValueError(
                    f"symbol {b!r} at position {pos} is not 0 or 1"
                )

    @classmethod
    def from_string(cls, text: str) -> "BinaryVector":
        """Parse a string of '0'/'1' characters, leftmost character = u_1."""
        bits = []
        for pos, ch in enumerate(text, start=1):
            if ch == "0":
                bits.append(0)
            elif ch == "1":
                bits.append(1)
            else:
                raise ValueError(
                    f"invalid character {ch!r} at position {pos}, expected '0' or '1'"
                )
        if not bits:
            raise ValueError("empty bit string")
        return cls(tuple(bits))

    @classmethod
    def from_int(cls, value: int, n: int) -> "BinaryVector":
        """The length-n vector encoded by the n low bits of value, u_1 most significant."""
        if n < 1:
            raise ValueError("length must be >= 1")
        if not 0 <= value < (1 << n):
            raise ValueError(f"value {value} does not fit in {n} bits")
        return cls(tuple((value >> (n - 1 - k)) & 1 for k in range(n)))

    def to_int(self) -> int:
        """Integer encoding with u_1 as the most significant bit."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def weight(self) -> int:
        """Number of 1 symbols."""
        return sum(self.bits)

    def complement(self) -> "BinaryVector":
        """The antipodal vector, every bit flipped."""
        return BinaryVector(tuple(1 - b for b in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __repr__(self) -> str:
        return f"BinaryVector('{self}')"


@dataclass(frozen=True)
class Permutation:
    """An immutable permutation of {1, ..., n} written in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(
                f"entries {entries} are not a rearrangement of 1..{n}"
            )

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.entries)

    def __repr__(self) -> str:
        return f"Permutation(({', '.join(str(e) for e in self.entries)}))"


def hamming_distance_bits(u: BinaryVector, v: BinaryVector) -> int:
    """Number of positions where u and v differ."""
    _require_same_length(len(u), len(v))
    return sum(a != b for a, b in zip(u.bits, v.bits))


def hamming_distance_perm(x: Permutation, y: Permutation) -> int:
    """Number of positions where x and y differ.

    Two distinct permutations always differ in at least two positions, so
    the result is never 1.
    """
    _require_same_length(len(x), len(y))
    return sum(a != b for a, b in zip(x.entries, y.entries))


def agreement_set(x: Permutation, y: Permutation) -> set[int]:
    """Values that occupy the same position in both permutations.

    The size of the result plus the permutation Hamming distance equals n.
    """
    _require_same_length(len(x), len(y))
    return {a for a, b in zip(x.entries, y.entries) if a == b}


def block_count(a: BinaryVector) -> int:
    """Number of maximal runs of consecutive 1's in the vector."""
    blocks = 0
    previous = 0
    for b in a.bits:
        if b == 1 and previous == 0:
            blocks += 1
        previous = b
    return blocks


def adjacent_pair_sum(a: BinaryVector, cyclic: bool = False) -> int:
    """Sum of products of adjacent symbols, a_1*a_2 + ... + a_{n-1}*a_n.

    With cyclic=True the wrap term a_n*a_1 is added. Equals the number of
    adjacent 1-1 pairs, which for the non-cyclic sum is weight minus the
    number of 1-runs.
    """
    bits = a.bits
    if len(bits) < 2:
        raise ValueError("adjacent pair sum needs length >= 2")
    total = sum(bits[i] * bits[i + 1] for i in range(len(bits) - 1))
    if cyclic:
        total += bits[-1] * bits[0]
    return total
