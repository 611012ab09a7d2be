"""Distance-increasing maps from binary vectors to permutations.

A distance-increasing map (DIM) of length n sends every binary vector to a
permutation of {1, ..., n} so that the permutation Hamming distance strictly
exceeds the binary Hamming distance for every distinct input pair, except
antipodal pairs (input distance n), which land at permutation distance
exactly n. A counting argument rules out DIMs of length below 4; every
length n >= 4 is covered here by one of three algorithms:

* even n = 2r with r >= 2       -> ``map_even``
* n = 4r + 1 with r >= 1        -> ``map_odd_b``
* n = 4r - 1 with r >= 2        -> ``map_odd_c``

Each algorithm starts from the identity permutation and fires a fixed
sequence of conditional transpositions: bit u_k, when set, swaps two specific
entries. The firing order is what makes the maps distance-increasing, so it
must not be reordered.

Wraparound in the even case: the second swap pass uses swap(x_{2i}, x_{2i+1})
for i up to r, and at i = r the index 2r + 1 means x_1. The entries sit on a
circle and the last even bit joins x_{2r} back to x_1. The two odd-length
algorithms never wrap; their largest touched index is exactly n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .core import BinaryVector, Permutation


class UnsupportedLength(ValueError):
    """Raised for lengths no mapping algorithm covers (every n <= 3)."""


class MapFamily(enum.Enum):
    """Which mapping algorithm governs a given length."""

    EVEN_A = "even_a"  # n = 2r, r >= 2
    ODD_B = "odd_b"    # n = 4r + 1, r >= 1
    ODD_C = "odd_c"    # n = 4r - 1, r >= 2


_MIN_R = {MapFamily.EVEN_A: 2, MapFamily.ODD_B: 1, MapFamily.ODD_C: 2}


@dataclass(frozen=True)
class DimKind:
    """A mapping-algorithm family together with its size parameter r."""

    family: MapFamily
    r: int

    def __post_init__(self) -> None:
        least = _MIN_R[self.family]
        if self.r < least:
            raise ValueError(
                f"{self.family.value} requires r >= {least}, got r = {self.r}"
            )

    @property
    def n(self) -> int:
        """The vector length this kind maps."""
        if self.family is MapFamily.EVEN_A:
            return 2 * self.r
        if self.family is MapFamily.ODD_B:
            return 4 * self.r + 1
        return 4 * self.r - 1


class SwapEvent(NamedTuple):
    """One conditional transposition: bit ``bit`` (1-based) swaps x_i and x_j."""

    bit: int
    i: int
    j: int


def classify(n: int) -> DimKind:
    """Pick the mapping algorithm for length n.

    Total and single-valued for every n >= 4: even lengths go to the even
    algorithm, odd lengths split on n mod 4.
    """
    if n < 4:
        raise UnsupportedLength(
            f"no distance-increasing maps of length < 4 can exist; got n = {n}"
        )
    if n % 2 == 0:
        return DimKind(MapFamily.EVEN_A, n // 2)
    if n % 4 == 1:
        return DimKind(MapFamily.ODD_B, (n - 1) // 4)
    return DimKind(MapFamily.ODD_C, (n + 1) // 4)


def _swap_schedule(kind: DimKind) -> tuple[SwapEvent, ...]:
    """The full conditional-swap sequence for one length, in firing order.

    Positions are 1-based. Only the even family references the wrap position
    2r + 1, encoded directly as 1; the odd families stay within 1..n.
    """
    n = kind.n
    r = kind.r
    if kind.family is MapFamily.EVEN_A:
        events = [SwapEvent(2 * i - 1, 2 * i - 1, 2 * i) for i in range(1, r + 1)]
        events += [
            SwapEvent(2 * i, 2 * i, 1 if i == r else 2 * i + 1)
            for i in range(1, r + 1)
        ]
    elif kind.family is MapFamily.ODD_B:
        events = [SwapEvent(2 * i - 1, 2 * i - 1, 2 * i) for i in range(1, 2 * r + 1)]
        events += [SwapEvent(n, n, 1), SwapEvent(n, 1, 2 * r + 1)]
        events += [SwapEvent(2 * i, 2 * i, 2 * i + 1) for i in range(1, 2 * r + 1)]
        assert max(max(e.i, e.j) for e in events) == n
    else:
        events = [SwapEvent(2 * i - 1, 2 * i - 1, 2 * i) for i in range(1, 2 * r)]
        events += [SwapEvent(n, n, 2 * r), SwapEvent(2 * r, 1, 2 * r)]
        events += [SwapEvent(2 * i, 2 * i, 2 * i + 1) for i in range(1, 2 * r)]
        assert max(max(e.i, e.j) for e in events) == n
    return tuple(events)


def map_even(u: BinaryVector) -> Permutation:
    """Map a binary vector of even length 2r (r >= 2) to a permutation.

    Odd-position bits fire first, each swapping an adjacent pair; then the
    even-position bits fire, shifted by one, with bit 2r wrapping the swap
    around to x_1.
    """
    n = len(u)
    if n < 4 or n % 2 != 0:
        raise UnsupportedLength(
            f"even-length algorithm needs n = 2r with r >= 2, got n = {n}"
        )
    r = n // 2
    bits = u.bits
    x = list(range(1, n + 1))
    for i in range(1, r + 1):
        if bits[2 * i - 2] == 1:  # u_{2i-1}
            x[2 * i - 2], x[2 * i - 1] = x[2 * i - 1], x[2 * i - 2]
    for i in range(1, r + 1):
        if bits[2 * i - 1] == 1:  # u_{2i}; x_{2r+1} wraps to x_1
            k = 0 if i == r else 2 * i
            x[2 * i - 1], x[k] = x[k], x[2 * i - 1]
    return Permutation(tuple(x))


def map_odd_b(u: BinaryVector) -> Permutation:
    """Map a binary vector of length 4r + 1 (r >= 1) to a permutation.

    Odd-position bits up to n - 2 fire first. Bit n then fires twice, first
    swapping x_n with x_1 and then x_1 with x_{2r+1}. The even-position bits
    finish, none of them wrapping.
    """
    n = len(u)
    if n < 5 or n % 4 != 1:
        raise UnsupportedLength(
            f"this algorithm needs n = 4r + 1 with r >= 1, got n = {n}"
        )
    r = (n - 1) // 4
    bits = u.bits
    x = list(range(1, n + 1))
    for i in range(1, 2 * r + 1):
        if bits[2 * i - 2] == 1:  # u_{2i-1}
            x[2 * i - 2], x[2 * i - 1] = x[2 * i - 1], x[2 * i - 2]
    if bits[n - 1] == 1:  # u_n, consulted twice
        x[n - 1], x[0] = x[0], x[n - 1]
        x[0], x[2 * r] = x[2 * r], x[0]
    for i in range(1, 2 * r + 1):
        if bits[2 * i - 1] == 1:  # u_{2i}; 2i + 1 <= n, no wrap
            x[2 * i - 1], x[2 * i] = x[2 * i], x[2 * i - 1]
    return Permutation(tuple(x))


def map_odd_c(u: BinaryVector) -> Permutation:
    """Map a binary vector of length 4r - 1 (r >= 2) to a permutation.

    Odd-position bits up to n - 2 fire first. Bit n swaps x_n with x_{2r},
    then bit 2r swaps x_1 with x_{2r}. The even-position bits finish, which
    consults bit 2r a second time for the swap of x_{2r} with x_{2r+1}. No
    swap wraps.
    """
    n = len(u)
    if n < 7 or n % 4 != 3:
        raise UnsupportedLength(
            f"this algorithm needs n = 4r - 1 with r >= 2, got n = {n}"
        )
    r = (n + 1) // 4
    bits = u.bits
    x = list(range(1, n + 1))
    for i in range(1, 2 * r):
        if bits[2 * i - 2] == 1:  # u_{2i-1}
            x[2 * i - 2], x[2 * i - 1] = x[2 * i - 1], x[2 * i - 2]
    if bits[n - 1] == 1:  # u_n
        x[n - 1], x[2 * r - 1] = x[2 * r - 1], x[n - 1]
    if bits[2 * r - 1] == 1:  # u_{2r}, first of its two firings
        x[0], x[2 * r - 1] = x[2 * r - 1], x[0]
    for i in range(1, 2 * r):
        if bits[2 * i - 1] == 1:  # u_{2i}; includes u_{2r} again at i = r
            x[2 * i - 1], x[2 * i] = x[2 * i], x[2 * i - 1]
    return Permutation(tuple(x))


def dim_map(u: BinaryVector) -> Permutation:
    """Map a binary vector of any length n >= 4 to a permutation.

    Dispatches on the length to one of the three algorithms. The result is
    always a valid permutation of the same length.
    """
    kind = classify(len(u))
    if kind.family is MapFamily.EVEN_A:
        return map_even(u)
    if kind.family is MapFamily.ODD_B:
        return map_odd_b(u)
    return map_odd_c(u)


def dim_map_traced(u: BinaryVector) -> tuple[Permutation, tuple[SwapEvent, ...]]:
    """Like dim_map, but also return the swaps that fired, in order.

    The trace is for debugging and bookkeeping only; replaying it from the
    identity permutation reproduces the returned permutation exactly. The
    number of fired swaps equals weight(u), plus one extra when u_n = 1 for
    the 4r + 1 family, or when u_{2r} = 1 for the 4r - 1 family (those bits
    are consulted twice).
    """
    kind = classify(len(u))
    bits = u.bits
    x = list(range(1, len(u) + 1))
    fired = []
    for event in _swap_schedule(kind):
        if bits[event.bit - 1] == 1:
            x[event.i - 1], x[event.j - 1] = x[event.j - 1], x[event.i - 1]
            fired.append(event)
    return Permutation(tuple(x)), tuple(fired)
