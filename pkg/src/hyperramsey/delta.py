"""Binary-vector vertices, the first-difference map and delta-sequence shapes.

Positions are 1-based throughout: bit 1 is the most significant bit, and
``delta(a, b)`` is the first position where ``a`` and ``b`` differ.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import product
from typing import Iterator, Sequence

from .errors import DomainError


@total_ordering
@dataclass(frozen=True, eq=False)
class BitVertex:
    bits: tuple[int, ...]
    value: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"bits must be 0/1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)
        v = 0
        for b in bits:
            v = (v << 1) | b
        object.__setattr__(self, "value", v)

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVertex":
        if not 0 <= value < 1 << n:
            raise DomainError(f"{value} does not fit in {n} bits")
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    @classmethod
    def parse(cls, s: str) -> "BitVertex":
        if not s or set(s) - {"0", "1"}:
            raise DomainError(f"not a bit string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    def __int__(self):
        return self.value

    def __hash__(self):
        return hash((self.value, len(self.bits)))

    def __eq__(self, other):
        if not isinstance(other, BitVertex):
            return NotImplemented
        return self.bits == other.bits

    def __lt__(self, other):
        if not isinstance(other, BitVertex):
            return NotImplemented
        return bit_compare(self, other) < 0


def universe(n: int) -> list[BitVertex]:
    """All of {0,1}^n in increasing order."""
    return [BitVertex(bits) for bits in product((0, 1), repeat=n)]


def bit_compare(a: BitVertex, b: BitVertex) -> int:
    """-1, 0, 1 for a < b, a == b, a > b under the binary-value order."""
    if len(a.bits) != len(b.bits):
        raise DomainError(f"length mismatch: {len(a.bits)} vs {len(b.bits)}")
    return (a.value > b.value) - (a.value < b.value)


def delta(a: BitVertex, b: BitVertex) -> int:
    """Least (1-based) index at which ``a`` and ``b`` differ."""
    if len(a.bits) != len(b.bits):
        raise DomainError(f"length mismatch: {len(a.bits)} vs {len(b.bits)}")
    x = a.value ^ b.value
    if x == 0:
        raise DomainError("delta is undefined for equal vertices")
    return len(a.bits) - x.bit_length() + 1


def delta_int(a: int, b: int, n: int) -> int:
    """:func:`delta` on integer encodings of n-bit vertices (a != b)."""
    return n - (a ^ b).bit_length() + 1


def delta_sequence(S: Sequence[BitVertex]) -> tuple[int, ...]:
    """(delta(a_1,a_2), ..., delta(a_{m-1},a_m)) for a strictly increasing S."""
    if len(S) < 2:
        raise DomainError("need at least two vertices")
    out = []
    for a, b in zip(S, S[1:]):
        if bit_compare(a, b) >= 0:
            raise DomainError("vertices must be strictly increasing")
        out.append(delta(a, b))
    return tuple(out)


def delta_sequence_ints(values: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(n - (a ^ b).bit_length() + 1 for a, b in zip(values, values[1:]))


class DeltaClass(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    ZIGZAG = "zigzag"
    STRONG_ZIGZAG = "strong-zigzag"
    OTHER = "other"

    @property
    def monotone(self) -> bool:
        return self in (DeltaClass.INCREASING, DeltaClass.DECREASING)

    @property
    def zigzag(self) -> bool:
        return self in (DeltaClass.ZIGZAG, DeltaClass.STRONG_ZIGZAG)


def zigzag_shaped(d: Sequence[int]) -> bool:
    """d_1 > d_2 < d_3 > d_4 < ... (the alternation must start downward)."""
    for i in range(len(d) - 1):
        if i % 2 == 0:
            if not d[i] > d[i + 1]:
                return False
        elif not d[i] < d[i + 1]:
            return False
    return True


def classify(deltas: Sequence[int], k: int | None = None) -> DeltaClass:
    """Shape of the delta-sequence of a k-set.

    Monotone shapes take precedence, which only matters for k = 3 where the
    truncated zigzag d_1 > d_2 is also decreasing.  Strong zigzags are only
    reported for odd k.
    """
    d = tuple(deltas)
    if k is None:
        k = len(d) + 1
    if k < 3:
        raise DomainError("classification needs k >= 3")
    if len(d) != k - 1:
        raise DomainError(f"expected {k - 1} deltas, got {len(d)}")
    if any(x == y for x, y in zip(d, d[1:])):
        raise DomainError(f"adjacent equal deltas in {d}")
    if all(x < y for x, y in zip(d, d[1:])):
        return DeltaClass.INCREASING
    if all(x > y for x, y in zip(d, d[1:])):
        return DeltaClass.DECREASING
    if zigzag_shaped(d):
        if k % 2 == 1 and d[k - 2] < d[k - 4]:
            return DeltaClass.STRONG_ZIGZAG
        return DeltaClass.ZIGZAG
    return DeltaClass.OTHER


@dataclass(frozen=True)
class DeltaProfile:
    deltas: tuple[int, ...]
    cls: DeltaClass

    @classmethod
    def of(cls, S: Sequence[BitVertex]) -> "DeltaProfile":
        d = delta_sequence(S)
        return cls(d, classify(d, len(S)))


def local_extrema(d: Sequence[int]) -> list[tuple[int, str]]:
    """Interior local extrema as (1-based position, "max" | "min")."""
    out = []
    for i in range(1, len(d) - 1):
        if d[i - 1] < d[i] > d[i + 1]:
            out.append((i + 1, "max"))
        elif d[i - 1] > d[i] < d[i + 1]:
            out.append((i + 1, "min"))
    return out


def sorted_tuples(n: int, r: int) -> Iterator[tuple[BitVertex, ...]]:
    """All increasing r-tuples of {0,1}^n (colex order)."""
    from .core import colex_subsets
    yield from colex_subsets(universe(n), r)
