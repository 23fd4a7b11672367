"""The explicit colorings: rank coloring, the two stepping-up colorings, and
the greedy partial Steiner packer used to reason about the rank coloring.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from . import kernels
from .core import BLUE, RED, Color, ColoringOracle, colex_rank, enumerate_k_subsets
from .delta import BitVertex, DeltaClass, classify, delta_sequence, universe
from .errors import CapacityError, DomainError, UsageError
from .rng import uniform_int, coin

STREAM_KARY = 1
STREAM_TWO = 2

EXPLICIT_STEPUP_MAX_N = 6


def _base_index(S: Iterable[int], N: int, size: int) -> int:
    s = sorted(S)
    if len(s) != size or len(set(s)) != size:
        raise DomainError(f"expected a {size}-set, got {S!r}")
    if s and (s[0] < 1 or s[-1] > N):
        raise DomainError(f"{S!r} is not inside [1..{N}]")
    return colex_rank([x - 1 for x in s])


class KaryBaseColoring:
    """A coloring of the (k-1)-subsets of [N] with values 1..k.

    ``values`` is indexed by colex rank of the 0-based subset.
    """

    def __init__(self, N: int, k: int, values: bytes | Sequence[int]):
        if k < 2 or N < k - 1:
            raise DomainError(f"need k >= 2 and N >= k-1 (N={N}, k={k})")
        self.N = N
        self.k = k
        self.values = bytes(values)
        if len(self.values) != comb(N, k - 1):
            raise DomainError("value table has the wrong length")
        if any(not 1 <= v <= k for v in self.values):
            raise DomainError(f"values must lie in 1..{k}")

    @classmethod
    def from_function(cls, N: int, k: int, fn: Callable[[tuple], int]) -> "KaryBaseColoring":
        return cls(N, k, [fn(S) for S in enumerate_k_subsets(N, k - 1)])

    def assign(self, S: Iterable[int]) -> int:
        return self.values[_base_index(S, self.N, self.k - 1)]

    def __eq__(self, other):
        return (isinstance(other, KaryBaseColoring) and
                (self.N, self.k, self.values) == (other.N, other.k, other.values))


def red_probability(k: int) -> Fraction:
    """Chance that a k-set is red under a uniformly random k-ary base: k^-k."""
    return Fraction(1, k ** k)


def random_base(N: int, k: int, seed: int) -> KaryBaseColoring:
    """k-ary base coloring; the (k-1)-set of colex rank r gets hash(seed, r) mod k + 1."""
    if N < k - 1:
        raise DomainError(f"N={N} is smaller than k-1={k - 1}")
    return KaryBaseColoring(N, k, [uniform_int(seed, STREAM_KARY, r, k) + 1
                                   for r in range(comb(N, k - 1))])


def rank_color(phi: KaryBaseColoring, e: Sequence[int]) -> Color:
    """Red iff every (k-1)-subset e - a_i is colored i by ``phi``."""
    e = tuple(e)
    if len(e) != phi.k:
        raise DomainError(f"edge size {len(e)} differs from k={phi.k}")
    if list(e) != sorted(set(e)) or e[0] < 1 or e[-1] > phi.N:
        raise DomainError(f"{e!r} is not an increasing edge of [1..{phi.N}]")
    for i in range(phi.k):
        if phi.assign(e[:i] + e[i + 1:]) != i + 1:
            return BLUE
    return RED


class RankColoring(ColoringOracle):
    def __init__(self, phi: KaryBaseColoring):
        self.phi = phi
        self.k = phi.k
        self.domain = tuple(range(1, phi.N + 1))

    def color(self, edge):
        return rank_color(self.phi, edge)

    def color_bytes(self) -> bytes:
        return bytes(kernels.rank_table(self.phi.N, self.k, self.phi.values))


class BaseTwoColoring(ColoringOracle):
    """A red/blue coloring of the (k-1)-subsets of [N] (the stepping-up input).

    As an oracle its uniformity is ``k - 1`` and its domain is ``1..N``.
    """

    def __init__(self, N: int, k: int, red: bytes | Sequence[int]):
        if k < 3 or N < 1:
            raise DomainError(f"need k >= 3 and N >= 1 (N={N}, k={k})")
        self.N = N
        self.target_k = k
        self.k = k - 1
        self.domain = tuple(range(1, N + 1))
        self.red = bytes(1 if x else 0 for x in red)
        if len(self.red) != comb(N, k - 1):
            raise DomainError("red table has the wrong length")

    @classmethod
    def constant(cls, N: int, k: int, color: Color) -> "BaseTwoColoring":
        return cls(N, k, [int(color)] * comb(N, k - 1))

    @classmethod
    def random(cls, N: int, k: int, seed: int) -> "BaseTwoColoring":
        return cls(N, k, [coin(seed, STREAM_TWO, r) for r in range(comb(N, k - 1))])

    @classmethod
    def from_function(cls, N: int, k: int, fn: Callable[[tuple], Color]) -> "BaseTwoColoring":
        return cls(N, k, [int(fn(S)) for S in enumerate_k_subsets(N, k - 1)])

    def assign(self, S: Iterable[int]) -> Color:
        return Color(self.red[_base_index(S, self.N, self.k)])

    def color(self, edge):
        return self.assign(edge)

    def color_bytes(self) -> bytes:
        return self.red

    def __eq__(self, other):
        return (isinstance(other, BaseTwoColoring) and
                (self.N, self.k, self.red) == (other.N, other.k, other.red))


def _stepup_check(phi: BaseTwoColoring, e: Sequence[BitVertex], strong: bool,
                  allow_unverified: bool) -> tuple[int, ...]:
    k = len(e)
    if k != phi.target_k:
        raise DomainError(f"edge size {k} differs from k={phi.target_k}")
    if any(len(v) != phi.N for v in e):
        raise DomainError(f"vertices must have {phi.N} bits")
    if strong and k % 2 == 0:
        raise DomainError("the strong-zigzag rule is defined for odd k only")
    proven = k > 6 if strong else k >= 6
    if not proven and not allow_unverified:
        raise UsageError(f"k={k} is outside the proven regime; pass allow_unverified=True")
    return delta_sequence(e)


def _stepup_from_deltas(phi: BaseTwoColoring, d: tuple[int, ...], k: int, strong: bool) -> Color:
    cls = classify(d, k)
    if cls.monotone:
        return phi.assign(d)
    if strong:
        return RED if cls is DeltaClass.STRONG_ZIGZAG else BLUE
    return RED if cls.zigzag else BLUE


def step_up_color(phi: BaseTwoColoring, e: Sequence[BitVertex], k: int | None = None,
                  allow_unverified: bool = False) -> Color:
    """Red iff delta(e) is monotone with a red delta-set, or delta(e) is a zigzag."""
    if k is not None and k != len(e):
        raise DomainError(f"edge size {len(e)} differs from k={k}")
    d = _stepup_check(phi, e, False, allow_unverified)
    return _stepup_from_deltas(phi, d, len(e), False)


def step_up_color_strong(phi: BaseTwoColoring, e: Sequence[BitVertex], k: int | None = None,
                         allow_unverified: bool = False) -> Color:
    """Like :func:`step_up_color` but only strong zigzags are red."""
    if k is not None and k != len(e):
        raise DomainError(f"edge size {len(e)} differs from k={k}")
    d = _stepup_check(phi, e, True, allow_unverified)
    return _stepup_from_deltas(phi, d, len(e), True)


class SteppingUpColoring(ColoringOracle):
    """Lazy stepped-up coloring of the k-subsets of {0,1}^N.

    ``t`` is the red-configuration size the coloring is meant to avoid; the
    standard rule with t = 4 and odd k is refused because only the strong
    rule is proven there.
    """

    def __init__(self, phi: BaseTwoColoring, strong: bool = False, t: int | None = None,
                 allow_unverified: bool = False):
        k = phi.target_k
        if strong and k % 2 == 0:
            raise DomainError("the strong-zigzag rule is defined for odd k only")
        if not strong and t == 4 and k % 2 == 1:
            raise UsageError("t=4 with odd k needs the strong-zigzag coloring (strong=True)")
        proven = k > 6 if strong else k >= 6
        if not proven and not allow_unverified:
            raise UsageError(f"k={k} is outside the proven regime; pass allow_unverified=True")
        self.phi = phi
        self.strong = strong
        self.t = t
        self.k = k
        self.N = phi.N
        self._domain = None

    @property
    def domain(self):
        if self._domain is None:
            if self.N > 16:
                raise CapacityError(f"refusing to materialise 2^{self.N} vertices")
            self._domain = tuple(universe(self.N))
        return self._domain

    def color(self, edge):
        d = delta_sequence(edge)
        if len(edge) != self.k:
            raise DomainError(f"edge size {len(edge)} differs from k={self.k}")
        return _stepup_from_deltas(self.phi, d, self.k, self.strong)

    def color_ints(self, values: Sequence[int]) -> Color:
        """Color of an edge given as increasing integer encodings."""
        n = self.N
        d = tuple(n - (a ^ b).bit_length() + 1 for a, b in zip(values, values[1:]))
        return _stepup_from_deltas(self.phi, d, self.k, self.strong)

    def color_bytes(self) -> bytes:
        """Explicit colex table over {0,1}^N; refused for N > 6."""
        if self.N > EXPLICIT_STEPUP_MAX_N:
            raise CapacityError(f"explicit stepping-up tables are refused for N > {EXPLICIT_STEPUP_MAX_N}")
        return bytes(kernels.stepup_table(self.N, self.k, self.phi.red, self.strong))


# -- partial Steiner systems -------------------------------------------------

@dataclass
class SteinerFamily:
    n: int
    k: int
    blocks: list[tuple[int, ...]]

    def is_packing(self) -> bool:
        """Pairwise intersections are at most k-2 (brute force over pairs)."""
        sets = [set(b) for b in self.blocks]
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if len(a & b) > self.k - 2:
                    return False
        return True

    def is_maximal(self) -> bool:
        """Every other k-subset of [n] meets some block in >= k-1 points."""
        blocks = set(self.blocks)
        sets = [set(b) for b in self.blocks]
        for e in enumerate_k_subsets(self.n, self.k):
            if e in blocks:
                continue
            es = set(e)
            if not any(len(es & b) >= self.k - 1 for b in sets):
                return False
        return True

    def counting_bound(self) -> Fraction:
        """C(n,k) / (1 + k(n-k)): each block blocks at most that many k-sets."""
        return Fraction(comb(self.n, self.k), 1 + self.k * (self.n - self.k))


def greedy_partial_steiner(n: int, k: int) -> SteinerFamily:
    """Maximal packing built by inserting k-subsets of [n] in colex order."""
    if k < 2:
        raise DomainError("block size must be at least 2")
    if n < k:
        raise DomainError(f"n={n} is smaller than k={k}")
    covered: set[tuple[int, ...]] = set()
    blocks = []
    for e in enumerate_k_subsets(n, k):
        shadow = [e[:i] + e[i + 1:] for i in range(k)]
        if any(s in covered for s in shadow):
            continue
        covered.update(shadow)
        blocks.append(e)
    return SteinerFamily(n, k, blocks)
