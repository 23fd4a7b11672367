"""Edges, colorings, colex enumeration and configuration finders.

Vertices are opaque ordered tokens: the finders only compare them, so the same
code runs over ``1..N`` and over :class:`~hyperramsey.delta.BitVertex`.
Every finder reports the colex-first witness, which makes results
reproducible regardless of how a scan is partitioned.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DomainError

Edge = tuple


class Color(enum.IntEnum):
    BLUE = 0
    RED = 1

    @property
    def symbol(self) -> str:
        return "R" if self is Color.RED else "B"

    @classmethod
    def from_symbol(cls, s: str) -> "Color":
        if s == "R":
            return cls.RED
        if s == "B":
            return cls.BLUE
        raise DomainError(f"unknown color symbol {s!r}")


RED = Color.RED
BLUE = Color.BLUE


# -- colex machinery ---------------------------------------------------------

def colex_indices(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of ``range(m)`` as sorted tuples, in colex order."""
    if k < 0 or m < 0:
        raise DomainError("sizes must be non-negative")
    if k > m:
        return
    if k == 0:
        yield ()
        return
    c = list(range(k))
    last = k - 1
    while True:
        yield tuple(c)
        i = 0
        while i < last and c[i] + 1 == c[i + 1]:
            i += 1
        if i == last and c[i] + 1 == m:
            return
        c[i] += 1
        c[:i] = range(i)


def enumerate_k_subsets(domain_size: int, k: int) -> Iterator[tuple[int, ...]]:
    """Stream every k-subset of ``{1..domain_size}`` once, in colex order."""
    for c in colex_indices(domain_size, k):
        yield tuple(x + 1 for x in c)


def colex_subsets(tokens: Sequence, k: int) -> Iterator[tuple]:
    """k-subsets of a sorted token sequence, colex order over positions."""
    for c in colex_indices(len(tokens), k):
        yield tuple(tokens[i] for i in c)


def colex_rank(subset: Sequence[int]) -> int:
    """Position of a sorted subset of ``range(m)`` in colex order (0-based)."""
    return sum(comb(x, j + 1) for j, x in enumerate(subset))


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank`."""
    out = []
    for j in range(k, 0, -1):
        x = j - 1
        while comb(x + 1, j) <= rank:
            x += 1
        out.append(x)
        rank -= comb(x, j)
    return tuple(reversed(out))


def colex_key(subset: Sequence) -> tuple:
    """Sort key realising colex order on sorted tuples of equal length."""
    return tuple(reversed(subset))


def colex_compare(a: Sequence, b: Sequence) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b`` in colex order."""
    if len(a) != len(b):
        raise DomainError(f"cannot compare sets of sizes {len(a)} and {len(b)}")
    a = sorted(a)
    b = sorted(b)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


# -- colorings ---------------------------------------------------------------

class ColoringOracle:
    """A red/blue coloring of the k-subsets of an ordered vertex domain.

    Subclasses implement :meth:`color`; callers may also just call the oracle.
    Edges are passed as sorted tuples.
    """

    k: int
    domain: tuple

    def color(self, edge: Edge) -> Color:
        raise NotImplementedError

    def __call__(self, edge: Edge) -> Color:
        return self.color(edge)

    def is_red(self, edge: Edge) -> bool:
        return self.color(edge) == RED


class FunctionColoring(ColoringOracle):
    def __init__(self, k: int, domain: Iterable, fn: Callable[[Edge], Color]):
        self.k = k
        self.domain = tuple(sorted(domain))
        self._fn = fn

    def color(self, edge):
        return Color(self._fn(edge))


class ConstantColoring(ColoringOracle):
    def __init__(self, k: int, domain: Iterable, color: Color):
        self.k = k
        self.domain = tuple(sorted(domain))
        self.value = Color(color)

    def color(self, edge):
        return self.value


class TableColoring(ColoringOracle):
    """Coloring backed by an explicit edge table (total over the domain)."""

    def __init__(self, k: int, domain: Iterable, table: Mapping[Edge, Color]):
        self.k = k
        self.domain = tuple(sorted(domain))
        self.table = {tuple(e): Color(c) for e, c in table.items()}
        expected = comb(len(self.domain), k)
        if len(self.table) != expected:
            raise DomainError(f"table has {len(self.table)} edges, expected {expected}")

    @classmethod
    def from_oracle(cls, oracle: ColoringOracle) -> "TableColoring":
        table = {e: oracle.color(e) for e in colex_subsets(oracle.domain, oracle.k)}
        return cls(oracle.k, oracle.domain, table)

    def color(self, edge):
        try:
            return self.table[tuple(edge)]
        except KeyError:
            raise DomainError(f"edge {edge!r} is not in the table") from None

    def color_bytes(self) -> bytes:
        """Colors in colex order of domain positions, one byte per edge."""
        return bytes(int(self.table[e]) for e in colex_subsets(self.domain, self.k))


# -- witnesses ---------------------------------------------------------------

class WitnessKind(enum.Enum):
    BLUE_CLIQUE = "BlueClique"
    RED_HT = "RedHt"
    RED_F = "RedF"
    RED_FT = "RedFt"


@dataclass(frozen=True)
class ConfigurationWitness:
    kind: WitnessKind
    vertices: tuple
    red_edges: tuple = field(default=())

    def verify(self, oracle: ColoringOracle, t: int | None = None) -> bool:
        """Re-check the witness against ``oracle``."""
        k = oracle.k
        vs = tuple(self.vertices)
        if list(vs) != sorted(set(vs)):
            return False
        if self.kind is WitnessKind.BLUE_CLIQUE:
            return all(oracle.color(e) == BLUE for e in colex_subsets(vs, k))
        if not all(oracle.color(e) == RED for e in self.red_edges):
            return False
        if len(set(self.red_edges)) != len(self.red_edges):
            return False
        if not all(set(e) <= set(vs) and len(e) == k for e in self.red_edges):
            return False
        if self.kind is WitnessKind.RED_HT:
            return len(vs) == k + 1 and (t is None or len(self.red_edges) >= t)
        if self.kind is WitnessKind.RED_FT:
            return (len(vs) == k + 1 and vs[:k] in self.red_edges
                    and (t is None or len(self.red_edges) >= t))
        if self.kind is WitnessKind.RED_F:
            if len(vs) != k + 1 or len(self.red_edges) != 2:
                return False
            return set(self.red_edges) == {vs[:k], vs[:k - 1] + (vs[k],)}
        return False


def _check_set(oracle: ColoringOracle, S: Sequence, size: int) -> tuple:
    S = tuple(sorted(S))
    if len(S) != size or len(set(S)) != size:
        raise DomainError(f"expected {size} distinct vertices, got {len(S)}")
    return S


def red_edges_of(oracle: ColoringOracle, S: Sequence) -> list[Edge]:
    return [e for e in colex_subsets(tuple(sorted(S)), oracle.k) if oracle.color(e) == RED]


def red_count(oracle: ColoringOracle, S: Sequence) -> int:
    """Number of red k-subsets of a (k+1)-set."""
    S = _check_set(oracle, S, oracle.k + 1)
    return sum(int(oracle.color(e)) for e in colex_subsets(S, oracle.k))


def _domain(oracle: ColoringOracle, domain) -> tuple:
    return oracle.domain if domain is None else tuple(sorted(domain))


def find_red_configuration(oracle: ColoringOracle, t: int,
                           domain: Sequence | None = None) -> ConfigurationWitness | None:
    """Colex-first (k+1)-set carrying at least ``t`` red edges."""
    k = oracle.k
    if not 2 <= t <= k + 1:
        raise DomainError(f"t={t} outside 2..{k + 1}")
    for S in colex_subsets(_domain(oracle, domain), k + 1):
        reds = red_edges_of(oracle, S)
        if len(reds) >= t:
            return ConfigurationWitness(WitnessKind.RED_HT, S, tuple(reds))
    return None


def find_red_ordered_Ft(oracle: ColoringOracle, t: int,
                        domain: Sequence | None = None) -> ConfigurationWitness | None:
    """Colex-first a_1<...<a_{k+1} with (a_1..a_k) red and at least t red edges."""
    k = oracle.k
    if t < 2:
        raise DomainError("t must be at least 2")
    if t > k + 1:
        return None
    for S in colex_subsets(_domain(oracle, domain), k + 1):
        if oracle.color(S[:k]) != RED:
            continue
        reds = red_edges_of(oracle, S)
        if len(reds) >= t:
            return ConfigurationWitness(WitnessKind.RED_FT, S, tuple(reds))
    return None


def find_red_F(oracle: ColoringOracle, domain: Sequence | None = None) -> ConfigurationWitness | None:
    """Colex-first ordered F: red (a_1..a_k) and (a_1..a_{k-1}, a_{k+1}).

    Here k is the oracle's own uniformity (the game's k-1).
    """
    k = oracle.k
    for S in colex_subsets(_domain(oracle, domain), k + 1):
        e1 = S[:k]
        e2 = S[:k - 1] + (S[k],)
        if oracle.color(e1) == RED and oracle.color(e2) == RED:
            return ConfigurationWitness(WitnessKind.RED_F, S, (e1, e2))
    return None


def find_blue_clique(oracle: ColoringOracle, n: int,
                     domain: Sequence | None = None) -> ConfigurationWitness | None:
    """Colex-first n-set whose k-subsets are all blue, by backtracking.

    Vertices are chosen from the largest down, each level trying the smallest
    candidate first; that visits n-sets in colex order.
    """
    k = oracle.k
    if n < k:
        raise DomainError(f"clique size {n} is below uniformity {k}")
    dom = _domain(oracle, domain)
    chosen: list = []  # descending

    def extend(limit: int) -> bool:
        need = n - len(chosen)
        if need == 0:
            return True
        for i in range(need - 1, limit):
            v = dom[i]
            # new k-subsets are v plus (k-1) of the already chosen vertices
            ok = True
            for rest in combinations(reversed(chosen), k - 1):
                if oracle.color((v,) + rest) != BLUE:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(v)
            if extend(i):
                return True
            chosen.pop()
        return False

    if n > len(dom):
        return None
    if extend(len(dom)):
        return ConfigurationWitness(WitnessKind.BLUE_CLIQUE, tuple(sorted(chosen)))
    return None
