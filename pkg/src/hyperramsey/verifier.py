"""Brute-force checks of the structural lemmas behind the colorings."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from . import kernels
from .colorings import (BaseTwoColoring, KaryBaseColoring, RankColoring, SteppingUpColoring,
                        SteinerFamily)
from .core import (RED, ColoringOracle, ConfigurationWitness, colex_indices,
                   find_blue_clique, find_red_configuration)
from .delta import BitVertex, delta_int
from .errors import CapacityError, DomainError

MAX_SCAN_SUBSETS = 5 * 10 ** 7


# -- sequence dichotomy --------------------------------------------------------

@dataclass(frozen=True)
class MonotoneRun:
    start: int          # 1-based
    length: int
    increasing: bool


@dataclass(frozen=True)
class AlternatingExtrema:
    positions: tuple[int, ...]   # 1-based; first is a local maximum


@dataclass(frozen=True)
class NotGuaranteed:
    length: int
    required: int


def check_sequence_dichotomy(seq: Sequence, n: int, k: int):
    """A run of ``n`` strictly monotone consecutive entries, or else ``k``
    consecutive local extrema starting with a maximum.

    At length >= 2kn - 1 one of the two always exists; below that a
    :class:`NotGuaranteed` marker is returned when neither is found.
    """
    d = list(seq)
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    if any(a == b for a, b in zip(d, d[1:])):
        raise DomainError("adjacent entries must differ")
    L = len(d)
    if n == 1 and L:
        return MonotoneRun(1, 1, True)
    # run = number of entries in the current strictly monotone stretch
    start, run, up = 0, 1, None
    for i in range(1, L):
        step_up = d[i] > d[i - 1]
        if up is None or step_up == up:
            run += 1
        else:
            start, run = i - 1, 2
        up = step_up
        if run >= n:
            return MonotoneRun(start + 1, n, up)
    extrema = []
    for i in range(1, L - 1):
        if d[i - 1] < d[i] > d[i + 1]:
            extrema.append(i)
        elif d[i - 1] > d[i] < d[i + 1]:
            extrema.append(i)
    for j, i in enumerate(extrema):
        if d[i] > d[i - 1] and j + k <= len(extrema):
            return AlternatingExtrema(tuple(p + 1 for p in extrema[j:j + k]))
    return NotGuaranteed(L, 2 * k * n - 1)


def pattern_sequence(pattern: int, length: int) -> list[int]:
    """Canonical sequence whose i-th step goes up iff bit i of ``pattern`` is set."""
    out = [0]
    for i in range(length - 1):
        out.append(out[-1] + (1 if (pattern >> i) & 1 else -1))
    return out


# -- red scans through the kernels -------------------------------------------

def _tokens(oracle: ColoringOracle, idx: Sequence[int]) -> tuple:
    dom = oracle.domain
    return tuple(dom[i] for i in idx)


def red_histogram(oracle: ColoringOracle, t: int, jobs: int = 1):
    """Red-count histogram over all (k+1)-subsets, plus the colex-first set
    with >= t red edges (as a witness), via the scan kernels.

    The oracle must expose ``color_bytes()`` (a colex table over its domain).
    """
    k = oracle.k
    M = len(oracle.domain)
    if comb(M, k + 1) > MAX_SCAN_SUBSETS:
        raise CapacityError(f"C({M},{k + 1}) subsets exceed the scan guard")
    table = oracle.color_bytes()
    hist, w = kernels.red_scan(M, k, table, t, jobs=jobs)
    witness = None
    if w is not None:
        S = _tokens(oracle, w)
        reds = tuple(S[:i] + S[i + 1:] for i in range(k + 1) if oracle.color(S[:i] + S[i + 1:]) == RED)
        from .core import WitnessKind
        witness = ConfigurationWitness(WitnessKind.RED_HT, S, tuple(sorted(reds, key=lambda e: tuple(reversed(e)))))
    return hist, witness


def max_red(hist: Sequence[int]) -> int:
    return max((i for i, c in enumerate(hist) if c), default=0)


def rank_lemma_exhaustive(N: int, k: int = 3):
    """Max red count over (k+1)-sets, across *all* k-ary base colorings of [N].

    Returns ``(colorings_checked, max_red_seen, first_bad_values)``.
    """
    size = comb(N, k - 1)
    if k ** size > 10 ** 7:
        raise CapacityError(f"{k}^{size} base colorings is too many to enumerate")
    worst = 0
    backend = kernels.get_backend()
    bad = None
    count = 0
    for vals in itertools.product(range(1, k + 1), repeat=size):
        count += 1
        table = backend.rank_table(N, k, bytes(vals))
        hist, w = backend.red_scan(N, k, table, 3, 0, N)
        m = max_red(hist)
        worst = max(worst, m)
        if w is not None and bad is None:
            bad = vals
    return count, worst, bad


def red_density(phi: KaryBaseColoring) -> float:
    table = kernels.rank_table(phi.N, phi.k, phi.values)
    return sum(table) / len(table)


def steiner_red_count(phi: KaryBaseColoring, family: SteinerFamily) -> int:
    oracle = RankColoring(phi)
    return sum(1 for b in family.blocks if oracle.color(b) == RED)


# -- stepping-up conclusions ---------------------------------------------------

class StepStatus(enum.Enum):
    PASS = "pass"
    COUNTER = "counter-witness"
    VACUOUS = "vacuous-precondition"


@dataclass
class StepResult:
    status: StepStatus
    k: int
    t: int
    n: int
    N: int
    mode: str
    precondition: list[str] = field(default_factory=list)
    red_hist: list[int] | None = None
    red_witness: ConfigurationWitness | None = None
    blue_target: int = 0
    blue_checked: bool = False
    blue_witness: ConfigurationWitness | None = None

    @property
    def red_max(self) -> int | None:
        return None if self.red_hist is None else max_red(self.red_hist)


def base_precondition(phi: BaseTwoColoring, t: int, n: int) -> list[str]:
    """Reasons the base coloring fails the stepping-up hypothesis (empty if none)."""
    out = []
    u = phi.k
    if 2 <= t - 1 <= u + 1:
        w = find_red_configuration(phi, t - 1)
        if w is not None:
            out.append(f"base has a red H_{t - 1} on {w.vertices}")
    if n <= phi.N:
        if n < u:
            out.append(f"base trivially has a blue K_{n} (n < {u})")
        else:
            w = find_blue_clique(phi, n)
            if w is not None:
                out.append(f"base has a blue K_{n} on {w.vertices}")
    return out


def check_stepping_conclusion(phi: BaseTwoColoring, t: int, n: int, mode: str = "standard",
                              jobs: int = 1, allow_unverified: bool = False,
                              force: bool = False) -> StepResult:
    """Scan the stepped-up coloring of {0,1}^N for a red H_t or a big blue clique.

    The blue side is only searched when the target clique (2kn, or 4n^2 for
    the strong rule) fits inside the 2^N vertices; otherwise it is reported
    as unchecked.
    """
    if mode not in ("standard", "strong"):
        raise DomainError(f"unknown mode {mode!r}")
    k = phi.target_k
    N = phi.N
    M = 1 << N
    strong = mode == "strong"
    oracle = SteppingUpColoring(phi, strong=strong, t=t, allow_unverified=allow_unverified)
    res = StepResult(StepStatus.PASS, k, t, n, N, mode)
    res.precondition = base_precondition(phi, t, n)
    if res.precondition and not force:
        res.status = StepStatus.VACUOUS
        return res
    if comb(M, k + 1) > MAX_SCAN_SUBSETS:
        raise CapacityError(f"C(2^{N},{k + 1}) = {comb(M, k + 1)} subsets exceed the scan guard")
    res.red_hist, res.red_witness = red_histogram(oracle, t, jobs=jobs)
    res.blue_target = 4 * n * n if strong else 2 * k * n
    if res.blue_target <= M:
        res.blue_checked = True
        res.blue_witness = find_blue_clique(oracle, res.blue_target)
    if res.red_witness is not None or res.blue_witness is not None:
        res.status = StepStatus.COUNTER
    return res


# -- structural lemmas ----------------------------------------------------------

def check_claim1(N: int, k: int = 6):
    """(k-1)-sets of {0,1}^N with one monotone and one zigzag extension.

    Returns ``(sets_checked, violations, first)``; ``first`` is
    ``(P, x, y)`` in BitVertex form.
    """
    classes = kernels.class_table(N, k)
    checked, bad, first = kernels.claim1_scan(N, k, classes)
    if first is not None:
        P, x, y = first
        first = (tuple(BitVertex.from_int(v, N) for v in P),
                 BitVertex.from_int(x, N), BitVertex.from_int(y, N))
    return checked, bad, first


def check_case1(N: int, k: int = 6, jobs: int = 1):
    """Deletion propagation on monotone (k+1)-sets; ``(n_inc, n_dec, n_bad, first)``."""
    return kernels.case1_scan(N, k, jobs=jobs)


def property_a_violations(N: int, triples: Iterable[tuple[int, int, int]] | None = None) -> int:
    """Triples a < b < c of {0,1}^N (as ints) with delta(a,b) == delta(b,c)."""
    if triples is None:
        triples = colex_indices(1 << N, 3)
    return sum(1 for a, b, c in triples if delta_int(a, b, N) == delta_int(b, c, N))


def property_b_violations(N: int, tuples: Iterable[Sequence[int]]) -> int:
    """Increasing tuples where delta(a_1, a_r) != min of consecutive deltas."""
    bad = 0
    for a in tuples:
        if delta_int(a[0], a[-1], N) != min(delta_int(x, y, N) for x, y in zip(a, a[1:])):
            bad += 1
    return bad


def fact_violations(N: int, tuples: Iterable[Sequence[int]]) -> int:
    """Sequences with d_i == d_{i+2} although d_{i+1} > d_i."""
    bad = 0
    for a in tuples:
        d = [delta_int(x, y, N) for x, y in zip(a, a[1:])]
        for i in range(len(d) - 2):
            if d[i + 1] > d[i] and d[i] == d[i + 2]:
                bad += 1
                break
    return bad
