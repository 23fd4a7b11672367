"""Exact small values of r_k(k+1, t; n) by backtracking with propagation.

A coloring of the k-subsets of [N] is *good* when no (k+1)-set has t or more
red edges and no n-set is entirely blue.  The value is the least N with no
good coloring.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import BLUE, RED, Color, colex_indices, colex_rank
from .errors import CapacityError, DomainError

DEFAULT_MAX_EDGES = 40
FIXTURE_VERSION = 1


@dataclass(frozen=True)
class RamseyQuery:
    k: int
    t: int
    n: int
    N_max: int = 10

    def __post_init__(self):
        if self.k < 2:
            raise DomainError("k must be at least 2")
        if not 2 <= self.t <= self.k + 1:
            raise DomainError(f"t={self.t} outside 2..{self.k + 1}")
        if self.n < self.k:
            raise DomainError(f"n={self.n} must be at least k={self.k}")


@dataclass
class ExactResult:
    query: RamseyQuery
    value: int | None          # None when every N <= N_max admits a good coloring
    searched_up_to: int
    good_coloring: dict | None  # a good coloring of [value-1] (or of [N_max])

    @property
    def exceeded(self) -> bool:
        return self.value is None


class _Search:
    def __init__(self, k: int, t: int, n: int, N: int):
        self.k, self.t, self.n, self.N = k, t, n, N
        self.edges = list(colex_indices(N, k))
        E = len(self.edges)
        # constraint c: (member edges, is_red_cap); red caps need red <= t-1,
        # blue-clique constraints need red >= 1
        self.members: list[list[int]] = []
        self.red_cap: list[bool] = []
        for Y in colex_indices(N, k + 1):
            self.members.append([colex_rank(Y[:i] + Y[i + 1:]) for i in range(k + 1)])
            self.red_cap.append(True)
        if n <= N:
            for X in colex_indices(N, n):
                self.members.append([colex_rank(e) for e in colex_indices(n, k)
                                     for e in [tuple(X[j] for j in e)]])
                self.red_cap.append(False)
        self.of_var: list[list[int]] = [[] for _ in range(E)]
        for c, mem in enumerate(self.members):
            for v in mem:
                self.of_var[v].append(c)
        self.val = [-1] * E
        self.red = [0] * len(self.members)
        self.blue = [0] * len(self.members)
        self.trail: list[int] = []
        self.nodes = 0

    def _assign(self, v: int, c: int) -> bool:
        """Assign and propagate; False on conflict (trail keeps what to undo)."""
        queue = [(v, c)]
        while queue:
            v, c = queue.pop()
            if self.val[v] != -1:
                if self.val[v] != c:
                    return False
                continue
            self.val[v] = c
            self.trail.append(v)
            counts = self.red if c == RED else self.blue
            for ci in self.of_var[v]:
                counts[ci] += 1
            for ci in self.of_var[v]:
                mem = self.members[ci]
                if self.red_cap[ci]:
                    if self.red[ci] > self.t - 1:
                        return False
                    if self.red[ci] == self.t - 1:
                        queue.extend((u, BLUE) for u in mem if self.val[u] == -1)
                elif self.red[ci] == 0:
                    free = len(mem) - self.blue[ci]
                    if free == 0:
                        return False
                    if free == 1:
                        queue.extend((u, RED) for u in mem if self.val[u] == -1)
        return True

    def _undo(self, mark: int):
        while len(self.trail) > mark:
            v = self.trail.pop()
            c = self.val[v]
            self.val[v] = -1
            for ci in self.of_var[v]:
                if c == RED:
                    self.red[ci] -= 1
                else:
                    self.blue[ci] -= 1

    def solve(self) -> list[int] | None:
        E = len(self.edges)
        if E == 0:
            ok = not any(not rc for rc in self.red_cap)
            return [] if ok else None
        # a good coloring with N >= n has a red edge; permute it onto edge 0
        if self.n <= self.N:
            if not self._assign(0, RED):
                return None
        if self._dfs(0):
            return list(self.val)
        return None

    def _dfs(self, start: int) -> bool:
        self.nodes += 1
        v = start
        while v < len(self.val) and self.val[v] != -1:
            v += 1
        if v == len(self.val):
            return True
        for c in (BLUE, RED):
            mark = len(self.trail)
            if self._assign(v, c) and self._dfs(v + 1):
                return True
            self._undo(mark)
        return False


def find_good_coloring(k: int, t: int, n: int, N: int) -> dict | None:
    """A good coloring of the k-subsets of [N] as {edge: Color}, or None."""
    s = _Search(k, t, n, N)
    sol = s.solve()
    if sol is None:
        return None
    return {tuple(x + 1 for x in e): Color(c) for e, c in zip(s.edges, sol)}


def exact_ramsey(q: RamseyQuery, max_edges: int = DEFAULT_MAX_EDGES) -> ExactResult:
    """Least N <= q.N_max with no good coloring.

    The edge guard applies to each N actually searched, so a query whose
    answer is small terminates even when C(N_max, k) exceeds ``max_edges``.
    """
    prev = None
    for N in range(1, q.N_max + 1):
        if comb(N, q.k) > max_edges:
            raise CapacityError(f"N={N} needs {comb(N, q.k)} edge variables (guard {max_edges})")
        col = find_good_coloring(q.k, q.t, q.n, N)
        if col is None:
            return ExactResult(q, N, N, prev)
        prev = col
    return ExactResult(q, None, q.N_max, prev)


def fixture_lines(queries, max_edges: int = DEFAULT_MAX_EDGES) -> list[str]:
    """Fixture table rows ``k t n value searched_up_to`` (value '>' when exceeded)."""
    out = [f"# exact r_k(k+1,t;n) table, format version {FIXTURE_VERSION}",
           "# regenerate with: hyperramsey exact --table; do not edit by hand",
           "# k t n value searched_up_to"]
    for q in queries:
        try:
            r = exact_ramsey(q, max_edges)
        except CapacityError:
            continue
        val = str(r.value) if r.value is not None else f">{r.searched_up_to}"
        out.append(f"{q.k} {q.t} {q.n} {val} {r.searched_up_to}")
    return out


TABLE_MAX_EDGES = 130

# entries that finish in well under a second each
DEFAULT_TABLE = [RamseyQuery(k, t, n, 10) for k, t, n in (
    (3, 2, 3), (3, 3, 3), (3, 4, 3), (3, 2, 4), (3, 3, 4), (3, 2, 5),
    (4, 2, 4), (4, 3, 4), (4, 4, 4), (4, 5, 4), (4, 2, 5))]
