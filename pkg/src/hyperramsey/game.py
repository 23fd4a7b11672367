"""The vertex on-line ordered builder-painter game with the labelling builder.

The builder exposes k-2 seed vertices (all in T), then for each new vertex v
draws S + v for the (k-2)-subsets S of T in colex order, stopping the stage at
the first red edge.  A vertex answered all-blue joins T.  Label position p of
every vertex refers to the p-th (k-2)-subset of T in colex order, which never
changes because T only grows by larger vertices.

Painters are callables ``painter(view, edge) -> Color``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .core import BLUE, RED, Color, ConfigurationWitness, WitnessKind, colex_subsets
from .errors import ContractViolation, DomainError
from .rng import Stream

STREAM_PAINTER = 3


class OutcomeKind(enum.Enum):
    RED_F = "RedF"
    BLUE_CLIQUE = "BlueClique"


@dataclass(frozen=True)
class Stats:
    s: int
    r: int
    m: int


@dataclass(frozen=True)
class GameOutcome:
    kind: OutcomeKind
    witness: ConfigurationWitness
    stats: Stats


def positions_bound(k: int, n: int) -> int:
    return comb(n, k - 2)


def resource_bounds(k: int, n: int) -> Stats:
    """Vertex, red-edge and edge budgets guaranteed by the builder strategy."""
    q = positions_bound(k, n) + 1
    s = 2 * q + (k - 2)
    return Stats(s=s, r=q, m=s * q)


@dataclass
class GameState:
    k: int
    n: int
    exposed: list[int] = field(default_factory=list)
    labels: dict[int, str] = field(default_factory=dict)
    T: list[int] = field(default_factory=list)
    drawn: dict[tuple, Color] = field(default_factory=dict)
    red_at: dict[int, int] = field(default_factory=dict)  # label position -> vertex
    red_edges: int = 0
    seeds: int = 0

    @property
    def stats(self) -> Stats:
        return Stats(len(self.exposed), self.red_edges, len(self.drawn))

    def copy(self) -> "GameState":
        return GameState(self.k, self.n, list(self.exposed), dict(self.labels), list(self.T),
                         dict(self.drawn), dict(self.red_at), self.red_edges, self.seeds)


class GameView:
    """Read-only window a painter gets onto the game."""

    def __init__(self, game: "Game"):
        self._game = game

    @property
    def k(self):
        return self._game.state.k

    @property
    def n(self):
        return self._game.state.n

    @property
    def stats(self) -> Stats:
        return self._game.state.stats

    @property
    def T(self) -> tuple:
        return tuple(self._game.state.T)

    def label(self, v: int) -> str:
        return self._game.state.labels[v]

    def drawn(self, edge: tuple) -> Color | None:
        return self._game.state.drawn.get(tuple(edge))

    def label_table(self):
        return label_table(self._game.state)

    def fork(self) -> "Game":
        """Independent copy of the game at this point, for look-ahead."""
        return self._game.copy()


Painter = Callable[[GameView, tuple], Color]


class Game:
    """Step-wise engine: query :meth:`pending`, answer with :meth:`answer`."""

    def __init__(self, k: int, n: int, budget: int | None = None, _empty: bool = False):
        if k < 3:
            raise DomainError("the game needs k >= 3")
        if n < 2:
            raise DomainError("clique target n must be at least 2")
        self.budget = budget if budget is not None else 4 * (positions_bound(k, n) + 1) + k
        if self.budget < 2 * (positions_bound(k, n) + 1) + k - 2:
            raise DomainError("budget is below the strategy's proven vertex bound")
        self.outcome: GameOutcome | None = None
        self.transcript: list[str] = []
        self._queue: list[tuple] = []
        self._pos = 0
        self._vertex = 0
        if _empty:
            return
        self.state = GameState(k, n)
        self.transcript.append(f"GAME {k} {n}")
        for _ in range(k - 2):
            v = self._expose()
            self.state.labels[v] = ""
            self.state.T.append(v)
        self.state.seeds = k - 2
        clique = self._blue_clique()
        if clique is not None:
            # n <= k-2: the seeds already span an edgeless blue clique
            self._finish(OutcomeKind.BLUE_CLIQUE, ConfigurationWitness(WitnessKind.BLUE_CLIQUE, clique),
                         f"WIN Blue {' '.join(map(str, clique))}")
            return
        self._begin_stage()

    def copy(self) -> "Game":
        g = Game(self.state.k, self.state.n, self.budget, _empty=True)
        g.state = self.state.copy()
        g.outcome = self.outcome
        g.transcript = list(self.transcript)
        g._queue = self._queue  # immutable within a stage
        g._pos = self._pos
        g._vertex = self._vertex
        return g

    def _expose(self) -> int:
        v = len(self.state.exposed) + 1
        if v > self.budget:
            raise ContractViolation(f"vertex budget {self.budget} exhausted without an outcome")
        self.state.exposed.append(v)
        self.transcript.append(f"EXPOSE {v}")
        return v

    def _begin_stage(self):
        v = self._expose()
        self._vertex = v
        self.state.labels[v] = ""
        self._queue = list(colex_subsets(tuple(self.state.T), self.state.k - 2))
        self._pos = 0

    @property
    def over(self) -> bool:
        return self.outcome is not None

    def pending(self) -> tuple | None:
        if self.outcome is not None:
            return None
        return self._queue[self._pos] + (self._vertex,)

    def answer(self, color: Color) -> None:
        if self.outcome is not None:
            raise DomainError("the game is over")
        st = self.state
        color = Color(color)
        edge = self.pending()
        v = self._vertex
        st.drawn[edge] = color
        st.labels[v] += color.symbol
        self.transcript.append(f"DRAW {' '.join(map(str, edge))} -> {color.symbol}")
        p = self._pos + 1
        if color == RED:
            st.red_edges += 1
            if p in st.red_at:
                u = st.red_at[p]
                S = self._queue[self._pos]
                e1, e2 = S + (u,), S + (v,)
                w = ConfigurationWitness(WitnessKind.RED_F, S + (u, v), (e1, e2))
                self._finish(OutcomeKind.RED_F, w,
                             f"WIN RedF {' '.join(map(str, e1))} | {' '.join(map(str, e2))}")
                return
            st.red_at[p] = v
            self._begin_stage()
            return
        self._pos += 1
        if self._pos < len(self._queue):
            return
        st.T.append(v)
        self.transcript.append(f"T+ {v}")
        clique = self._blue_clique()
        if clique is not None:
            w = ConfigurationWitness(WitnessKind.BLUE_CLIQUE, clique)
            self._finish(OutcomeKind.BLUE_CLIQUE, w, f"WIN Blue {' '.join(map(str, clique))}")
            return
        self._begin_stage()

    def _blue_clique(self) -> tuple | None:
        st = self.state
        u = st.k - 1
        if len(st.T) < st.n:
            return None
        for X in colex_subsets(tuple(st.T), st.n):
            if all(st.drawn.get(e) == BLUE for e in colex_subsets(X, u)):
                return X
        return None

    def _finish(self, kind, witness, line):
        self.outcome = GameOutcome(kind, witness, self.state.stats)
        self.transcript.append(line)

    def settled_state(self) -> GameState:
        """State as of the end of the last completed stage."""
        st = self.state.copy()
        if self.outcome is None and self._pos == 0 and st.exposed and st.exposed[-1] == self._vertex:
            st.exposed.pop()
            del st.labels[self._vertex]
        return st

    def play(self, painter: Painter, on_stage_end: Callable[["Game"], None] | None = None) -> GameOutcome:
        """Run to the end; ``on_stage_end`` is called after every completed stage."""
        view = GameView(self)
        while self.outcome is None:
            self.answer(painter(view, self.pending()))
            if on_stage_end is not None and (self.outcome is not None or self._pos == 0):
                on_stage_end(self)
        return self.outcome


def run_game(k: int, n: int, painter: Painter, budget: int | None = None,
             on_stage_end: Callable[[Game], None] | None = None) -> GameOutcome:
    """Play the builder strategy against ``painter`` until an outcome."""
    return Game(k, n, budget).play(painter, on_stage_end)


def label_table(state: GameState) -> list[tuple[int, str]]:
    return [(v, state.labels[v]) for v in state.exposed]


def check_observations(state: GameState, finished: bool = False) -> list[str]:
    """Violated stage-end observations, as messages (empty when all hold).

    ``finished`` relaxes observation 3 for the decisive red answer and skips
    the in-progress vertex otherwise.
    """
    problems = []
    q = positions_bound(state.k, state.n)
    T = set(state.T)
    nonseed = state.exposed[state.seeds:]
    for v in state.exposed:
        lab = state.labels[v]
        if ("R" not in lab) != (v in T):
            if not (finished and v == state.exposed[-1]):
                problems.append(f"obs1: vertex {v} label {lab!r} vs T membership {v in T}")
    for v in nonseed:
        lab = state.labels[v]
        shaped = lab.endswith("R") and "R" not in lab[:-1]
        if shaped != (v not in T) and not (finished and v == state.exposed[-1]):
            problems.append(f"obs2: vertex {v} label {lab!r}")
    seen: dict[int, int] = {}
    for v in nonseed:
        lab = state.labels[v]
        if lab.endswith("R"):
            p = len(lab)
            if p in seen and not (finished and v == state.exposed[-1]):
                problems.append(f"obs3: vertices {seen[p]} and {v} both red at position {p}")
            seen.setdefault(p, v)
    labs = [state.labels[v] for v in nonseed if not (finished and v == state.exposed[-1])]
    if len(set(labs)) != len(labs):
        problems.append("obs4: repeated labels")
    for v in nonseed:
        if state.labels[v].count("B") > q:
            problems.append(f"obs5: vertex {v} has more than {q} B's")
    for e in colex_subsets(tuple(state.T), state.k - 1):
        if state.drawn.get(e) != BLUE:
            problems.append(f"T-blue: {e} is {state.drawn.get(e)}")
            break
    st = state.stats
    if st.m != len(state.drawn) or st.r != sum(1 for c in state.drawn.values() if c == RED):
        problems.append("stats disagree with drawn edges")
    return problems


def check_bounds(k: int, n: int, stats: Stats) -> list[str]:
    b = resource_bounds(k, n)
    out = []
    if stats.s > b.s:
        out.append(f"s={stats.s} exceeds {b.s}")
    if stats.r > b.r:
        out.append(f"r={stats.r} exceeds {b.r}")
    if stats.m > stats.s * b.r:
        out.append(f"m={stats.m} exceeds s*(C(n,k-2)+1)={stats.s * b.r}")
    return out


def verify_outcome(game: Game) -> bool:
    """Re-check the outcome witness against the drawn edges."""
    out = game.outcome
    st = game.state
    if out is None:
        return False
    w = out.witness
    if out.kind is OutcomeKind.BLUE_CLIQUE:
        return len(w.vertices) == st.n and all(
            st.drawn.get(e) == BLUE for e in colex_subsets(tuple(w.vertices), st.k - 1))
    vs = w.vertices
    u = st.k - 1
    e1, e2 = vs[:u], vs[:u - 1] + (vs[u],)
    return (len(vs) == st.k and list(vs) == sorted(set(vs)) and set(w.red_edges) == {e1, e2}
            and st.drawn.get(e1) == RED and st.drawn.get(e2) == RED)


# -- painters ----------------------------------------------------------------

def constant_painter(color: Color) -> Painter:
    def painter(view, edge):
        return color
    return painter


def random_painter(seed: int) -> Painter:
    stream = Stream(seed, STREAM_PAINTER)

    def painter(view, edge):
        return RED if stream.coin() else BLUE
    return painter


def _lookahead(game: Game, depth: int) -> tuple[int, int]:
    if game.over or depth == 0:
        return game.state.stats.s, game.state.stats.m
    best = None
    for c in (BLUE, RED):
        g = game.copy()
        g.answer(c)
        score = _lookahead(g, depth - 1)
        if best is None or score > best:
            best = score
    return best


def minimax_painter(depth: int) -> Painter:
    """Answer each edge to maximise (vertices, edges) reached ``depth`` answers ahead.

    Ties go to blue.
    """
    if depth < 1:
        raise DomainError("look-ahead depth must be positive")

    def painter(view, edge):
        best_c, best = BLUE, None
        for c in (BLUE, RED):
            g = view.fork()
            g.answer(c)
            score = _lookahead(g, depth - 1)
            if best is None or score > best:
                best_c, best = c, score
        return best_c
    return painter


def parse_painter(spec: str) -> Painter:
    """``red``, ``blue``, ``random:SEED`` or ``minimax:DEPTH``."""
    name, _, arg = spec.partition(":")
    if name == "red" and not arg:
        return constant_painter(RED)
    if name == "blue" and not arg:
        return constant_painter(BLUE)
    try:
        if name == "random":
            return random_painter(int(arg))
        if name == "minimax":
            return minimax_painter(int(arg))
    except ValueError:
        pass
    raise DomainError(f"unknown painter {spec!r}")


# -- exhaustive game trees -----------------------------------------------------

@dataclass
class TreeReport:
    nodes: int = 0
    leaves: int = 0
    red_f: int = 0
    blue: int = 0
    max_s: int = 0
    max_r: int = 0
    max_m: int = 0
    problems: list[str] = field(default_factory=list)
    complete: bool = True


def explore_game_tree(k: int, n: int, node_limit: int = 10 ** 7,
                      check_stages: bool = True) -> TreeReport:
    """Play every painter reply sequence; check bounds and observations.

    A node is one painter decision.  Stops (``complete=False``) once more than
    ``node_limit`` nodes have been visited.
    """
    rep = TreeReport()
    stack = [Game(k, n)]
    while stack:
        g = stack.pop()
        if g.over:
            rep.leaves += 1
            st = g.outcome.stats
            if g.outcome.kind is OutcomeKind.RED_F:
                rep.red_f += 1
            else:
                rep.blue += 1
            rep.max_s = max(rep.max_s, st.s)
            rep.max_r = max(rep.max_r, st.r)
            rep.max_m = max(rep.max_m, st.m)
            rep.problems += check_bounds(k, n, st)
            if not verify_outcome(g):
                rep.problems.append(f"bad witness {g.outcome}")
            continue
        rep.nodes += 1
        if rep.nodes > node_limit:
            rep.complete = False
            break
        if check_stages and g._pos == 0:
            # start of a stage: the previous stage has just ended
            rep.problems += check_observations(g.settled_state())
        for c in (RED, BLUE):
            h = g.copy()
            h.answer(c)
            stack.append(h)
    return rep


# -- transcripts ---------------------------------------------------------------

def replay(lines: Iterable[str]) -> Game:
    """Re-run a transcript with its recorded answers; raises if it diverges."""
    lines = [ln.rstrip("\n") for ln in lines if ln.strip()]
    if not lines or not lines[0].startswith("GAME "):
        raise DomainError("transcript must start with 'GAME k n'")
    _, k, n = lines[0].split()
    answers = [Color.from_symbol(ln.rsplit(" ", 1)[1]) for ln in lines if ln.startswith("DRAW ")]
    it = iter(answers)

    def painter(view, edge):
        try:
            return next(it)
        except StopIteration:
            raise DomainError("transcript ended before the game") from None

    game = Game(int(k), int(n))
    game.play(painter)
    if game.transcript != lines:
        raise DomainError("replay diverged from the transcript")
    return game
