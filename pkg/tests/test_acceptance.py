"""Acceptance gate: one test per criterion, one PASS/FAIL line per criterion.

The summary lines are printed at the end of the pytest run (see conftest.py)
and also when this file is executed directly.
"""
import functools
import itertools
import math
import random
import time

import pytest

from hyperramsey.bounds import bound_report, tower
from hyperramsey.colorings import (BaseTwoColoring, RankColoring, SteppingUpColoring,
                                   greedy_partial_steiner, random_base)
from hyperramsey.core import BLUE, RED
from hyperramsey.delta import BitVertex, delta, delta_sequence, universe
from hyperramsey.exact import RamseyQuery, exact_ramsey, find_good_coloring
from hyperramsey.game import (Game, OutcomeKind, check_bounds, check_observations,
                              constant_painter, explore_game_tree, minimax_painter,
                              random_painter, resource_bounds, verify_outcome)
from hyperramsey.verifier import (NotGuaranteed, check_case1, check_claim1,
                                  check_sequence_dichotomy, max_red, pattern_sequence,
                                  rank_lemma_exhaustive, red_histogram)

RESULTS: dict[int, tuple[bool, str]] = {}
TITLES = {
    1: "delta properties A and B",
    2: "rank coloring: at most 2 red edges per (k+1)-set",
    3: "rank coloring red density near 1/27",
    4: "Claim 1 at k=6, N=5",
    5: "zigzag scarcity with an all-blue base",
    6: "Case-1 deletion propagation",
    7: "sequence dichotomy",
    8: "builder-painter game",
    9: "exact search values",
    10: "greedy partial Steiner packer",
    11: "tower and bound calculators",
}


def criterion(num, limit=None):
    """Record the outcome of an acceptance test; ``limit`` is the runtime budget in seconds."""
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[num] = (False, f"{type(exc).__name__}: {exc}")
                raise
            took = time.perf_counter() - start
            ok = limit is None or took <= limit
            RESULTS[num] = (ok, f"{detail} [{took:.1f}s]")
            assert ok, f"runtime {took:.1f}s exceeds {limit}s"
        return inner
    return wrap


def summary_lines():
    out = []
    for num in sorted(TITLES):
        if num not in RESULTS:
            out.append(f"criterion {num:2d} NOT RUN  {TITLES[num]}")
            continue
        ok, detail = RESULTS[num]
        out.append(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {TITLES[num]}: {detail}")
    return out


# 1 ---------------------------------------------------------------------------

@pytest.mark.slow
@criterion(1, limit=60)
def test_criterion_01_delta_properties():
    checked = bad = 0
    for N in range(1, 5):
        U = universe(N)
        for a, b, c in itertools.combinations(U, 3):
            checked += 1
            bad += delta(a, b) == delta(b, c)
        for r in range(2, 7):
            for S in itertools.combinations(U, r):
                d = delta_sequence(S)
                checked += 1
                bad += delta(S[0], S[-1]) != min(d)
    rng = random.Random(2024)
    for _ in range(10 ** 5):
        S = sorted(rng.sample(range(1 << 16), rng.randint(3, 8)))
        S = [BitVertex.from_int(v, 16) for v in S]
        d = delta_sequence(S)
        checked += 1
        bad += delta(S[0], S[-1]) != min(d) or any(x == y for x, y in zip(d, d[1:]))
    assert bad == 0
    return f"{checked} checks, {bad} violations"


# 2 ---------------------------------------------------------------------------

@criterion(2, limit=300)
def test_criterion_02_rank_lemma():
    count, worst, bad = rank_lemma_exhaustive(5, 3)
    assert count == 3 ** 10 and bad is None and worst <= 2
    worst_random = 0
    for N, k in ((12, 3), (10, 4)):
        for seed in range(100):
            hist, w = red_histogram(RankColoring(random_base(N, k, seed)), 3)
            assert w is None
            worst_random = max(worst_random, max_red(hist))
    assert worst_random <= 2
    return f"all {count} bases at N=5 and 200 seeded bases: max red count {max(worst, worst_random)}"


# 3 ---------------------------------------------------------------------------

@criterion(3, limit=60)
def test_criterion_03_red_density():
    N, k, seed = 40, 3, 7
    p = 1 / 27
    oracle = RankColoring(random_base(N, k, seed))
    table = oracle.color_bytes()
    frac = sum(table) / len(table)
    # edges of a partial Steiner family pairwise share at most k-2 points, so
    # their colors are independent; use its size for the binomial spread
    fam = greedy_partial_steiner(N, k)
    m = len(fam.blocks)
    sigma = math.sqrt(p * (1 - p) / m)
    fam_frac = sum(oracle.color(b) == RED for b in fam.blocks) / m
    z_all = (frac - p) / sigma
    z_fam = (fam_frac - p) / sigma
    assert abs(z_all) <= 4 and abs(z_fam) <= 4
    return (f"red fraction {frac:.4f} over {len(table)} edges (z={z_all:+.2f}), "
            f"{fam_frac:.4f} over {m} packing blocks (z={z_fam:+.2f}), sigma={sigma:.4f}")


# 4 ---------------------------------------------------------------------------

@criterion(4, limit=1800)
def test_criterion_04_claim1():
    checked, bad, first = check_claim1(5, 6)
    assert checked > 0 and bad == 0, first
    return f"{checked} shared 5-sets checked, {bad} violations"


# 5 ---------------------------------------------------------------------------

@criterion(5, limit=3600)
def test_criterion_05_zigzag_scarcity():
    std = SteppingUpColoring(BaseTwoColoring.constant(5, 6, BLUE))
    h6, _ = red_histogram(std, 4)
    strong = SteppingUpColoring(BaseTwoColoring.constant(5, 7, BLUE), strong=True)
    h7, _ = red_histogram(strong, 4)
    assert max_red(h6) <= 3 and max_red(h7) <= 3
    return (f"k=6 standard: max {max_red(h6)} over {sum(h6)} 7-sets; "
            f"k=7 strong: max {max_red(h7)} over {sum(h7)} 8-sets")


# 6 ---------------------------------------------------------------------------

@pytest.mark.slow
@criterion(6)
def test_criterion_06_case1():
    n_inc, n_dec, n_bad, first = check_case1(5, 6)
    assert n_bad == 0, first
    # at N=5 no 7-set has 6 distinct deltas, so the statement is vacuous there;
    # N=6 has monotone 7-sets and is checked as well
    m_inc, m_dec, m_bad, first = check_case1(6, 6)
    assert m_bad == 0 and m_inc > 0, first
    return (f"N=5: {n_inc} increasing / {n_dec} decreasing 7-sets (vacuous), 0 violations; "
            f"N=6: {m_inc} increasing / {m_dec} decreasing, {m_bad} violations")


# 7 ---------------------------------------------------------------------------

def _maximal_pairs(L):
    """(k, n) pairs with 2kn-1 <= L not dominated by another such pair."""
    pairs = [(k, n) for k in range(1, L + 1) for n in range(1, L + 1) if 2 * k * n - 1 <= L]
    return [(k, n) for k, n in pairs
            if not any(k2 >= k and n2 >= n and (k2, n2) != (k, n) for k2, n2 in pairs)]


@pytest.mark.slow
@criterion(7, limit=120)
def test_criterion_07_dichotomy():
    # a NotGuaranteed answer for (k, n) would also be one for every larger pair,
    # so the maximal pairs for each length cover all of them
    calls = 0
    for L in range(1, 21):
        pairs = _maximal_pairs(L)
        for p in range(1 << (L - 1)):
            seq = pattern_sequence(p, L)
            for k, n in pairs:
                calls += 1
                assert not isinstance(check_sequence_dichotomy(seq, n, k), NotGuaranteed), (seq, n, k)
    rng = random.Random(77)
    for k, n in ((6, 3), (7, 3)):
        L = 2 * k * n - 1
        for _ in range(10 ** 4):
            seq = [rng.randrange(100)]
            while len(seq) < L:
                v = rng.randrange(100)
                if v != seq[-1]:
                    seq.append(v)
            calls += 1
            assert not isinstance(check_sequence_dichotomy(seq, n, k), NotGuaranteed), seq
    return f"{calls} calls (all patterns of length <= 20 plus 2x10^4 random), none NotGuaranteed"


# 8 ---------------------------------------------------------------------------

GAME_CASES = [(3, n) for n in range(2, 7)] + [(4, n) for n in range(2, 5)]


@criterion(8, limit=600)
def test_criterion_08_game():
    games = 0
    trees = []
    for k, n in GAME_CASES:
        painters = [constant_painter(RED), constant_painter(BLUE), minimax_painter(4)]
        painters += [random_painter(s) for s in range(50)]
        for painter in painters:
            g = Game(k, n)
            problems = []
            out = g.play(painter, lambda gm: problems.extend(check_observations(gm.settled_state(), gm.over)))
            games += 1
            assert out.kind in (OutcomeKind.RED_F, OutcomeKind.BLUE_CLIQUE)
            assert problems == [], problems
            assert check_bounds(k, n, out.stats) == []
            assert verify_outcome(g)
        rep = explore_game_tree(k, n, node_limit=10 ** 7)
        assert rep.complete and rep.problems == [], rep.problems[:3]
        b = resource_bounds(k, n)
        assert rep.max_s <= b.s and rep.max_r <= b.r
        trees.append(f"({k},{n}):{rep.nodes}n/s<={rep.max_s}")
    return f"{games} games, full trees {' '.join(trees)}"


# 9 ---------------------------------------------------------------------------

def _good(col, k, t, n, N):
    for Y in itertools.combinations(range(1, N + 1), k + 1):
        if sum(col[e] == RED for e in itertools.combinations(Y, k)) >= t:
            return False
    return not any(all(col[e] == BLUE for e in itertools.combinations(X, k))
                   for X in itertools.combinations(range(1, N + 1), n))


def _brute_none_good(k, t, n, N):
    edges = list(itertools.combinations(range(1, N + 1), k))
    for bits in itertools.product((BLUE, RED), repeat=len(edges)):
        if _good(dict(zip(edges, bits)), k, t, n, N):
            return False
    return True


@criterion(9, limit=1800)
def test_criterion_09_exact():
    vals = {t: exact_ramsey(RamseyQuery(3, t, 3)).value for t in (2, 3, 4)}
    assert vals == {2: 4, 3: 4, 4: 4}
    res = exact_ramsey(RamseyQuery(3, 2, 4, N_max=10))
    V = res.value
    assert V is not None and V <= 10
    assert res.good_coloring is not None and _good(res.good_coloring, 3, 2, 4, V - 1)
    assert find_good_coloring(3, 2, 4, V) is None
    assert _brute_none_good(3, 2, 4, V)  # independent: all 2^C(V,3) colorings
    return f"r(3,t,3)=4 for t=2,3,4; r_3(4,2;4)={V}, good coloring at {V - 1}, none at {V}"


# 10 --------------------------------------------------------------------------

@criterion(10, limit=60)
def test_criterion_10_steiner():
    sizes = []
    for n in range(7, 31):
        fam = greedy_partial_steiner(n, 3)
        assert fam.is_packing()
        assert fam.is_maximal()
        assert len(fam.blocks) >= fam.counting_bound()
        sizes.append(len(fam.blocks))
    return f"n=7..30 packing and maximal; sizes {sizes[0]}..{sizes[-1]}"


# 11 --------------------------------------------------------------------------

@criterion(11)
def test_criterion_11_bounds():
    cases = 0
    for h in range(1, 6):
        for x in range(0, 7):
            try:
                v = tower(h, x)
            except Exception:
                continue
            ref = x
            for _ in range(h - 1):
                ref = 2 ** ref
            assert v == ref
            cases += 1
    rows = 0
    for k in range(6, 13):
        for t in range(4, k - 1):
            r = bound_report(k, t, 10, c=1)
            even = (k - t) % 2 == 0
            expected = 10 ** (k - t + 1) if even else 10 ** ((k - t + 1) // 2)
            assert r.lower.height == t - 1 and r.lower.arg == expected
            assert ("even" in r.theorem) == even
            rows += 1
    return f"{cases} in-cap tower values, {rows} (k,t) parity rows"


if __name__ == "__main__":
    import sys
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
