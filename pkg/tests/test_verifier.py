import itertools

import pytest
from hypothesis import given, strategies as st

from hyperramsey.colorings import BaseTwoColoring, greedy_partial_steiner, random_base
from hyperramsey.core import BLUE, RED
from hyperramsey.errors import CapacityError, DomainError
from hyperramsey.verifier import (AlternatingExtrema, MonotoneRun, NotGuaranteed, StepStatus,
                                  base_precondition, check_case1, check_claim1,
                                  check_sequence_dichotomy, check_stepping_conclusion,
                                  fact_violations, max_red, pattern_sequence,
                                  property_a_violations, property_b_violations, rank_lemma_exhaustive,
                                  red_density, red_histogram, steiner_red_count)


# -- dichotomy -------------------------------------------------------------------

def test_dichotomy_examples():
    assert check_sequence_dichotomy([1, 2, 3, 4, 5], 4, 2) == MonotoneRun(1, 4, True)
    res = check_sequence_dichotomy([9, 1, 8, 2, 7, 3, 6, 4], 3, 3)
    assert isinstance(res, AlternatingExtrema)
    assert res.positions == (3, 4, 5)
    assert isinstance(check_sequence_dichotomy([1, 2], 3, 3), NotGuaranteed)
    with pytest.raises(DomainError):
        check_sequence_dichotomy([1, 1, 2], 2, 2)


def _extrema(seq):
    return [i for i in range(1, len(seq) - 1)
            if (seq[i - 1] < seq[i]) == (seq[i] > seq[i + 1])]


def _valid_witness(seq, n, k, res):
    if isinstance(res, MonotoneRun):
        run = seq[res.start - 1:res.start - 1 + res.length]
        pairs = list(zip(run, run[1:]))
        return len(run) == n and (all(a < b for a, b in pairs) or all(a > b for a, b in pairs))
    if isinstance(res, AlternatingExtrema):
        # k consecutive entries of the list of local extrema, starting at a maximum
        p = [i - 1 for i in res.positions]
        ext = _extrema(seq)
        if len(p) != k or p[0] not in ext:
            return False
        j = ext.index(p[0])
        return ext[j:j + k] == p and seq[p[0] - 1] < seq[p[0]] > seq[p[0] + 1]
    return False


@st.composite
def valid_sequences(draw, length):
    steps = draw(st.lists(st.integers(1, 5) | st.integers(-5, -1),
                          min_size=length - 1, max_size=length - 1))
    out = [draw(st.integers(0, 20))]
    for s in steps:
        out.append(out[-1] + s)
    return out


@given(st.integers(1, 4), st.integers(2, 4), st.data())
def test_dichotomy_random_witnesses_are_valid(k, n, data):
    seq = data.draw(valid_sequences(2 * k * n - 1))
    res = check_sequence_dichotomy(seq, n, k)
    assert _valid_witness(seq, n, k, res)


@pytest.mark.parametrize("k,n", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_dichotomy_exhaustive_small(k, n):
    L = 2 * k * n - 1
    for p in range(1 << (L - 1)):
        seq = pattern_sequence(p, L)
        assert _valid_witness(seq, n, k, check_sequence_dichotomy(seq, n, k))


def test_pattern_sequence():
    assert pattern_sequence(0b101, 4) == [0, 1, 0, 1]


# -- red scans -------------------------------------------------------------------

def test_rank_lemma_exhaustive_tiny():
    count, worst, bad = rank_lemma_exhaustive(4)
    assert (count, bad) == (3 ** 6, None) and worst <= 2
    with pytest.raises(CapacityError):
        rank_lemma_exhaustive(7)


def test_red_density_and_steiner():
    phi = random_base(20, 3, 2)
    assert 0 <= red_density(phi) < 0.2
    fam = greedy_partial_steiner(20, 3)
    assert 0 <= steiner_red_count(phi, fam) <= len(fam.blocks)


def test_histogram_totals():
    from hyperramsey.colorings import RankColoring
    from math import comb
    o = RankColoring(random_base(9, 3, 1))
    hist, w = red_histogram(o, 3)
    assert sum(hist) == comb(9, 4) and w is None and max_red(hist) <= 2


# -- stepping-up conclusions -------------------------------------------------------

def test_step_blue_base_k6():
    r = check_stepping_conclusion(BaseTwoColoring.constant(5, 6, BLUE), 4, 6)
    assert r.status is StepStatus.PASS and r.red_max == 3
    assert r.blue_target == 72 and not r.blue_checked


def test_step_all_red_is_vacuous():
    r = check_stepping_conclusion(BaseTwoColoring.constant(6, 6, RED), 4, 5)
    assert r.status is StepStatus.VACUOUS
    assert any("red H_3" in p for p in r.precondition)


def test_step_counter_witness_outside_proven_regime():
    # below k = 6 the zigzag edges alone can crowd a (k+1)-set
    r = check_stepping_conclusion(BaseTwoColoring.constant(4, 4, BLUE), 3, 9,
                                  allow_unverified=True, force=True)
    assert r.status is StepStatus.COUNTER and r.red_max == 3
    assert r.red_witness is not None and len(r.red_witness.red_edges) >= 3
    # standard rule with odd k: 4 red edges, which is why t = 4 needs the strong rule
    r = check_stepping_conclusion(BaseTwoColoring.constant(4, 5, BLUE), 3, 9,
                                  allow_unverified=True, force=True)
    assert r.red_max == 4


def test_precondition_messages():
    phi = BaseTwoColoring.constant(6, 4, BLUE)
    assert any("blue K_4" in p for p in base_precondition(phi, 3, 4))
    with pytest.raises(DomainError):
        check_stepping_conclusion(phi, 3, 4, mode="weird")


# -- structural lemmas --------------------------------------------------------------

def test_claim1_holds_for_k6_small_N():
    checked, bad, first = check_claim1(4, 6)
    assert checked > 0 and bad == 0 and first is None


@pytest.mark.parametrize("N,k", [(4, 4), (5, 5)])
def test_claim1_fails_below_k6(N, k):
    checked, bad, first = check_claim1(N, k)
    assert bad > 0
    P, x, y = first
    assert len(P) == k - 1


@pytest.mark.parametrize("N,k", [(4, 3), (5, 3), (5, 4)])
def test_case1_nonvacuous(N, k):
    n_inc, n_dec, n_bad, first = check_case1(N, k)
    assert n_inc > 0 and n_dec > 0 and n_bad == 0


def test_property_harnesses():
    assert property_a_violations(4) == 0
    tuples = list(itertools.combinations(range(16), 5))
    assert property_b_violations(4, tuples) == 0
    assert fact_violations(4, tuples) == 0
    # the harnesses do detect bad inputs
    assert property_b_violations(4, [(0, 15, 1)]) == 1
