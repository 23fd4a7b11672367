import math

import pytest

from hyperramsey.bounds import (TowerExpr, alpha_bound_log2, bound_report, digit_estimate,
                                erdos_rado_step, game_alpha_bound_log2, tower)
from hyperramsey.errors import CapacityError, DomainError


def naive_tower(h, x):
    v = x
    for _ in range(h - 1):
        v = 2 ** v
    return v


def test_tower_examples():
    assert tower(1, 5) == 5
    assert tower(3, 2) == 16
    assert tower(4, 2) == 65536
    assert tower(2, 10) == 1024


@pytest.mark.parametrize("h", range(1, 6))
@pytest.mark.parametrize("x", range(0, 6))
def test_tower_matches_repeated_exponentiation(h, x):
    try:
        v = tower(h, x)
    except CapacityError:
        # only refuse when the true value really has more than the cap's digits
        assert h >= 4 and x >= 3 or h >= 5 and x >= 2
        return
    assert v == naive_tower(h, x)


def test_tower_cap_reports_digits():
    with pytest.raises(CapacityError, match="digits"):
        tower(5, 3)
    with pytest.raises(DomainError):
        tower(0, 2)
    assert tower(2, 0.5) == pytest.approx(math.sqrt(2))


def test_digit_estimate():
    assert digit_estimate(2, 25) == "about 8 digits"
    assert digit_estimate(4, 2) == "about 5 digits"
    assert "10^(300.5" in digit_estimate(3, 1000) or "10^(300" in digit_estimate(3, 1000)


def test_tower_expr_format_and_order():
    assert str(TowerExpr(3, 1000)) == "twr_3(1000)"
    assert str(TowerExpr(2, 25)) == "2^25"
    assert str(TowerExpr(1, 7)) == "7"
    assert TowerExpr(2, 10) <= TowerExpr(3, 4)       # 1024 <= 65536
    assert not TowerExpr(3, 5) <= TowerExpr(2, 31)   # 2^32 > 2^31
    assert TowerExpr(2, 3) <= TowerExpr(2, 3)


def test_report_examples():
    r = bound_report(6, 4, 10, c=1)
    assert str(r.lower) == "twr_3(1000)" and "even" in r.theorem
    r = bound_report(7, 4, 10, c=1)
    assert str(r.lower) == "twr_3(100)" and "odd" in r.theorem
    r = bound_report(4, 3, 5, c=1)
    assert str(r.lower) == "2^25"
    assert r.lower.value() == 2 ** 25


def _expected_branch(k, t, n):
    # lower tower height t-1; exponent n^(k-t+1) when k-t is even, n^((k-t+1)/2) when odd
    e = k - t + 1 if (k - t) % 2 == 0 else (k - t + 1) // 2
    return t - 1, n ** e


@pytest.mark.parametrize("k", range(6, 13))
def test_parity_branch_table(k):
    for t in range(4, k - 1):
        for n in (2, 3, 10):
            r = bound_report(k, t, n, c=1, c_upper=1)
            h, a = _expected_branch(k, t, n)
            assert (r.lower.height, r.lower.arg) == (h, a)
            assert r.upper.height == t - 1
            assert r.upper.arg == pytest.approx(n ** (k - t + 1) * math.log2(n))
            assert ("even" in r.theorem) == ((k - t) % 2 == 0)


def test_other_regimes():
    assert bound_report(5, 2, 4, c_upper=2).upper.arg == 2 * 4 ** 4
    assert bound_report(5, 2, 4).lower is None
    r = bound_report(6, 5, 3, c=1, c_upper=1)   # t = k-1
    assert (r.lower.height, r.lower.arg, r.upper.height, r.upper.arg) == (3, 27, 4, 9)
    r = bound_report(6, 6, 3, c=1, c_upper=1)   # t = k
    assert (r.lower.height, r.upper.height, r.upper.arg) == (3, 5, 3)
    r = bound_report(6, 7, 4, c_upper=1)        # t = k+1
    assert r.lower is None and (r.upper.height, r.upper.arg) == (6, 2)
    assert bound_report(6, 4, 10).lower is None
    with pytest.raises(DomainError):
        bound_report(6, 8, 4)
    with pytest.raises(DomainError):
        bound_report(2, 2, 4)


def test_consistency_where_computable():
    assert bound_report(4, 3, 2, c=1, c_upper=1).consistent()


def test_recursion_and_alpha():
    assert erdos_rado_step(5, 3) == TowerExpr(2, 10)
    v = alpha_bound_log2(10, 3, 5, 0.25)
    assert v == pytest.approx(math.log2(10 * 0.25 ** -3 * 0.75 ** -2))
    with pytest.raises(DomainError):
        alpha_bound_log2(1, 1, 1, 0.7)
    assert game_alpha_bound_log2(4, 3) > 0
