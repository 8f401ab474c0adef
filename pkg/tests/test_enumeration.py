import pytest

from oracles import order_types, pair_counts
from theta_cycles.enumeration import (
    BUDGET_ENV,
    BudgetExceeded,
    count_patterns,
    default_budget,
    enumerate_all,
    enumerate_Q,
    filter_Q,
)
from theta_cycles.parabolic import LevelPattern, pattern_of
from theta_cycles.roots import Signature

P = LevelPattern.parse


def test_su11_patterns():
    pats = list(enumerate_all(Signature(1, 1)))
    assert set(pats) == {P("1|0>0|1"), P("1|1"), P("0|1>1|0")}
    assert len(pats) == 3


@pytest.mark.parametrize("p,q,expected", [(1, 1, 3), (2, 1, 8), (1, 2, 8), (2, 2, 26), (2, 3, 76), (3, 3, 252)])
def test_counts_match_order_type_oracle(p, q, expected):
    # expected values frozen from oracles.order_types
    assert count_patterns(Signature(p, q)) == expected
    assert len({pattern_of(Signature(p, q), a) for a in order_types(p, q)}) == expected


def test_count_base_case_and_overflow():
    assert count_patterns((0, 0)) == 1
    assert count_patterns((3, 0)) == 4  # compositions of 3
    with pytest.raises(OverflowError):
        count_patterns(Signature(10, 10), limit=2**31 - 1)


@pytest.mark.parametrize("n", range(2, 10))
def test_count_equals_materialized(n):
    for p in range(1, n):
        sig = Signature(p, n - p)
        pats = list(enumerate_all(sig))
        assert len(pats) == count_patterns(sig)
        assert len(set(pats)) == len(pats)
        flats = [pat.flat() for pat in pats]
        assert flats == sorted(flats)


def test_count_symmetry():
    for n in range(2, 13):
        for p in range(1, n):
            assert count_patterns((p, n - p)) == count_patterns((n - p, p))


def test_q_small_examples():
    assert [pat for pat, _ in enumerate_Q(Signature(1, 1), 0)] == [P("1|1")]
    got = {pat for pat, _ in enumerate_Q(Signature(2, 2), 2)}
    assert {P("1|0>0|2>1|0"), P("0|1>2|0>0|1"), P("2|2")} <= got
    assert P("1|0>3|5>1|0") in {pat for pat, _ in enumerate_Q(Signature(5, 5), 5)}


def _brute_Q(p, q, t):
    """Q from order types and direct pair counting, no package enumeration."""
    found = set()
    for a in order_types(p, q):
        plus, minus = pair_counts(a, p)
        if plus == minus <= t:
            found.add(pattern_of(Signature(p, q), a))
    return found


@pytest.mark.parametrize("p,q", [(2, 2), (2, 3), (3, 3), (1, 4)])
def test_q_matches_brute_force(p, q):
    for t in range(p * q + 1):
        assert {pat for pat, _ in enumerate_Q(Signature(p, q), t)} == _brute_Q(p, q, t)


@pytest.mark.parametrize("n", range(2, 9))
def test_pruned_equals_filtered(n):
    for p in range(1, n):
        sig = Signature(p, n - p)
        for t in range(p * (n - p) + 1):
            assert enumerate_Q(sig, t) == filter_Q(sig, t)


def test_sharded_search_matches_serial():
    sig = Signature(4, 5)
    assert enumerate_Q(sig, 5, workers=3) == enumerate_Q(sig, 5)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_Q(Signature(5, 5), 5, budget=50)
    assert info.value.budget == 50


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "1234")
    assert default_budget() == 1234
    monkeypatch.setenv(BUDGET_ENV, "lots")
    with pytest.raises(ValueError):
        default_budget()


def test_progress_callback():
    ticks = []
    stats = {}
    enumerate_Q(Signature(6, 7), 7, progress=ticks.append, stats=stats)
    assert stats["visited"] > 0
    assert all(v % (1 << 16) == 0 for v in ticks)


def test_negative_t():
    with pytest.raises(ValueError):
        enumerate_Q(Signature(2, 2), -1)
