import random

import pytest

from oracles import order_types, pair_counts
from theta_cycles.decomposability import SymmetricPair
from theta_cycles.enumeration import BudgetExceeded, enumerate_all
from theta_cycles.parabolic import LevelPattern, invariants, pattern_of
from theta_cycles.roots import Signature
from theta_cycles.verifier import (
    block_profile,
    check_proof_inequalities,
    compute_t,
    cycle_dimensions,
    in_hypothesis,
    proof_bounds,
    verify_theorem,
)

P = LevelPattern.parse
ROW1 = SymmetricPair("row1", 1)
ROW2 = SymmetricPair("row2", 1)


@pytest.mark.parametrize("sig,pair,dims", [
    (Signature(5, 5), ROW1, (20, 5)),
    (Signature(5, 5), ROW2, (20, 5)),
    (Signature(2, 3), ROW1, (3, 3)),
    (Signature(5, 8), SymmetricPair("row1", 2), (24, 16)),
])
def test_cycle_dimensions(sig, pair, dims):
    assert cycle_dimensions(sig, pair) == dims


def test_compute_t():
    assert compute_t(Signature(5, 8), ROW1) == 8
    assert compute_t(Signature(5, 8), ROW2) == 5
    assert compute_t(Signature(2, 2), ROW1) == compute_t(Signature(2, 2), ROW2) == 2
    with pytest.raises(ValueError):
        compute_t(Signature(1, 3), ROW1)


def test_verify_su55_row1():
    report = verify_theorem(Signature(5, 5), ROW1)
    assert report.singleton and report.matches_expected
    assert report.q_minus_d == [P("1|0>3|5>1|0")]
    assert [e.pattern for e in report.q_minus_d_entries] == [P("1|0>3|5>1|0")]
    assert report.q_minus_d_entries[0].witness_s == 6


def test_verify_su56_row2_exception():
    report = verify_theorem(Signature(5, 6), ROW2)
    assert not report.singleton and not report.matches_expected
    assert len(report.q_minus_d) == 3
    assert P("0|1>5|4>0|1") in report.q_minus_d
    assert not report.in_hypothesis


@pytest.mark.parametrize("pair", [ROW1, ROW2])
def test_su22_merges_compact_refinement(pair):
    report = verify_theorem(Signature(2, 2), pair)
    # two patterns survive but they share u cap p, hence one A_q
    assert len(report.q_minus_d_entries) == 2
    assert report.q_minus_d == [report.expected]
    assert report.matches_expected


def test_report_partitions_q():
    report = verify_theorem(Signature(5, 7), ROW1)
    assert len(report.d_cap_q) + len(report.q_minus_d_entries) == len(report.q_set)
    assert set(report.d_cap_q).isdisjoint(report.q_minus_d_entries)
    payload = report.to_dict()
    assert payload["t"] == 7
    assert payload["q_minus_d"] == ["1|0>3|7>1|0"]


def test_budget_exceeded_is_raised():
    with pytest.raises(BudgetExceeded):
        verify_theorem(Signature(6, 7), ROW1, budget=20)


@pytest.mark.parametrize("p", [5, 6, 7])
def test_row1_singleton_below_boundary(p):
    for q in range(p, 2 * p - 2):
        report = verify_theorem(Signature(p, q), ROW1)
        assert report.in_hypothesis and report.matches_expected, (p, q)


@pytest.mark.parametrize("p", [5, 6, 7])
def test_row1_at_q_equal_2p_minus_2_has_three_classes(p):
    """1|0>0|2>(p-1)|(q-2) reaches R+ = R- = q = t and has a witness."""
    q = 2 * p - 2
    report = verify_theorem(Signature(p, q), ROW1)
    extra = P(f"1|0>0|2>{p - 1}|{q - 2}")
    inv = invariants(extra)
    assert inv.r_plus == inv.r_minus == q
    assert extra in report.q_minus_d
    assert len(report.q_minus_d) == 3


@pytest.mark.parametrize("p", [5, 6, 7])
def test_row2_singleton_except_q_equal_p_plus_1(p):
    for q in range(p, p + 5):
        report = verify_theorem(Signature(p, q), ROW2)
        assert report.matches_expected == (q != p + 1), (p, q)
        assert report.in_hypothesis == (q != p + 1)


def test_outside_hypothesis_is_flagged_not_failed():
    report = verify_theorem(Signature(5, 9), ROW1)
    assert not report.in_hypothesis
    assert not in_hypothesis(Signature(5, 5), SymmetricPair("row1", 2))
    assert in_hypothesis(Signature(2, 2), ROW2)


@pytest.mark.parametrize("sig,pair", [
    (Signature(5, 5), ROW1), (Signature(5, 6), ROW2), (Signature(6, 7), ROW1), (Signature(3, 4), ROW2),
])
def test_trivial_class_in_q_and_d(sig, pair):
    report = verify_theorem(sig, pair)
    trivial = LevelPattern(((sig.p, sig.q),))
    assert trivial in {e.pattern for e in report.d_cap_q}
    for e in report.q_minus_d_entries:
        assert not (e.invariants.holomorphic or e.invariants.antiholomorphic)


def test_block_profile_examples():
    assert block_profile(P("1|0>3|5>1|0"), 1).as_tuple() == (1, 3, 1, 0, 5, 0)
    assert block_profile(P("3|4"), 0).as_tuple() == (0, 3, 0, 0, 4, 0)
    prof = block_profile(P("1|0>0|3>1|0"), 1)
    assert prof.as_tuple() == (1, 0, 1, 0, 3, 0)
    assert prof.witness_s == 3
    with pytest.raises(ValueError):
        block_profile(P("1|0>0|3>1|0"), 0)
    with pytest.raises(IndexError):
        block_profile(P("3|4"), 1)
    assert block_profile(P("0|1>5|3>0|1"), 1, "first").witness_s == 1


def test_profile_bounds_examples():
    assert proof_bounds(block_profile(P("3|4"), 0)) == (0, 0, 0)
    pat = P("1|0>3|5>1|0")
    prof = block_profile(pat, 1)
    assert proof_bounds(prof)[0] == invariants(pat).r_plus == 5
    assert check_proof_inequalities(pat, prof)


def _admissible_profiles(pat):
    for k, (x, y) in enumerate(pat.levels):
        if y:
            yield block_profile(pat, k, "second")
        if x:
            yield block_profile(pat, k, "first")


@pytest.mark.parametrize("n", range(2, 9))
def test_proof_inequalities_exhaustive(n):
    for p in range(1, n):
        for pat in enumerate_all(Signature(p, n - p)):
            for prof in _admissible_profiles(pat):
                assert check_proof_inequalities(pat, prof), (pat, prof)


def test_proof_inequalities_against_pair_counts():
    # bounds checked against pair counting on raw vectors, not the level formula
    for p, q in [(2, 3), (3, 3), (2, 4)]:
        for a in order_types(p, q):
            pat = pattern_of(Signature(p, q), a)
            plus, minus = pair_counts(a, p)
            for prof in _admissible_profiles(pat):
                lo_plus, lo_minus, lo_total = proof_bounds(prof)
                assert plus >= lo_plus and minus >= lo_minus and plus + minus >= lo_total
