from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from loclib.bounds import (
    avg_locality_lb_general,
    avg_locality_lb_general_mixture,
    avg_locality_lb_tight,
    bound_gap,
    bound_report,
    brute_force_partition_min,
    ceil_div,
    d_upper_bound,
    floor_fraction,
    lemma_a1_equiv,
    max_locality_lb,
    optsqrt_min,
    rate_condition,
    tight_objective,
    tight_objective_trace,
)
from loclib.errors import BadParams, BudgetExceeded, RateConditionViolated


def grid(n_max=30):
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for d in range(2, n - k + 2):
                yield n, k, d


def test_d_upper_bound():
    assert d_upper_bound(8, 4, 3) == 4
    assert d_upper_bound(16, 10, 4) == 5
    assert d_upper_bound(9, 5, 5) == 9 - 5 + 1


def test_max_locality_lb():
    assert max_locality_lb(16, 10, 5) == 4
    assert max_locality_lb(8, 4, 4) == 2
    assert max_locality_lb(12, 7, 6) == 7  # MDS: J = 1


def test_general_bound_examples():
    assert avg_locality_lb_general(16, 10, 5) == Fraction(7, 2)
    assert avg_locality_lb_general(9, 4, 5) == 2
    assert avg_locality_lb_general(13, 5, 8) == Fraction(36, 13)


def test_tight_bound_examples():
    assert avg_locality_lb_tight(16, 10, 5)[:2] == (Fraction(31, 8), 3)
    assert avg_locality_lb_tight(8, 4, 4)[:2] == (Fraction(9, 4), 2)
    assert tight_objective_trace(16, 10, 5) == [86, 82, 80, 78]


def test_tight_bound_needs_rate():
    with pytest.raises(RateConditionViolated):
        avg_locality_lb_tight(9, 4, 5)


def test_rate_condition():
    assert rate_condition(16, 10)
    assert rate_condition(8, 4)
    assert not rate_condition(9, 4)  # 36 = 36


def test_lemma_a1_examples():
    assert lemma_a1_equiv(16, 10, 5) == (True, True)
    assert lemma_a1_equiv(9, 4, 5) == (False, False)


def test_bad_params():
    with pytest.raises(BadParams):
        avg_locality_lb_general(4, 4, 1)
    with pytest.raises(BadParams):
        bound_report(8, 4, 6)


def test_gap_examples():
    assert bound_gap(16, 10, 5) == Fraction(1, 2)
    assert bound_gap(9, 4, 5) == 0  # J = 2 divides k


@pytest.mark.parametrize("A,zeta,value,parts", [(6, 3, 12, [2, 2, 2]), (16, 3, 86, [5, 5, 6]), (7, 3, 17, [2, 2, 3])])
def test_optsqrt_examples(A, zeta, value, parts):
    spec = optsqrt_min(A, zeta)
    assert spec.min_sum_squares == value
    assert spec.parts == parts


def test_brute_force_examples():
    assert brute_force_partition_min(3, 3) == 3
    assert brute_force_partition_min(4, 2) == 8
    with pytest.raises(BudgetExceeded):
        brute_force_partition_min(25, 3)


def test_optsqrt_matches_objective_theta0():
    # theta = 0 term of the tight objective is the even split of n into J parts
    assert tight_objective(16, 10, 5, 0)[0] == optsqrt_min(16, 3).min_sum_squares


# -- grid properties --------------------------------------------------------


def test_general_bound_forms_agree():
    for n, k, d in grid():
        J = n - k - d + 2
        direct = avg_locality_lb_general(n, k, d)
        assert direct == avg_locality_lb_general_mixture(n, k, d)
        assert 0 <= floor_fraction(n, k, d) <= 1
        assert k // J <= direct <= ceil_div(k, J)


def test_gap_is_difference_of_bounds():
    for n, k, d in grid():
        gap = bound_gap(n, k, d)
        assert gap == max_locality_lb(n, k, d) - avg_locality_lb_general(n, k, d)
        if k % (n - k - d + 2) == 0:
            assert gap == 0


def test_gap_peaks_at_remainder_one_for_fixed_j():
    # same J and same ceil(k/J): the gap is largest at k mod J = 1
    n = 40
    for J in range(2, 7):
        for c in range(1, 5):
            ks = range(J * (c - 1) + 1, J * c + 1)
            gaps = {k: bound_gap(n, k, n - k - J + 2) for k in ks}
            top = max(gaps.values())
            assert [k for k, g in gaps.items() if g == top] == [J * (c - 1) + 1]


def test_tight_dominates_general():
    for n, k, d in grid():
        if rate_condition(n, k):
            assert avg_locality_lb_tight(n, k, d)[0] >= avg_locality_lb_general(n, k, d)


def test_rate_implies_lhs():
    for n, k, d in grid():
        lhs, rhs = lemma_a1_equiv(n, k, d)
        if rhs:
            assert lhs


def test_rate_iff_lhs_for_every_d():
    for n in range(2, 31):
        for k in range(1, n):
            all_lhs = all(lemma_a1_equiv(n, k, d)[0] for d in range(2, n - k + 2))
            assert all_lhs == rate_condition(n, k)


def test_partition_oracle_grid():
    for A in range(1, 25):
        prev = None
        for zeta in range(1, min(A, 6) + 1):
            v = optsqrt_min(A, zeta).min_sum_squares
            assert v == brute_force_partition_min(A, zeta)
            if prev is not None:
                assert v <= prev
            prev = v


@given(st.integers(1, 500), st.integers(1, 40))
def test_optsqrt_parts_sum(A, zeta):
    if zeta > A:
        return
    spec = optsqrt_min(A, zeta)
    assert sum(spec.parts) == A and len(spec.parts) == zeta
    assert max(spec.parts) - min(spec.parts) <= 1
    assert spec.min_sum_squares == sum(p * p for p in spec.parts)


def test_bound_report():
    rep = bound_report(16, 10, 5)
    assert (rep.J, rep.r_lb) == (3, 4)
    assert rep.rbar_lb_tight == Fraction(31, 8) and rep.theta_star == 3
    assert rep.best_rbar_lb == Fraction(31, 8)
    d = rep.to_dict()
    assert d["rbar_lb_tight"] == {"num": 31, "den": 8, "decimal": 3.875}
    assert bound_report(9, 4, 5).rbar_lb_tight is None
