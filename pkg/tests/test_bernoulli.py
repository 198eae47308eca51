from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rbpa import bernoulli
from rbpa.bernoulli import (
    MuTable,
    as_multi_index,
    corollary_convolution_check,
    mu_table,
    multi_poly_bernoulli,
    multi_poly_bernoulli_li_oracle,
    multi_poly_bernoulli_li_sequence,
    poly_bernoulli,
    poly_bernoulli_double_sum,
    reciprocal_coefficient,
    u_from_mu,
    u_number,
    u_stirling_sum,
    u_via_shift,
    w_family,
)

small_index = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(tuple)


def test_as_multi_index_validates():
    assert as_multi_index([2, 0]) == (2, 0)
    with pytest.raises(ValueError):
        as_multi_index([])
    with pytest.raises(ValueError):
        as_multi_index([1, -1])


def test_poly_bernoulli_closed_forms():
    # upper index -1: B_n = 2^n except at n = 0
    assert [poly_bernoulli(-1, n) for n in range(6)] == [1, 2, 4, 8, 16, 32]
    # upper index -2 satisfies 2*3^n - 2^n
    assert [poly_bernoulli(-2, n) for n in range(9)] == [
        1, 4, 14, 46, 146, 454, 1394, 4246, 12866,
    ]
    assert poly_bernoulli(0, 3) == 1
    assert poly_bernoulli(3, 1) == Fraction(1, 8)


def test_poly_bernoulli_double_sum_matches_reduced_form():
    for k in range(-3, 4):
        for n in range(7):
            assert poly_bernoulli_double_sum(k, n) == poly_bernoulli(k, n)


def test_mu_tables():
    assert mu_table((1,)).coefficients == (0, 1)
    assert mu_table((2,)).coefficients == (0, -1, 2)
    assert mu_table((2, 0)).coefficients == (0, -1, 2)
    assert mu_table((1, 1)).coefficients == (0, -1, 3)
    assert mu_table((2, 1)).coefficients == (0, 1, -7, 8)
    assert mu_table((1, 2)).coefficients == (0, 1, -9, 12)
    assert mu_table((0, 1)).coefficients == (0, 2)


def test_mu_table_head_and_weight():
    table = mu_table((2, 1))
    assert isinstance(table, MuTable)
    assert table.weight == 3
    assert table.coefficients[0] == 0
    # mu_0 is 1 exactly for the all-zero index
    assert mu_table((0, 0)).coefficients == (1,)


def test_appending_zero_keeps_the_table():
    for idx in [(1,), (2,), (1, 1), (2, 1)]:
        assert mu_table(idx + (0,)).coefficients == mu_table(idx).coefficients


def test_multi_poly_bernoulli_values():
    assert multi_poly_bernoulli((1, 1), 1) == 9
    assert multi_poly_bernoulli((2, 1), 1) == 15
    assert [multi_poly_bernoulli((1, 2), n) for n in range(3)] == [4, 27, 165]
    assert multi_poly_bernoulli((2, 0, 0), 1) == 6
    # all-zero index: plain power sequence b^n
    assert multi_poly_bernoulli((0, 0), 3) == 8
    # single-entry index agrees with the one-index form
    for j in range(4):
        for n in range(6):
            assert multi_poly_bernoulli((j,), n) == poly_bernoulli(-j, n)


def test_two_pads_closed_form():
    for b in range(4):
        idx = (2,) + (0,) * b
        for n in range(10):
            assert multi_poly_bernoulli(idx, n) == w_family(3 + b, n)


def test_li_oracle_values():
    assert multi_poly_bernoulli_li_oracle((2,), 2) == 14
    assert multi_poly_bernoulli_li_oracle((1, 1), 1) == 9
    assert multi_poly_bernoulli_li_oracle((0,), 4) == 1


@settings(deadline=None)
@given(small_index, st.integers(0, 7))
def test_li_oracle_agrees_with_mu_route(idx, n):
    assert multi_poly_bernoulli_li_oracle(idx, n) == multi_poly_bernoulli(idx, n)


@settings(deadline=None)
@given(small_index, st.integers(0, 9))
def test_li_sequence_agrees_with_li_oracle(idx, n_max):
    seq = multi_poly_bernoulli_li_sequence(idx, n_max)
    assert len(seq) == n_max + 1
    for n in range(n_max + 1):
        assert seq[n] == multi_poly_bernoulli_li_oracle(idx, n)


def test_w_family():
    assert [w_family(3, n) for n in range(4)] == [1, 4, 14, 46]
    assert [w_family(1, n) for n in range(4)] == [1, 2, 2, 2]
    with pytest.raises(ValueError):
        w_family(0, 2)


def test_u_values():
    assert u_number((2,), 0) == 1
    assert u_number((2,), 1) == 3
    assert u_number((0,), 2) == 0
    assert u_number((1, 2), 2) == 115
    assert u_via_shift((2,), 2) == 7
    assert u_via_shift((0, 0), 1) == 1


def test_u_routes_agree():
    for idx in [(1,), (2,), (0,), (1, 1), (2, 0), (1, 2), (0, 0), (2, 1, 1)]:
        for n in range(8):
            expect = u_via_shift(idx, n)
            assert u_number(idx, n) == expect
            assert u_from_mu(idx, n) == expect


def test_u_stirling_sum_handles_positive_indices():
    assert u_stirling_sum((1,), 0) == 1
    assert u_stirling_sum((1,), 1) == Fraction(-1, 2)
    assert u_stirling_sum((-1, -2), 2) == 115


def test_u_constant_term_is_the_chain_weight():
    # at n = 0 the value is prod_i i^{j_i}, the weight of the one chain
    # (1, 2, ..., b); it is 1 only when every entry past the first is 0
    assert u_number((1, 1), 0) == 2
    assert u_number((2,), 0) == 1
    assert u_number((1, 2), 0) == 4
    assert u_via_shift((1, 1), 0) == multi_poly_bernoulli((1, 1), 0)


def test_reciprocal_coefficient_alternates_w_values():
    for n in range(6):
        assert reciprocal_coefficient(3, n) == (-1) ** n * w_family(3, n)


def test_corollary_convolution_check():
    assert corollary_convolution_check(2, 2, 1)
    assert corollary_convolution_check(0, 3, 2)
    for j in range(4):
        for b in range(1, 4):
            for n in range(6):
                assert corollary_convolution_check(j, b, n)


@settings(deadline=None)
@given(small_index, st.integers(0, 8))
def test_shift_route_equals_mu_route_for_u(idx, n):
    assert u_via_shift(idx, n) == u_from_mu(idx, n)
