from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rbpa import counts
from rbpa.counts import (
    CertificationFailureError,
    SequenceTable,
    TailCertificate,
    last_digit_cycle_check,
    p_binomial_shift,
    p_double_sum,
    p_egf,
    p_inclusion_exclusion,
    p_recurrence,
    p_series_certified,
)


def test_known_rows():
    assert p_egf(0, 1, 9).values == (
        1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261,
    )
    assert p_egf(2, 1, 4).values == (1, 3, 11, 51, 299)
    assert p_egf(1, 1, 3).values == (1, 2, 6, 26)
    assert p_egf(0, 2, 6).values == (1, 2, 8, 44, 308, 2612, 25988)
    assert p_egf(4, 2, 3).values == (1, 6, 40, 300)
    # no free sections: pure power sequences
    assert p_egf(3, 0, 3).values == (1, 3, 9, 27)
    assert p_egf(0, 0, 3).values == (1, 0, 0, 0)


def test_p_egf_validates():
    with pytest.raises(ValueError):
        p_egf(-1, 1, 3)
    with pytest.raises(ValueError):
        p_egf(1, -1, 3)
    with pytest.raises(ValueError):
        p_egf(1, 1, -1)


def test_sequence_table_guards():
    table = p_egf(2, 1, 4)
    assert table[2] == 11
    assert len(table) == 5
    with pytest.raises(ValueError):
        SequenceTable(0, 1, (2, 3))
    with pytest.raises(ValueError):
        SequenceTable(0, 1, (1, -3))


def test_routes_agree_on_a_grid():
    for r in range(4):
        for j in range(3):
            row = p_egf(r, j, 6).values
            for n in range(7):
                assert p_recurrence(r, j, n) == row[n]
                assert p_binomial_shift(r, j, n) == row[n]
                if j >= 1:
                    assert p_double_sum(r, j, n) == row[n]


def test_double_sum_needs_a_free_section():
    with pytest.raises(ValueError):
        p_double_sum(1, 0, 3)


def test_series_value_and_certificate():
    value, cert = p_series_certified(0, 1, 0)
    assert value == 1
    assert isinstance(cert, TailCertificate)
    assert cert.truncation_index >= 7
    assert cert.tail_bound < Fraction(1, 2)

    value, cert = p_series_certified(2, 1, 5)
    assert value == p_egf(2, 1, 5)[5]
    assert cert.tail_bound < Fraction(1, 2)


def test_certificate_rejects_weak_bound():
    with pytest.raises(ValueError):
        TailCertificate(10, Fraction(1, 2))


def test_series_certified_needs_a_free_section():
    with pytest.raises(ValueError):
        p_series_certified(1, 0, 3)


def test_inclusion_exclusion_single_marked_section_is_exact():
    for j in range(1, 4):
        for n in range(6):
            assert p_inclusion_exclusion(1, j, n) == p_egf(1, j - 1, n)[n]


def test_inclusion_exclusion_counts_the_union_not_the_intersection():
    # with two marked sections the alternating sum is the union count 8,
    # not the all-restricted count p^2_0(2) = 4
    assert p_inclusion_exclusion(2, 2, 2) == 8
    assert p_egf(2, 0, 2)[2] == 4


def test_inclusion_exclusion_validates():
    with pytest.raises(ValueError):
        p_inclusion_exclusion(0, 2, 3)
    with pytest.raises(ValueError):
        p_inclusion_exclusion(3, 2, 3)
    with pytest.raises(ValueError):
        p_inclusion_exclusion(1, 2, -1)


def test_last_digit_cycle_check():
    row = p_egf(0, 1, 13).values
    assert last_digit_cycle_check(row[1:], offset=1)
    broken = list(row[1:])
    broken[6] += 1
    assert not last_digit_cycle_check(broken, offset=1)
    with pytest.raises(ValueError):
        last_digit_cycle_check(row[1:9], offset=1)
    with pytest.raises(ValueError):
        last_digit_cycle_check(row[1:], offset=-1)


@settings(deadline=None)
@given(st.integers(0, 5), st.integers(0, 4), st.integers(0, 10))
def test_recurrence_agrees_with_generating_function(r, j, n):
    assert p_recurrence(r, j, n) == p_egf(r, j, n)[n]


@settings(deadline=None)
@given(st.integers(0, 4), st.integers(1, 3), st.integers(0, 8))
def test_certified_series_agrees_with_generating_function(r, j, n):
    value, _ = p_series_certified(r, j, n)
    assert value == p_egf(r, j, n)[n]
