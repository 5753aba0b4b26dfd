import math

import pytest

from qbalance.analysis import (
    Scheme,
    balanced_cardinality_approx,
    balanced_count,
    log_balanced_cardinality,
    redundancy_table,
    scheme_kmax,
)
from qbalance.core import iter_words, make_params
from qbalance.errors import ParameterError, UnknownScheme, UnsupportedRange


@pytest.mark.parametrize("q, k, expected", [(2, 2, 2), (2, 3, 0), (2, 4, 6), (3, 2, 3), (3, 3, 7), (4, 2, 4), (5, 2, 5)])
def test_balanced_count(q, k, expected):
    assert balanced_count(q, k) == expected


@pytest.mark.parametrize("q, k", [(2, 6), (3, 4), (4, 4), (5, 3)])
def test_balanced_count_agrees_with_brute_force(q, k):
    target = k * (q - 1) / 2
    brute = sum(1 for x in iter_words(q, k) if x.weight == target)
    assert balanced_count(q, k) == brute


def test_cardinality_approximation():
    assert balanced_cardinality_approx(2, 2) == pytest.approx(4 / math.sqrt(math.pi))
    assert balanced_cardinality_approx(3, 20) == pytest.approx(balanced_count(3, 20), rel=0.03)
    assert balanced_cardinality_approx(2, 40) == pytest.approx(balanced_count(2, 40), rel=0.01)


def test_cardinality_overflow_is_reported():
    assert log_balanced_cardinality(16, 400) > 709
    with pytest.raises(UnsupportedRange):
        balanced_cardinality_approx(16, 400)
    with pytest.raises(ParameterError):
        balanced_cardinality_approx(2, 0)


@pytest.mark.parametrize(
    "scheme, q, r, expected",
    [
        ("gray-prefix", 3, 4, 9),
        ("gray-prefix", 2, 3, 2),
        ("capocelli-a", 2, 3, 7),
        ("capocelli-b", 2, 3, 11),
        ("prefixless", 2, 3, 1),
        ("prefixless", 3, 3, 6),
    ],
)
def test_exact_schemes(scheme, q, r, expected):
    bound = scheme_kmax(scheme, q, r)
    assert bound.k_max == expected
    assert bound.exactness == "exact"


def test_approximate_schemes():
    bound = scheme_kmax(Scheme.BALANCED_PREFIX, 2, 2)
    assert bound.k_max == pytest.approx(2 / math.sqrt(math.pi))
    assert bound.exactness == "approx"

    pelusi = scheme_kmax(Scheme.PELUSI, 2, 3)
    assert pelusi.k_max == 2
    assert pelusi.iterations == 2
    assert scheme_kmax(Scheme.PELUSI, 2, 2).iterations == 1


@pytest.mark.parametrize("scheme, q, r", [("gray-prefix", 3, 1), ("prefixless", 2, 2), ("balanced-prefix", 2, 1)])
def test_too_little_redundancy(scheme, q, r):
    with pytest.raises(UnsupportedRange):
        scheme_kmax(scheme, q, r)


def test_unknown_scheme():
    with pytest.raises(UnknownScheme) as info:
        scheme_kmax("knuth", 2, 3)
    assert "gray-prefix" in str(info.value)


@pytest.mark.parametrize("q", range(2, 9))
def test_table_is_monotone_in_redundancy(q):
    rows = redundancy_table(q, range(1, 11))
    assert all(row.k_max >= 1 for row in rows)
    for scheme in Scheme:
        values = [row.k_max for row in rows if row.scheme is scheme]
        assert values == sorted(values), scheme


def test_table_respects_max_redundancy(fresh_settings):
    fresh_settings.setenv("QBALANCE_MAX_REDUNDANCY", "5")
    with pytest.raises(UnsupportedRange):
        redundancy_table(2, range(3, 7))


@pytest.mark.parametrize("q", range(2, 9))
def test_gray_prefix_redundancy_relation(q):
    for r in range(3, 11):
        k = q ** (r - 2)
        if ((k + r) * (q - 1)) % 2:
            with pytest.raises(ParameterError):
                make_params(q, k)
            continue
        params = make_params(q, k)
        assert params.redundancy == r
        assert scheme_kmax(Scheme.GRAY_PREFIX, q, r).k_max == k


def test_reference_bounds():
    assert scheme_kmax("capocelli-a", 3, 3).k_max == 13
    assert scheme_kmax("prefixless", 4, 3).k_max == 13
    assert [scheme_kmax("gray-prefix", 3, r).k_max for r in (3, 4, 5)] == [3, 9, 27]
    assert scheme_kmax("capocelli-b", 3, 6).k_max > scheme_kmax("capocelli-a", 3, 6).k_max
    assert balanced_cardinality_approx(3, 2) == pytest.approx(3.11, abs=0.01)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_gray_prefix_supports_more_than_balanced_prefix(q):
    for r in range(4, 21):
        gray = scheme_kmax(Scheme.GRAY_PREFIX, q, r).k_max
        assert gray >= scheme_kmax(Scheme.BALANCED_PREFIX, q, r).k_max


def test_pelusi_settles_within_two_evaluations():
    for q in range(2, 9):
        for row in redundancy_table(q, range(1, 16)):
            assert row.iterations <= 2


@pytest.mark.parametrize(
    "alias, scheme, q, r, expected",
    [
        ("this-paper", Scheme.GRAY_PREFIX, 3, 4, 9),
        ("this-paper", Scheme.GRAY_PREFIX, 2, 5, 8),
        ("swart-weber", Scheme.BALANCED_PREFIX, 2, 4, None),
    ],
)
def test_published_scheme_identifiers_are_accepted(alias, scheme, q, r, expected):
    bound = scheme_kmax(alias, q, r)
    assert bound.scheme is scheme
    assert bound == scheme_kmax(scheme, q, r)
    if expected is not None:
        assert bound.k_max == expected


@pytest.mark.parametrize("scheme", [Scheme.BALANCED_PREFIX, Scheme.PELUSI])
def test_estimated_bounds_report_overflow(scheme):
    with pytest.raises(UnsupportedRange):
        scheme_kmax(scheme, 10**6, 64)


def test_table_skips_overflowing_rows():
    rows = redundancy_table(10**6, [2, 64])
    approx_rs = {row.r for row in rows if row.exactness == "approx"}
    assert 64 not in approx_rs
    assert scheme_kmax(Scheme.GRAY_PREFIX, 10**6, 64) in rows
