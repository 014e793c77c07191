"""Exact power series: arithmetic, the tree equation and graph counts."""

import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import BIPARTITE_TABLES, M_SEQUENCE, TREE_NUMBERS_Q3
from sykgraphs.kernels import enumerate_kernels
from sykgraphs.series import (
    Series,
    asymptotic_estimate,
    asymptotic_estimate_decimal,
    asymptotic_profile,
    asymptotic_ratio,
    chain_series,
    forest_count,
    general_graphs_series,
    graphs_series,
    kappa,
    kernel_series,
    m_sequence,
    tree_series,
    walk_weights,
    z_critical,
)

small_ints = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
)


def test_series_basic_arithmetic():
    a = Series([1, 2, 3])
    b = Series([0, 1, 0])
    assert (a + b).coeffs == [1, 3, 3]
    assert (a - a).coeffs == [0, 0, 0]
    assert (a * b).coeffs == [0, 1, 2]
    assert (a ** 2).coeffs == [1, 4, 10]
    assert a.coefficient(2) == 3
    # binary operations truncate to the shorter operand
    assert (a + Series([10, 10])).coeffs == [11, 12]
    with pytest.raises(IndexError):
        a.coefficient(3)


def test_series_reciprocal_and_composition():
    n = 8
    geo = Series([1] * (n + 1))
    one_minus_z = Series([1, -1] + [0] * (n - 1))
    assert (geo * one_minus_z).coeffs == [1] + [0] * n
    assert one_minus_z.reciprocal().coeffs == geo.coeffs
    # composing 1/(1-z) with z^2 gives 1/(1-z^2)
    sq = geo.compose(Series([0, 0, 1] + [0] * (n - 2)))
    assert sq.coeffs == [1 if k % 2 == 0 else 0 for k in range(n + 1)]


@settings(max_examples=40, deadline=None)
@given(small_ints, small_ints)
def test_series_multiplication_commutes_and_distributes(xs, ys):
    n = min(len(xs), len(ys)) - 1
    a = Series(xs[: n + 1])
    b = Series(ys[: n + 1])
    assert (a * b).coeffs == (b * a).coeffs
    assert ((a + b) * a).coeffs == (a * a + b * a).coeffs


@settings(max_examples=40, deadline=None)
@given(small_ints)
def test_series_reciprocal_inverts(xs):
    if xs[0] == 0:
        xs = [1] + xs
    a = Series([Fraction(x) for x in xs])
    prod = a * a.reciprocal()
    assert prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])


def test_tree_series_satisfies_functional_equation():
    for q in (2, 3, 5):
        n = 25
        t = tree_series(q, n)
        rhs = Series.x(n) * t**q + 1
        assert t.coeffs == rhs.coeffs


def test_tree_series_matches_frozen_prefix():
    t = tree_series(3, len(TREE_NUMBERS_Q3) - 1)
    assert list(t.coeffs) == TREE_NUMBERS_Q3


def test_forest_count_reduces_to_trees():
    for m in range(8):
        assert forest_count(3, 1, m) == TREE_NUMBERS_Q3[m]
    # two-tree forests: convolution of the tree numbers
    for m in range(8):
        conv = sum(
            TREE_NUMBERS_Q3[i] * TREE_NUMBERS_Q3[m - i] for i in range(m + 1)
        )
        assert forest_count(3, 2, m) == conv


def test_walk_weights_count_paths_in_complete_graph():
    # brute force walks on K_q between fixed endpoints
    for q in (3, 4):
        for equal in (True, False):
            ws = walk_weights(q, equal, 6)
            colors = list(range(q))
            start, goal = (0, 0) if equal else (0, 1)
            for length in range(7):
                count = 0
                stack = [(start, length)]
                total = 0
                paths = [[start]]
                for _ in range(length):
                    paths = [
                        p + [c]
                        for p in paths
                        for c in colors
                        if c != p[-1]
                    ]
                total = sum(1 for p in paths if p[-1] == goal)
                assert ws[length] == total


def test_walk_weight_exclusions():
    # no zero-length walk between distinct colors, no 1-step loop
    assert walk_weights(3, False, 2)[0] == 0
    assert walk_weights(3, True, 2)[1] == 0


def test_kernel_series_closed_equals_product():
    for k in enumerate_kernels(3, 1):
        closed = kernel_series(k, 12, method="closed")
        product = kernel_series(k, 12, method="product")
        assert closed.coeffs == product.coeffs
    # spot-check the big catalog on a stride
    cat = enumerate_kernels(3, 2)
    for k in cat[:: len(cat) // 17]:
        closed = kernel_series(k, 9, method="closed")
        product = kernel_series(k, 9, method="product")
        assert closed.coeffs == product.coeffs


def test_graphs_series_matches_oracle_columns():
    for delta in (0, 1, 2):
        expected = [
            BIPARTITE_TABLES[n].get(delta, (0, 0, 0))[0] for n in (1, 2, 3, 4, 5)
        ]
        got = graphs_series(3, delta, 5)
        assert got.coefficient(0) == 0
        assert [got.coefficient(n) for n in (1, 2, 3, 4, 5)] == expected


def test_general_series_is_power_of_two_multiple():
    for delta in (0, 1, 2):
        bip = graphs_series(3, delta, 10)
        gen = general_graphs_series(3, delta, 10)
        assert gen.coeffs == [(2**delta) * c for c in bip.coeffs]


def test_m_sequence_prefix():
    assert m_sequence(4) == M_SEQUENCE


def test_z_critical_value():
    assert z_critical(3) == Fraction(4, 27)
    assert z_critical(2) == Fraction(1, 4)
    assert z_critical(5) == Fraction(4**4, 5**5)


def test_kappa_positive_and_finite():
    for delta in (1, 2):
        value = kappa(3, delta)
        assert value > 0
        assert math.isfinite(value)


def test_asymptotic_profile_exponent():
    p1 = asymptotic_profile(3, 1)
    p2 = asymptotic_profile(3, 2)
    assert p1.z_crit == Fraction(4, 27)
    assert p1.polynomial_exponent == Fraction(0)
    assert p2.polynomial_exponent == Fraction(3, 2)


def test_asymptotic_estimate_tracks_exact_counts():
    # the ratio exact/estimate should sit within a factor 2 already at n=60
    # and drift toward 1 as n grows
    for delta in (1, 2):
        series = graphs_series(3, delta, 60)
        ratio = asymptotic_ratio(3, delta, 60, series.coefficient(60))
        assert 0.5 < ratio < 2.0


def test_asymptotic_estimate_decimal_handles_large_n():
    value = asymptotic_estimate_decimal(3, 1, 2000)
    assert value > 0
    assert Decimal(10) ** 1500 < value  # far beyond float range
    assert asymptotic_estimate(3, 1, 40) == pytest.approx(
        float(asymptotic_estimate_decimal(3, 1, 40))
    )


def test_chain_series_structural_exclusions():
    # a white-white chain with no internal white is a single colored
    # vertex whose two half-colors coincide: possible only when the end
    # colors are equal
    tree = tree_series(3, 8)
    z = Series.x(8)
    white_sub = z * tree
    colored_sub = tree * tree
    ww_eq = chain_series(3, "ww", True, white_sub, colored_sub)
    ww_ne = chain_series(3, "ww", False, white_sub, colored_sub)
    assert ww_eq.coefficient(0) == 1
    assert ww_ne.coefficient(0) == 0
