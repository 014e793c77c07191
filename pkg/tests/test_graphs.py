"""Core graph type: invariants, predicates and canonical forms."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sykgraphs.graphs import (
    ColoredGraph,
    bicolored_cycle_count,
    bipartition,
    canonical_form,
    canonical_key,
    cycle_count_pair,
    from_contracted_permutations,
    gurau_degree,
    is_bipartite,
    is_melonic,
    is_syk,
    order,
    residues,
    validate,
)


def melon(q: int) -> ColoredGraph:
    """Two vertices joined by one edge of every color."""
    pair = tuple((1, 0) for _ in range(q + 1))
    return ColoredGraph(q=q, matchings=pair, root=(0, 1))


# valid q=3 graph on 4 vertices with no proper 2-coloring
NON_BIPARTITE = ColoredGraph(
    q=3,
    matchings=((1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0), (1, 0, 3, 2)),
    root=(0, 1),
)


def test_melon_is_the_unique_smallest_graph():
    g = melon(3)
    assert validate(g).ok
    assert g.n_pairs == 1
    assert order(g) == 0
    assert gurau_degree(g) == 0
    assert is_syk(g)
    assert is_bipartite(g)
    assert is_melonic(g)


def test_validate_rejects_fixed_points_and_non_involutions():
    fixed = ColoredGraph(q=2, matchings=((1, 0), (0, 1), (1, 0)), root=(0, 1))
    report = validate(fixed)
    assert not report.ok
    assert "fixed point" in report.first
    skew = ColoredGraph(
        q=2,
        matchings=((1, 0, 3, 2), (1, 2, 3, 0), (3, 2, 1, 0)),
        root=(0, 1),
    )
    report = validate(skew)
    assert not report.ok
    assert "involution" in report.first


def test_validate_rejects_disconnected():
    # two separate melons, every color matching within each pair
    m = ((1, 0, 3, 2),) * 4
    g = ColoredGraph(q=3, matchings=m, root=(0, 1))
    report = validate(g)
    assert not report.ok
    assert "disconnected" in report.first


def test_validate_rejects_bad_root():
    g = ColoredGraph(q=3, matchings=((1, 0),) * 4, root=(0, 0))
    report = validate(g)
    assert not report.ok
    assert "root" in report.first


def test_order_matches_face_count_identity():
    # delta = 1 + (q-1)n - F0 where F0 counts color-(0i) cycles
    for perms in itertools.product(itertools.permutations(range(3)), repeat=3):
        g = from_contracted_permutations(3, list(perms))
        if not validate(g).ok:
            continue
        f0 = sum(bicolored_cycle_count(g, i) for i in range(1, 4))
        assert order(g) == 1 + 2 * g.n_pairs - f0


def test_k33_is_not_melonic():
    # the 3-colored K_{3,3}: smallest non-melonic bipartite graph
    g = from_contracted_permutations(2, [(1, 2, 0), (2, 0, 1)])
    assert validate(g).ok
    assert g.n_pairs == 3
    assert is_bipartite(g)
    assert not is_melonic(g)
    assert gurau_degree(g) == Fraction(2)


def test_melonic_iff_zero_gurau_degree_bipartite():
    for perms in itertools.product(itertools.permutations(range(3)), repeat=3):
        g = from_contracted_permutations(3, list(perms))
        if not validate(g).ok:
            continue
        assert is_melonic(g) == (gurau_degree(g) == 0)


def test_syk_means_connected_without_color_zero():
    found = set()
    for perms in itertools.product(itertools.permutations(range(2)), repeat=3):
        g = from_contracted_permutations(3, list(perms))
        if not validate(g).ok:
            continue
        expected = len(residues(g, 0).components) == 1
        assert is_syk(g) == expected
        found.add(expected)
    assert found == {True, False}


def test_gurau_degree_integral_and_nonnegative_at_q3():
    # with an even vertex count the q=3 degree formula always lands on an
    # integer, bipartite or not
    rng = random.Random(7)
    checked = 0
    while checked < 120:
        ms = [(1, 0, 3, 2, 5, 4)]
        for _ in range(3):
            shuffled = list(range(6))
            rng.shuffle(shuffled)
            m = [0] * 6
            for i in range(0, 6, 2):
                a, b = shuffled[i], shuffled[i + 1]
                m[a], m[b] = b, a
            ms.append(tuple(m))
        g = ColoredGraph(q=3, matchings=tuple(ms), root=(0, 1))
        if not validate(g).ok:
            continue
        checked += 1
        gd = gurau_degree(g)
        assert gd.denominator == 1
        assert gd >= 0


def test_bipartition_exists_iff_bipartite():
    parts = bipartition(melon(3))
    assert parts == ((0,), (1,))
    assert validate(NON_BIPARTITE).ok
    assert bipartition(NON_BIPARTITE) is None
    assert not is_bipartite(NON_BIPARTITE)


def test_cycle_count_pair_symmetry():
    g = from_contracted_permutations(2, [(1, 2, 0), (2, 0, 1)])
    for a in range(3):
        for b in range(3):
            if a != b:
                assert cycle_count_pair(g, a, b) == cycle_count_pair(g, b, a)


def test_canonical_form_is_idempotent_and_valid():
    for perms in itertools.product(itertools.permutations(range(3)), repeat=3):
        g = from_contracted_permutations(3, list(perms))
        if not validate(g).ok:
            continue
        c = canonical_form(g)
        assert validate(c).ok
        assert canonical_key(c) == canonical_key(g)
        assert canonical_form(c) == c


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_key_invariant_under_relabeling(data):
    n = data.draw(st.integers(min_value=2, max_value=4))
    perms = [tuple(data.draw(st.permutations(list(range(n))))) for _ in range(3)]
    g = from_contracted_permutations(3, perms)
    if not validate(g).ok:
        return
    # conjugating every permutation by sigma relabels the white pairs;
    # keeping sigma(0)=0 preserves the root pair
    sigma = [0] + data.draw(st.permutations(list(range(1, n))))
    inv = [0] * n
    for i, v in enumerate(sigma):
        inv[v] = i
    conj = [tuple(sigma[p[inv[i]]] for i in range(n)) for p in perms]
    h = from_contracted_permutations(3, conj)
    assert validate(h).ok
    assert order(h) == order(g)
    assert gurau_degree(h) == gurau_degree(g)
    assert is_syk(h) == is_syk(g)
    assert is_melonic(h) == is_melonic(g)
    assert canonical_key(h) == canonical_key(g)


def test_json_round_trip():
    g = from_contracted_permutations(2, [(1, 2, 0), (2, 0, 1)])
    h = ColoredGraph.from_json(g.to_json())
    assert h == g
    with pytest.raises(ValueError):
        bad = g.to_json().replace('"root": [0, 1]', '"root": [0, 2]')
        ColoredGraph.from_json(bad)


def test_to_dot_mentions_every_vertex_and_color():
    g = melon(3)
    dot = g.to_dot()
    assert dot.startswith("graph")
    assert "label=0" in dot and "label=3" in dot
    assert "doublecircle" in dot


def test_from_contracted_permutations_expands_pairs():
    # one transposition and two identities: the 2-pair melonic chain
    g = from_contracted_permutations(3, [(1, 0), (0, 1), (0, 1)])
    assert g.n_pairs == 2
    assert g.n_vertices == 4
    assert validate(g).ok
    assert order(g) == 0
    # all three transpositions: the unique order-2 class at n=2
    h = from_contracted_permutations(3, [(1, 0), (1, 0), (1, 0)])
    assert validate(h).ok
    assert order(h) == 2
