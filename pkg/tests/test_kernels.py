"""Core extraction, chain decomposition and the kernel catalog."""

from fractions import Fraction

import pytest

from frozen import KERNEL_CATALOG_Q3
from sykgraphs.constellations import psi
from sykgraphs.graphs import order
from sykgraphs.kernels import (
    SizeLimitError,
    catalog_to_json,
    chains,
    core,
    dominant_weighted_sum,
    edge_stats,
    enumerate_kernels,
    is_dominant,
    kernel,
    kernel_from_json,
    kernel_serial,
    kernel_to_dot,
    kernel_to_json,
    recompose,
)
from sykgraphs.oracle import enumerate_bipartite


def cores_at(n):
    for g in enumerate_bipartite(3, n):
        s = psi(g)
        yield g, s, core(s)


def test_core_recompose_is_exact():
    for _, s, (cored, record) in cores_at(3):
        assert recompose(cored, record) == s


def test_core_of_a_tree_is_the_root_alone():
    for g, s, (cored, _) in cores_at(3):
        if order(g) == 0:
            assert cored.whites == (cored.root,)
            assert not cored.vertices
        else:
            # every core vertex keeps degree >= 2
            for v in cored.vertices:
                assert len(v.corners) >= 2


def test_chains_cover_all_non_kernel_core_vertices():
    for g, s, (cored, _) in cores_at(4):
        if order(g) == 0:
            continue
        cs = chains(cored)
        internal_whites = set()
        internal_colored = set()
        for c in cs:
            internal_whites.update(c.internal_whites)
            internal_colored.update(c.internal_colors)
        # internal vertices have degree exactly 2 and exclude the root
        assert cored.root not in internal_whites
        for ci in internal_colored:
            assert len(cored.vertices[ci].corners) == 2
        # ends sit on kernel nodes: root, degree>=3 whites, degree>=3 colored
        k = kernel(cored)
        for c in cs:
            for end in (c.end_a, c.end_b):
                kind, _ = end
                assert kind in ("w", "c")


def test_kernel_excess_matches_graph_order():
    for g, s, (cored, _) in cores_at(4):
        delta = order(g)
        if delta == 0:
            continue
        k = kernel(cored)
        assert k.excess() == delta
        # kernel whites keep full color set q on their slots
        degs = k.degrees()
        assert degs[0] >= 1  # the root survives with at least one edge


def test_catalog_sizes_and_dominant_subsets():
    for delta, (total, dominant) in KERNEL_CATALOG_Q3.items():
        cat = enumerate_kernels(3, delta)
        assert len(cat) == total
        assert sum(1 for k in cat if is_dominant(k)) == dominant
        assert len(enumerate_kernels(3, delta, dominant_only=True)) == dominant


def test_catalog_is_duplicate_free_and_sorted():
    cat = enumerate_kernels(3, 1)
    serials = [kernel_serial(k) for k in cat]
    assert serials == sorted(serials)
    assert len(set(serials)) == len(serials)


def test_every_order_one_core_kernel_is_in_the_catalog():
    catalog = {kernel_serial(k) for k in enumerate_kernels(3, 1)}
    seen = set()
    for g, s, (cored, _) in cores_at(4):
        if order(g) != 1:
            continue
        seen.add(kernel_serial(kernel(cored)))
    assert seen <= catalog
    # n=4 graphs already realize most of the 21 shapes
    assert len(seen) >= 15


def test_dominant_kernels_have_maximal_edges():
    for k in enumerate_kernels(3, 2, dominant_only=True):
        assert len(k.edges) == 3 * 2 - 1
        degs = k.degrees()
        assert degs[0] == 1
        assert all(d == 3 for d in degs[1:])


def test_dominant_weighted_sums_match_closed_form():
    # (q/(q-1)) * m_delta * (q^2/2)^(2*delta-1) for the two cheap cases
    assert dominant_weighted_sum(3, 1) == Fraction(27, 4)
    assert dominant_weighted_sum(3, 2) == Fraction(3, 2) * 5 * Fraction(9, 2) ** 3
    assert dominant_weighted_sum(4, 1) == Fraction(32, 3)
    assert dominant_weighted_sum(5, 1) == Fraction(125, 8)


def test_excess_limit_is_refused_with_named_limit():
    with pytest.raises(SizeLimitError) as err:
        enumerate_kernels(3, 4)
    assert "KERNEL_DELTA_LIMIT" in str(err.value)


def test_kernel_json_round_trip():
    for k in enumerate_kernels(3, 1)[:8]:
        again = kernel_from_json(kernel_to_json(k))
        assert again == k


def test_catalog_json_lists_every_kernel():
    import json

    cat = enumerate_kernels(3, 1)
    payload = json.loads(catalog_to_json(cat))
    assert isinstance(payload, list)
    assert len(payload) == len(cat)
    assert all(entry["excess"] == 1 for entry in payload)


def test_kernel_dot_uses_given_name():
    k = enumerate_kernels(3, 1)[0]
    dot = kernel_to_dot(k, name="kernel_7")
    assert dot.startswith("graph kernel_7 {")
    assert dot.rstrip().endswith("}")
