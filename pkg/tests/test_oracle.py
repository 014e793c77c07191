"""Brute-force enumerators against frozen counts and the Burnside route."""

import json

import pytest

from frozen import BIPARTITE_TABLES, GENERAL_TABLES, TREE_NUMBERS_Q3
from sykgraphs.graphs import canonical_key, validate
from sykgraphs.oracle import (
    SizeLimitError,
    count_bipartite_classes_burnside,
    count_general_classes_burnside,
    count_table,
    enumerate_bipartite,
    enumerate_general,
)


def rows_as_tuples(table, with_bipartite=False):
    out = {}
    for delta, row in table.rows.items():
        if with_bipartite:
            out[delta] = (row.total, row.syk, row.melonic, row.bipartite)
        else:
            out[delta] = (row.total, row.syk, row.melonic)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bipartite_tables_match_frozen(n):
    table = count_table(3, n)
    assert rows_as_tuples(table) == BIPARTITE_TABLES[n]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_general_tables_match_frozen(n):
    table = count_table(3, n, family="general")
    assert rows_as_tuples(table, with_bipartite=True) == GENERAL_TABLES[n]


def test_melonic_column_equals_tree_numbers_at_delta_zero():
    for n in (1, 2, 3, 4):
        assert BIPARTITE_TABLES[n][0] == (
            TREE_NUMBERS_Q3[n],
            TREE_NUMBERS_Q3[n],
            TREE_NUMBERS_Q3[n],
        )


@pytest.mark.parametrize("n", [1, 2, 3])
def test_burnside_agrees_with_canonical_enumeration_bipartite(n):
    table = count_table(3, n)
    assert count_bipartite_classes_burnside(3, n) == table.total_classes()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_burnside_agrees_with_canonical_enumeration_general(n):
    table = count_table(3, n, family="general")
    assert count_general_classes_burnside(3, n) == table.total_classes()


def test_enumerated_classes_are_valid_canonical_and_distinct():
    seen = set()
    for g in enumerate_bipartite(3, 3):
        assert validate(g).ok
        key = canonical_key(g)
        assert key not in seen
        seen.add(key)
    assert len(seen) == 97


def test_general_enumeration_contains_the_bipartite_classes():
    bip = {canonical_key(g) for g in enumerate_bipartite(3, 2)}
    general = {canonical_key(g) for g in enumerate_general(3, 2)}
    assert bip < general
    assert len(general) == 13


def test_general_bipartite_column_matches_bipartite_family():
    general = count_table(3, 3, family="general")
    bipartite = count_table(3, 3)
    for delta, row in general.rows.items():
        assert row.bipartite == bipartite.rows[delta].total


def test_size_limits_name_the_limit():
    with pytest.raises(SizeLimitError) as err:
        enumerate_bipartite(3, 12)
    assert "limit" in str(err.value)
    with pytest.raises(SizeLimitError) as err:
        enumerate_general(3, 9)
    assert "limit" in str(err.value)


def test_tsv_header_and_shape():
    table = count_table(3, 2)
    lines = table.to_tsv().strip().split("\n")
    assert lines[0] == "n\tdelta\ttotal\tsyk\tmelonic"
    assert len(lines) == 1 + len(table.rows)
    assert lines[1].split("\t") == ["2", "0", "3", "3", "3"]


def test_json_includes_bipartite_column_only_for_general():
    bip = json.loads(count_table(3, 2).to_json())
    gen = json.loads(count_table(3, 2, family="general").to_json())
    assert "bipartite" not in bip["rows"]["0"]
    assert gen["rows"]["0"]["bipartite"] == 3
    assert gen["family"] == "general"


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        count_table(3, 2, family="signed")
