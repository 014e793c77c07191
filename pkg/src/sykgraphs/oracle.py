"""Brute-force enumeration of rooted colored graphs.

Two independent counting routes are provided for cross-validation:

* streaming enumeration of lexicographically canonical representatives
  (one per rooted isomorphism class), refined by a stabilizer chain so the
  group action is only applied where it can still matter, and
* Burnside counting over the same group action.

The bipartite family is encoded by q permutations of the n color-0 pairs
(the color-0 contraction); the general family by q+1 perfect matchings on
2n labeled vertices with the root pair pinned to (0, 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial

from .graphs import (
    ColoredGraph,
    from_contracted_permutations,
    is_bipartite,
    is_melonic,
    is_syk,
    order,
)

# Work estimate caps; both enumerations scan full candidate tuples, so the
# caps name the quantity that grows out of reach.
BIPARTITE_TUPLE_LIMIT = 3_000_000
GENERAL_TUPLE_LIMIT = 20_000_000


class SizeLimitError(ValueError):
    """Raised when an enumeration would exceed its feasibility cap."""


def _inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _maps_connected(maps, size: int) -> bool:
    seen = bytearray(size)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for m in maps:
            w = m[v]
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == size


def _iter_canonical_tuples(candidate_lists, group):
    """Yield tuples (f_0..f_k) minimal in their orbit under simultaneous
    conjugation by the given group.

    group is a list of (sigma, sigma_inverse) pairs excluding the identity.
    A tuple is minimal iff no group element conjugates it to something
    lexicographically smaller; the first strictly-smaller coordinate decides,
    so each level only needs the stabilizer of the previous levels.
    """
    size = len(candidate_lists[0][0]) if candidate_lists[0] else 0
    idx = tuple(range(size))
    last = len(candidate_lists) - 1

    def rec(level, chosen, subgroup):
        for f in candidate_lists[level]:
            stab = []
            skip = False
            for s, sinv in subgroup:
                cf = tuple(s[f[sinv[i]]] for i in idx)
                if cf < f:
                    skip = True
                    break
                if cf == f:
                    stab.append((s, sinv))
            if skip:
                continue
            chosen.append(f)
            if level == last:
                yield tuple(chosen)
            else:
                yield from rec(level + 1, chosen, stab)
            chosen.pop()

    yield from rec(0, [], group)


# ---------------------------------------------------------------------------
# Bipartite family


def _stab_group(n: int):
    """Non-identity permutations of 0..n-1 fixing 0, with inverses."""
    group = []
    for tail in itertools.permutations(range(1, n)):
        s = (0,) + tail
        if any(s[i] != i for i in range(n)):
            group.append((s, _inverse(s)))
    return group


def _check_bipartite_size(q: int, n: int) -> None:
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    work = factorial(n) ** q
    if work > BIPARTITE_TUPLE_LIMIT:
        raise SizeLimitError(
            f"bipartite enumeration needs (n!)^q = {work} candidate tuples, "
            f"over the limit of {BIPARTITE_TUPLE_LIMIT}"
        )


def _iter_bipartite(q: int, n: int):
    perms = list(itertools.permutations(range(n)))
    group = _stab_group(n)
    lists = [perms] * q
    for tup in _iter_canonical_tuples(lists, group):
        if _maps_connected(tup, n):
            yield from_contracted_permutations(q, tup)


def enumerate_bipartite(q: int, n: int, visitor=None):
    """Visit one representative per rooted isomorphism class of bipartite
    graphs with n color-0 edges.

    With visitor=None returns a generator of ColoredGraph; otherwise calls
    visitor(graph) per class and returns the class count.
    """
    _check_bipartite_size(q, n)
    gen = _iter_bipartite(q, n)
    if visitor is None:
        return gen
    count = 0
    for g in gen:
        visitor(g)
        count += 1
    return count


def _connected_tuple_counts(q: int, n: int) -> list:
    """c[m] = connected q-tuples of permutations of m points, root at 0."""
    c = [0] * (n + 1)
    for m in range(1, n + 1):
        total = factorial(m) ** q
        for k in range(1, m):
            total -= comb(m - 1, k - 1) * c[k] * factorial(m - k) ** q
        c[m] = total
    return c


def count_bipartite_classes_burnside(q: int, n: int) -> int:
    """Total rooted bipartite classes, all orders combined, via Burnside.

    The identity term is the connected-tuple count from the convolution
    recurrence; other group elements are handled by enumerating commuting
    permutation tuples directly.
    """
    _check_bipartite_size(q, n)
    acc = _connected_tuple_counts(q, n)[n]
    perms = list(itertools.permutations(range(n)))
    for s, _sinv in _stab_group(n):
        comm = [p for p in perms if all(p[s[i]] == s[p[i]] for i in range(n))]
        for tup in itertools.product(comm, repeat=q):
            if _maps_connected(tup, n):
                acc += 1
    assert acc % factorial(n - 1) == 0
    return acc // factorial(n - 1)


# ---------------------------------------------------------------------------
# General family


def _perfect_matchings(size: int):
    """All fixed-point-free involutions of 0..size-1 as tuples."""
    out = []

    def rec(remaining, pairs):
        if not remaining:
            inv = [0] * size
            for a, b in pairs:
                inv[a] = b
                inv[b] = a
            out.append(tuple(inv))
            return
        a = remaining[0]
        for j in range(1, len(remaining)):
            b = remaining[j]
            rec(remaining[1:j] + remaining[j + 1:], pairs + [(a, b)])

    rec(tuple(range(size)), [])
    return out


def _double_factorial_odd(m: int) -> int:
    """(2m-1)!! with the empty product equal to 1: perfect matchings of 2m."""
    out = 1
    for k in range(1, 2 * m, 2):
        out *= k
    return out


def _pair_stab_group(size: int):
    """Non-identity permutations of 0..size-1 fixing both 0 and 1."""
    group = []
    for tail in itertools.permutations(range(2, size)):
        s = (0, 1) + tail
        if any(s[i] != i for i in range(size)):
            group.append((s, _inverse(s)))
    return group


def _check_general_size(q: int, n: int) -> None:
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    work = _double_factorial_odd(n - 1) * _double_factorial_odd(n) ** q
    if work > GENERAL_TUPLE_LIMIT:
        raise SizeLimitError(
            f"general enumeration needs {work} candidate matching tuples, "
            f"over the limit of {GENERAL_TUPLE_LIMIT}"
        )


def _iter_general(q: int, n: int):
    size = 2 * n
    all_matchings = _perfect_matchings(size)
    rooted = [m for m in all_matchings if m[0] == 1]
    group = _pair_stab_group(size)
    lists = [rooted] + [all_matchings] * q
    for tup in _iter_canonical_tuples(lists, group):
        if _maps_connected(tup, size):
            yield ColoredGraph(q=q, matchings=tup, root=(0, 1))


def enumerate_general(q: int, n: int, visitor=None):
    """Visit one representative per rooted class of possibly non-bipartite
    graphs on 2n vertices (root pair fixed to the oriented edge 0 -> 1)."""
    _check_general_size(q, n)
    gen = _iter_general(q, n)
    if visitor is None:
        return gen
    count = 0
    for g in gen:
        visitor(g)
        count += 1
    return count


def _connected_rooted_matching_counts(q: int, n: int) -> list:
    """c[m] = connected (q+1)-tuples of matchings on 2m points with the
    root pair (0,1) inside the color-0 matching."""
    c = [0] * (n + 1)
    for m in range(1, n + 1):
        total = _double_factorial_odd(m - 1) * _double_factorial_odd(m) ** q
        for k in range(1, m):
            total -= (
                comb(2 * m - 2, 2 * k - 2)
                * c[k]
                * _double_factorial_odd(m - k) ** (q + 1)
            )
        c[m] = total
    return c


def count_general_classes_burnside(q: int, n: int) -> int:
    """Total rooted general-family classes via Burnside counting."""
    _check_general_size(q, n)
    size = 2 * n
    acc = _connected_rooted_matching_counts(q, n)[n]
    all_matchings = _perfect_matchings(size)
    rooted = [m for m in all_matchings if m[0] == 1]
    idx = tuple(range(size))
    for s, sinv in _pair_stab_group(size):
        fixed_all = [
            m for m in all_matchings
            if all(s[m[sinv[i]]] == m[i] for i in idx)
        ]
        fixed_rooted = [m for m in fixed_all if m[0] == 1]
        if not fixed_rooted:
            continue
        for tup in itertools.product(fixed_rooted, *([fixed_all] * q)):
            if _maps_connected(tup, size):
                acc += 1
    assert acc % factorial(size - 2) == 0
    return acc // factorial(size - 2)


# ---------------------------------------------------------------------------
# Count tables


@dataclass(frozen=True)
class CountRow:
    total: int
    syk: int
    melonic: int
    bipartite: int | None = None


@dataclass(frozen=True)
class CountTable:
    """Per-order class counts for one (q, n)."""

    q: int
    n: int
    family: str
    rows: dict

    def total_classes(self) -> int:
        return sum(r.total for r in self.rows.values())

    def to_tsv(self) -> str:
        lines = ["n\tdelta\ttotal\tsyk\tmelonic"]
        for delta in sorted(self.rows):
            r = self.rows[delta]
            lines.append(f"{self.n}\t{delta}\t{r.total}\t{r.syk}\t{r.melonic}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        import json

        rows = {}
        for delta in sorted(self.rows):
            r = self.rows[delta]
            row = {"total": r.total, "syk": r.syk, "melonic": r.melonic}
            if r.bipartite is not None:
                row["bipartite"] = r.bipartite
            rows[str(delta)] = row
        return json.dumps(
            {"q": self.q, "n": self.n, "family": self.family, "rows": rows}
        )


def count_table(q: int, n: int, family: str = "bipartite") -> CountTable:
    """Run the requested enumerator and classify every class by order and
    by the structural predicates."""
    if family == "bipartite":
        gen = enumerate_bipartite(q, n)
        track_bipartite = False
    elif family == "general":
        gen = enumerate_general(q, n)
        track_bipartite = True
    else:
        raise ValueError(f"unknown family {family!r}")
    acc: dict[int, list] = {}
    for g in gen:
        delta = order(g)
        row = acc.setdefault(delta, [0, 0, 0, 0])
        row[0] += 1
        if is_syk(g):
            row[1] += 1
        if is_melonic(g):
            row[2] += 1
        if track_bipartite and is_bipartite(g):
            row[3] += 1
    rows = {
        delta: CountRow(
            total=r[0],
            syk=r[1],
            melonic=r[2],
            bipartite=r[3] if track_bipartite else None,
        )
        for delta, r in acc.items()
    }
    return CountTable(q=q, n=n, family=family, rows=rows)
