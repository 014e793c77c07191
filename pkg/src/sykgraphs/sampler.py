"""Exact-uniform sampling of constellations and graphs, plus surveys.

Sampling is a four-stage decomposition with integer weights throughout,
so the output distribution is exactly uniform (no floating point):

  A. pick a kernel K proportional to N(K, n), the number of excess-delta
     constellations with n whites and kernel K;
  B. pick the number of internal whites on every kernel edge via a
     backward dynamic program, then the chain colors via walk counts;
  C. pick the hanging forest by shuffling a step sequence and applying
     the cycle lemma (every valid forest equally likely);
  D. deterministically assemble the constellation.

The table builder cross-checks sum_K N(K, n) against the closed-form
series count, so a mismatch between the two routes fails loudly at
build time.  Graphs are produced from constellations by the contraction
inverse (bipartite family) or by attaching uniform signs (general
family), which is exactly uniform per stratum because the sign fiber
over every order-delta graph has constant size 2^(qn - n + 1 - delta).

survey() samples repeatedly and recomputes structural certificates from
each sample: connectivity after dropping color 0, bipartiteness, chain
shape, forest structure of the color-deleted constellations, melonicity
of the residues, the handle-removal induction, and the Gurau degree.
Trials run in fixed-size chunks with one RNG stream per chunk, so a
report depends only on the configuration and the seed, never on how
many workers processed the chunks.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .constellations import (
    Constellation,
    EmbeddedVertex,
    SignedConstellation,
    excess,
    psi,
    psi_inverse,
    psi_hat_inverse,
)
from .graphs import ColoredGraph, gurau_degree, is_bipartite, is_melonic, is_syk
from .kernels import KernelDiagram, chains, core, enumerate_kernels
from .series import forest_count, graphs_series, walk_weights

CHUNK_STRIDE = 1 << 64
CHUNK_TRIALS = 1024


@dataclass
class SamplerTables:
    """Integer weight tables for exact sampling at fixed (q, delta, n)."""

    q: int
    delta: int
    n: int
    kernels: list
    weights: list
    cumulative: list
    total: int
    r_tables: list
    edge_sigs: list
    w_eq: list
    w_ne: list


def _edge_sig(k: KernelDiagram):
    sig = []
    for e in k.edges:
        both_colored = not k.is_white(e.a) and not k.is_white(e.b)
        sig.append((e.color_a == e.color_b, both_colored))
    return tuple(sig)


def _r_table(q, n, n_white, sig, w_eq, w_ne):
    a_cap = n - n_white
    if a_cap < 0:
        return None
    rows = [None] * (len(sig) + 1)
    rows[-1] = [
        forest_count(q, q * (n_white + a), n - n_white - a) for a in range(a_cap + 1)
    ]
    for idx in range(len(sig) - 1, -1, -1):
        equal, both_colored = sig[idx]
        weights = w_eq if equal else w_ne
        lo = 1 if both_colored else 0
        nxt = rows[idx + 1]
        row = [0] * (a_cap + 1)
        for acc_a in range(a_cap + 1):
            total = 0
            for a in range(lo, a_cap - acc_a + 1):
                w = weights[a]
                if w:
                    total += w * nxt[acc_a + a]
            row[acc_a] = total
        rows[idx] = row
    return rows


def build_tables(q: int, delta: int, n: int) -> SamplerTables:
    """Precompute kernel weights and per-edge backward sums.

    Raises if the independent series count disagrees with the summed
    kernel weights, or if nothing exists at this (q, delta, n).
    """
    kernels = enumerate_kernels(q, delta)
    w_eq = walk_weights(q, True, n)
    w_ne = walk_weights(q, False, n)
    weights = []
    r_tables = []
    sigs = []
    cache = {}
    for k in kernels:
        sig = _edge_sig(k)
        sigs.append(sig)
        key = (k.n_white, sig)
        if key not in cache:
            cache[key] = _r_table(q, n, k.n_white, sig, w_eq, w_ne)
        rows = cache[key]
        r_tables.append(rows)
        weights.append(rows[0][0] if rows is not None else 0)
    total = sum(weights)
    expected = graphs_series(q, delta, n).coefficient(n)
    if total != expected:
        raise AssertionError(
            f"kernel-weight total {total} != series count {expected} "
            f"at q={q} delta={delta} n={n}"
        )
    if total == 0:
        raise ValueError(f"no objects exist at q={q} delta={delta} n={n}")
    cumulative = []
    acc = 0
    for w in weights:
        acc += w
        cumulative.append(acc)
    return SamplerTables(
        q=q,
        delta=delta,
        n=n,
        kernels=kernels,
        weights=weights,
        cumulative=cumulative,
        total=total,
        r_tables=r_tables,
        edge_sigs=sigs,
        w_eq=w_eq,
        w_ne=w_ne,
    )


def _sample_edge_whites(tables, rng, kernel_index):
    """Stage B part one: internal white count per kernel edge."""
    rows = tables.r_tables[kernel_index]
    sig = tables.edge_sigs[kernel_index]
    a_cap = len(rows[-1]) - 1
    acc_a = 0
    counts = []
    for idx, (equal, both_colored) in enumerate(sig):
        weights = tables.w_eq if equal else tables.w_ne
        lo = 1 if both_colored else 0
        target = rng.randrange(rows[idx][acc_a])
        chosen = None
        for a in range(lo, a_cap - acc_a + 1):
            w = weights[a]
            if not w:
                continue
            block = w * rows[idx + 1][acc_a + a]
            if target < block:
                chosen = a
                break
            target -= block
        if chosen is None:
            raise AssertionError("edge-white sampling fell off the table")
        counts.append(chosen)
        acc_a += chosen
    return counts, acc_a


def _sample_walk(q, rng, start, goal, length, w_eq, w_ne):
    """Stage B part two: the colors visited by a length-`length` walk from
    start to goal in the complete graph on 1..q, uniformly."""
    colors = []
    cur = start
    for rem in range(length, 0, -1):
        total = (w_eq if cur == goal else w_ne)[rem]
        target = rng.randrange(total)
        chosen = None
        for y in range(1, q + 1):
            if y == cur:
                continue
            w = (w_eq if y == goal else w_ne)[rem - 1]
            if not w:
                continue
            if target < w:
                chosen = y
                break
            target -= w
        if chosen is None:
            raise AssertionError("walk sampling fell off the table")
        colors.append(chosen)
        cur = chosen
    if length and colors[-1] != goal:
        raise AssertionError("walk did not reach its goal color")
    return colors


def _sample_forest(q, rng, n_slots, m):
    """Stage C: uniform forest of n_slots ordered q-ary trees with m
    internal nodes, as nested tuples (None is the empty tree)."""
    if n_slots == 0:
        if m:
            raise AssertionError("internal nodes without slots")
        return []
    steps = [q - 1] * m + [-1] * (n_slots + q * m - m)
    rng.shuffle(steps)
    total = len(steps)
    prefix = 0
    first_at = {}
    prefixes = []
    for idx, c in enumerate(steps):
        prefix += c
        prefixes.append(prefix)
        if prefix not in first_at:
            first_at[prefix] = idx
    low = min(prefixes[:-1]) if total > 1 else 0
    low = min(low, 0)
    starts = []
    for level in range(low, low + n_slots):
        starts.append(0 if level == 0 else first_at[level] + 1)
    if len(set(starts)) != n_slots:
        raise AssertionError("cycle lemma produced a bad start set")
    r = starts[rng.randrange(n_slots)]
    seq = steps[r:] + steps[:r]
    trees = []
    stack = []
    for c in seq:
        if c > 0:
            stack.append([])
            continue
        obj = None
        while True:
            if not stack:
                trees.append(obj)
                break
            stack[-1].append(obj)
            if len(stack[-1]) == q:
                obj = tuple(stack.pop())
            else:
                break
    if stack or len(trees) != n_slots:
        raise AssertionError("forest parse failed")
    return trees


def _chain_layout(k: KernelDiagram, edge_index: int, whites, walk):
    """Vertex specs for one rebuilt chain.

    Returns (colored_specs, white_colors, adjacency) where colored_specs
    lists (color, prev_white, next_white) in chain order, white_colors
    gives each internal white's two chain colors, and adjacency maps
    colored kernel sides to their corner white.
    """
    e = k.edges[edge_index]
    a_count = len(whites)
    kinds = ("w" if k.is_white(e.a) else "c", "w" if k.is_white(e.b) else "c")
    adjacency = {}
    specs = []
    white_colors = []
    if kinds == ("c", "c"):
        i, j = e.color_a, e.color_b
        adjacency[(edge_index, 0)] = whites[0]
        adjacency[(edge_index, 1)] = whites[-1]
        for t in range(a_count - 1):
            specs.append((walk[t], whites[t], whites[t + 1]))
        for t in range(a_count):
            left = i if t == 0 else walk[t - 1]
            right = j if t == a_count - 1 else walk[t]
            white_colors.append((left, right))
        return specs, white_colors, adjacency
    if "c" in kinds:
        colored_side = kinds.index("c")
        white_end = (e.b, e.a)[colored_side]
        i = (e.color_a, e.color_b)[colored_side]
        if a_count == 0:
            adjacency[(edge_index, colored_side)] = white_end
            return specs, white_colors, adjacency
        adjacency[(edge_index, colored_side)] = whites[0]
        for t in range(a_count):
            nxt = whites[t + 1] if t < a_count - 1 else white_end
            specs.append((walk[t], whites[t], nxt))
            left = i if t == 0 else walk[t - 1]
            white_colors.append((left, walk[t]))
        return specs, white_colors, adjacency
    i, j = e.color_a, e.color_b
    first_next = whites[0] if a_count else e.b
    specs.append((i, e.a, first_next))
    for t in range(a_count):
        nxt = whites[t + 1] if t < a_count - 1 else e.b
        specs.append((walk[t], whites[t], nxt))
        left = i if t == 0 else walk[t - 1]
        white_colors.append((left, walk[t]))
    return specs, white_colors, adjacency


def _assemble(q, k: KernelDiagram, edge_whites, walks, trees, n):
    """Stage D: rebuild the constellation; deterministic given the picks."""
    deg = k.degrees()
    white_count = k.n_white
    colored_acc = []
    jobs = []
    tree_iter = iter(trees)

    def new_slot(owner_color):
        sub = []
        jobs.append((sub, next(tree_iter), owner_color))
        return sub

    white_half = {w: set() for w in range(k.n_white)}
    for e in k.edges:
        if k.is_white(e.a):
            white_half[e.a].add(e.color_a)
        if k.is_white(e.b):
            white_half[e.b].add(e.color_b)
    for w in range(k.n_white):
        for c in range(1, q + 1):
            if c not in white_half[w]:
                colored_acc.append([c, [[w], new_slot(c)]])
    gap_lists = []
    for i, emb in enumerate(k.embeddings):
        gap_lists.append([new_slot(k.colors[i]) for _ in emb])
    adjacency = {}
    chain_specs = []
    for ei in range(len(k.edges)):
        a_count = edge_whites[ei]
        whites = list(range(white_count, white_count + a_count))
        white_count += a_count
        specs, white_colors, adj = _chain_layout(k, ei, whites, walks[ei])
        adjacency.update(adj)
        for w, (left, right) in zip(whites, white_colors):
            for c in range(1, q + 1):
                if c != left and c != right:
                    colored_acc.append([c, [[w], new_slot(c)]])
        chain_specs.extend(specs)
    for color, prev_w, next_w in chain_specs:
        colored_acc.append(
            [color, [[prev_w], new_slot(color), [next_w], new_slot(color)]]
        )
    for i, emb in enumerate(k.embeddings):
        parts = []
        for pos, end in enumerate(emb):
            parts.append([adjacency[end]])
            parts.append(gap_lists[i][pos])
        colored_acc.append([k.colors[i], parts])
    for _ in tree_iter:
        raise AssertionError("unconsumed forest slots")

    stack = list(jobs)
    while stack:
        target, tree, owner_color = stack.pop()
        spine = []
        cur = tree
        while cur is not None:
            spine.append(cur)
            cur = cur[0]
        others = [c for c in range(1, q + 1) if c != owner_color]
        for node in reversed(spine):
            u = white_count
            white_count += 1
            target.append(u)
            for child, color in zip(node[1:], others):
                sub = []
                colored_acc.append([color, [[u], sub]])
                stack.append((sub, child, color))
    if white_count != n:
        raise AssertionError(f"assembled {white_count} whites, expected {n}")
    colored = tuple(
        EmbeddedVertex(color, tuple(w for part in parts for w in part))
        for color, parts in colored_acc
    )
    return Constellation(q=q, n_white=n, colored=colored, root=0)


def sample_constellation(tables: SamplerTables, rng: random.Random) -> Constellation:
    """One exactly-uniform excess-delta constellation with n whites."""
    target = rng.randrange(tables.total)
    ki = bisect_right(tables.cumulative, target)
    k = tables.kernels[ki]
    edge_whites, a_total = _sample_edge_whites(tables, rng, ki)
    walks = []
    for ei, e in enumerate(k.edges):
        kinds = ("w" if k.is_white(e.a) else "c", "w" if k.is_white(e.b) else "c")
        if kinds == ("w", "c"):
            start, goal = e.color_b, e.color_a
        else:
            start, goal = e.color_a, e.color_b
        walks.append(
            _sample_walk(
                tables.q, rng, start, goal, edge_whites[ei], tables.w_eq, tables.w_ne
            )
        )
    m = tables.n - k.n_white - a_total
    n_slots = tables.q * (k.n_white + a_total)
    trees = _sample_forest(tables.q, rng, n_slots, m)
    s = _assemble(tables.q, k, edge_whites, walks, trees, tables.n)
    if excess(s) != tables.delta:
        raise AssertionError("assembled constellation has wrong excess")
    return s


def sample_graph(
    tables: SamplerTables, rng: random.Random, family: str = "bipartite"
) -> ColoredGraph:
    """Uniform graph of the requested family at (q, delta, n)."""
    s = sample_constellation(tables, rng)
    if family == "bipartite":
        return psi_inverse(s)
    if family != "general":
        raise ValueError(f"unknown family {family!r}")
    bits = rng.getrandbits(tables.q * tables.n)
    signs = tuple(
        1 if (bits >> i) & 1 else -1 for i in range(tables.q * tables.n)
    )
    return psi_hat_inverse(SignedConstellation(s, signs))


def _forest_check(s: Constellation, skip_color: int) -> bool:
    """Is the constellation minus its skip_color vertices acyclic?"""
    parent = list(range(s.n_white + len(s.colored)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, v in enumerate(s.colored):
        if v.color == skip_color:
            continue
        node = s.n_white + idx
        for w in v.corners:
            a, b = find(w), find(node)
            if a == b:
                return False
            parent[a] = b
    return True


def _chain_certificate(q: int, s: Constellation) -> bool:
    """Every kernel chain keeps at least one internal white and its
    internal colored vertices use every color."""
    cored, _ = core(s)
    for chain in chains(cored):
        if not chain.internal_whites:
            return False
        colors = {cored.vertices[pos].color for pos in chain.internal_colors}
        if colors != set(range(1, q + 1)):
            return False
    return True


def _handle_vertices(q: int, s: Constellation, graph: ColoredGraph) -> int:
    """Count core chain whites whose graph pair sits on a common
    two-color cycle of its chain colors."""
    cored, _ = core(s)
    comp = {}
    count = 0
    for chain in chains(cored):
        seq = [chain.end_a] + list(chain.internal) + [chain.end_b]
        for pos in range(1, len(seq) - 1):
            kind, x = seq[pos]
            if kind != "w":
                continue
            i = cored.vertices[seq[pos - 1][1]].color
            j = cored.vertices[seq[pos + 1][1]].color
            pair = tuple(sorted((i, j)))
            if pair not in comp:
                comp[pair] = _two_color_components(graph, pair)
            labels = comp[pair]
            if labels[2 * x] == labels[2 * x + 1]:
                count += 1
    return count


def _two_color_components(graph: ColoredGraph, pair) -> list:
    labels = [-1] * graph.n_vertices
    nxt = 0
    for v0 in range(graph.n_vertices):
        if labels[v0] != -1:
            continue
        stack = [v0]
        labels[v0] = nxt
        while stack:
            v = stack.pop()
            for c in pair:
                w = graph.matchings[c][v]
                if labels[w] == -1:
                    labels[w] = nxt
                    stack.append(w)
        nxt += 1
    return labels


def _delete_white(s: Constellation, victim: int) -> Constellation | None:
    """Remove a white and keep the root component, relabeled."""
    incident = {}
    for idx, v in enumerate(s.colored):
        if victim in v.corners:
            incident[idx] = tuple(w for w in v.corners if w != victim)
    colored = []
    for idx, v in enumerate(s.colored):
        corners = incident.get(idx, v.corners)
        if corners:
            colored.append(EmbeddedVertex(v.color, corners))
    white_adj = {}
    for ci, v in enumerate(colored):
        for w in v.corners:
            white_adj.setdefault(w, []).append(ci)
    if s.root not in white_adj and len(white_adj) > 0:
        return None
    seen_w = {s.root}
    seen_c = set()
    stack = [("w", s.root)]
    while stack:
        kind, x = stack.pop()
        if kind == "w":
            for ci in white_adj.get(x, []):
                if ci not in seen_c:
                    seen_c.add(ci)
                    stack.append(("c", ci))
        else:
            for w in colored[x].corners:
                if w not in seen_w:
                    seen_w.add(w)
                    stack.append(("w", w))
    order = [s.root] + [w for w in sorted(seen_w) if w != s.root]
    relabel = {w: i for i, w in enumerate(order)}
    kept = tuple(
        EmbeddedVertex(v.color, tuple(relabel[w] for w in v.corners))
        for ci, v in enumerate(colored)
        if ci in seen_c
    )
    return Constellation(q=s.q, n_white=len(seen_w), colored=kept, root=0)


def _handle_removal_steps(q: int, s: Constellation, delta: int) -> int:
    """Run the excess-reduction induction; count successful steps."""
    current = s
    steps = 0
    while steps < delta:
        graph = psi_inverse(current)
        cored, _ = core(current)
        candidates = []
        for chain in chains(cored):
            seq = [chain.end_a] + list(chain.internal) + [chain.end_b]
            for pos in range(1, len(seq) - 1):
                kind, x = seq[pos]
                if kind != "w":
                    continue
                i = cored.vertices[seq[pos - 1][1]].color
                j = cored.vertices[seq[pos + 1][1]].color
                candidates.append((x, tuple(sorted((i, j)))))
        candidates.sort()
        advanced = False
        comp_cache = {}
        for white, pair in candidates:
            if pair not in comp_cache:
                comp_cache[pair] = _two_color_components(graph, pair)
            labels = comp_cache[pair]
            if labels[2 * white] != labels[2 * white + 1]:
                continue
            reduced = _delete_white(current, white)
            if reduced is None:
                continue
            if excess(reduced) != excess(current) - 1:
                continue
            current = reduced
            steps += 1
            advanced = True
            break
        if not advanced:
            break
    return steps


@dataclass(frozen=True)
class SampleReport:
    """Aggregated structural certificates over repeated samples."""

    q: int
    delta: int
    n: int
    family: str
    trials: int
    seed: int
    fraction_syk: float
    fraction_bipartite_given_syk: float
    # the four deep-certificate fractions are None when a survey ran with
    # deep_certificates=False (not measured, as opposed to measured zero)
    fraction_chains_color_covered: float | None
    fraction_residue_forests: float | None
    fraction_residues_melonic: float | None
    fraction_all_certificates: float | None
    handle_count_histogram: dict
    handle_removal_steps_histogram: dict
    gurau_degree_histogram: dict

    def to_json(self) -> str:
        payload = {
            "q": self.q,
            "delta": self.delta,
            "n": self.n,
            "family": self.family,
            "trials": self.trials,
            "seed": self.seed,
            "fraction_syk": self.fraction_syk,
            "fraction_bipartite_given_syk": self.fraction_bipartite_given_syk,
            "fraction_chains_color_covered": self.fraction_chains_color_covered,
            "fraction_residue_forests": self.fraction_residue_forests,
            "fraction_residues_melonic": self.fraction_residues_melonic,
            "fraction_all_certificates": self.fraction_all_certificates,
            "handle_count_histogram": {
                str(k): v for k, v in sorted(self.handle_count_histogram.items())
            },
            "handle_removal_steps_histogram": {
                str(k): v
                for k, v in sorted(self.handle_removal_steps_histogram.items())
            },
            "gurau_degree_histogram": {
                k: v
                for k, v in sorted(
                    self.gurau_degree_histogram.items(),
                    key=lambda kv: Fraction(kv[0]),
                )
            },
        }
        return json.dumps(payload)


def default_parallelism() -> int:
    """Worker count from SYKGRAPHS_PARALLELISM, at least 1."""
    raw = os.environ.get("SYKGRAPHS_PARALLELISM", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def chunk_rng(seed: int, chunk_index: int) -> random.Random:
    """Independent stream per chunk; merging chunks by index keeps survey
    output identical under any parallel split."""
    return random.Random(seed * CHUNK_STRIDE + chunk_index + 1)


@dataclass
class _ChunkTally:
    """Mergeable per-chunk counts; merging is commutative, so worker
    scheduling order cannot change the final report."""

    syk: int = 0
    bip: int = 0
    chains: int = 0
    forests: int = 0
    melonic: int = 0
    all_cert: int = 0
    handle_hist: dict = None
    steps_hist: dict = None
    gurau_hist: dict = None

    def __post_init__(self):
        self.handle_hist = self.handle_hist or {}
        self.steps_hist = self.steps_hist or {}
        self.gurau_hist = self.gurau_hist or {}

    def merge(self, other: "_ChunkTally") -> None:
        self.syk += other.syk
        self.bip += other.bip
        self.chains += other.chains
        self.forests += other.forests
        self.melonic += other.melonic
        self.all_cert += other.all_cert
        for mine, theirs in (
            (self.handle_hist, other.handle_hist),
            (self.steps_hist, other.steps_hist),
            (self.gurau_hist, other.gurau_hist),
        ):
            for key, value in theirs.items():
                mine[key] = mine.get(key, 0) + value


def _chunk_tally(
    tables: SamplerTables,
    rng: random.Random,
    batch: int,
    family: str,
    deep_certificates: bool,
) -> _ChunkTally:
    q = tables.q
    delta = tables.delta
    colors_no_zero = tuple(range(1, q + 1))
    tally = _ChunkTally()
    for _ in range(batch):
        graph = sample_graph(tables, rng, family=family)
        syk = is_syk(graph)
        bip = is_bipartite(graph) if family == "general" else True
        if syk:
            tally.syk += 1
            if bip:
                tally.bip += 1
        gd = gurau_degree(graph)
        gd_key = str(gd)
        tally.gurau_hist[gd_key] = tally.gurau_hist.get(gd_key, 0) + 1
        if not deep_certificates:
            continue
        # residues: drop color 0 and one more color, every component of what
        # is left must be melonic (trivial at q=3 where residues are cycles,
        # structural content at larger q)
        melonic_ok = all(
            is_melonic(graph, colors=tuple(c for c in colors_no_zero if c != skip))
            for skip in colors_no_zero
        )
        if melonic_ok:
            tally.melonic += 1
        chains_ok = forests_ok = False
        steps = 0
        handles = 0
        if bip:
            s = psi(graph)
            chains_ok = _chain_certificate(q, s)
            forests_ok = all(_forest_check(s, c) for c in range(1, q + 1))
            handles = _handle_vertices(q, s, graph)
            steps = _handle_removal_steps(q, s, delta)
        if chains_ok:
            tally.chains += 1
        if forests_ok:
            tally.forests += 1
        tally.handle_hist[handles] = tally.handle_hist.get(handles, 0) + 1
        tally.steps_hist[steps] = tally.steps_hist.get(steps, 0) + 1
        if (
            chains_ok
            and forests_ok
            and melonic_ok
            and steps == delta
            and gd == q * delta
        ):
            tally.all_cert += 1
    return tally


_WORKER_STATE: dict = {}


def _survey_worker_init(tables, family, deep_certificates, seed):
    _WORKER_STATE["args"] = (tables, family, deep_certificates, seed)


def _survey_worker_task(task):
    chunk_index, batch = task
    tables, family, deep, seed = _WORKER_STATE["args"]
    rng = chunk_rng(seed, chunk_index)
    return _chunk_tally(tables, rng, batch, family, deep)


def survey(
    q: int,
    delta: int,
    n: int,
    trials: int,
    seed: int = 0,
    family: str = "bipartite",
    deep_certificates: bool = True,
    workers: int | None = None,
) -> SampleReport:
    """Sample `trials` graphs and tally recomputed certificates.

    Trials are split into fixed chunks of CHUNK_TRIALS, each with its own
    RNG stream derived from (seed, chunk index), so the report is
    byte-identical for a given seed no matter how many workers run.

    deep_certificates=False skips the constellation-level checks (chains,
    forests, handles) and keeps only connectivity, bipartiteness, and
    degree tallies, which is much faster for large surveys.
    """
    tables = build_tables(q, delta, n)
    if workers is None:
        workers = default_parallelism()
    tasks = []
    done = 0
    while done < trials:
        batch = min(CHUNK_TRIALS, trials - done)
        tasks.append((len(tasks), batch))
        done += batch
    total = _ChunkTally()

    def _frac(count):
        if not deep_certificates:
            return None
        return count / trials if trials else 0.0

    if workers > 1 and len(tasks) > 1:
        ctx = multiprocessing.get_context("fork")
        init_args = (tables, family, deep_certificates, seed)
        with ctx.Pool(
            workers, initializer=_survey_worker_init, initargs=init_args
        ) as pool:
            for tally in pool.imap(_survey_worker_task, tasks):
                total.merge(tally)
    else:
        for chunk_index, batch in tasks:
            rng = chunk_rng(seed, chunk_index)
            total.merge(_chunk_tally(tables, rng, batch, family, deep_certificates))
    return SampleReport(
        q=q,
        delta=delta,
        n=n,
        family=family,
        trials=trials,
        seed=seed,
        fraction_syk=total.syk / trials if trials else 0.0,
        fraction_bipartite_given_syk=(total.bip / total.syk) if total.syk else 0.0,
        fraction_chains_color_covered=_frac(total.chains),
        fraction_residue_forests=_frac(total.forests),
        fraction_residues_melonic=_frac(total.melonic),
        fraction_all_certificates=_frac(total.all_cert),
        handle_count_histogram=total.handle_hist,
        handle_removal_steps_histogram=total.steps_hist,
        gurau_degree_histogram=total.gurau_hist,
    )
