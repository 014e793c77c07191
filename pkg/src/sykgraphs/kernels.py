"""Core and kernel extraction for constellations, plus kernel catalogs.

Pruning leaves of a constellation until none remain (never removing the
root white) yields the core; contracting every degree-2 path of the core
to a single edge yields the kernel, a small embedded multigraph whose
vertices are the root white plus all vertices of degree at least 3.  The
kernel determines the generating series of all constellations sharing it,
so enumerating kernels of a given excess gives exact coefficient-level
counts.

Kernel edges remember the half-color on each side: at a colored vertex
the half-color is the vertex color, at a white endpoint it is the color
of the adjacent contracted edge.  Embedded structure survives only at
colored vertices (whites carry no rotation), and isomorphism fixes the
root and preserves colors, half-colors, and rotations, which is exactly
what the breadth-first serialization below captures.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from hashlib import blake2b
from heapq import heappop, heappush

from .constellations import Constellation, EmbeddedVertex
from .oracle import SizeLimitError

KERNEL_DELTA_LIMIT = 3


@dataclass(frozen=True)
class CoreVertex:
    """Colored vertex surviving in the core, with its surviving corners."""

    index: int
    color: int
    corners: tuple[int, ...]


@dataclass(frozen=True)
class CoreDiagram:
    q: int
    root: int
    whites: tuple[int, ...]
    vertices: tuple[CoreVertex, ...]


def core(s: Constellation) -> tuple[CoreDiagram, tuple]:
    """Iteratively strip leaves; returns the core plus a replayable record.

    The record lists removals in order; recompose() plays it backwards.
    Leaf removal is confluent, so the order (smallest id first here) only
    affects the record, not the core.
    """
    corners = {idx: list(v.corners) for idx, v in enumerate(s.colored)}
    colors = {idx: v.color for idx, v in enumerate(s.colored)}
    white_deg = [s.q] * s.n_white
    white_inc: list[set[int]] = [set() for _ in range(s.n_white)]
    for idx, v in enumerate(s.colored):
        for w in v.corners:
            white_inc[w].add(idx)
    removed_vertex = set()
    removed_white = set()
    heap: list[tuple[int, int]] = []
    for idx in corners:
        if len(corners[idx]) == 1:
            heappush(heap, (1, idx))
    record = []
    while heap:
        kind, x = heappop(heap)
        if kind == 1:
            if x in removed_vertex or len(corners[x]) != 1:
                continue
            w = corners[x][0]
            record.append(("colored", x, colors[x], (w,)))
            removed_vertex.add(x)
            white_inc[w].discard(x)
            white_deg[w] -= 1
            if white_deg[w] == 1 and w != s.root:
                heappush(heap, (0, w))
        else:
            if x in removed_white or white_deg[x] != 1 or x == s.root:
                continue
            (idx,) = white_inc[x]
            pos = corners[idx].index(x)
            record.append(("white", x, idx, pos))
            removed_white.add(x)
            corners[idx].pop(pos)
            white_inc[x].clear()
            if len(corners[idx]) == 1:
                heappush(heap, (1, idx))
    whites = tuple(w for w in range(s.n_white) if w not in removed_white)
    vertices = tuple(
        CoreVertex(idx, colors[idx], tuple(corners[idx]))
        for idx in sorted(corners)
        if idx not in removed_vertex
    )
    return CoreDiagram(q=s.q, root=s.root, whites=whites, vertices=vertices), tuple(record)


def recompose(cored: CoreDiagram, record: tuple) -> Constellation:
    """Exact inverse of core(): replay the removal record backwards."""
    corners = {v.index: list(v.corners) for v in cored.vertices}
    colors = {v.index: v.color for v in cored.vertices}
    n_white = len(cored.whites)
    for step in reversed(record):
        if step[0] == "colored":
            _, idx, color, cs = step
            corners[idx] = list(cs)
            colors[idx] = color
        else:
            _, w, idx, pos = step
            corners[idx].insert(pos, w)
            n_white += 1
    colored = tuple(
        EmbeddedVertex(colors[idx], tuple(corners[idx])) for idx in sorted(corners)
    )
    return Constellation(q=cored.q, n_white=n_white, colored=colored, root=cored.root)


@dataclass(frozen=True)
class Chain:
    """Maximal degree-2 path of the core between two kernel vertices.

    Ends are ("w", white_id) or ("c", core_vertex_position); attach_* give
    the (core_vertex_position, corner_pos) of the extremal edges, used to
    rebuild rotations at colored kernel vertices.  color_a and color_b are
    the half-colors of the extremal edges on each side.
    """

    end_a: tuple[str, int]
    end_b: tuple[str, int]
    attach_a: tuple[int, int]
    attach_b: tuple[int, int]
    color_a: int
    color_b: int
    internal: tuple[tuple[str, int], ...]

    @property
    def kind(self) -> str:
        return "".join(sorted((self.end_a[0], self.end_b[0])))

    @property
    def equal_ends(self) -> bool:
        return self.color_a == self.color_b

    @property
    def internal_whites(self) -> tuple[int, ...]:
        return tuple(x for k, x in self.internal if k == "w")

    @property
    def internal_colors(self) -> tuple[int, ...]:
        return tuple(x for k, x in self.internal if k == "c")


def _core_incidence(cored: CoreDiagram):
    white_ends: dict[int, list[tuple[int, int]]] = {w: [] for w in cored.whites}
    for ci, v in enumerate(cored.vertices):
        for pos, w in enumerate(v.corners):
            white_ends[w].append((ci, pos))
    for w in white_ends:
        white_ends[w].sort()
    return white_ends


def _is_kernel_node(cored: CoreDiagram, white_ends, node) -> bool:
    kind, x = node
    if kind == "w":
        return x == cored.root or len(white_ends[x]) >= 3
    return len(cored.vertices[x].corners) >= 3


def chains(cored: CoreDiagram) -> tuple[Chain, ...]:
    """Split the core into its kernel-to-kernel degree-2 paths."""
    white_ends = _core_incidence(cored)
    kernel_whites = [
        w for w in cored.whites if w == cored.root or len(white_ends[w]) >= 3
    ]
    kernel_colored = [
        ci for ci, v in enumerate(cored.vertices) if len(v.corners) >= 3
    ]
    used: set[tuple[int, int]] = set()
    found: list[Chain] = []

    def walk(start_node, first_end):
        used.add(first_end)
        prev = start_node
        end = first_end
        internal = []
        while True:
            ci, pos = end
            if prev[0] == "w":
                nxt = ("c", ci)
            else:
                nxt = ("w", cored.vertices[ci].corners[pos])
            if _is_kernel_node(cored, white_ends, nxt):
                used.add(end)
                return nxt, end, tuple(internal)
            internal.append(nxt)
            if nxt[0] == "w":
                a, b = white_ends[nxt[1]]
                end = b if end == a else a
            else:
                # internal colored vertices have exactly two corners
                end = (nxt[1], 1 - pos)
            prev = nxt

    starts: list[tuple[tuple[str, int], tuple[int, int]]] = []
    ordered_whites = [cored.root] + [w for w in kernel_whites if w != cored.root]
    for w in ordered_whites:
        for e in white_ends[w]:
            starts.append((("w", w), e))
    for ci in kernel_colored:
        for pos in range(len(cored.vertices[ci].corners)):
            starts.append((("c", ci), (ci, pos)))
    for node, e in starts:
        if e in used:
            continue
        end_b, last_end, internal = walk(node, e)
        color_a = cored.vertices[e[0]].color
        color_b = cored.vertices[last_end[0]].color
        found.append(
            Chain(
                end_a=node,
                end_b=end_b,
                attach_a=e,
                attach_b=last_end,
                color_a=color_a,
                color_b=color_b,
                internal=internal,
            )
        )
    return tuple(found)


@dataclass(frozen=True)
class KernelEdge:
    """Kernel edge with one half-color per side."""

    a: int
    b: int
    color_a: int
    color_b: int


@dataclass(frozen=True)
class KernelDiagram:
    """Embedded kernel: whites 0..n_white-1 (root 0), colored after.

    colors[i] is the color of node n_white + i, and embeddings[i] is its
    ccw cyclic order of edge ends as (edge_index, side) pairs.
    """

    q: int
    n_white: int
    colors: tuple[int, ...]
    edges: tuple[KernelEdge, ...]
    embeddings: tuple[tuple[tuple[int, int], ...], ...]
    root: int = 0

    @property
    def n_nodes(self) -> int:
        return self.n_white + len(self.colors)

    def is_white(self, node: int) -> bool:
        return node < self.n_white

    def excess(self) -> int:
        return len(self.edges) - self.n_nodes + 1

    def degrees(self) -> list[int]:
        deg = [0] * self.n_nodes
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        return deg

    def white_ends(self, node: int) -> list[tuple[int, int]]:
        out = []
        for i, e in enumerate(self.edges):
            if e.a == node:
                out.append((i, 0))
            if e.b == node:
                out.append((i, 1))
        return out


def kernel(cored: CoreDiagram) -> KernelDiagram:
    """Contract the core's degree-2 paths to edges."""
    white_ends = _core_incidence(cored)
    kernel_whites = [cored.root] + [
        w for w in cored.whites if w != cored.root and len(white_ends[w]) >= 3
    ]
    kernel_colored = [
        ci for ci, v in enumerate(cored.vertices) if len(v.corners) >= 3
    ]
    node_id: dict[tuple[str, int], int] = {}
    for w in kernel_whites:
        node_id[("w", w)] = len(node_id)
    for ci in kernel_colored:
        node_id[("c", ci)] = len(node_id)
    n_white = len(kernel_whites)
    chs = chains(cored)
    edges = tuple(
        KernelEdge(node_id[c.end_a], node_id[c.end_b], c.color_a, c.color_b)
        for c in chs
    )
    attach_to_end: dict[tuple[int, int], tuple[int, int]] = {}
    for ei, c in enumerate(chs):
        if c.end_a[0] == "c":
            attach_to_end[c.attach_a] = (ei, 0)
        if c.end_b[0] == "c":
            attach_to_end[c.attach_b] = (ei, 1)
    embeddings = []
    for ci in kernel_colored:
        d = len(cored.vertices[ci].corners)
        embeddings.append(tuple(attach_to_end[(ci, pos)] for pos in range(d)))
    colors = tuple(cored.vertices[ci].color for ci in kernel_colored)
    return KernelDiagram(
        q=cored.q,
        n_white=n_white,
        colors=colors,
        edges=edges,
        embeddings=tuple(embeddings),
    )


@dataclass(frozen=True)
class KernelStats:
    """Vertex and refined edge counts controlling the kernel's series."""

    n_white: int
    n_colored: int
    n_edges: int
    cc_eq: int
    cc_ne: int
    cw_eq: int
    cw_ne: int
    ww_eq: int
    ww_ne: int

    @property
    def mixed_eq(self) -> int:
        """Equal-ended edges with at least one white end."""
        return self.cw_eq + self.ww_eq


def edge_stats(k: KernelDiagram) -> KernelStats:
    counts = {key: 0 for key in ("cc_eq", "cc_ne", "cw_eq", "cw_ne", "ww_eq", "ww_ne")}
    for e in k.edges:
        kind = "".join(
            sorted(("w" if k.is_white(e.a) else "c", "w" if k.is_white(e.b) else "c"))
        )
        suffix = "eq" if e.color_a == e.color_b else "ne"
        counts[f"{kind}_{suffix}"] += 1
    return KernelStats(
        n_white=k.n_white,
        n_colored=len(k.colors),
        n_edges=len(k.edges),
        **counts,
    )


def is_dominant(k: KernelDiagram) -> bool:
    """Root has degree 1 and every other vertex degree 3."""
    deg = k.degrees()
    if k.excess() == 0:
        return False
    return deg[0] == 1 and all(d == 3 for d in deg[1:])


def _validate_kernel(k: KernelDiagram) -> None:
    deg = k.degrees()
    if k.n_white < 1:
        raise ValueError("kernel must contain the root white")
    for node in range(k.n_nodes):
        if node != k.root and deg[node] < 3:
            raise ValueError(f"non-root kernel node {node} has degree {deg[node]}")
    for w in range(k.n_white):
        hcs = [
            (k.edges[e].color_a if side == 0 else k.edges[e].color_b)
            for e, side in k.white_ends(w)
        ]
        if len(set(hcs)) != len(hcs):
            raise ValueError(f"white {w} repeats a half-color")
        if deg[w] > k.q:
            raise ValueError(f"white {w} exceeds degree {k.q}")
    for i, color in enumerate(k.colors):
        node = k.n_white + i
        ends = set()
        for e, side in k.embeddings[i]:
            edge = k.edges[e]
            if (edge.a if side == 0 else edge.b) != node:
                raise ValueError(f"embedding of node {node} lists a foreign end")
            hc = edge.color_a if side == 0 else edge.color_b
            if hc != color:
                raise ValueError(f"node {node} has half-color {hc} != {color}")
            ends.add((e, side))
        if len(ends) != deg[node] or len(k.embeddings[i]) != deg[node]:
            raise ValueError(f"embedding of node {node} is not a cyclic order")
    seen = {0}
    stack = [0]
    adj: dict[int, list[int]] = {v: [] for v in range(k.n_nodes)}
    for e in k.edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != k.n_nodes:
        raise ValueError("kernel is disconnected")


def kernel_serial(k: KernelDiagram) -> tuple:
    """Breadth-first canonical serialization, complete for rooted
    embedded isomorphism."""
    kinds = tuple([0] * k.n_white + list(k.colors))
    edges = tuple((e.a, e.b, e.color_a, e.color_b) for e in k.edges)
    embeds = {k.n_white + i: emb for i, emb in enumerate(k.embeddings)}
    ends_at: dict[int, list[tuple[int, int]]] = {w: [] for w in range(k.n_white)}
    for ei, (a, b, _, _) in enumerate(edges):
        if a < k.n_white:
            ends_at[a].append((ei, 0))
        if b < k.n_white:
            ends_at[b].append((ei, 1))
    return _serial(k.q, kinds, edges, embeds, ends_at)


def _serial(q, kinds, edges, embeds, ends_at, root=0):
    order_of = {root: 0}
    edge_label: dict[int, int] = {}
    queue: list[tuple[int, tuple[int, int] | None]] = [(root, None)]
    out: list[tuple] = [("q", q)]
    qi = 0
    while qi < len(queue):
        node, arrival = queue[qi]
        qi += 1
        kind = kinds[node]
        if kind == 0:
            ends = sorted(
                ends_at[node],
                key=lambda es: edges[es[0]][2] if es[1] == 0 else edges[es[0]][3],
            )
        else:
            emb = embeds[node]
            start = emb.index(arrival)
            ends = list(emb[start:]) + list(emb[:start])
        out.append(("v", kind, len(ends)))
        for e, side in ends:
            a, b, ca, cb = edges[e]
            hc_here = ca if side == 0 else cb
            hc_other = cb if side == 0 else ca
            other = b if side == 0 else a
            if e in edge_label:
                out.append(("b", edge_label[e], hc_here))
                continue
            edge_label[e] = len(edge_label)
            if other in order_of:
                out.append(("x", hc_here, hc_other, order_of[other]))
            else:
                order_of[other] = len(order_of)
                queue.append((other, (e, 1 - side)))
                out.append(("n", hc_here, hc_other, kinds[other]))
    return tuple(out)


def _degree_sequences(q, delta, dominant_only):
    if dominant_only:
        v_total = 2 * delta
        if v_total >= 2:
            yield [1] + [3] * (v_total - 1)
        return
    for v_total in range(1, 2 * delta + 1):
        total = 2 * (v_total - 1 + delta)
        for d0 in range(1, min(q, total) + 1):
            rest = total - d0
            yield from (
                [d0] + comp for comp in _compositions(rest, v_total - 1, 3)
            )


def _compositions(total, parts, min_part):
    if parts == 0:
        if total == 0:
            yield []
        return
    if total < parts * min_part:
        return
    for first in range(min_part, total - (parts - 1) * min_part + 1):
        for tail in _compositions(total - first, parts - 1, min_part):
            yield [first] + tail


def _edge_multisets(degs):
    v_total = len(degs)
    pairs = [(i, j) for i in range(v_total) for j in range(i, v_total)]
    rem = list(degs)
    chosen: list[tuple[int, int]] = []

    def rec(pi):
        if pi == len(pairs):
            if all(r == 0 for r in rem):
                yield list(chosen)
            return
        i, j = pairs[pi]
        cap = rem[i] // 2 if i == j else min(rem[i], rem[j])
        # last pair with min endpoint i is (i, V-1); rem[i] must be spent by then
        for mult in range(cap + 1):
            take = 2 * mult if i == j else mult
            rem[i] -= take
            if i != j:
                rem[j] -= mult
            chosen.extend([(i, j)] * mult)
            if j < v_total - 1 or rem[i] == 0:
                yield from rec(pi + 1)
            del chosen[len(chosen) - mult :]
            rem[i] += take
            if i != j:
                rem[j] += mult
        return

    for edge_list in rec(0):
        if _shape_connected(v_total, edge_list):
            yield edge_list


def _shape_connected(v_total, edge_list):
    if v_total == 1:
        return True
    adj = {v: set() for v in range(v_total)}
    for a, b in edge_list:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == v_total


def _iter_candidates(q, degs, edge_list):
    """All decorated diagrams on a fixed shape; duplicates expected.

    Yields (kinds, edges, embeds, ends_at) in the plain-tuple form used by
    _serial.  Vertex 0 is the root white.
    """
    v_total = len(degs)
    n_edges = len(edge_list)
    ends_of_vertex: list[list[tuple[int, int]]] = [[] for _ in range(v_total)]
    for ei, (a, b) in enumerate(edge_list):
        ends_of_vertex[a].append((ei, 0))
        ends_of_vertex[b].append((ei, 1))
    kind_options = []
    for v in range(v_total):
        if v == 0:
            kind_options.append((0,))
        else:
            opts = list(range(1, q + 1))
            if degs[v] <= q:
                opts = [0] + opts
            kind_options.append(tuple(opts))
    loops = [ei for ei, (a, b) in enumerate(edge_list) if a == b]
    for kinds in itertools.product(*kind_options):
        white_list = [v for v in range(v_total) if kinds[v] == 0]
        color_choices = []
        for v in white_list:
            color_choices.append(list(itertools.permutations(range(1, q + 1), degs[v])))
        for assignment in itertools.product(*color_choices):
            half: list[list[int]] = [[0, 0] for _ in range(n_edges)]
            ok = True
            for v, colors_here in zip(white_list, assignment):
                for (ei, side), c in zip(ends_of_vertex[v], colors_here):
                    half[ei][side] = c
            for v in range(v_total):
                if kinds[v] == 0:
                    continue
                for ei, side in ends_of_vertex[v]:
                    half[ei][side] = kinds[v]
            # a loop's two ends at a white are interchangeable: keep one order
            for ei in loops:
                a, _ = edge_list[ei]
                if kinds[a] == 0 and half[ei][0] > half[ei][1]:
                    ok = False
                    break
            if not ok:
                continue
            edges = tuple(
                (a, b, half[ei][0], half[ei][1])
                for ei, (a, b) in enumerate(edge_list)
            )
            emb_choices = []
            colored_list = [v for v in range(v_total) if kinds[v] != 0]
            for v in colored_list:
                ends = ends_of_vertex[v]
                emb_choices.append(
                    [
                        (ends[0],) + rest
                        for rest in itertools.permutations(ends[1:])
                    ]
                )
            ends_at = {
                v: ends_of_vertex[v] for v in range(v_total) if kinds[v] == 0
            }
            for embs in itertools.product(*emb_choices):
                embeds = dict(zip(colored_list, embs))
                yield kinds, edges, embeds, ends_at


def _relabel_candidate(q, kinds, edges, embeds):
    """Build a KernelDiagram with whites first, preserving structure."""
    v_total = len(kinds)
    whites = [v for v in range(v_total) if kinds[v] == 0]
    colored = [v for v in range(v_total) if kinds[v] != 0]
    new_id = {v: i for i, v in enumerate(whites)}
    for i, v in enumerate(colored):
        new_id[v] = len(whites) + i
    kedges = tuple(
        KernelEdge(new_id[a], new_id[b], ca, cb) for a, b, ca, cb in edges
    )
    embeddings = tuple(tuple(embeds[v]) for v in colored)
    colors = tuple(kinds[v] for v in colored)
    return KernelDiagram(
        q=q, n_white=len(whites), colors=colors, edges=kedges, embeddings=embeddings
    )


def _root_only_kernel(q: int) -> KernelDiagram:
    return KernelDiagram(q=q, n_white=1, colors=(), edges=(), embeddings=())


def enumerate_kernels(q: int, delta: int, dominant_only: bool = False):
    """All kernels of the given excess up to rooted embedded isomorphism,
    sorted by serialization."""
    if delta > KERNEL_DELTA_LIMIT:
        raise SizeLimitError(
            f"kernel enumeration is limited to excess <= {KERNEL_DELTA_LIMIT} "
            f"(KERNEL_DELTA_LIMIT), got {delta}"
        )
    if delta == 0:
        return [] if dominant_only else [_root_only_kernel(q)]
    # the candidate stream repeats each class many times; remember digests
    # rather than full serials to keep large sweeps in memory
    seen = set()
    kept = []
    for degs in _degree_sequences(q, delta, dominant_only):
        for edge_list in _edge_multisets(degs):
            for kinds, edges, embeds, ends_at in _iter_candidates(q, degs, edge_list):
                serial = _serial(q, kinds, edges, embeds, ends_at)
                digest = blake2b(repr(serial).encode(), digest_size=16).digest()
                if digest in seen:
                    continue
                seen.add(digest)
                k = _relabel_candidate(q, kinds, edges, embeds)
                _validate_kernel(k)
                if dominant_only and not is_dominant(k):
                    raise AssertionError("dominant degree filter leaked")
                kept.append((serial, k))
    kept.sort(key=lambda sk: sk[0])
    return [k for _, k in kept]


def dominant_weighted_sum(q: int, delta: int) -> Fraction:
    """Sum of (q-1)^(-n_white) over dominant kernels of the given excess."""
    total = Fraction(0)
    for k in enumerate_kernels(q, delta, dominant_only=True):
        total += Fraction(1, (q - 1) ** k.n_white)
    return total


def kernel_to_json(k: KernelDiagram) -> str:
    stats = edge_stats(k)
    payload = {
        "q": k.q,
        "n_white": k.n_white,
        "colors": list(k.colors),
        "edges": [[e.a, e.b, e.color_a, e.color_b] for e in k.edges],
        "embeddings": [[list(end) for end in emb] for emb in k.embeddings],
        "root": k.root,
        "excess": k.excess(),
        "dominant": is_dominant(k),
        "stats": {
            "n_white": stats.n_white,
            "n_colored": stats.n_colored,
            "n_edges": stats.n_edges,
            "cc_eq": stats.cc_eq,
            "cc_ne": stats.cc_ne,
            "cw_eq": stats.cw_eq,
            "cw_ne": stats.cw_ne,
            "ww_eq": stats.ww_eq,
            "ww_ne": stats.ww_ne,
        },
    }
    return json.dumps(payload)


def kernel_from_json(text: str) -> KernelDiagram:
    payload = json.loads(text)
    k = KernelDiagram(
        q=int(payload["q"]),
        n_white=int(payload["n_white"]),
        colors=tuple(int(c) for c in payload["colors"]),
        edges=tuple(KernelEdge(*map(int, e)) for e in payload["edges"]),
        embeddings=tuple(
            tuple((int(e), int(s)) for e, s in emb) for emb in payload["embeddings"]
        ),
        root=int(payload["root"]),
    )
    _validate_kernel(k)
    return k


def catalog_to_json(kernels_list) -> str:
    return "[" + ",".join(kernel_to_json(k) for k in kernels_list) + "]"


def kernel_to_dot(k: KernelDiagram, name: str = "kernel") -> str:
    lines = ["graph " + name + " {"]
    for w in range(k.n_white):
        shape = "doublecircle" if w == k.root else "circle"
        lines.append(f'  n{w} [shape={shape}, label="w{w}"];')
    for i, c in enumerate(k.colors):
        node = k.n_white + i
        lines.append(f'  n{node} [shape=box, label="c{c}"];')
    for e in k.edges:
        lines.append(f'  n{e.a} -- n{e.b} [label="{e.color_a}|{e.color_b}"];')
    lines.append("}")
    return "\n".join(lines)
