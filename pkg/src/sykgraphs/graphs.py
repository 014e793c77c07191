"""Rooted (q+1)-edge-colored graphs whose color classes are perfect matchings.

A graph here has 2n vertices and q+1 perfect matchings, one per color
0..q, so every vertex meets exactly one edge of each color.  The root is
an oriented color-0 edge (origin, end).  All structural predicates of the
library (order, SYK property, bipartiteness, melonicity, Gurau degree)
live in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

DOT_PALETTE = (
    "black", "red", "blue", "green3", "orange", "purple",
    "brown", "cyan3", "magenta", "gray40",
)


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable rooted edge-colored graph.

    matchings[c][v] is the vertex joined to v by the color-c edge; each
    matchings[c] must be a fixed-point-free involution of 0..2n-1.
    """

    q: int
    matchings: tuple[tuple[int, ...], ...]
    root: tuple[int, int]

    @property
    def n_vertices(self) -> int:
        return len(self.matchings[0])

    @property
    def n_pairs(self) -> int:
        """Number of color-0 edges, the n in a size-2n graph."""
        return len(self.matchings[0]) // 2

    def color0_edges(self) -> list[tuple[int, int]]:
        """Color-0 edges as (min, max) pairs, root edge first as (origin, end)."""
        m0 = self.matchings[0]
        edges = [self.root]
        seen = {self.root[0], self.root[1]}
        for v in range(len(m0)):
            if v in seen or m0[v] < v:
                continue
            edges.append((v, m0[v]))
            seen.add(v)
            seen.add(m0[v])
        return edges

    def to_json(self) -> str:
        payload = {
            "q": self.q,
            "vertices": self.n_vertices,
            "matchings": [list(m) for m in self.matchings],
            "root": list(self.root),
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "ColoredGraph":
        payload = json.loads(text)
        matchings = tuple(tuple(m) for m in payload["matchings"])
        graph = ColoredGraph(
            q=int(payload["q"]),
            matchings=matchings,
            root=(int(payload["root"][0]), int(payload["root"][1])),
        )
        report = validate(graph)
        if not report.ok:
            raise ValueError(f"invalid graph JSON: {report.first}")
        return graph

    def to_dot(self) -> str:
        lines = ["graph colored {"]
        o, e = self.root
        for v in range(self.n_vertices):
            attrs = ["shape=circle"]
            if v in (o, e):
                attrs = ["shape=doublecircle", "root=true"]
            lines.append(f'  {v} [{", ".join(attrs)}];')
        for c, m in enumerate(self.matchings):
            color = DOT_PALETTE[c % len(DOT_PALETTE)]
            for v in range(self.n_vertices):
                if v < m[v]:
                    lines.append(f'  {v} -- {m[v]} [color={color}, label={c}];')
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None


def validate(graph: ColoredGraph) -> ValidationReport:
    """Check every constructor invariant, reporting violations in check order."""
    violations: list[str] = []
    q = graph.q
    if q < 2:
        violations.append(f"q must be at least 2, got {q}")
        return ValidationReport(False, tuple(violations))
    if len(graph.matchings) != q + 1:
        violations.append(
            f"expected {q + 1} matchings for colors 0..{q}, got {len(graph.matchings)}"
        )
        return ValidationReport(False, tuple(violations))
    sizes = {len(m) for m in graph.matchings}
    if len(sizes) != 1:
        violations.append("matchings disagree on the number of vertices")
        return ValidationReport(False, tuple(violations))
    size = sizes.pop()
    if size < 2 or size % 2 != 0:
        violations.append(f"vertex count must be a positive even number, got {size}")
        return ValidationReport(False, tuple(violations))
    for c, m in enumerate(graph.matchings):
        for v, w in enumerate(m):
            if not (0 <= w < size):
                violations.append(f"color {c} matching maps vertex {v} out of range")
                return ValidationReport(False, tuple(violations))
            if w == v:
                violations.append(f"color {c} matching has a fixed point at vertex {v}")
                return ValidationReport(False, tuple(violations))
            if m[w] != v:
                violations.append(f"color {c} matching is not an involution at vertex {v}")
                return ValidationReport(False, tuple(violations))
    o, e = graph.root
    if not (0 <= o < size) or graph.matchings[0][o] != e:
        violations.append("root must be an oriented color-0 edge (origin, end)")
        return ValidationReport(False, tuple(violations))
    if not _connected(graph.matchings, size):
        violations.append("graph is disconnected")
    return ValidationReport(not violations, tuple(violations))


def _connected(matchings, size: int, skip_color: int | None = None) -> bool:
    return _component_of(matchings, size, 0, skip_color) is None


def _component_of(matchings, size, start, skip_color=None):
    """BFS from start; None if everything is reached, else the visited set."""
    seen = bytearray(size)
    seen[start] = 1
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for c, m in enumerate(matchings):
            if c == skip_color:
                continue
            w = m[v]
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    if count == size:
        return None
    return {v for v in range(size) if seen[v]}


def bicolored_cycle_count(graph: ColoredGraph, i: int) -> int:
    """Number of cycles alternating colors 0 and i."""
    return cycle_count_pair(graph, 0, i)


def cycle_count_pair(graph: ColoredGraph, a: int, b: int) -> int:
    """Number of cycles in the two-color subgraph on colors a and b."""
    ma, mb = graph.matchings[a], graph.matchings[b]
    size = len(ma)
    seen = bytearray(size)
    cycles = 0
    for v0 in range(size):
        if seen[v0]:
            continue
        cycles += 1
        v = v0
        while not seen[v]:
            seen[v] = 1
            w = ma[v]
            seen[w] = 1
            v = mb[w]
    return cycles


def order(graph: ColoredGraph) -> int:
    """Grading of the graph: 1 + (q-1)n - (number of color-0i cycles)."""
    q = graph.q
    n = graph.n_pairs
    f0 = sum(bicolored_cycle_count(graph, i) for i in range(1, q + 1))
    return 1 + (q - 1) * n - f0


@dataclass(frozen=True)
class GraphFragment:
    """A connected piece left after deleting one color class.

    Keeps original vertex labels; adj[c][v] is v's partner along color c
    inside the fragment.
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    adj: dict

    def is_melonic(self) -> bool:
        partners = {c: dict(self.adj[c]) for c in self.colors}
        return _melonic_component(list(self.vertices), partners)


@dataclass(frozen=True)
class ResidueSet:
    color_removed: int
    components: tuple[GraphFragment, ...]


def residues(graph: ColoredGraph, c: int) -> ResidueSet:
    """Connected components after deleting every color-c edge."""
    size = graph.n_vertices
    colors = tuple(x for x in range(graph.q + 1) if x != c)
    assigned = [-1] * size
    comp_count = 0
    for v0 in range(size):
        if assigned[v0] >= 0:
            continue
        stack = [v0]
        assigned[v0] = comp_count
        while stack:
            v = stack.pop()
            for x in colors:
                w = graph.matchings[x][v]
                if assigned[w] < 0:
                    assigned[w] = comp_count
                    stack.append(w)
        comp_count += 1
    fragments = []
    for k in range(comp_count):
        vertices = tuple(v for v in range(size) if assigned[v] == k)
        adj = {
            x: {v: graph.matchings[x][v] for v in vertices}
            for x in colors
        }
        fragments.append(GraphFragment(vertices=vertices, colors=colors, adj=adj))
    return ResidueSet(color_removed=c, components=tuple(fragments))


def admissible_pair(graph: ColoredGraph, edge: tuple[int, int]) -> bool:
    """True if the endpoints of a color-0 edge are joined by a 0-free path."""
    u, v = edge
    if graph.matchings[0][u] != v:
        raise ValueError(f"{edge} is not a color-0 edge")
    comp = _component_of(graph.matchings, graph.n_vertices, u, skip_color=0)
    return comp is None or v in comp


def is_syk(graph: ColoredGraph) -> bool:
    """True if the graph stays connected after deleting all color-0 edges."""
    return _connected(graph.matchings, graph.n_vertices, skip_color=0)


def bipartition(graph: ColoredGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(black, white) vertex classes with the root origin black, else None."""
    size = graph.n_vertices
    side = [-1] * size
    side[graph.root[0]] = 0
    stack = [graph.root[0]]
    while stack:
        v = stack.pop()
        for m in graph.matchings:
            w = m[v]
            if side[w] < 0:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return None
    blacks = tuple(v for v in range(size) if side[v] == 0)
    whites = tuple(v for v in range(size) if side[v] == 1)
    return blacks, whites


def is_bipartite(graph: ColoredGraph) -> bool:
    return bipartition(graph) is not None


def gurau_degree(graph: ColoredGraph) -> Fraction:
    """Colored-tensor-model grading; zero exactly on melonic graphs."""
    q = graph.q
    size = graph.n_vertices
    total = 0
    for a in range(q + 1):
        for b in range(a + 1, q + 1):
            total += cycle_count_pair(graph, a, b)
    return q + Fraction(q * (q - 1) * size, 4) - total


def is_melonic(graph: ColoredGraph, colors=None) -> bool:
    """True if every component of the chosen color subgraph reduces to a
    two-vertex graph by repeatedly contracting pairs joined by all but one
    of the chosen colors."""
    if colors is None:
        colors = tuple(range(graph.q + 1))
    else:
        colors = tuple(colors)
    if len(colors) < 2:
        return True
    size = graph.n_vertices
    assigned = bytearray(size)
    for v0 in range(size):
        if assigned[v0]:
            continue
        stack = [v0]
        assigned[v0] = 1
        component = [v0]
        while stack:
            v = stack.pop()
            for c in colors:
                w = graph.matchings[c][v]
                if not assigned[w]:
                    assigned[w] = 1
                    component.append(w)
                    stack.append(w)
        partners = {c: {v: graph.matchings[c][v] for v in component} for c in colors}
        if not _melonic_component(component, partners):
            return False
    return True


def _melonic_component(vertices: list, partners: dict) -> bool:
    """Greedy dipole contraction; contraction of these dipoles is confluent,
    so a single greedy pass decides membership."""
    colors = list(partners)
    alive = set(vertices)

    def dipole_color(u, v):
        # The one color where u, v disagree if they form a dipole, -1 if
        # joined by every color (a whole two-vertex component), else None.
        misses = 0
        missing = -1
        for c in colors:
            if partners[c][u] != v:
                misses += 1
                if misses > 1:
                    return None
                missing = c
        return missing

    # Every vertex is re-examined after any change to its adjacency, so an
    # empty stack with more than two vertices alive means no dipole exists.
    pending = list(vertices)
    while len(alive) > 2:
        if not pending:
            return False
        u = pending.pop()
        if u not in alive:
            continue
        for c in colors:
            v = partners[c][u]
            missing = dipole_color(u, v)
            if missing is None or missing == -1:
                continue
            up = partners[missing][u]
            vp = partners[missing][v]
            alive.remove(u)
            alive.remove(v)
            for x in colors:
                del partners[x][u]
                del partners[x][v]
            partners[missing][up] = vp
            partners[missing][vp] = up
            pending.append(up)
            pending.append(vp)
            break
    u, v = alive
    return all(partners[c][u] == v for c in colors)


def canonical_form(graph: ColoredGraph) -> ColoredGraph:
    """Relabel vertices by root-first BFS in color order.

    Rooted colored graphs are rigid, so two graphs are isomorphic as rooted
    objects exactly when their canonical forms are equal.
    """
    size = graph.n_vertices
    label = [-1] * size
    o, e = graph.root
    label[o] = 0
    label[e] = 1
    queue = [o, e]
    head = 0
    nxt = 2
    while head < len(queue):
        v = queue[head]
        head += 1
        for m in graph.matchings:
            w = m[v]
            if label[w] < 0:
                label[w] = nxt
                nxt += 1
                queue.append(w)
    new_matchings = []
    for m in graph.matchings:
        out = [0] * size
        for v in range(size):
            out[label[v]] = label[m[v]]
        new_matchings.append(tuple(out))
    return ColoredGraph(q=graph.q, matchings=tuple(new_matchings), root=(0, 1))


def canonical_key(graph: ColoredGraph):
    """Hashable key identifying the rooted isomorphism class."""
    c = canonical_form(graph)
    return (c.q, c.matchings)


def from_contracted_permutations(q: int, perms) -> ColoredGraph:
    """Expand q permutations of 0..n-1 into the bipartite 2n-vertex graph.

    Pair w becomes black vertex 2w and white vertex 2w+1 joined by color 0;
    color i joins black 2w to white 2*perms[i-1][w]+1.  The root is the
    expansion of pair 0.
    """
    n = len(perms[0])
    m0 = []
    for w in range(n):
        m0.extend((2 * w + 1, 2 * w))
    matchings = [tuple(m0)]
    for i in range(q):
        mi = [0] * (2 * n)
        for w in range(n):
            t = 2 * perms[i][w] + 1
            mi[2 * w] = t
            mi[t] = 2 * w
        matchings.append(tuple(mi))
    return ColoredGraph(q=q, matchings=tuple(matchings), root=(0, 1))
