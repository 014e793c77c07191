"""Constellations and the contraction map between them and bipartite graphs.

A constellation here is a bipartite incidence structure: n white vertices
(no embedding) and embedded colored vertices, where the color-i vertices'
corner lists partition the whites for every color i in 1..q.  White w's
color-i edge goes to the unique color-i vertex listing w as a corner.

The map psi contracts every color-0 edge of a bipartite graph to a white
vertex and turns every color-0i cycle into a color-i vertex whose ccw
corner order follows the cycle in the black-to-white direction.  Excess
(independent cycles) of the constellation equals the order of the graph.

The signed variant carries one sign per (white, color) edge and maps onto
possibly non-bipartite graphs: along each color-i cycle, the edge leaving
corner w_k departs from w_k's out or in vertex according to sign(w_k, i)
and lands on w_{k+1}'s in or out vertex according to sign(w_{k+1}, i), so
every sign assignment still produces perfect matchings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import ColoredGraph, ValidationReport, bipartition


@dataclass(frozen=True)
class EmbeddedVertex:
    """A colored constellation vertex: color plus ccw cyclic corner order.

    Corners name the white vertices met around this vertex; they are
    pairwise distinct.
    """

    color: int
    corners: tuple[int, ...]

    def rotated_min_first(self) -> "EmbeddedVertex":
        c = self.corners
        k = c.index(min(c))
        return EmbeddedVertex(self.color, c[k:] + c[:k])


@dataclass(frozen=True)
class Constellation:
    q: int
    n_white: int
    colored: tuple[EmbeddedVertex, ...]
    root: int = 0

    @property
    def n_edges(self) -> int:
        return self.q * self.n_white

    def edges(self) -> list[tuple[int, int, int]]:
        """(white, colored-vertex index, color) triples, one per corner."""
        out = []
        for idx, v in enumerate(self.colored):
            for w in v.corners:
                out.append((w, idx, v.color))
        out.sort()
        return out

    def vertex_of(self, white: int, color: int) -> int:
        """Index of the color-c vertex incident to the given white."""
        for idx, v in enumerate(self.colored):
            if v.color == color and white in v.corners:
                return idx
        raise KeyError((white, color))

    def to_json(self) -> str:
        payload = {
            "q": self.q,
            "white": list(range(self.n_white)),
            "colored": [
                {"color": v.color, "corners": list(v.corners)} for v in self.colored
            ],
            "edges": [[w, idx, c] for w, idx, c in self.edges()],
            "root": self.root,
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "Constellation":
        payload = json.loads(text)
        colored = tuple(
            EmbeddedVertex(int(v["color"]), tuple(int(w) for w in v["corners"]))
            for v in payload["colored"]
        )
        s = Constellation(
            q=int(payload["q"]),
            n_white=len(payload["white"]),
            colored=colored,
            root=int(payload["root"]),
        )
        report = validate(s)
        if not report.ok:
            raise ValueError(f"invalid constellation JSON: {report.first}")
        return s


def validate(s: Constellation) -> ValidationReport:
    """Check the partition, range, and connectivity invariants."""
    violations: list[str] = []
    if s.q < 1:
        violations.append(f"q must be positive, got {s.q}")
        return ValidationReport(False, tuple(violations))
    if s.n_white < 1:
        violations.append("need at least one white vertex")
        return ValidationReport(False, tuple(violations))
    if not (0 <= s.root < s.n_white):
        violations.append(f"root {s.root} is not a white vertex id")
        return ValidationReport(False, tuple(violations))
    seen_per_color = {c: set() for c in range(1, s.q + 1)}
    for idx, v in enumerate(s.colored):
        if not (1 <= v.color <= s.q):
            violations.append(f"vertex {idx} has color {v.color} outside 1..{s.q}")
            return ValidationReport(False, tuple(violations))
        if not v.corners:
            violations.append(f"vertex {idx} has no corners")
            return ValidationReport(False, tuple(violations))
        if len(set(v.corners)) != len(v.corners):
            violations.append(f"vertex {idx} lists a white corner twice")
            return ValidationReport(False, tuple(violations))
        for w in v.corners:
            if not (0 <= w < s.n_white):
                violations.append(f"vertex {idx} corner {w} out of range")
                return ValidationReport(False, tuple(violations))
            if w in seen_per_color[v.color]:
                violations.append(
                    f"white {w} has two color-{v.color} edges"
                )
                return ValidationReport(False, tuple(violations))
            seen_per_color[v.color].add(w)
    for c, seen in seen_per_color.items():
        if len(seen) != s.n_white:
            violations.append(f"color {c} does not cover every white vertex")
            return ValidationReport(False, tuple(violations))
    if not _connected(s):
        violations.append("constellation is disconnected")
    return ValidationReport(not violations, tuple(violations))


def _connected(s: Constellation) -> bool:
    # BFS over the incidence structure: whites 0..n-1, vertices n..n+C-1.
    n = s.n_white
    total = n + len(s.colored)
    white_adj: list[list[int]] = [[] for _ in range(n)]
    for idx, v in enumerate(s.colored):
        for w in v.corners:
            white_adj[w].append(idx)
    seen = bytearray(total)
    seen[s.root] = 1
    stack = [s.root]
    count = 1
    while stack:
        x = stack.pop()
        if x < n:
            nbrs = white_adj[x]
            for idx in nbrs:
                if not seen[n + idx]:
                    seen[n + idx] = 1
                    count += 1
                    stack.append(n + idx)
        else:
            for w in s.colored[x - n].corners:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
    return count == total


def excess(s: Constellation) -> int:
    """Independent cycles: E - V + 1 with E = qn and V = n + #colored."""
    return s.q * s.n_white - (s.n_white + len(s.colored)) + 1


def canonical_form(s: Constellation) -> Constellation:
    """Rotate every corner list to start at its minimal white and sort the
    vertex list; white labels are kept as-is."""
    colored = tuple(
        sorted(
            (v.rotated_min_first() for v in s.colored),
            key=lambda v: (v.color, v.corners),
        )
    )
    return Constellation(q=s.q, n_white=s.n_white, colored=colored, root=s.root)


def _graph_pairs(graph: ColoredGraph) -> tuple[list[tuple[int, int]], dict]:
    """Color-0 pairs ordered root-first then by minimal endpoint, each as
    (out_vertex, in_vertex): root orientation from the root edge, others
    min-endpoint-first."""
    m0 = graph.matchings[0]
    o, e = graph.root
    pairs = [(o, e)]
    pair_of = {o: 0, e: 0}
    for v in range(graph.n_vertices):
        if v in pair_of or m0[v] < v:
            continue
        pair_of[v] = len(pairs)
        pair_of[m0[v]] = len(pairs)
        pairs.append((v, m0[v]))
    return pairs, pair_of


def psi(graph: ColoredGraph) -> Constellation:
    """Contract color-0 edges and star-subdivide each color-0i cycle.

    Requires a bipartite input; corner order around a color-i vertex
    follows the cycle in the black-to-white direction, starting from the
    minimal pair.
    """
    bip = bipartition(graph)
    if bip is None:
        raise ValueError("psi is defined on bipartite graphs only")
    blacks = set(bip[0])
    pairs, pair_of = _graph_pairs(graph)
    n = len(pairs)
    black_of = [a if a in blacks else b for a, b in pairs]
    colored = []
    for i in range(1, graph.q + 1):
        mi = graph.matchings[i]
        succ = [pair_of[mi[black_of[p]]] for p in range(n)]
        seen = bytearray(n)
        for start in range(n):
            if seen[start]:
                continue
            cycle = []
            p = start
            while not seen[p]:
                seen[p] = 1
                cycle.append(p)
                p = succ[p]
            colored.append(EmbeddedVertex(color=i, corners=tuple(cycle)))
    colored.sort(key=lambda v: (v.color, v.corners))
    return Constellation(q=graph.q, n_white=n, colored=tuple(colored), root=0)


def psi_inverse(s: Constellation) -> ColoredGraph:
    """Expand white w to the color-0 pair (2w, 2w+1) and each color-i
    vertex back to a color-0i cycle: corner step w -> w' becomes the edge
    from 2w to 2w'+1."""
    n = s.n_white
    size = 2 * n
    m0 = [0] * size
    for w in range(n):
        m0[2 * w] = 2 * w + 1
        m0[2 * w + 1] = 2 * w
    matchings = [m0] + [[-1] * size for _ in range(s.q)]
    for v in s.colored:
        mi = matchings[v.color]
        d = len(v.corners)
        for k in range(d):
            a = 2 * v.corners[k]
            b = 2 * v.corners[(k + 1) % d] + 1
            mi[a] = b
            mi[b] = a
    graph = ColoredGraph(
        q=s.q,
        matchings=tuple(tuple(m) for m in matchings),
        root=(2 * s.root, 2 * s.root + 1),
    )
    return graph


@dataclass(frozen=True)
class SignedConstellation:
    """Constellation plus one sign (+1 or -1) per edge.

    signs[w * q + (i - 1)] is the sign of white w's color-i edge.
    """

    base: Constellation
    signs: tuple[int, ...]

    def sign(self, white: int, color: int) -> int:
        return self.signs[white * self.base.q + (color - 1)]


def psi_hat_inverse(sc: SignedConstellation) -> ColoredGraph:
    """Map a signed constellation to a (possibly non-bipartite) graph.

    White w expands to out vertex 2w and in vertex 2w+1.  Along each
    color-i cycle the step from corner w_k to w_{k+1} connects w_k's out
    (sign +) or in (sign -) vertex to w_{k+1}'s in (sign +) or out
    (sign -) vertex, reading each corner's own sign; consecutive steps
    therefore use complementary vertices of the shared white.
    """
    s = sc.base
    if len(sc.signs) != s.q * s.n_white:
        raise ValueError("need one sign per (white, color) edge")
    n = s.n_white
    size = 2 * n
    m0 = [0] * size
    for w in range(n):
        m0[2 * w] = 2 * w + 1
        m0[2 * w + 1] = 2 * w
    matchings = [m0] + [[-1] * size for _ in range(s.q)]
    for v in s.colored:
        mi = matchings[v.color]
        d = len(v.corners)
        for k in range(d):
            w_here = v.corners[k]
            w_next = v.corners[(k + 1) % d]
            s_here = sc.sign(w_here, v.color)
            s_next = sc.sign(w_next, v.color)
            a = 2 * w_here if s_here > 0 else 2 * w_here + 1
            b = 2 * w_next + 1 if s_next > 0 else 2 * w_next
            mi[a] = b
            mi[b] = a
    graph = ColoredGraph(
        q=s.q,
        matchings=tuple(tuple(m) for m in matchings),
        root=(2 * s.root, 2 * s.root + 1),
    )
    return graph


def psi_hat(graph: ColoredGraph) -> SignedConstellation:
    """Canonical signed preimage of an arbitrary connected colored graph.

    Per-pair orientation: the root pair uses its given orientation, every
    other pair points min-to-max.  Each color-i cycle starts at its
    minimal pair and leaves through that pair's out vertex, fixing the
    remaining sign gauge.
    """
    pairs, pair_of = _graph_pairs(graph)
    n = len(pairs)
    q = graph.q
    out_of = {p: pairs[p][0] for p in range(n)}
    signs = [1] * (q * n)
    colored = []
    for i in range(1, q + 1):
        mi = graph.matchings[i]
        done = bytearray(n)
        for start in range(n):
            if done[start]:
                continue
            cycle = []
            p = start
            leave = out_of[start]
            while True:
                cycle.append(p)
                signs[p * q + (i - 1)] = 1 if leave == out_of[p] else -1
                done[p] = 1
                arrive = mi[leave]
                p2 = pair_of[arrive]
                a2, b2 = pairs[p2]
                leave = b2 if arrive == a2 else a2
                if p2 == start:
                    break
                p = p2
            colored.append(EmbeddedVertex(color=i, corners=tuple(cycle)))
    colored.sort(key=lambda v: (v.color, v.corners))
    base = Constellation(q=q, n_white=n, colored=tuple(colored), root=0)
    return SignedConstellation(base=base, signs=tuple(signs))
