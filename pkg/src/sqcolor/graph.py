"""Simple graphs, plane graphs, and the distance-two machinery built on them.

Vertices are dense 0-indexed integers.  Everything is immutable after
construction and every derived output (adjacency, faces, reports) is
canonically ordered, so identical inputs give byte-identical results.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adj), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def neighbor_sets(self) -> list[set[int]]:
        return [set(nbrs) for nbrs in self.adj]


@dataclass(frozen=True)
class SquareGraph(Graph):
    """A graph together with a tag for every edge.

    The tag records whether an edge joins vertices at distance one in the
    base graph (tag 1) or at distance exactly two (tag 2).
    """

    provenance: dict[Edge, int]

    def distance_one_edges(self) -> list[Edge]:
        return [e for e, t in sorted(self.provenance.items()) if t == 1]

    def distance_two_pairs(self) -> list[Edge]:
        return [e for e, t in sorted(self.provenance.items()) if t == 2]


def build_graph(vertex_count: int, edges) -> Graph:
    """Build a simple graph, collapsing duplicate edges.

    Rejects self-loops ("loop") and endpoints outside [0, vertex_count)
    ("bad vertex").
    """
    if vertex_count < 0:
        raise ValueError("bad vertex: negative vertex count")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"bad vertex: edge ({u}, {v}) out of range")
        if u == v:
            raise ValueError(f"loop: edge ({u}, {u}) rejected")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))


def square(g: Graph) -> SquareGraph:
    """Add an edge between every pair of vertices at distance exactly two.

    Uses a per-vertex two-level neighborhood scan; no all-pairs distance
    matrix is built.  Edges of the input keep tag 1, new pairs get tag 2.
    """
    reach: list[set[int]] = []
    for v in range(g.n):
        seen = set(g.adj[v])
        for u in g.adj[v]:
            seen.update(g.adj[u])
        seen.discard(v)
        reach.append(seen)
    provenance: dict[Edge, int] = {}
    for u in range(g.n):
        base = set(g.adj[u])
        for v in reach[u]:
            if u < v:
                provenance[(u, v)] = 1 if v in base else 2
    return SquareGraph(g.n, tuple(tuple(sorted(s)) for s in reach), provenance)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def girth(g: Graph):
    """Length of a shortest cycle, or math.inf for a forest.

    One BFS per start vertex.  Every tree-path/non-tree-edge closed walk
    found gives an upper bound on some cycle length, and for a start vertex
    lying on a shortest cycle the bound is tight, so the minimum over all
    starts is exact.
    """
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
        if best == 3:
            break
    return best


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """Exact detection of a simple cycle with exactly k vertices (k >= 3).

    Enumerates simple paths whose smallest vertex is the start, which
    visits every cycle at least once and nothing longer than k edges.
    """
    if k < 3:
        raise ValueError(f"bad cycle length {k}")
    nbr_sets = g.neighbor_sets()

    def extend(start: int, v: int, depth: int, on_path: set[int]) -> bool:
        if depth == k - 1:
            return start in nbr_sets[v]
        for w in g.adj[v]:
            if w > start and w not in on_path:
                on_path.add(w)
                if extend(start, w, depth + 1, on_path):
                    return True
                on_path.discard(w)
        return False

    for s in range(g.n):
        if extend(s, s, 0, {s}):
            return True
    return False


@dataclass(frozen=True)
class Face:
    """A face of a plane graph as the closed walk of its directed edges.

    The length counts edge traversals, so a cutedge lying on the face
    contributes twice.
    """

    boundary: tuple[Edge, ...]
    length: int


@dataclass(frozen=True)
class PlaneGraph:
    """A graph plus a clockwise rotation (cyclic neighbor order) per vertex."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.n:
            raise ValueError("bad embedding: rotation size mismatch")
        canonical = []
        for v in range(g.n):
            rot = self.rotation[v]
            if tuple(sorted(rot)) != g.adj[v]:
                raise ValueError(f"bad embedding: rotation at {v} is not a permutation of its neighbors")
            if rot:
                i = rot.index(min(rot))
                rot = rot[i:] + rot[:i]
            canonical.append(tuple(rot))
        object.__setattr__(self, "rotation", tuple(canonical))


def faces(pg: PlaneGraph) -> list[Face]:
    """Trace the faces of a connected plane graph.

    The successor of a directed edge (u, v) is (v, w) where w follows u in
    the rotation at v.  Raises "disconnected" for disconnected input and
    "nonplanar embedding" when the traced face count violates Euler's
    formula V - E + F = 2.
    """
    g = pg.graph
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.n == 1:
        # one vertex, no edges: the single unbounded face
        return [Face((), 0)]
    succ_index = [
        {u: i for i, u in enumerate(rot)} for rot in pg.rotation
    ]
    out: list[Face] = []
    visited: set[Edge] = set()
    darts = [(u, v) for u in range(g.n) for v in g.adj[u]]
    for dart in darts:
        if dart in visited:
            continue
        walk = []
        cur = dart
        while cur not in visited:
            visited.add(cur)
            walk.append(cur)
            u, v = cur
            rot = pg.rotation[v]
            cur = (v, rot[(succ_index[v][u] + 1) % len(rot)])
        if cur != dart:
            raise ValueError("nonplanar embedding: face walk re-entered mid-cycle")
        out.append(Face(tuple(walk), len(walk)))
    if g.n - g.edge_count + len(out) != 2:
        raise ValueError("nonplanar embedding")
    return out


@dataclass(frozen=True)
class ClassReport:
    """Result of the planarity / short-cycle membership checks."""

    is_planar_embedding: bool
    has_4_cycle: bool
    has_5_cycle: bool
    girth: object  # positive int or math.inf
    min_degree: int
    max_degree: int
    in_class: bool


def check_class(pg: PlaneGraph) -> ClassReport:
    """Check membership in the target class: planar with no 4- or 5-cycles.

    Planarity is attested only through the Euler check of the supplied
    embedding; no general planarity test is attempted.
    """
    g = pg.graph
    try:
        faces(pg)
        planar = True
    except ValueError:
        planar = False
    c4 = has_cycle_of_length(g, 4)
    c5 = has_cycle_of_length(g, 5)
    return ClassReport(
        is_planar_embedding=planar,
        has_4_cycle=c4,
        has_5_cycle=c5,
        girth=girth(g),
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        in_class=planar and not c4 and not c5,
    )


# ---------------------------------------------------------------------------
# Text formats.  Graph files: "n m" then m lines "u v".  Embedding files:
# one line per vertex, "v: w1 w2 ... wd" in clockwise order.  Both tolerate
# blank lines and '#' comments.
# ---------------------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("line 1: empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected 'n m' header") from None
    if len(lines) - 1 != m:
        raise ValueError(f"line {lineno}: header declares {m} edges, file has {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer endpoints") from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise ValueError(f"graph body: {exc}") from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_embedding(text: str, g: Graph) -> PlaneGraph:
    rotations: dict[int, tuple[int, ...]] = {}
    for lineno, line in _content_lines(text):
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'v: neighbors'")
        head, tail = line.split(":", 1)
        try:
            v = int(head.strip())
            rot = tuple(int(tok) for tok in tail.split())
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer vertex ids") from None
        if not (0 <= v < g.n):
            raise ValueError(f"line {lineno}: bad vertex {v}")
        if v in rotations:
            raise ValueError(f"line {lineno}: duplicate rotation for vertex {v}")
        rotations[v] = rot
    missing = [v for v in range(g.n) if v not in rotations]
    if missing:
        raise ValueError(f"embedding body: missing rotation for vertex {missing[0]}")
    return PlaneGraph(g, tuple(rotations[v] for v in range(g.n)))


def format_embedding(pg: PlaneGraph) -> str:
    lines = []
    for v in range(pg.graph.n):
        nbrs = " ".join(str(u) for u in pg.rotation[v])
        lines.append(f"{v}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"
