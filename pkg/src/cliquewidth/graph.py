"""Simple undirected graphs with stable string vertex ids.

Graphs are immutable values: vertex ids are opaque alphanumeric tokens
ordered lexicographically, edges are unordered pairs, and every
operation here is pure.  All pattern detectors are deterministic: ties
are always broken by the sorted vertex order.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .errors import MalformedGraph


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("_vertices", "_adj", "_m")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        verts = sorted(set(vertices))
        adj = {v: set() for v in verts}
        m = 0
        for u, v in edges:
            if u == v:
                raise MalformedGraph(f"self-loop at {u!r}")
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise MalformedGraph(f"edge endpoint {missing!r} is not a vertex")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self._vertices = tuple(verts)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._m = m

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as sorted pairs, in sorted order."""
        out = []
        for u in self._vertices:
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        return tuple(sorted(out))

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges())

    def subgraph(self, keep) -> "Graph":
        keep = set(keep)
        for v in keep:
            if v not in self._adj:
                raise MalformedGraph(f"unknown vertex {v!r}")
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        return Graph(keep, edges)

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u, v in combinations(self._vertices, 2)
            if v not in self._adj[u]
        ]
        return Graph(self._vertices, edges)

    def components(self) -> list[frozenset]:
        """Connected components, sorted by their smallest vertex."""
        seen = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, frozenset(self._adj.items())))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs: Sequence[tuple[str, str]], isolated: Sequence[str] = ()) -> Graph:
    """Build a graph from edge pairs plus extra isolated vertices.

    Duplicate edges collapse; a self-loop raises MalformedGraph.
    """
    vertices = set(isolated)
    for u, v in pairs:
        vertices.add(u)
        vertices.add(v)
    return Graph(vertices, pairs)


# ---------------------------------------------------------------------------
# Patterns


@dataclass(frozen=True)
class Pattern:
    """A named forbidden pattern with its canonical vertex/edge list."""

    kind: str
    graph: Graph

    @staticmethod
    def spider(i: int, j: int, k: int) -> "Pattern":
        """Three induced paths of lengths i, j, k hanging off a center."""
        if min(i, j, k) < 0:
            raise ValueError("leg lengths must be non-negative")
        edges = []
        for leg, length in (("x", i), ("y", j), ("z", k)):
            prev = "u"
            for t in range(1, length + 1):
                node = f"{leg}{t}"
                edges.append((prev, node))
                prev = node
        return Pattern(f"S({i},{j},{k})", from_edge_list(edges, ["u"]))

    @staticmethod
    def cycle(n: int) -> "Pattern":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        ids = [f"c{t}" for t in range(1, n + 1)]
        edges = [(ids[t], ids[(t + 1) % n]) for t in range(n)]
        return Pattern(f"C({n})", from_edge_list(edges))

    @staticmethod
    def complete(n: int) -> "Pattern":
        ids = [f"k{t}" for t in range(1, n + 1)]
        return Pattern(f"K({n})", Graph(ids, list(combinations(ids, 2))))

    @staticmethod
    def path(n: int) -> "Pattern":
        ids = [f"p{t}" for t in range(1, n + 1)]
        edges = list(zip(ids, ids[1:]))
        return Pattern(f"P({n})", from_edge_list(edges, ids[:1]))


S122 = Pattern.spider(1, 2, 2)
TRIANGLE = Pattern.complete(3)


def contains_induced(g: Graph, pattern: Pattern) -> dict | None:
    """First induced embedding of the pattern, or None.

    Backtracks over pattern vertices in degree-descending order and
    tries graph vertices in lexicographic order, so the returned
    embedding is deterministic.
    """
    pg = pattern.graph
    if pg.n > g.n:
        return None
    porder = sorted(pg.vertices, key=lambda v: (-pg.degree(v), v))
    gverts = g.vertices
    assignment: dict = {}
    used: set = set()

    def feasible(pv, gv) -> bool:
        for prev in porder[: len(assignment)]:
            want = pg.has_edge(pv, prev)
            have = g.has_edge(gv, assignment[prev])
            if want != have:
                return False
        return True

    def extend(idx: int) -> bool:
        if idx == len(porder):
            return True
        pv = porder[idx]
        mindeg = pg.degree(pv)
        for gv in gverts:
            if gv in used or g.degree(gv) < mindeg:
                continue
            if feasible(pv, gv):
                assignment[pv] = gv
                used.add(gv)
                if extend(idx + 1):
                    return True
                del assignment[pv]
                used.remove(gv)
        return False

    if extend(0):
        return dict(assignment)
    return None


@dataclass(frozen=True)
class ClassReport:
    """Membership flags for the triangle-free / spider-free class."""

    triangle_free: bool
    s122_free: bool
    triangle_witness: tuple = ()
    s122_witness: tuple = ()

    @property
    def member(self) -> bool:
        return self.triangle_free and self.s122_free


def is_class_member(g: Graph) -> ClassReport:
    """Check both forbidden patterns, reporting witnesses when found."""
    tri = contains_induced(g, TRIANGLE)
    spider = contains_induced(g, S122)
    return ClassReport(
        triangle_free=tri is None,
        s122_free=spider is None,
        triangle_witness=tuple(sorted(tri.values())) if tri else (),
        s122_witness=tuple(sorted(spider.values())) if spider else (),
    )


# ---------------------------------------------------------------------------
# Odd girth


def two_coloring(g: Graph) -> dict | None:
    """BFS 2-coloring, or None when some component is not bipartite."""
    color: dict = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def shortest_odd_cycle(g: Graph) -> tuple[int, tuple[str, ...]] | None:
    """Minimum odd cycle length with an induced witness cycle.

    Runs a BFS from every root; an edge inside one BFS layer closes an
    odd walk of length 2*depth + 1, and the minimum such walk over all
    roots is a shortest odd cycle (hence chordless).  Returns None iff
    the graph is bipartite.  Roots are scanned in sorted order and only
    strict improvements are kept, so the witness is deterministic.
    """
    best: tuple | None = None  # (length, root, u, v, parent-map)
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            u = queue.pop(0)
            if best is not None and dist[u] * 2 + 1 >= best[0]:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        for u, v in g.edges():
            if u in dist and v in dist and dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best[0]:
                    best = (length, root, u, v, parent)
    if best is None:
        return None
    length, root, u, v, parent = best
    up, vp = [], []
    x = u
    while x is not None:
        up.append(x)
        x = parent[x]
    x = v
    while x is not None:
        vp.append(x)
        x = parent[x]
    # up = u..root, vp = v..root; both meet only at root for a minimal walk.
    cycle = tuple(reversed(up)) + tuple(vp[:-1])
    if len(set(cycle)) != length:
        raise AssertionError("shortest odd walk was not a simple cycle")
    return length, cycle
