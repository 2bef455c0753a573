"""Nested-neighborhood bipartite graphs and 3-chain staircases.

A bipartite graph on (X, Y) is a chain graph when the Y-neighborhoods
of X are totally ordered by inclusion; equivalently there is no
induced 2P2 with one edge per side.  Chain graphs admit 3-label
expressions; the tripartite staircase variant admits 6-label ones.
"""

from dataclasses import dataclass

from .errors import NotBipartition, NotThreeChain
from .graph import Graph
from .kexpr import KExpr, Script


@dataclass(frozen=True)
class ChainOrder:
    """A recognized chain graph.

    xs is the X side sorted by non-decreasing Y-neighborhood (ties
    grouped by vertex id), ys the Y side sorted; neighborhoods[i] is
    the Y-neighborhood of xs[i], so the certificate is
    neighborhoods[0] <= neighborhoods[1] <= ... in set inclusion.
    """

    xs: tuple
    ys: tuple
    neighborhoods: tuple

    def rank(self, x) -> int:
        return self.xs.index(x)

    def blocks(self) -> list[tuple]:
        """Groups of X vertices with identical neighborhoods, ascending."""
        out: list = []
        for x, nb in zip(self.xs, self.neighborhoods):
            if out and out[-1][1] == nb:
                out[-1][0].append(x)
            else:
                out.append(([x], nb))
        return [(tuple(members), nb) for members, nb in out]

    def threshold_index(self, adjacency) -> int:
        """Largest i with xs[i] adjacent per the given vertex-set, -1 if none."""
        best = -1
        for i, x in enumerate(self.xs):
            if x in adjacency:
                best = i
        return best


def _check_sides(g: Graph, xs, ys) -> None:
    xs, ys = set(xs), set(ys)
    if xs & ys:
        raise NotBipartition("sides overlap")
    if xs | ys != set(g.vertices):
        raise NotBipartition("sides do not cover the vertex set")
    for side in (xs, ys):
        for u in side:
            if g.neighbors(u) & side:
                raise NotBipartition(f"side containing {u!r} is not independent")


def recognize_chain(g: Graph, xs, ys):
    """Recognize a chain bipartition.

    Returns (ChainOrder, None) on success and (None, witness) where the
    witness is a 2P2 (x, y, x2, y2) with edges xy and x2y2 otherwise.
    Raises NotBipartition when (xs, ys) is not an independent split.
    """
    _check_sides(g, xs, ys)
    ys_sorted = tuple(sorted(ys))
    order = sorted(xs, key=lambda x: (g.degree(x), x))
    hoods = [frozenset(g.neighbors(x)) for x in order]
    for i in range(len(order) - 1):
        small, big = hoods[i], hoods[i + 1]
        if not small <= big:
            y = min(small - big)
            y2 = min(big - small)
            return None, (order[i], y, order[i + 1], y2)
    return ChainOrder(tuple(order), ys_sorted, tuple(hoods)), None


def build_chain_expr(order: ChainOrder, labels=(1, 2, 3)) -> KExpr | None:
    """3-label expression that evaluates to the chain graph exactly.

    Processes X in decreasing neighborhood order; each X vertex enters
    on a fresh label and moves to the live X label, then the Y batch it
    newly covers enters fresh, joins every placed X vertex, and settles
    on the accumulated Y label.  The result leaves the X side on
    labels[0], the Y side on labels[1]; labels[2] is scratch and ends
    empty.  Returns None for the empty graph.
    """
    x_label, y_label, fresh = labels
    if len({x_label, y_label, fresh}) != 3:
        raise ValueError("chain construction needs three distinct labels")
    if not order.xs and not order.ys:
        return None
    first_cover: dict = {}
    for i, hood in enumerate(order.neighborhoods):
        for y in hood:
            if y not in first_cover:
                first_cover[y] = i
    script = Script()
    for i in range(len(order.xs) - 1, -1, -1):
        script.create(fresh, order.xs[i])
        script.relabel(fresh, x_label)
        batch = sorted(y for y in order.ys if first_cover.get(y) == i)
        if batch:
            script.create_all(fresh, batch)
            script.join(fresh, x_label)
            script.relabel(fresh, y_label)
    isolated = sorted(y for y in order.ys if y not in first_cover)
    script.create_all(y_label, isolated)
    return script.result()


# ---------------------------------------------------------------------------
# 3-chain staircases


@dataclass(frozen=True)
class ThreeChain:
    """Equal independent blocks a, b, c with staircase neighborhoods:
    a[i] sees b[0..i] and c[i..], c[i] sees b[i+1..] (c[-1] sees none)."""

    a: tuple
    b: tuple
    c: tuple

    @property
    def p(self) -> int:
        return len(self.a)


def canonical_3chain(p: int) -> Graph:
    """The 3-chain on blocks a1..ap, b1..bp, c1..cp."""
    if p < 1:
        raise ValueError("p must be positive")
    a = [f"a{t}" for t in range(1, p + 1)]
    b = [f"b{t}" for t in range(1, p + 1)]
    c = [f"c{t}" for t in range(1, p + 1)]
    edges = []
    for i in range(p):
        edges.extend((a[i], b[j]) for j in range(i + 1))
        edges.extend((a[i], c[j]) for j in range(i, p))
        edges.extend((c[i], b[j]) for j in range(i + 1, p))
    return Graph(a + b + c, edges)


def recognize_3chain(g: Graph, a_side, b_side, c_side) -> ThreeChain | None:
    """Find the forced numbering or report failure.

    The definition forces the order: a-vertices sorted by their degree
    into B must have degrees 1..p, and the b/c orders follow from the
    a order.  Unequal side sizes raise NotThreeChain; definition-clause
    failures return None.
    """
    a_side, b_side, c_side = set(a_side), set(b_side), set(c_side)
    if not (len(a_side) == len(b_side) == len(c_side)):
        raise NotThreeChain("the three blocks must have equal sizes")
    if a_side | b_side | c_side != set(g.vertices):
        raise NotThreeChain("blocks must partition the vertex set")
    if (a_side & b_side) or (a_side & c_side) or (b_side & c_side):
        raise NotThreeChain("blocks must be disjoint")
    p = len(a_side)
    for side in (a_side, b_side, c_side):
        for u in side:
            if g.neighbors(u) & side:
                return None
    a = sorted(a_side, key=lambda x: (len(g.neighbors(x) & b_side), x))
    if [len(g.neighbors(x) & b_side) for x in a] != list(range(1, p + 1)):
        return None
    b: list = []
    prev: frozenset = frozenset()
    for x in a:
        hood = g.neighbors(x) & b_side
        fresh = hood - prev
        if len(fresh) != 1 or not prev <= hood:
            return None
        b.append(min(fresh))
        prev = frozenset(hood)
    c: list = []
    for i, x in enumerate(a):
        hood = g.neighbors(x) & c_side
        if i + 1 < p:
            nxt = g.neighbors(a[i + 1]) & c_side
            fresh = hood - nxt
            if len(fresh) != 1 or not nxt <= hood:
                return None
            c.append(min(fresh))
        else:
            if len(hood) != 1:
                return None
            c.append(min(hood))
    chain = ThreeChain(tuple(a), tuple(b), tuple(c))
    return chain if _verify_3chain(g, chain) else None


def _verify_3chain(g: Graph, t: ThreeChain) -> bool:
    p = t.p
    for i in range(p):
        if g.neighbors(t.a[i]) != frozenset(t.b[: i + 1]) | frozenset(t.c[i:]):
            return False
    for i in range(p):
        want_b = frozenset(t.b[i + 1 :]) if i < p - 1 else frozenset()
        if (g.neighbors(t.c[i]) & frozenset(t.b)) != want_b:
            return False
    return True


def build_3chain_expr(t: ThreeChain, labels=(1, 2, 3, 4, 5, 6)) -> KExpr:
    """6-label expression following the staircase loop.

    Step one creates the first triple and joins the a-vertex to its two
    partners; every later step stages the new triple on the three fresh
    labels, joins the five required pairs, and folds the fresh labels
    into the accumulated ones.
    """
    l1, l2, l3, l4, l5, l6 = labels
    if len(set(labels)) != 6:
        raise ValueError("3-chain construction needs six distinct labels")
    script = Script()
    script.create(l1, t.a[0])
    script.create(l2, t.b[0])
    script.create(l3, t.c[0])
    script.join(l1, l2)
    script.join(l1, l3)
    for i in range(1, t.p):
        script.create(l4, t.a[i])
        script.create(l5, t.b[i])
        script.create(l6, t.c[i])
        script.join(l4, l2)
        script.join(l4, l5)
        script.join(l4, l6)
        script.join(l1, l6)
        script.join(l5, l3)
        script.relabel(l4, l1)
        script.relabel(l5, l2)
        script.relabel(l6, l3)
    return script.result()
