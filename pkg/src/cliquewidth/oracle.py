"""Independent brute-force ground truth on tiny graphs.

exact_cw_leq runs an exhaustive memoized search over bottom-up
constructions: a state is a partial labeled graph on a vertex subset
(vertices keep their identity, labels are canonicalized away in the
memo key), transitions are the expression operations, and states are
processed in order of expression size so small certificates come out
first.  Three necessary conditions prune dead states early:

* two same-labeled vertices must have equal neighborhoods outside the
  current subset (labels never split, so their futures are tied);
* a graph edge inside one label class can never be added (joins need
  two distinct labels), so such states are dead;
* a join is legal only when every cross pair is a graph edge.

Joins are not searched over: a legal join only adds edges that the
final graph needs anyway and weakens no later precondition, so every
state is join-saturated on creation.  This normal form loses no
reachable goal and collapses the interleaving blowup.
"""

import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import MissingWeight, TooLarge
from .graph import Graph, Pattern
from .kexpr import Create, Join, KExpr, Relabel, Union, substitute_labels

CW_MAX_VERTICES = 8
CW_MAX_LABELS = 6


@dataclass(frozen=True)
class CwDecision:
    graph: Graph
    bound: int
    answer: bool
    certificate: KExpr | None


class _State:
    """Labeled partial graph: classes maps label -> frozenset of ids."""

    __slots__ = ("classes", "edges", "expr", "cost", "vset")

    def __init__(self, classes, edges, expr, cost):
        self.classes = classes
        self.edges = edges
        self.expr = expr
        self.cost = cost
        vs = set()
        for cls in classes.values():
            vs |= cls
        self.vset = frozenset(vs)

    def key(self):
        return (frozenset(self.classes.values()), self.edges)


def _class_ok(g, cls, inside, edges) -> bool:
    """Uniform outside profile and no missing internal graph edge."""
    profiles = {frozenset(g.neighbors(v) - inside) for v in cls}
    if len(profiles) != 1:
        return False
    for u, v in combinations(sorted(cls), 2):
        if g.has_edge(u, v) and ((u, v) if u < v else (v, u)) not in edges:
            return False
    return True


def exact_cw_leq(g: Graph, k: int) -> CwDecision:
    """Decide whether the graph admits a k-expression, exhaustively.

    Hard caps: 8 vertices and 6 labels.  Returns a certificate
    expression on success; monotone in k by construction.
    """
    if g.n > CW_MAX_VERTICES:
        raise TooLarge(f"exact search capped at {CW_MAX_VERTICES} vertices")
    if k > CW_MAX_LABELS:
        raise TooLarge(f"exact search capped at {CW_MAX_LABELS} labels")
    if k < 1:
        return CwDecision(g, k, False, None)
    if g.n == 0:
        raise TooLarge("empty graph")
    if k >= g.n:
        # every vertex can keep a private label: create, union, join edges
        expr: KExpr | None = None
        for idx, v in enumerate(g.vertices):
            node = Create(idx + 1, v)
            expr = node if expr is None else Union(expr, node)
        index = {v: idx + 1 for idx, v in enumerate(g.vertices)}
        for u, v in g.edges():
            expr = Join(index[u], index[v], expr)
        return CwDecision(g, k, True, expr)

    goal_edges = frozenset((min(u, v), max(u, v)) for u, v in g.edges())
    all_vertices = frozenset(g.vertices)

    counter = 0
    heap: list = []
    seen: set = set()
    frontier: dict = {}  # class-set fingerprint -> list of known edge sets
    by_vset: dict = {}  # vertex set -> list of processed states

    def push(classes, edges, expr, cost):
        nonlocal counter
        edges, expr, cost = _saturate_joins(g, classes, edges, expr, cost)
        state = _State(classes, edges, expr, cost)
        key = state.key()
        if key in seen:
            return
        ckey = frozenset(state.classes.values())
        bucket = frontier.setdefault(ckey, [])
        # a state with the same classes and at least these edges
        # dominates this one: every later precondition only relaxes
        # with extra edges and the goal wants them all
        for known in bucket:
            if edges <= known:
                return
        seen.add(key)
        bucket.append(edges)
        counter += 1
        heapq.heappush(heap, (cost, counter, state))

    for v in g.vertices:
        push({1: frozenset((v,))}, frozenset(), Create(1, v), 1)

    while heap:
        _, _, state = heapq.heappop(heap)
        if state.vset == all_vertices and state.edges == goal_edges:
            return CwDecision(g, k, True, state.expr)
        by_vset.setdefault(state.vset, []).append(state)
        _expand_relabels(g, state, push)
        complement = all_vertices - state.vset
        for vset, others in by_vset.items():
            if vset <= complement:
                for other in others:
                    _expand_unions(g, state, other, k, push)
    return CwDecision(g, k, False, None)


def _saturate_joins(g, classes, edges, expr, cost):
    """Apply every legal join with a missing edge; legality is static
    under joins, so one pass over the class pairs suffices."""
    labels = sorted(classes)
    edges = set(edges)
    for a, b in combinations(labels, 2):
        ca, cb = classes[a], classes[b]
        cross = []
        complete = True
        for u in ca:
            for v in cb:
                if not g.has_edge(u, v):
                    complete = False
                    break
                cross.append((u, v) if u < v else (v, u))
            if not complete:
                break
        if complete and any(pair not in edges for pair in cross):
            edges.update(cross)
            expr = Join(a, b, expr)
            cost += 1
    return frozenset(edges), expr, cost


def _expand_relabels(g, state, push):
    # merging never changes the vertex set, so only the merged class
    # needs its viability re-checked
    labels = sorted(state.classes)
    for old in labels:
        for new in labels:
            if old == new:
                continue
            merged = state.classes[old] | state.classes[new]
            if not _class_ok(g, merged, state.vset, state.edges):
                continue
            classes = {
                lab: cls for lab, cls in state.classes.items() if lab != old
            }
            classes[new] = merged
            push(classes, state.edges, Relabel(old, new, state.expr), state.cost + 1)


def _expand_unions(g, left, right, k, push):
    # one orientation suffices: every label of every state lives in
    # 1..k, so remapping the right side over 1..k reaches every merge
    # pattern, and union is commutative.  Classes untouched by the
    # identification stay viable (their outside only shrinks), so only
    # merged classes are re-checked.
    labels_r = sorted(right.classes)
    slots = list(range(1, k + 1))
    inside = left.vset | right.vset
    edges = left.edges | right.edges
    for mapping in _injective_maps(labels_r, slots):
        classes = dict(left.classes)
        ok = True
        for lab, target in mapping.items():
            cls = right.classes[lab]
            if target in classes:
                merged = classes[target] | cls
                if not _class_ok(g, merged, inside, edges):
                    ok = False
                    break
                classes[target] = merged
            else:
                classes[target] = cls
        if not ok or len(classes) > k:
            continue
        expr = Union(left.expr, substitute_labels(right.expr, mapping))
        push(classes, edges, expr, left.cost + right.cost + 1)


def _injective_maps(sources, slots):
    if not sources:
        yield {}
        return
    head, rest = sources[0], sources[1:]
    for slot in slots:
        for sub in _injective_maps(rest, [s for s in slots if s != slot]):
            yield {**sub, head: slot}


# ---------------------------------------------------------------------------
# Brute MWIS


MWIS_MAX_VERTICES = 24


def brute_mwis(g: Graph, weights: dict) -> tuple[int, frozenset]:
    """Exact maximum weight independent set by pruned enumeration."""
    if g.n > MWIS_MAX_VERTICES:
        raise TooLarge(f"brute MWIS capped at {MWIS_MAX_VERTICES} vertices")
    verts = list(g.vertices)
    for v in verts:
        if v not in weights:
            raise MissingWeight(f"no weight for vertex {v!r}")
        if weights[v] < 0:
            raise MissingWeight(f"negative weight for vertex {v!r}")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in g.edges():
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    w = [weights[v] for v in verts]
    suffix = [0] * (len(verts) + 1)
    for i in range(len(verts) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + w[i]
    best_weight = -1
    best_mask = 0

    def walk(i, blocked, weight, mask):
        nonlocal best_weight, best_mask
        if weight + suffix[i] <= best_weight:
            return
        if i == len(verts):
            if weight > best_weight:
                best_weight = weight
                best_mask = mask
            return
        if not blocked & (1 << i):
            walk(i + 1, blocked | adj[i], weight + w[i], mask | (1 << i))
        walk(i + 1, blocked, weight, mask)

    walk(0, 0, 0, 0)
    chosen = frozenset(verts[i] for i in range(len(verts)) if best_mask & (1 << i))
    return best_weight, chosen


# ---------------------------------------------------------------------------
# Brute pattern containment


CONTAINS_MAX_VERTICES = 12


def brute_contains(g: Graph, pattern: Pattern) -> bool:
    """Enumerate all size-|p| subsets and test induced isomorphism."""
    if g.n > CONTAINS_MAX_VERTICES:
        raise TooLarge(f"brute containment capped at {CONTAINS_MAX_VERTICES} vertices")
    pg = pattern.graph
    if pg.n > g.n:
        return False
    pdegs = sorted(pg.degree(v) for v in pg.vertices)
    for subset in combinations(g.vertices, pg.n):
        sub = g.subgraph(subset)
        if sorted(sub.degree(v) for v in subset) != pdegs:
            continue
        if _isomorphic(sub, pg):
            return True
    return False


def _isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    v1 = sorted(g1.vertices, key=lambda v: (-g1.degree(v), v))
    v2 = list(g2.vertices)

    def extend(idx, mapping, used):
        if idx == len(v1):
            return True
        u = v1[idx]
        for cand in v2:
            if cand in used or g2.degree(cand) != g1.degree(u):
                continue
            ok = True
            for prev in v1[:idx]:
                if g1.has_edge(u, prev) != g2.has_edge(cand, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[u] = cand
                used.add(cand)
                if extend(idx + 1, mapping, used):
                    return True
                del mapping[u]
                used.remove(cand)
        return False

    return extend(0, {}, set())
