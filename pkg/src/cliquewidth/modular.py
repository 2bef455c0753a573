"""Homogeneous sets and modular decomposition.

The decomposition is the classical recursive one: parallel nodes for
disconnected graphs, series nodes for disconnected complements, and
prime nodes otherwise.  At a prime node the children (the maximal
proper strong modules) are recovered with two refinement primitives:

* maximal_modules_avoiding(g, v): the partition of V - {v} into the
  maximal modules not containing v, computed by splitting classes with
  outside distinguishers until none remains;
* minimal_module_containing(g, u, v): closure of {u, v} under adding
  any outside vertex that distinguishes the current set.

For a connected and co-connected graph the maximal proper strong
module containing v is {v} together with the union of all proper
closures minimal_module_containing(v, u), and every other child is a
class of maximal_modules_avoiding(g, v) disjoint from it.

Everything is O(n^3)-flavoured, which is fine at desk scale.
"""

from dataclasses import dataclass

from .graph import Graph


def minimal_module_containing(g: Graph, u: str, v: str) -> frozenset:
    module = {u, v}
    inside_count = {}
    for z in g.vertices:
        if z not in module:
            inside_count[z] = len(g.neighbors(z) & module)
    changed = True
    while changed:
        changed = False
        for z in sorted(inside_count):
            if 0 < inside_count[z] < len(module):
                module.add(z)
                del inside_count[z]
                for w in g.neighbors(z):
                    if w in inside_count:
                        inside_count[w] += 1
                changed = True
    return frozenset(module)


def maximal_modules_avoiding(g: Graph, v: str) -> list[frozenset]:
    """Classes of the coarsest partition {v} + modules not containing v."""
    nbrs = g.neighbors(v)
    rest = [w for w in g.vertices if w != v and w not in nbrs]
    classes = [c for c in ({v}, set(nbrs), set(rest)) if c]
    changed = True
    while changed:
        changed = False
        for idx, cls in enumerate(classes):
            if len(cls) < 2:
                continue
            for z in g.vertices:
                if z in cls:
                    continue
                inside = cls & g.neighbors(z)
                if inside and inside != cls:
                    classes[idx] = inside
                    classes.append(cls - inside)
                    changed = True
                    break
            if changed:
                break
    return sorted((frozenset(c) for c in classes), key=min)


def _prime_children(g: Graph) -> list[frozenset]:
    """Maximal proper strong modules of a connected, co-connected graph."""
    v0 = g.vertices[0]
    everything = set(g.vertices)
    absorbed: set = set()
    for u in g.vertices[1:]:
        if u in absorbed:
            continue
        closure = minimal_module_containing(g, v0, u)
        if set(closure) != everything:
            absorbed |= closure
    home = frozenset({v0} | absorbed)
    children = [home]
    for cls in maximal_modules_avoiding(g, v0):
        if not cls & home:
            children.append(cls)
    covered = set()
    for c in children:
        covered |= c
    if covered != everything:
        raise AssertionError("prime children do not partition the vertex set")
    return sorted(children, key=min)


def is_prime(g: Graph) -> bool:
    """True iff |V| >= 4 and no nontrivial module exists."""
    if g.n < 4:
        return False
    if not g.is_connected() or not g.complement().is_connected():
        return False
    v0 = g.vertices[0]
    for cls in maximal_modules_avoiding(g, v0):
        if len(cls) > 1:
            return False
    everything = set(g.vertices)
    for u in g.vertices[1:]:
        if set(minimal_module_containing(g, v0, u)) != everything:
            return False
    return True


@dataclass(frozen=True)
class ModuleTree:
    """Rooted modular decomposition tree.

    kind is one of leaf / parallel / series / prime; internal nodes
    carry the quotient graph on one representative (the smallest
    vertex) per child.
    """

    kind: str
    vertices: tuple
    children: tuple
    quotient: Graph | None

    def representative(self) -> str:
        return self.vertices[0]

    def child_sets(self) -> list[frozenset]:
        return [frozenset(c.vertices) for c in self.children]


def modular_decomposition(g: Graph) -> ModuleTree:
    if g.n == 0:
        raise ValueError("empty graph has no decomposition")
    if g.n == 1:
        return ModuleTree("leaf", g.vertices, (), None)
    comps = g.components()
    if len(comps) > 1:
        kind = "parallel"
        parts = comps
    else:
        co_comps = g.complement().components()
        if len(co_comps) > 1:
            kind = "series"
            parts = co_comps
        else:
            kind = "prime"
            parts = _prime_children(g)
    parts = sorted(parts, key=min)
    kids = tuple(modular_decomposition(g.subgraph(p)) for p in parts)
    reps = [k.representative() for k in kids]
    quotient = g.subgraph(reps)
    return ModuleTree(kind, tuple(sorted(g.vertices)), kids, quotient)


def homogeneous_sets(g: Graph) -> list[frozenset]:
    """Maximal strong modules that are honest homogeneous sets."""
    if g.n <= 1:
        return []
    tree = modular_decomposition(g)
    return [s for s in tree.child_sets() if len(s) >= 2]


def recompose(tree: ModuleTree) -> Graph:
    """Expand a module tree back into its graph (testing aid)."""
    if tree.kind == "leaf":
        return Graph(tree.vertices)
    parts = [recompose(c) for c in tree.children]
    vertices: list = []
    edges: list = []
    for part in parts:
        vertices.extend(part.vertices)
        edges.extend(part.edges())
    q = tree.quotient
    reps = {c.representative(): c for c in tree.children}
    for i, (ru, cu) in enumerate(sorted(reps.items())):
        for rv, cv in sorted(reps.items())[i + 1 :]:
            if q.has_edge(ru, rv):
                for x in cu.vertices:
                    for y in cv.vertices:
                        edges.append((x, y))
    return Graph(vertices, edges)
