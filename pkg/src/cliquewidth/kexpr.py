"""The four-operation clique-width expression algebra.

Node kinds: Create (new labeled vertex), Union (disjoint union), Join
(all edges between two label classes), Relabel (rename one label).
Everything here is iterative over the tree, so deep expressions from
large constructions never hit the recursion limit.

Grammar (bit-exact, used by parse/serialize):

    expr := v(L,ID) | u(expr,expr) | j(L,L,expr) | r(L,L,expr)

with L a decimal positive integer and ID matching [A-Za-z0-9_]+.
"""

import re
from dataclasses import dataclass

from .errors import (
    DuplicateVertex,
    InvalidExpression,
    MalformedExpression,
    MissingWeight,
)
from .graph import Graph


@dataclass(frozen=True)
class Create:
    label: int
    vertex: str


@dataclass(frozen=True)
class Union:
    left: "KExpr"
    right: "KExpr"


@dataclass(frozen=True)
class Join:
    a: int
    b: int
    child: "KExpr"


@dataclass(frozen=True)
class Relabel:
    old: int
    new: int
    child: "KExpr"


KExpr = Create | Union | Join | Relabel


def children(e: KExpr) -> tuple:
    if isinstance(e, Union):
        return (e.left, e.right)
    if isinstance(e, (Join, Relabel)):
        return (e.child,)
    return ()


def postorder(e: KExpr) -> list:
    """All nodes, children before parents."""
    out = []
    stack = [e]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(children(node))
    out.reverse()
    return out


def size(e: KExpr) -> int:
    return len(postorder(e))


def validate(e: KExpr) -> None:
    """Raise unless labels are positive, pair arguments distinct, and
    every vertex id is created at most once."""
    seen = set()
    for node in postorder(e):
        if isinstance(node, Create):
            if node.label < 1:
                raise InvalidExpression(f"label {node.label} is not positive")
            if node.vertex in seen:
                raise DuplicateVertex(f"vertex {node.vertex!r} created twice")
            seen.add(node.vertex)
        elif isinstance(node, Join):
            if node.a < 1 or node.b < 1:
                raise InvalidExpression("join labels must be positive")
            if node.a == node.b:
                raise InvalidExpression(f"join with equal labels {node.a}")
        elif isinstance(node, Relabel):
            if node.old < 1 or node.new < 1:
                raise InvalidExpression("relabel labels must be positive")
            if node.old == node.new:
                raise InvalidExpression(f"relabel with equal labels {node.old}")


@dataclass(frozen=True, eq=True)
class LabeledGraph:
    """Evaluation result: a graph plus one positive label per vertex."""

    graph: Graph
    labels: tuple  # sorted tuple of (vertex, label) pairs

    def label_of(self, v) -> int:
        return dict(self.labels)[v]

    def label_classes(self) -> dict:
        classes: dict = {}
        for v, lab in self.labels:
            classes.setdefault(lab, set()).add(v)
        return classes


def evaluate(e: KExpr) -> LabeledGraph:
    """Evaluate the expression to its labeled graph.

    Create yields one labeled vertex, Union a disjoint union, Join adds
    every missing edge between the two label classes (idempotent on
    existing ones), Relabel renames a label.  Duplicate vertex creation
    raises DuplicateVertex (via validate).
    """
    validate(e)
    # state per node: (labels dict vertex->int, edge set, class dict label->set)
    results: list = []
    for node in postorder(e):
        if isinstance(node, Create):
            results.append(({node.vertex: node.label}, set(), {node.label: {node.vertex}}))
        elif isinstance(node, Union):
            lab2, edges2, classes2 = results.pop()
            lab1, edges1, classes1 = results.pop()
            lab1.update(lab2)
            edges1 |= edges2
            for lab, cls in classes2.items():
                classes1.setdefault(lab, set()).update(cls)
            results.append((lab1, edges1, classes1))
        elif isinstance(node, Join):
            lab, edges, classes = results.pop()
            side_a = classes.get(node.a, ())
            side_b = classes.get(node.b, ())
            for u in side_a:
                for v in side_b:
                    edges.add((u, v) if u < v else (v, u))
            results.append((lab, edges, classes))
        else:  # Relabel
            lab, edges, classes = results.pop()
            moved = classes.pop(node.old, set())
            if moved:
                for v in moved:
                    lab[v] = node.new
                classes.setdefault(node.new, set()).update(moved)
            results.append((lab, edges, classes))
    lab, edges, _ = results.pop()
    graph = Graph(lab.keys(), sorted(edges))
    return LabeledGraph(graph, tuple(sorted(lab.items())))


@dataclass(frozen=True)
class WidthReport:
    """Label usage of an expression.

    width counts the distinct label integers appearing anywhere in the
    tree; live_counts holds, per subtree in postorder, the number of
    distinct labels present on that subtree's vertices.
    """

    width: int
    labels: frozenset
    max_live: int
    live_counts: tuple


def width(e: KExpr) -> WidthReport:
    mentioned: set = set()
    live_stack: list = []
    counts = []
    for node in postorder(e):
        if isinstance(node, Create):
            mentioned.add(node.label)
            live_stack.append(frozenset((node.label,)))
        elif isinstance(node, Union):
            right = live_stack.pop()
            left = live_stack.pop()
            live_stack.append(left | right)
        elif isinstance(node, Join):
            mentioned.update((node.a, node.b))
        else:
            mentioned.update((node.old, node.new))
            live = live_stack.pop()
            if node.old in live:
                live = (live - {node.old}) | {node.new}
            live_stack.append(live)
        counts.append(len(live_stack[-1]))
    return WidthReport(
        width=len(mentioned),
        labels=frozenset(mentioned),
        max_live=max(counts),
        live_counts=tuple(counts),
    )


def live_labels(e: KExpr) -> frozenset:
    """Labels present on vertices of the evaluated expression."""
    stack: list = []
    for node in postorder(e):
        if isinstance(node, Create):
            stack.append(frozenset((node.label,)))
        elif isinstance(node, Union):
            right = stack.pop()
            stack.append(stack.pop() | right)
        elif isinstance(node, Relabel):
            live = stack.pop()
            if node.old in live:
                live = (live - {node.old}) | {node.new}
            stack.append(live)
    return stack.pop()


def created_vertices(e: KExpr) -> list:
    return [n.vertex for n in postorder(e) if isinstance(n, Create)]


# ---------------------------------------------------------------------------
# Serialization


def serialize(e: KExpr) -> str:
    parts: list = []
    for node in postorder(e):
        if isinstance(node, Create):
            parts.append(f"v({node.label},{node.vertex})")
        elif isinstance(node, Union):
            right = parts.pop()
            left = parts.pop()
            parts.append(f"u({left},{right})")
        elif isinstance(node, Join):
            parts.append(f"j({node.a},{node.b},{parts.pop()})")
        else:
            parts.append(f"r({node.old},{node.new},{parts.pop()})")
    return parts.pop()


_TOKEN = re.compile(r"[A-Za-z0-9_]+|[(),]|\S")


def _tokenize(text: str):
    tokens = []
    line = 1
    col = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        m = _TOKEN.match(text, i)
        tok = m.group()
        tokens.append((tok, line, col))
        col += len(tok)
        i = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, -1, -1)

    def take(self, expected=None):
        tok, line, col = self.peek()
        if tok is None:
            raise MalformedExpression("unexpected end of input")
        if expected is not None and tok != expected:
            raise MalformedExpression(f"expected {expected!r}, found {tok!r}", line, col)
        self.pos += 1
        return tok, line, col

    def label(self) -> int:
        tok, line, col = self.take()
        if not tok.isdigit():
            raise MalformedExpression(f"expected a label, found {tok!r}", line, col)
        value = int(tok)
        if value < 1:
            raise MalformedExpression(f"label must be positive, found {tok}", line, col)
        return value

    def ident(self) -> str:
        tok, line, col = self.take()
        if not re.fullmatch(r"[A-Za-z0-9_]+", tok):
            raise MalformedExpression(f"expected a vertex id, found {tok!r}", line, col)
        return tok

    def expression(self) -> KExpr:
        # Explicit stack of open constructors so that nesting depth is
        # not limited by the interpreter recursion limit.
        frames: list = []  # ("u", [left?]) | ("j", a, b, line, col) | ("r", ...)
        node: KExpr | None = None
        while True:
            if node is None:
                head, line, col = self.take()
                if head == "v":
                    self.take("(")
                    lab = self.label()
                    self.take(",")
                    vid = self.ident()
                    self.take(")")
                    node = Create(lab, vid)
                elif head == "u":
                    self.take("(")
                    frames.append(["u", None])
                elif head in ("j", "r"):
                    self.take("(")
                    a = self.label()
                    self.take(",")
                    b = self.label()
                    if a == b:
                        raise MalformedExpression(
                            f"{'join' if head == 'j' else 'relabel'} needs distinct labels",
                            line,
                            col,
                        )
                    self.take(",")
                    frames.append([head, a, b])
                else:
                    raise MalformedExpression(f"expected an expression, found {head!r}", line, col)
                continue
            if not frames:
                return node
            frame = frames[-1]
            if frame[0] == "u" and frame[1] is None:
                frame[1] = node
                node = None
                self.take(",")
            elif frame[0] == "u":
                self.take(")")
                node = Union(frame[1], node)
                frames.pop()
            elif frame[0] == "j":
                self.take(")")
                node = Join(frame[1], frame[2], node)
                frames.pop()
            else:
                self.take(")")
                node = Relabel(frame[1], frame[2], node)
                frames.pop()


def parse(text: str) -> KExpr:
    """Parse expression text; validates all invariants afterwards."""
    parser = _Parser(text)
    node = parser.expression()
    tok, line, col = parser.peek()
    if tok is not None:
        raise MalformedExpression(f"trailing input {tok!r}", line, col)
    validate(node)
    return node


# ---------------------------------------------------------------------------
# Label rewriting helpers used by expression composition


def substitute_labels(e: KExpr, mapping: dict) -> KExpr:
    """Rewrite every label through the (injective) mapping."""

    def m(x):
        return mapping.get(x, x)

    parts: list = []
    for node in postorder(e):
        if isinstance(node, Create):
            parts.append(Create(m(node.label), node.vertex))
        elif isinstance(node, Union):
            right = parts.pop()
            left = parts.pop()
            parts.append(Union(left, right))
        elif isinstance(node, Join):
            parts.append(Join(m(node.a), m(node.b), parts.pop()))
        else:
            parts.append(Relabel(m(node.old), m(node.new), parts.pop()))
    return parts.pop()


def canonicalize_labels(e: KExpr) -> KExpr:
    """Renumber labels to 1..k in order of first mention (postorder)."""
    mapping: dict = {}

    def note(x):
        if x not in mapping:
            mapping[x] = len(mapping) + 1

    for node in postorder(e):
        if isinstance(node, Create):
            note(node.label)
        elif isinstance(node, Join):
            note(node.a)
            note(node.b)
        elif isinstance(node, Relabel):
            note(node.old)
            note(node.new)
    if all(k == v for k, v in mapping.items()):
        return e
    return substitute_labels(e, mapping)


def relabel_all(e: KExpr, target: int) -> KExpr:
    """Append relabels so every vertex of e ends with the target label."""
    for lab in sorted(live_labels(e)):
        if lab != target:
            e = Relabel(lab, target, e)
    return e


class Script:
    """Small accumulator for writing constructions imperatively.

    Join and relabel steps are emitted unconditionally (joins over
    empty label classes are legal no-ops), except that an empty script
    stays empty: its result is None.
    """

    def __init__(self):
        self.expr: KExpr | None = None

    def add(self, e: KExpr | None) -> None:
        if e is None:
            return
        self.expr = e if self.expr is None else Union(self.expr, e)

    def create(self, label: int, vertex: str) -> None:
        self.add(Create(label, vertex))

    def create_all(self, label: int, vertices) -> None:
        for v in sorted(vertices):
            self.create(label, v)

    def join(self, a: int, b: int) -> None:
        if self.expr is not None:
            self.expr = Join(a, b, self.expr)

    def relabel(self, old: int, new: int) -> None:
        if self.expr is not None:
            self.expr = Relabel(old, new, self.expr)

    def result(self) -> KExpr | None:
        return self.expr


# ---------------------------------------------------------------------------
# Maximum weight independent set over an expression


def mwis(e: KExpr, weights: dict) -> tuple[int, frozenset]:
    """Maximum weight independent set of evaluate(e).

    Dynamic program over the expression: each table maps a label subset
    S to the best independent set whose occupied-label set is exactly
    S.  Create seeds the two singleton entries, Union maximizes over
    pairs, Join deletes entries containing both joined labels, Relabel
    folds entries together.  Dominated entries (same label set, lower
    weight) are pruned eagerly by the max-merge.
    """
    validate(e)
    for v in created_vertices(e):
        if v not in weights:
            raise MissingWeight(f"no weight for vertex {v!r}")
        if weights[v] < 0:
            raise MissingWeight(f"negative weight for vertex {v!r}")

    def better(a, b):
        # (weight, sorted tuple) with deterministic tie-break
        if a is None:
            return b
        if b[0] != a[0]:
            return b if b[0] > a[0] else a
        return min(a, b, key=lambda t: t[1])

    stack: list = []
    for node in postorder(e):
        if isinstance(node, Create):
            w = weights[node.vertex]
            stack.append(
                {
                    frozenset(): (0, ()),
                    frozenset((node.label,)): (w, (node.vertex,)),
                }
            )
        elif isinstance(node, Union):
            t2 = stack.pop()
            t1 = stack.pop()
            merged: dict = {}
            for s1, (w1, set1) in t1.items():
                for s2, (w2, set2) in t2.items():
                    key = s1 | s2
                    cand = (w1 + w2, tuple(sorted(set1 + set2)))
                    merged[key] = better(merged.get(key), cand)
            stack.append(merged)
        elif isinstance(node, Join):
            table = stack.pop()
            stack.append(
                {s: v for s, v in table.items() if not (node.a in s and node.b in s)}
            )
        else:  # Relabel
            table = stack.pop()
            folded: dict = {}
            for s, val in table.items():
                if node.old in s:
                    s = (s - {node.old}) | {node.new}
                folded[s] = better(folded.get(s), val)
            stack.append(folded)
    table = stack.pop()
    best = None
    for val in table.values():
        best = better(best, val)
    assert best is not None
    return best[0], frozenset(best[1])
