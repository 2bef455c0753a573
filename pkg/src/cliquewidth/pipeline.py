"""Top-level decomposition: membership check, modular composition,
and the per-case construction for prime graphs.

Prime graphs dispatch on the odd girth: bipartite ones go to the chain
builder (or to the exact oracle at tiny sizes, or to an explicit
unsupported result); odd girth 5 goes through the 5-cycle machinery;
odd girth 7 or more forces the graph to be exactly that cycle, which
is asserted clause by clause before the 4-label cycle script runs.
"""

import time
from dataclasses import dataclass, field

from . import c5
from .chains import build_chain_expr, recognize_chain
from .errors import NotInClass, StructureViolation, TooLarge
from .graph import Graph, is_class_member, shortest_odd_cycle, two_coloring
from .kexpr import (
    Create,
    Join,
    KExpr,
    Relabel,
    Script,
    Union,
    WidthReport,
    canonicalize_labels,
    evaluate,
    postorder,
    relabel_all,
    width,
)
from .modular import ModuleTree, is_prime, modular_decomposition
from .oracle import CW_MAX_LABELS, CW_MAX_VERTICES, exact_cw_leq

CASE_BIPARTITE_CHAIN = "bipartite-chain"
CASE_BIPARTITE_ORACLE = "bipartite-oracle"
CASE_BIPARTITE_UNSUPPORTED = "bipartite-unsupported"
CASE_C5 = "C5-case"
CASE_LONG_ODD_CYCLE = "long-odd-cycle"
CASE_MODULAR = "modular-composite"


@dataclass
class DecompositionResult:
    expression: KExpr | None
    case: str
    width_report: WidthReport | None
    verified: bool | None
    detail: str = ""
    node_widths: tuple = field(default_factory=tuple)

    @property
    def supported(self) -> bool:
        return self.expression is not None


class _Unsupported(Exception):
    def __init__(self, detail):
        super().__init__(detail)
        self.detail = detail


def decompose(g: Graph, checked: bool = True, verify_result: bool = True) -> DecompositionResult:
    """Decompose a class member into a verified bounded-width expression.

    Membership is always verified first; NotInClass carries the
    witness.  Non-prime graphs recurse along the modular decomposition
    tree, substituting each module's expression for its quotient
    vertex.  The composite width is exactly the maximum over the tree
    node widths because every sub-expression is label-canonicalized.
    """
    report = is_class_member(g)
    if not report.triangle_free:
        raise NotInClass("graph contains a triangle", report.triangle_witness)
    if not report.s122_free:
        raise NotInClass("graph contains an induced S(1,2,2)", report.s122_witness)
    node_widths: list = []
    try:
        if is_prime(g):
            case, expr = _prime_dispatch(g, checked)
            node_widths.append(width(expr).width)
        else:
            case = CASE_MODULAR
            tree = modular_decomposition(g)
            expr = _compose(g, tree, checked, node_widths)
    except _Unsupported as exc:
        return DecompositionResult(
            None, CASE_BIPARTITE_UNSUPPORTED, None, None, exc.detail
        )
    expr = canonicalize_labels(expr)
    w = width(expr)
    verified = None
    if verify_result:
        verified = verify(g, expr)
        if not verified:
            raise StructureViolation("verification", (), message="expression does not evaluate back to the input")
    return DecompositionResult(expr, case, w, verified, node_widths=tuple(node_widths))


def verify(g: Graph, expression) -> bool:
    """Exact vertex-id and edge-set equality of eval against the graph."""
    if expression is None:
        return False
    if isinstance(expression, DecompositionResult):
        expression = expression.expression
        if expression is None:
            return False
    return evaluate(expression).graph == g


def _compose(g: Graph, tree: ModuleTree, checked: bool, node_widths: list) -> KExpr:
    """Bottom-up expression for a modular decomposition tree node."""
    if tree.kind == "leaf":
        expr = Create(1, tree.vertices[0])
        node_widths.append(1)
        return expr
    parts = [_compose(g, child, checked, node_widths) for child in tree.children]
    if tree.kind == "parallel":
        expr = parts[0]
        for nxt in parts[1:]:
            expr = Union(expr, nxt)
        node_widths.append(width(expr).width)
        return expr
    if tree.kind == "series":
        expr = relabel_all(parts[0], 1)
        for nxt in parts[1:]:
            expr = Relabel(2, 1, Join(1, 2, Union(expr, relabel_all(nxt, 2))))
        node_widths.append(width(expr).width)
        return expr
    # prime node: build the quotient's expression, then substitute each
    # representative's Create with the module expression relabeled to
    # the label the representative holds at that point
    quotient = tree.quotient
    case, qexpr = _prime_dispatch(quotient, checked)
    qexpr = canonicalize_labels(qexpr)
    node_widths.append(width(qexpr).width)
    by_rep = {child.representative(): parts[idx] for idx, child in enumerate(tree.children)}
    expr = _substitute(qexpr, by_rep)
    return expr


def _substitute(qexpr: KExpr, by_rep: dict) -> KExpr:
    parts: list = []
    for node in postorder(qexpr):
        if isinstance(node, Create):
            module_expr = by_rep[node.vertex]
            parts.append(relabel_all(canonicalize_labels(module_expr), node.label))
        elif isinstance(node, Union):
            right = parts.pop()
            left = parts.pop()
            parts.append(Union(left, right))
        elif isinstance(node, Join):
            parts.append(Join(node.a, node.b, parts.pop()))
        else:
            parts.append(Relabel(node.old, node.new, parts.pop()))
    return parts.pop()


def _prime_dispatch(g: Graph, checked: bool) -> tuple[str, KExpr]:
    odd = shortest_odd_cycle(g)
    if odd is None:
        return _bipartite_case(g, checked)
    length, cycle = odd
    if length == 5:
        return CASE_C5, c5.decompose_around_c5(g, checked)
    check_long_odd_cycle(g, cycle)
    return CASE_LONG_ODD_CYCLE, build_cycle_expr(len(cycle), cycle)


def _bipartite_case(g: Graph, checked: bool) -> tuple[str, KExpr]:
    coloring = two_coloring(g)
    assert coloring is not None
    xs = sorted(v for v in g.vertices if coloring[v] == coloring[g.vertices[0]])
    ys = sorted(v for v in g.vertices if v not in set(xs))
    order, _ = recognize_chain(g, xs, ys)
    if order is not None:
        expr = build_chain_expr(order, (1, 2, 3))
        assert expr is not None
        return CASE_BIPARTITE_CHAIN, expr
    if g.n <= CW_MAX_VERTICES:
        for k in range(1, CW_MAX_LABELS + 1):
            try:
                decision = exact_cw_leq(g, k)
            except TooLarge:
                break
            if decision.answer:
                return CASE_BIPARTITE_ORACLE, decision.certificate
    raise _Unsupported(
        "prime bipartite graph with an induced 2P2 is out of scope"
    )


def check_long_odd_cycle(g: Graph, cycle) -> None:
    """Assert that a prime graph with odd girth 7+ is exactly its cycle.

    Off-cycle vertices are classified by their cycle adjacency and each
    kind names the clause it violates: 0 neighbors contradict
    connectivity of a prime graph, counts other than 2 are forbidden
    outright, distance-2 pairs land in a chord class that must be
    empty, and any other pair forces a short odd cycle or spider.
    """
    on_cycle = set(cycle)
    n = len(cycle)
    position = {v: idx for idx, v in enumerate(cycle)}
    for x in sorted(set(g.vertices) - on_cycle):
        hits = sorted(position[v] for v in g.neighbors(x) if v in on_cycle)
        if len(hits) == 0:
            raise StructureViolation("lemma6.iv", (x,))
        if len(hits) != 2:
            raise StructureViolation("lemma6.i", (x,))
        i, j = hits
        gap = min(j - i, n - (j - i))
        if gap == 2:
            raise StructureViolation("lemma6.vii", (x,))
        raise StructureViolation("lemma6.ii", (x,))
    for idx, u in enumerate(cycle):
        for v in cycle[idx + 1 :]:
            gap = abs(position[u] - position[v])
            gap = min(gap, n - gap)
            if g.has_edge(u, v) != (gap == 1):
                raise StructureViolation("lemma6.chord", (u, v))


def build_cycle_expr(n: int, ids) -> KExpr:
    """4-label expression for the cycle on the given ids, in order.

    Grows a labeled path keeping both endpoints distinguished and
    closes the cycle last.
    """
    ids = list(ids)
    if n < 4 or len(ids) != n:
        raise ValueError("cycle construction needs n >= 4 matching ids")
    script = Script()
    script.create(2, ids[0])
    script.create(3, ids[1])
    script.join(2, 3)
    for t in range(2, n):
        script.create(4, ids[t])
        script.join(4, 3)
        script.relabel(3, 1)
        script.relabel(4, 3)
    script.join(3, 2)
    expr = script.result()
    assert expr is not None
    return expr


# ---------------------------------------------------------------------------
# Benchmark helper shared by the CLI


@dataclass
class BenchRow:
    name: str
    case: str
    width: int | None
    verified: bool | None
    seconds: float


def run_bench(name: str, g: Graph) -> BenchRow:
    start = time.perf_counter()
    try:
        result = decompose(g)
        elapsed = time.perf_counter() - start
        w = result.width_report.width if result.width_report else None
        return BenchRow(name, result.case, w, result.verified, elapsed)
    except (NotInClass, StructureViolation) as exc:
        elapsed = time.perf_counter() - start
        return BenchRow(name, f"error:{type(exc).__name__}", None, False, elapsed)
