"""Bounded clique-width machinery for triangle-free graphs with no
induced spider S(1,2,2): recognition, expression construction around
5-cycles, verification, and MWIS over expressions."""

from .c5 import MAX_WIDTH
from .chains import (
    ChainOrder,
    ThreeChain,
    build_3chain_expr,
    build_chain_expr,
    canonical_3chain,
    recognize_3chain,
    recognize_chain,
)
from .errors import (
    CliquewidthError,
    DuplicateVertex,
    GenerationFailed,
    InvalidExpression,
    MalformedExpression,
    MalformedGraph,
    MissingWeight,
    NotBipartition,
    NotInClass,
    NotPrime,
    NotThreeChain,
    StructureViolation,
    TooLarge,
)
from .graph import (
    ClassReport,
    Graph,
    Pattern,
    contains_induced,
    from_edge_list,
    is_class_member,
    shortest_odd_cycle,
)
from .kexpr import (
    Create,
    Join,
    KExpr,
    LabeledGraph,
    Relabel,
    Union,
    WidthReport,
    evaluate,
    mwis,
    parse,
    serialize,
    width,
)
from .modular import ModuleTree, homogeneous_sets, is_prime, modular_decomposition
from .oracle import CwDecision, brute_contains, brute_mwis, exact_cw_leq
from .pipeline import DecompositionResult, build_cycle_expr, decompose, verify

__version__ = "0.1.0"

__all__ = [
    "MAX_WIDTH",
    "ChainOrder",
    "ThreeChain",
    "build_3chain_expr",
    "build_chain_expr",
    "canonical_3chain",
    "recognize_3chain",
    "recognize_chain",
    "CliquewidthError",
    "DuplicateVertex",
    "GenerationFailed",
    "InvalidExpression",
    "MalformedExpression",
    "MalformedGraph",
    "MissingWeight",
    "NotBipartition",
    "NotInClass",
    "NotPrime",
    "NotThreeChain",
    "StructureViolation",
    "TooLarge",
    "ClassReport",
    "Graph",
    "Pattern",
    "contains_induced",
    "from_edge_list",
    "is_class_member",
    "shortest_odd_cycle",
    "Create",
    "Join",
    "KExpr",
    "LabeledGraph",
    "Relabel",
    "Union",
    "WidthReport",
    "evaluate",
    "mwis",
    "parse",
    "serialize",
    "width",
    "ModuleTree",
    "homogeneous_sets",
    "is_prime",
    "modular_decomposition",
    "CwDecision",
    "brute_contains",
    "brute_mwis",
    "exact_cw_leq",
    "DecompositionResult",
    "build_cycle_expr",
    "decompose",
    "verify",
]
