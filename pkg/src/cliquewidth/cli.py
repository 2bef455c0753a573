"""Command-line front end.

Exit codes: 0 success, 2 not in class, 3 unsupported bipartite case,
4 structure violation, 64 malformed input.  Every file argument
accepts `-` for standard input or output.
"""

import argparse
import hashlib
import sys
import time

from . import generators, oracle, pipeline
from .errors import (
    CliquewidthError,
    MalformedExpression,
    MalformedGraph,
    NotInClass,
    StructureViolation,
)
from .fileformat import parse_graph, parse_weights, read_text, render_graph, write_text
from .graph import is_class_member
from .kexpr import mwis, parse, serialize, width

EXIT_OK = 0
EXIT_NOT_IN_CLASS = 2
EXIT_UNSUPPORTED = 3
EXIT_VIOLATION = 4
EXIT_USAGE = 64


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MalformedGraph, MalformedExpression, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInClass as exc:
        print(f"not in class: {exc}", file=sys.stderr)
        if exc.witness:
            print("witness: " + " ".join(exc.witness), file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except StructureViolation as exc:
        print(f"structure violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except CliquewidthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquewidth",
        description="Bounded clique-width expressions for triangle-free, spider-free graphs.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("check", help="class membership report")
    p.add_argument("graph")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("decompose", help="build and print a k-expression")
    p.add_argument("graph")
    p.add_argument("--out", default="-")
    p.add_argument("--verified", action="store_true", help="verify eval equality")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("verify", help="check an expression against a graph")
    p.add_argument("graph")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("width", help="print the label count of an expression")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_width)

    p = sub.add_parser("mwis", help="maximum weight independent set")
    p.add_argument("graph")
    p.add_argument("weights")
    p.add_argument("--via", choices=("expr", "brute"), default="expr")
    p.set_defaults(handler=_cmd_mwis)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(required=True)
    oc = osub.add_parser("cwle", help="decide clique-width <= k on a tiny graph")
    oc.add_argument("graph")
    oc.add_argument("k", type=int)
    oc.add_argument("--cert", default=None, help="write the certificate here")
    oc.set_defaults(handler=_cmd_oracle_cwle)

    p = sub.add_parser("gen", help="emit a generated graph file")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("bench", help="decompose every manifest entry")
    p.add_argument("manifest")
    p.set_defaults(handler=_cmd_bench)
    return parser


def _load_graph(path):
    return parse_graph(read_text(path))


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    report = is_class_member(g)
    print(f"triangle-free: {'yes' if report.triangle_free else 'no'}")
    if report.triangle_witness:
        print("triangle: " + " ".join(report.triangle_witness))
    print(f"spider-free: {'yes' if report.s122_free else 'no'}")
    if report.s122_witness:
        print("spider: " + " ".join(report.s122_witness))
    return EXIT_OK if report.member else EXIT_NOT_IN_CLASS


def _cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    result = pipeline.decompose(g, verify_result=args.verified)
    if not result.supported:
        print(f"unsupported: {result.detail}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    write_text(args.out, serialize(result.expression) + "\n")
    summary = f"case {result.case} width {result.width_report.width}"
    if args.verified:
        summary += f" verified {'yes' if result.verified else 'no'}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    expr = parse(read_text(args.expr).strip())
    ok = pipeline.verify(g, expr)
    print("verified" if ok else "mismatch")
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_width(args) -> int:
    expr = parse(read_text(args.expr).strip())
    print(width(expr).width)
    return EXIT_OK


def _cmd_mwis(args) -> int:
    g = _load_graph(args.graph)
    weights = parse_weights(read_text(args.weights), g)
    if args.via == "brute":
        value, chosen = oracle.brute_mwis(g, weights)
    else:
        result = pipeline.decompose(g)
        if not result.supported:
            print(f"unsupported: {result.detail}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        value, chosen = mwis(result.expression, weights)
    print(value)
    print(" ".join(sorted(chosen)))
    return EXIT_OK


def _cmd_oracle_cwle(args) -> int:
    g = _load_graph(args.graph)
    decision = oracle.exact_cw_leq(g, args.k)
    print("yes" if decision.answer else "no")
    if decision.answer and args.cert:
        write_text(args.cert, serialize(decision.certificate) + "\n")
    return EXIT_OK


def _cmd_gen(args) -> int:
    tokens = [t for chunk in args.params for t in chunk.split(",") if t]
    params = tuple(int(p) if p.lstrip("-").isdigit() else p for p in tokens)
    spec = generators.GenSpec(args.family, params, args.seed)
    g = generators.generate(spec)
    write_text(args.out, render_graph(g))
    return EXIT_OK


def _cmd_bench(args) -> int:
    text = read_text(args.manifest)
    max_width = 0
    failures = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        spec, digest = generators.parse_manifest_line(line)
        g = generators.generate(spec)
        actual = hashlib.sha256(generators.graph_file_text(g).encode()).hexdigest()
        if actual != digest:
            print(f"{spec.describe()} HASH-MISMATCH")
            failures += 1
            continue
        start = time.perf_counter()
        result = pipeline.decompose(g)
        elapsed = time.perf_counter() - start
        w = result.width_report.width if result.width_report else 0
        max_width = max(max_width, w)
        status = "verified" if result.verified else "unverified"
        if not result.supported:
            status = "unsupported"
            failures += 1
        print(f"{spec.describe()} {result.case} {w} {status} {elapsed:.3f}s")
    print(f"MAXWIDTH {max_width}")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
