"""Text formats: graph files and weight files.

Graph file grammar, one record per line, UTF-8 with LF endings:

    # comment
    n <count>
    v <id>
    e <id> <id>

Ids match [A-Za-z0-9_]+ and the header count must equal the number of
distinct ids referenced.  Weight files hold `w <id> <non-negative
integer>` lines; vertices without a line default to weight 1.
"""

import re
import sys

from .errors import MalformedGraph
from .graph import Graph, from_edge_list

_ID = re.compile(r"[A-Za-z0-9_]+\Z")


def parse_graph(text: str) -> Graph:
    count = None
    vertices: list = []
    edges: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            if count is not None:
                raise MalformedGraph(f"line {lineno}: duplicate header")
            try:
                count = int(parts[1])
            except ValueError:
                raise MalformedGraph(f"line {lineno}: bad count {parts[1]!r}") from None
        elif parts[0] == "v" and len(parts) == 2:
            _check_id(parts[1], lineno)
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            _check_id(parts[1], lineno)
            _check_id(parts[2], lineno)
            edges.append((parts[1], parts[2]))
        else:
            raise MalformedGraph(f"line {lineno}: unrecognized record {line!r}")
    if count is None:
        raise MalformedGraph("missing `n <count>` header")
    g = from_edge_list(edges, vertices)
    if g.n != count:
        raise MalformedGraph(
            f"header says {count} vertices but {g.n} distinct ids are referenced"
        )
    return g


def _check_id(token: str, lineno: int) -> None:
    if not _ID.match(token):
        raise MalformedGraph(f"line {lineno}: bad id {token!r}")


def render_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    touched = set()
    for u, v in g.edges():
        touched.add(u)
        touched.add(v)
    for v in g.vertices:
        if v not in touched:
            lines.append(f"v {v}")
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_weights(text: str, g: Graph) -> dict:
    weights = {v: 1 for v in g.vertices}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "w" or len(parts) != 3:
            raise MalformedGraph(f"line {lineno}: unrecognized record {line!r}")
        _check_id(parts[1], lineno)
        if not g.has_vertex(parts[1]):
            raise MalformedGraph(f"line {lineno}: unknown vertex {parts[1]!r}")
        try:
            value = int(parts[2])
        except ValueError:
            raise MalformedGraph(f"line {lineno}: bad weight {parts[2]!r}") from None
        if value < 0:
            raise MalformedGraph(f"line {lineno}: negative weight")
        weights[parts[1]] = value
    return weights


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
