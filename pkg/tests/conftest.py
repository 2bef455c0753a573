"""Shared builders and tiny brute-force helpers for the test suite."""

from itertools import combinations

import pytest

from cliquewidth.graph import Graph, from_edge_list


def path_graph(n):
    ids = [f"p{t}" for t in range(1, n + 1)]
    return from_edge_list(list(zip(ids, ids[1:])), ids[:1])


def cycle_graph(n):
    ids = [f"n{t}" for t in range(1, n + 1)]
    return from_edge_list([(ids[t], ids[(t + 1) % n]) for t in range(n)])


def petersen_graph():
    outer = [f"o{t}" for t in range(5)]
    inner = [f"i{t}" for t in range(5)]
    edges = [(outer[t], outer[(t + 1) % 5]) for t in range(5)]
    edges += [(inner[t], inner[(t + 2) % 5]) for t in range(5)]
    edges += [(outer[t], inner[t]) for t in range(5)]
    return from_edge_list(edges)


def complete_bipartite(a, b):
    xs = [f"x{t}" for t in range(1, a + 1)]
    ys = [f"y{t}" for t in range(1, b + 1)]
    return from_edge_list([(x, y) for x in xs for y in ys], xs + ys)


def naive_modules(g: Graph):
    """All nontrivial modules by subset enumeration (n <= 12)."""
    assert g.n <= 12
    out = []
    verts = list(g.vertices)
    for size in range(2, g.n):
        for subset in combinations(verts, size):
            inside = set(subset)
            if all(
                not (g.neighbors(z) & inside) or inside <= g.neighbors(z)
                for z in verts
                if z not in inside
            ):
                out.append(frozenset(subset))
    return out


def naive_contains(g: Graph, pattern_graph: Graph) -> bool:
    """Induced containment by enumerating subsets plus permutations."""
    from itertools import permutations

    k = pattern_graph.n
    pverts = list(pattern_graph.vertices)
    for subset in combinations(g.vertices, k):
        for perm in permutations(subset):
            mapping = dict(zip(pverts, perm))
            if all(
                pattern_graph.has_edge(a, b) == g.has_edge(mapping[a], mapping[b])
                for a, b in combinations(pverts, 2)
            ):
                return True
    return False


@pytest.fixture
def c5():
    return cycle_graph(5)
