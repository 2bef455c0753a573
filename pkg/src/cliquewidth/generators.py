"""Deterministic seeded generators for every structure class the
tests and the committed corpus need.

All randomness comes from the stdlib Mersenne Twister seeded per spec,
so identical GenSpec values always produce byte-identical graphs; the
corpus manifest records the generator name (mt19937) alongside each
instance's parameters, seed, and file hash.
"""

import hashlib
import random
from dataclasses import dataclass

from .chains import canonical_3chain
from .errors import GenerationFailed
from .graph import Graph, contains_induced, from_edge_list, is_class_member, S122
from .c5 import pent

RNG_NAME = "mt19937"
REJECTION_BUDGET = 10_000


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple
    seed: int

    def describe(self) -> str:
        params = ",".join(str(p) for p in self.params)
        return f"{self.family} {params} {self.seed}"


def generate(spec: GenSpec) -> Graph:
    if spec.family == "chain":
        px, py = spec.params
        return gen_chain(px, py, spec.seed)
    if spec.family == "3chain":
        (p,) = spec.params
        return gen_3chain(p)
    if spec.family == "cycle":
        (n,) = spec.params
        return gen_cycle(n)
    if spec.family == "c5":
        ones = tuple(spec.params[0:5])
        twos = tuple(spec.params[5:10])
        return gen_c5_family(ones, twos, spec.seed)
    if spec.family == "trianglefree":
        n, density_pct = spec.params
        return gen_random_trianglefree(n, density_pct / 100.0, spec.seed)
    if spec.family == "blowup":
        base = GenSpec(spec.params[0], tuple(spec.params[1:-1]), spec.seed)
        return gen_blowup(base, spec.params[-1], spec.seed)
    raise ValueError(f"unknown generator family {spec.family!r}")


def gen_chain(px: int, py: int, seed: int) -> Graph:
    """Random nested-neighborhood bipartite graph on x1..xpx / y1..ypy."""
    rng = random.Random(seed)
    xs = [f"x{t}" for t in range(1, px + 1)]
    ys = [f"y{t}" for t in range(1, py + 1)]
    perm = ys[:]
    rng.shuffle(perm)
    edges = []
    for x in xs:
        take = rng.randint(0, py)
        edges.extend((x, y) for y in perm[:take])
    return from_edge_list(edges, xs + ys)


def gen_3chain(p: int) -> Graph:
    return canonical_3chain(p)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    ids = [f"n{t}" for t in range(1, n + 1)]
    return from_edge_list([(ids[t], ids[(t + 1) % n]) for t in range(n)])


def _pick_threshold(rng, limit: int) -> int:
    """Mostly-extreme thresholds keep the rejection rate low."""
    roll = rng.random()
    if roll < 0.35:
        return 0
    if roll < 0.70:
        return limit
    return rng.randint(0, limit)


def gen_c5_family(ones_sizes, twos_sizes, seed: int, budget: int = REJECTION_BUDGET) -> Graph:
    """A 5-cycle frame with populated 1-vertex and 2-vertex sets.

    Edges are inserted only where the structural relations force or
    permit them.  Each chord keeps one fixed vertex order; the relation
    to the next chord is a nested-prefix chain with ascending
    thresholds along that order, and each 1-vertex touches one incident
    chord on an order prefix and the other on an order suffix, with the
    forced gap between the two (no independent triple, no triangle)
    respected by construction.  A split point per chord keeps prefix
    touchers and suffix touchers apart.  The sample is still rejected
    until the full class check passes.
    """
    rng = random.Random(seed)
    frame = [f"v{i}" for i in range(1, 6)]
    ones = {i: [f"a{i}_{t}" for t in range(1, ones_sizes[i - 1] + 1)] for i in range(1, 6)}
    twos = {i: [f"c{i}_{t}" for t in range(1, twos_sizes[i - 1] + 1)] for i in range(1, 6)}
    isolated = frame + [x for group in ones.values() for x in group]
    isolated += [x for group in twos.values() for x in group]
    for _ in range(budget):
        edges = [(frame[i], frame[(i + 1) % 5]) for i in range(5)]
        for i in range(1, 6):
            edges.extend((x, frame[i - 1]) for x in ones[i])
            edges.extend((x, frame[i - 1]) for x in twos[i])
            edges.extend((x, frame[pent(i + 2) - 1]) for x in twos[i])
            for x in ones[i]:
                edges.extend((x, y) for y in ones[pent(i + 1)])
                edges.extend((x, y) for y in twos[pent(i - 1)])
        sigma = {}
        for c in range(1, 6):
            order = list(twos[c])
            rng.shuffle(order)
            sigma[c] = order
        size = {c: len(sigma[c]) for c in range(1, 6)}
        # incomplete[c]: how many chord-c vertices miss a next-chord
        # neighbor; those must be completely covered from the previous
        # chord, so the previous chain thresholds start at that count
        incomplete = {}
        for c in range(1, 6):
            nxt = pent(c + 1)
            incomplete[c] = 0 if size[nxt] == 0 else rng.randint(0, size[c])
        for c in range(1, 6):
            nxt = pent(c + 1)
            if size[nxt] > 0 and incomplete[nxt] == size[nxt]:
                incomplete[c] = 0
        rho = {}
        for c in range(1, 6):
            nxt = pent(c + 1)
            low = incomplete[nxt]
            cut = incomplete[c]
            partial = sorted(rng.randint(low, max(low, size[nxt] - 1)) for _ in range(cut))
            rho[c] = partial + [size[nxt]] * (size[c] - cut)
            for t, w in enumerate(sigma[c]):
                edges.extend((w, u) for u in sigma[nxt][: rho[c][t]])
        split = {}
        for c in range(1, 6):
            prev = pent(c - 1)
            high = rho[prev][0] if size[prev] > 0 else size[c]
            split[c] = rng.randint(incomplete[c], max(incomplete[c], high))
        for j in range(1, 6):
            c, c2 = pent(j + 1), pent(j + 2)
            m, m2 = size[c], size[c2]

            def bound(i):
                # neighbors-into-next count of the i-th chord vertex,
                # extended with 0 below and the full span above
                if i <= 0:
                    return 0
                if i > m:
                    return m2
                return rho[c][i - 1]

            for z in ones[j]:
                options = [
                    i for i in range(0, split[c] + 1) if bound(i + 1) >= split[c2]
                ]
                if options:
                    i_z = rng.choice(options)
                    low = max(bound(i_z), split[c2])
                    s_z = rng.randint(low, bound(i_z + 1))
                else:
                    i_z, s_z = 0, m2
                edges.extend((z, w) for w in sigma[c][:i_z])
                edges.extend((z, u) for u in sigma[c2][s_z:])
        g = from_edge_list(edges, isolated)
        if is_class_member(g).member:
            return g
    raise GenerationFailed(f"c5 generator exhausted {budget} attempts for seed {seed}")


def gen_random_trianglefree(n: int, density: float, seed: int) -> Graph:
    """Triangle-free process with spider rejection per accepted edge."""
    rng = random.Random(seed)
    ids = [f"t{t}" for t in range(1, n + 1)]
    target = int(density * n * (n - 1) / 2)
    pairs = [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    adj = {v: set() for v in ids}
    edges: list = []
    for u, v in pairs:
        if len(edges) >= target:
            break
        if adj[u] & adj[v]:
            continue  # common neighbor would close a triangle
        candidate = from_edge_list(edges + [(u, v)], ids)
        if contains_induced(candidate, S122) is not None:
            continue
        edges.append((u, v))
        adj[u].add(v)
        adj[v].add(u)
    return from_edge_list(edges, ids)


def gen_blowup(base: GenSpec, max_mult: int, seed: int) -> Graph:
    """Replace every vertex of a base class member by an independent
    set of pseudo-random size between 1 and max_mult."""
    g = generate(base)
    rng = random.Random(seed ^ 0x5EED)
    copies = {v: rng.randint(1, max_mult) for v in g.vertices}
    vertices = []
    for v in g.vertices:
        vertices.extend(f"{v}m{t}" for t in range(copies[v]))
    edges = []
    for u, v in g.edges():
        for s in range(copies[u]):
            for t in range(copies[v]):
                edges.append((f"{u}m{s}", f"{v}m{t}"))
    return from_edge_list(edges, vertices)


# ---------------------------------------------------------------------------
# Corpus manifest


def graph_file_text(g: Graph) -> str:
    """Canonical graph file rendering shared with the CLI."""
    lines = [f"n {g.n}"]
    in_edges = set()
    for u, v in g.edges():
        in_edges.add(u)
        in_edges.add(v)
    for v in g.vertices:
        if v not in in_edges:
            lines.append(f"v {v}")
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def manifest_line(spec: GenSpec) -> str:
    g = generate(spec)
    digest = hashlib.sha256(graph_file_text(g).encode()).hexdigest()
    params = ",".join(str(p) for p in spec.params)
    return f"GEN {spec.family} {params} {spec.seed} {digest}"


def parse_manifest_line(line: str) -> tuple[GenSpec, str]:
    parts = line.split()
    if len(parts) != 5 or parts[0] != "GEN":
        raise ValueError(f"bad manifest line: {line!r}")
    _, family, params, seed, digest = parts

    def convert(token: str):
        return token if family == "blowup" and not token.lstrip("-").isdigit() else int(token)

    values = tuple(convert(t) for t in params.split(",")) if params != "-" else ()
    return GenSpec(family, values, int(seed)), digest
