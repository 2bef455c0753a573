#!/usr/bin/env python3
"""Build the committed corpus under data/.

Scans shape/seed combinations of the 5-cycle family generator and
keeps instances that

* generate within a few rejection attempts (so re-generation from the
  manifest stays fast),
* strip cleanly and pass the complete structural check suite (the
  refinement assertions are only defined post-strip), and
* decompose into a verified expression within the width budget.

Also emits the small-graph corpus (n <= 16) used for the MWIS
cross-checks and the composite corpus of modular blow-ups.
"""

import hashlib
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from cliquewidth.c5 import (
    MAX_WIDTH,
    classify,
    find_c5_frame,
    full_check_suite,
    strip_constant_set,
)
from cliquewidth.errors import GenerationFailed, NotPrime, StructureViolation
from cliquewidth.generators import GenSpec, gen_c5_family, generate, graph_file_text
from cliquewidth.pipeline import decompose

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "data"
CORPUS = DATA / "corpus"

C5_SHAPES = [
    # single unsupported chords pair with a frame vertex into a forced
    # module, so shapes whose chords lack both flanks never strip
    (0, 0, 0, 0, 0, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 2, 2, 1, 1, 1),
    (1, 0, 1, 0, 0, 2, 1, 1, 1, 2),
    (1, 1, 0, 0, 1, 2, 2, 1, 1, 1),
    (0, 0, 0, 0, 0, 3, 3, 2, 2, 2),
    (1, 1, 0, 2, 1, 2, 1, 2, 1, 2),
    (1, 1, 1, 1, 1, 2, 2, 2, 2, 2),
    (2, 1, 0, 1, 1, 2, 2, 2, 2, 2),
    (1, 0, 1, 0, 1, 3, 3, 3, 3, 3),
    (0, 0, 0, 0, 0, 4, 4, 4, 4, 4),
    (2, 1, 1, 1, 2, 3, 2, 3, 2, 3),
    (1, 2, 1, 2, 1, 3, 2, 3, 2, 3),
    (2, 2, 1, 2, 2, 3, 3, 3, 3, 3),
    (1, 1, 1, 1, 1, 4, 3, 4, 3, 4),
    (2, 2, 2, 2, 2, 3, 3, 3, 3, 3),
    (2, 1, 2, 1, 2, 4, 4, 4, 4, 4),
]

MAX_GEN_ATTEMPTS = 12
PER_SHAPE = 6
TARGET = 100


def strippable(g) -> bool:
    frame = find_c5_frame(g)
    try:
        c = classify(g, frame, checked=False)
        if c.zero:
            return False
        strip_constant_set(g, c, checked=False)
    except (NotPrime, StructureViolation):
        return False
    return True


def qualifies_c5(spec: GenSpec):
    try:
        g = gen_c5_family(
            spec.params[0:5], spec.params[5:10], spec.seed, budget=MAX_GEN_ATTEMPTS
        )
    except GenerationFailed:
        return None
    if not strippable(g):
        return None
    if not all(c.ok for c in full_check_suite(g)):
        return None
    result = decompose(g)
    if not result.verified or result.width_report.width > MAX_WIDTH:
        return None
    return g


def build_c5_group():
    chosen = []
    for shape in C5_SHAPES:
        kept = 0
        for seed in range(120):
            if kept >= PER_SHAPE or len(chosen) >= TARGET:
                break
            spec = GenSpec("c5", shape, seed)
            g = qualifies_c5(spec)
            if g is not None:
                chosen.append((spec, g))
                kept += 1
        print(f"shape {shape}: kept {kept}", flush=True)
    extra_seed = 1000
    shape_cycle = C5_SHAPES * 200
    idx = 0
    while len(chosen) < TARGET:
        spec = GenSpec("c5", shape_cycle[idx], extra_seed)
        g = qualifies_c5(spec)
        if g is not None:
            chosen.append((spec, g))
        idx += 1
        extra_seed += 1
    return chosen[:TARGET]


def build_small_group():
    """Fifty decomposable instances with at most 16 vertices."""
    chosen = []
    candidates = []
    for seed in range(3):
        candidates.append(GenSpec("cycle", (5,), seed))
        candidates.append(GenSpec("cycle", (7,), seed))
        candidates.append(GenSpec("cycle", (9,), seed))
    for seed in range(8):
        candidates.append(GenSpec("chain", (4, 4), seed))
        candidates.append(GenSpec("chain", (6, 5), seed))
        candidates.append(GenSpec("chain", (3, 6), seed))
    for seed in range(10):
        candidates.append(GenSpec("c5", (0, 0, 0, 0, 0, 1, 1, 1, 1, 1), seed))
        candidates.append(GenSpec("c5", (1, 0, 0, 0, 1, 1, 1, 0, 1, 1), seed))
        candidates.append(GenSpec("c5", (0, 1, 0, 1, 0, 2, 1, 1, 1, 1), seed))
    for seed in range(8):
        candidates.append(GenSpec("blowup", ("cycle", 5, 2), seed))
        candidates.append(GenSpec("blowup", ("cycle", 7, 2), seed))
    for spec in candidates:
        if len(chosen) >= 50:
            break
        try:
            g = generate(spec)
        except GenerationFailed:
            continue
        if g.n > 16:
            continue
        result = decompose(g)
        if result.verified:
            chosen.append((spec, g))
    assert len(chosen) == 50, len(chosen)
    return chosen


def build_composite_group():
    """Thirty non-prime members built by substitution (blow-ups)."""
    chosen = []
    bases = [
        ("c5", (0, 0, 0, 0, 0, 1, 1, 0, 0, 0)),
        ("c5", (1, 0, 1, 0, 0, 2, 1, 1, 1, 2)),
        ("c5", (1, 1, 0, 0, 1, 2, 2, 1, 1, 1)),
        ("cycle", (7,)),
        ("cycle", (9,)),
        ("chain", (4, 5)),
    ]
    seed = 0
    while len(chosen) < 30 and seed < 400:
        family, params = bases[seed % len(bases)]
        spec = GenSpec("blowup", (family, *params, 3), seed)
        try:
            g = generate(spec)
            base = generate(GenSpec(family, params, seed))
        except GenerationFailed:
            seed += 1
            continue
        if g.n <= base.n:  # all multiplicities one: not a composite
            seed += 1
            continue
        result = decompose(g)
        if result.verified and result.case == "modular-composite":
            chosen.append((spec, g))
        seed += 1
    assert len(chosen) == 30, len(chosen)
    return chosen


def write_group(name, items):
    lines = []
    for idx, (spec, g) in enumerate(items):
        text = graph_file_text(g)
        digest = hashlib.sha256(text.encode()).hexdigest()
        params = ",".join(str(p) for p in spec.params)
        lines.append(f"GEN {spec.family} {params} {spec.seed} {digest}")
        (CORPUS / f"{name}_{idx:03d}.graph").write_text(text)
    (DATA / f"corpus_{name}.manifest").write_text(
        f"# generator: mt19937; group: {name}\n" + "\n".join(lines) + "\n"
    )
    print(f"wrote {len(items)} instances to corpus_{name}.manifest", flush=True)


def main():
    CORPUS.mkdir(parents=True, exist_ok=True)
    t0 = time.time()
    write_group("c5", build_c5_group())
    write_group("small", build_small_group())
    write_group("composite", build_composite_group())
    print(f"total {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
