"""Decomposition of prime class members around a 5-cycle frame.

The flow is: classify off-frame vertices by their frame adjacency,
strip the frame plus the constant-size exceptional vertices, refine
the remaining sets into the two families of three-sided members, build
each member with a bounded-label expression, then assemble everything
with one reserved label per side (30), a shared scratch pool (5), and
one fresh label per reinserted vertex (at most 10).  MAX_WIDTH = 45 is
the resulting hard budget.

Every structural fact the construction relies on is re-checked at run
time (default on); a failure raises StructureViolation naming the
clause and witness vertices.
"""

from dataclasses import dataclass

from .chains import build_chain_expr, recognize_chain
from .errors import (
    DisconnectedOrNotPrime,
    NotPrime,
    NotS122FreeWitness,
    NotTriangleFreeWitness,
    StructureViolation,
)
from .graph import Graph
from .kexpr import KExpr, Script, evaluate

MAX_WIDTH = 45  # 30 side labels + 5 scratch + at most 10 reinsertion labels

SCRATCH_LABELS = (31, 32, 33, 34, 35)
FIRST_REINSERT_LABEL = 36


def pent(i: int) -> int:
    """Wrap an index into 1..5."""
    return (i - 1) % 5 + 1


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: tuple = ()


def _complete_violation(g: Graph, left, right):
    for u in sorted(left):
        missing = set(right) - set(g.neighbors(u))
        if missing:
            return (u, min(missing))
    return None


def _empty_violation(g: Graph, left, right):
    for u in sorted(left):
        hits = set(right) & set(g.neighbors(u))
        if hits:
            return (u, min(hits))
    return None


def _join_check(name, g, left, right) -> Check:
    bad = _complete_violation(g, left, right)
    return Check(name, bad is None, bad or ())


def _cojoin_check(name, g, left, right) -> Check:
    bad = _empty_violation(g, left, right)
    return Check(name, bad is None, bad or ())


def _independent_check(name, g, inside) -> Check:
    for u in sorted(inside):
        hits = set(inside) & set(g.neighbors(u))
        if hits:
            return Check(name, False, (u, min(hits)))
    return Check(name, True)


def _chain_check(name, g, xs, ys) -> Check:
    sub = g.subgraph(set(xs) | set(ys))
    _, witness = recognize_chain(sub, xs, ys)
    return Check(name, witness is None, witness or ())


def _raise_failures(checks, exc=StructureViolation) -> None:
    for check in checks:
        if not check.ok:
            raise exc(check.name, check.witness)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class C5Classification:
    """Off-frame vertices sorted by frame adjacency.

    ones[i] holds the 1-vertices at frame position i, twos[i] the
    2-vertices adjacent to positions i and i+2, zero the 0-vertices
    (always empty for connected prime inputs).
    """

    frame: tuple
    zero: frozenset
    ones: dict
    twos: dict

    def all_sets(self):
        for i in range(1, 6):
            yield ("one", i), self.ones[i]
        for i in range(1, 6):
            yield ("two", i), self.twos[i]


def special_ones(g: Graph, c: C5Classification, i: int) -> frozenset:
    """1-vertices at i with no neighbor in either distinguishing chord."""
    flank = c.twos[pent(i + 1)] | c.twos[pent(i + 2)]
    return frozenset(x for x in c.ones[i] if not flank & g.neighbors(x))


def special_twos(g: Graph, c: C5Classification, i: int) -> frozenset:
    """2-vertices on chord i whose profile forces a homogeneous set."""
    flanks = c.twos[pent(i + 1)] | c.twos[pent(i - 1)]
    ones = c.ones[pent(i - 1)] | c.ones[pent(i + 3)]
    out = []
    for x in c.twos[i]:
        nb = g.neighbors(x)
        if flanks <= nb and not ones & nb:
            out.append(x)
    return frozenset(out)


def validate_frame(g: Graph, frame) -> None:
    if len(frame) != 5 or len(set(frame)) != 5:
        raise ValueError("frame must be five distinct vertices")
    for v in frame:
        if not g.has_vertex(v):
            raise ValueError(f"frame vertex {v!r} is not in the graph")
    for s in range(5):
        for t in range(s + 1, 5):
            adjacent = g.has_edge(frame[s], frame[t])
            consecutive = (t - s) in (1, 4)
            if adjacent != consecutive:
                raise ValueError("frame is not an induced 5-cycle")


def classify(g: Graph, frame, checked: bool = True) -> C5Classification:
    """Assign every off-frame vertex to zero / ones / twos.

    Raises NotTriangleFreeWitness for vertices whose frame adjacency
    forces a triangle, NotS122FreeWitness when a required relation
    between the sets fails, and DisconnectedOrNotPrime when 0-vertices
    exist.
    """
    validate_frame(g, frame)
    pos = {v: i + 1 for i, v in enumerate(frame)}
    zero = set()
    ones = {i: set() for i in range(1, 6)}
    twos = {i: set() for i in range(1, 6)}
    for x in g.vertices:
        if x in pos:
            continue
        hits = sorted(pos[v] for v in g.neighbors(x) if v in pos)
        if len(hits) == 0:
            zero.add(x)
        elif len(hits) == 1:
            ones[hits[0]].add(x)
        elif len(hits) == 2:
            i, j = hits
            if j - i in (1, 4):
                raise NotTriangleFreeWitness(
                    "consecutive-2-vertex",
                    (x, frame[i - 1], frame[j - 1]),
                    message=f"vertex {x} with consecutive frame neighbors",
                )
            twos[i if j - i == 2 else j].add(x)
        else:
            raise NotTriangleFreeWitness(
                "k-vertex",
                (x,) + tuple(frame[h - 1] for h in hits),
                message=f"vertex {x} has {len(hits)} frame neighbors",
            )
    c = C5Classification(
        frame=tuple(frame),
        zero=frozenset(zero),
        ones={i: frozenset(s) for i, s in ones.items()},
        twos={i: frozenset(s) for i, s in twos.items()},
    )
    if checked:
        for check in classification_checks(g, c):
            if not check.ok:
                if check.name.startswith(("indep", "lemma1.ii.cojoin", "lemma1.iv")):
                    raise NotTriangleFreeWitness(check.name, check.witness)
                raise NotS122FreeWitness(check.name, check.witness)
        if c.zero:
            raise DisconnectedOrNotPrime("zero-vertices", tuple(sorted(c.zero)))
    return c


def classification_checks(g: Graph, c: C5Classification) -> list:
    """Independence, the four basic relations, and the distinguisher
    location fact, all as named checks."""
    checks = []
    for i in range(1, 6):
        checks.append(_independent_check(f"indep.one.{i}", g, c.ones[i]))
        checks.append(_independent_check(f"indep.two.{i}", g, c.twos[i]))
    for i in range(1, 6):
        checks.append(
            _join_check(f"lemma1.i.join.{i}", g, c.ones[i], c.ones[pent(i + 1)])
        )
        checks.append(
            _cojoin_check(f"lemma1.i.cojoin.{i}", g, c.ones[i], c.ones[pent(i + 2)])
        )
        checks.append(
            _join_check(f"lemma1.ii.join.{i}", g, c.ones[i], c.twos[pent(i - 1)])
        )
        checks.append(
            _cojoin_check(
                f"lemma1.ii.cojoin.{i}",
                g,
                c.ones[i],
                c.twos[i] | c.twos[pent(i - 2)],
            )
        )
        checks.append(_cojoin_check(f"lemma1.iii.one.{i}", g, c.zero, c.ones[i]))
        checks.append(_cojoin_check(f"lemma1.iii.two.{i}", g, c.zero, c.twos[i]))
        checks.append(
            _cojoin_check(
                f"lemma1.iv.{i}",
                g,
                c.twos[i],
                c.twos[pent(i + 2)] | c.twos[pent(i - 2)],
            )
        )
    for i in range(1, 6):
        allowed = c.twos[pent(i + 1)] | c.twos[pent(i + 2)]
        group = c.ones[i]
        bad = None
        for z in g.vertices:
            if z in group or z in allowed:
                continue
            inside = len(set(g.neighbors(z)) & group)
            if 0 < inside < len(group):
                bad = (z,)
                break
        checks.append(Check(f"cor1.{i}", bad is None, bad or ()))
    return checks


def lemma2_checks(g: Graph, c: C5Classification) -> list:
    """The five chain-structure clauses plus the nesting-prefix fact."""
    checks = []
    for i in range(1, 6):
        up = c.twos[pent(i + 1)]
        down = c.twos[pent(i + 2)]
        bad = None
        for x in sorted(c.ones[i]):
            non_up = sorted(up - g.neighbors(x))
            non_down = sorted(down - g.neighbors(x))
            for y in non_up:
                z = next((z for z in non_down if not g.has_edge(y, z)), None)
                if z is not None:
                    bad = (x, y, z)
                    break
            if bad:
                break
        checks.append(Check(f"lemma2.i.{i}", bad is None, bad or ()))
        checks.append(_chain_check(f"lemma2.ii.{i}.a", g, c.ones[i], up))
        checks.append(_chain_check(f"lemma2.ii.{i}.b", g, c.ones[i], down))
        checks.append(_chain_check(f"lemma2.iii.{i}", g, c.twos[i], up))
        checks.append(_lemma2_iv_check(f"lemma2.iv.{i}.a", g, c.twos[i], up, c.twos[pent(i - 1)]))
        checks.append(_lemma2_iv_check(f"lemma2.iv.{i}.b", g, c.twos[i], c.twos[pent(i - 1)], up))
        checks.extend(
            _lemma2_v_checks(
                f"lemma2.v.{i}.a", g, c.twos[i], c.ones[pent(i + 3)], up, c.ones[pent(i - 1)]
            )
        )
        checks.extend(
            _lemma2_v_checks(
                f"lemma2.v.{i}.b",
                g,
                c.twos[i],
                c.ones[pent(i - 1)],
                c.twos[pent(i - 1)],
                c.ones[pent(i + 3)],
            )
        )
        checks.append(_prefix_check(f"prop3.{i}.a", g, c.ones[i], up, down))
        checks.append(_prefix_check(f"prop3.{i}.b", g, c.ones[i], down, up))
    return checks


def _lemma2_iv_check(name, g, chord, miss_side, force_side) -> Check:
    """A chord vertex missing a neighbor on one flank is complete to
    the other flank."""
    for x in sorted(chord):
        if miss_side - g.neighbors(x):
            bad = _complete_violation(g, [x], force_side)
            if bad:
                return Check(name, False, bad)
    return Check(name, True)


def _lemma2_v_checks(name, g, chord, trigger_ones, join_side, cojoin_ones) -> list:
    """A chord vertex with a neighbor in the trigger 1-set is complete
    to one flank and anticomplete to the opposite 1-set."""
    join_bad = None
    cojoin_bad = None
    for x in sorted(chord):
        if trigger_ones & g.neighbors(x):
            if join_bad is None:
                join_bad = _complete_violation(g, [x], join_side)
            if cojoin_bad is None:
                cojoin_bad = _empty_violation(g, [x], cojoin_ones)
    return [
        Check(f"{name}1", join_bad is None, join_bad or ()),
        Check(f"{name}2", cojoin_bad is None, cojoin_bad or ()),
    ]


def _prefix_check(name, g, outsiders, xs, ys) -> Check:
    """External neighborhoods into a chain side follow the nesting: a
    neighbor in one inclusion block forces all strictly lower blocks."""
    if not xs:
        return Check(name, True)
    sub = g.subgraph(set(xs) | set(ys))
    order, witness = recognize_chain(sub, xs, ys)
    if order is None:
        return Check(name, False, witness)
    blocks = order.blocks()
    for z in sorted(outsiders):
        nb = g.neighbors(z)
        top = -1
        for t, (members, _) in enumerate(blocks):
            if any(x in nb for x in members):
                top = t
        for t in range(top):
            for x in blocks[t][0]:
                if x not in nb:
                    return Check(name, False, (z, x))
    return Check(name, True)


# ---------------------------------------------------------------------------
# Stripping the constant set


@dataclass(frozen=True)
class RemovedVertex:
    vertex: str
    set_keys: tuple  # ("one", i) / ("two", i): whole remaining sets adjacent
    removed_neighbors: tuple


@dataclass(frozen=True)
class StrippedC5:
    ones: dict
    twos: dict
    removed: tuple

    def set_of(self, key) -> frozenset:
        kind, i = key
        return self.ones[i] if kind == "one" else self.twos[i]


def strip_constant_set(g: Graph, c: C5Classification, checked: bool = True) -> StrippedC5:
    """Remove the frame and the exceptional 1-vertices (at most 10
    vertices total) and record each removed vertex's adjacency as a
    union of whole remaining sets plus edges to other removed vertices.
    """
    specials = {}
    for i in range(1, 6):
        sp = special_ones(g, c, i)
        if len(sp) > 1:
            raise NotPrime(f"special-ones.{i}", tuple(sorted(sp)))
        specials[i] = sp
        sp2 = special_twos(g, c, i)
        if sp2:
            raise NotPrime(f"special-twos.{i}", tuple(sorted(sp2)))
    ones = {i: c.ones[i] - specials[i] for i in range(1, 6)}
    twos = dict(c.twos)
    removed_ids = set(c.frame)
    for sp in specials.values():
        removed_ids |= sp
    removed = []
    for idx, v in enumerate(c.frame):
        i = idx + 1
        keys = (("one", i), ("two", i), ("two", pent(i - 2)))
        removed.append(_removed_vertex(g, v, keys, removed_ids))
    for i in range(1, 6):
        for x in sorted(specials[i]):
            keys = (("one", pent(i - 1)), ("one", pent(i + 1)), ("two", pent(i - 1)))
            removed.append(_removed_vertex(g, x, keys, removed_ids))
    stripped = StrippedC5(ones=ones, twos=twos, removed=tuple(removed))
    for r in stripped.removed:
        profile = set(r.removed_neighbors)
        for key in r.set_keys:
            profile |= stripped.set_of(key)
        if profile != set(g.neighbors(r.vertex)):
            raise StructureViolation("strip.profile", (r.vertex,))
    if checked:
        _raise_failures(assumption_checks(g, stripped))
    return stripped


def _removed_vertex(g, v, keys, removed_ids) -> RemovedVertex:
    nbrs = tuple(sorted(set(g.neighbors(v)) & removed_ids))
    return RemovedVertex(vertex=v, set_keys=keys, removed_neighbors=nbrs)


def assumption_checks(g: Graph, s: StrippedC5) -> list:
    """Post-strip facts: every remaining 1-vertex keeps a chord
    neighbor, every 2-vertex keeps its distinguishing witness."""
    checks = []
    for i in range(1, 6):
        flank = s.twos[pent(i + 1)] | s.twos[pent(i + 2)]
        bad = next(
            ((x,) for x in sorted(s.ones[i]) if not flank & g.neighbors(x)), None
        )
        checks.append(Check(f"assumption.A.{i}", bad is None, bad or ()))
        flanks = s.twos[pent(i + 1)] | s.twos[pent(i - 1)]
        ones = s.ones[pent(i - 1)] | s.ones[pent(i + 3)]
        bad = None
        for x in sorted(s.twos[i]):
            nb = g.neighbors(x)
            if flanks <= nb and not ones & nb:
                bad = (x,)
                break
        checks.append(Check(f"assumption.B.{i}", bad is None, bad or ()))
    return checks


# ---------------------------------------------------------------------------
# Refinement into the two families


@dataclass(frozen=True)
class RefinedPartition:
    """Chord sets split into minus / plus / star, 1-vertex sets into
    left / right / both, giving ten members with thirty named sides."""

    minus: dict
    plus: dict
    star: dict
    left: dict
    right: dict
    both: dict

    def f1_side_keys(self, i):
        return (("star", i), ("left", pent(i - 1)), ("right", pent(i + 3)))

    def f2_side_keys(self, i):
        return (("both", i), ("minus", pent(i + 1)), ("plus", pent(i + 2)))

    def side(self, key) -> frozenset:
        kind, i = key
        return getattr(self, kind)[i]

    def sides_of_set(self, key):
        kind, i = key
        if kind == "one":
            return (("left", i), ("right", i), ("both", i))
        return (("minus", i), ("plus", i), ("star", i))

    def members(self):
        for i in range(1, 6):
            yield ("f1", i), self.f1_side_keys(i)
        for i in range(1, 6):
            yield ("f2", i), self.f2_side_keys(i)


def refine(g: Graph, s: StrippedC5, checked: bool = True) -> RefinedPartition:
    """Split every set by direct neighborhood tests and assert all the
    supporting clauses; failures raise StructureViolation."""
    minus, plus, star = {}, {}, {}
    for i in range(1, 6):
        up = s.twos[pent(i + 1)]
        down = s.twos[pent(i - 1)]
        m_set = frozenset(x for x in s.twos[i] if up - g.neighbors(x))
        p_set = frozenset(x for x in s.twos[i] if down - g.neighbors(x))
        minus[i] = m_set
        plus[i] = p_set
        star[i] = s.twos[i] - m_set - p_set
    left, right, both = {}, {}, {}
    for i in range(1, 6):
        up, down = pent(i + 1), pent(i + 2)
        l_set, r_set, b_set = set(), set(), set()
        for x in sorted(s.ones[i]):
            nb = g.neighbors(x)
            if (
                nb & star[up]
                and minus[up] <= nb
                and not nb & plus[up]
                and not nb & s.twos[down]
            ):
                l_set.add(x)
            if (
                nb & star[down]
                and plus[down] <= nb
                and not nb & minus[down]
                and not nb & s.twos[up]
            ):
                r_set.add(x)
            if (nb & (minus[up] | plus[down])) and not nb & (
                plus[up] | star[up] | minus[down] | star[down]
            ):
                b_set.add(x)
        left[i] = frozenset(l_set)
        right[i] = frozenset(r_set)
        both[i] = frozenset(b_set)
    refined = RefinedPartition(minus, plus, star, left, right, both)
    if checked:
        _raise_failures(refinement_checks(g, s, refined))
    return refined


def refinement_checks(g: Graph, s: StrippedC5, r: RefinedPartition) -> list:
    checks = []
    for i in range(1, 6):
        overlap = r.minus[i] & r.plus[i]
        checks.append(Check(f"claim1.{i}", not overlap, tuple(sorted(overlap))[:1]))
        checks.append(
            Check(
                f"remark1.{i}.minus",
                not r.minus[i] or bool(s.twos[pent(i + 1)]),
                tuple(sorted(r.minus[i]))[:1],
            )
        )
        checks.append(
            Check(
                f"remark1.{i}.plus",
                not r.plus[i] or bool(s.twos[pent(i - 1)]),
                tuple(sorted(r.plus[i]))[:1],
            )
        )
        down = pent(i - 1)
        up = pent(i + 1)
        checks.append(_join_check(f"rlist.{i}.1", g, r.minus[i], s.twos[down]))
        checks.append(
            _join_check(f"rlist.{i}.2", g, r.plus[i], r.plus[down] | r.star[down])
        )
        checks.append(_chain_check(f"rlist.{i}.3", g, r.plus[i], r.minus[down]))
        checks.append(_join_check(f"rlist.{i}.4", g, r.star[i], s.twos[down]))
        checks.append(
            _join_check(f"rlist.{i}.5", g, r.minus[i], r.minus[up] | r.star[up])
        )
        checks.append(_chain_check(f"rlist.{i}.6", g, r.minus[i], r.plus[up]))
        checks.append(_join_check(f"rlist.{i}.7", g, r.plus[i], s.twos[up]))
        checks.append(_join_check(f"rlist.{i}.8", g, r.star[i], s.twos[up]))
    for i in range(1, 6):
        up, down = pent(i + 1), pent(i + 2)
        checks.append(
            _cojoin_check(f"claim2.{i}", g, s.ones[i], r.plus[up] | r.minus[down])
        )
        bad = None
        for x in sorted(s.ones[i]):
            nb = g.neighbors(x)
            if nb & r.star[up] and nb & r.star[down]:
                bad = (x,)
                break
        checks.append(Check(f"claim3.{i}", bad is None, bad or ()))
        checks.extend(
            _claim4_checks(f"claim4.{i}.a", g, s.ones[i], r.star[up], r.minus[up], s.twos[down])
        )
        checks.extend(
            _claim4_checks(f"claim4.{i}.b", g, s.ones[i], r.star[down], r.plus[down], s.twos[up])
        )
        union = r.left[i] | r.right[i] | r.both[i]
        disjoint = (
            not (r.left[i] & r.right[i])
            and not (r.left[i] & r.both[i])
            and not (r.right[i] & r.both[i])
        )
        missing = tuple(sorted(s.ones[i] ^ union))[:1]
        checks.append(
            Check(f"partition.ones.{i}", disjoint and union == s.ones[i], missing)
        )
        union2 = r.minus[i] | r.plus[i] | r.star[i]
        checks.append(
            Check(
                f"partition.twos.{i}",
                union2 == s.twos[i] and not (r.minus[i] & r.plus[i]),
                tuple(sorted(s.twos[i] ^ union2))[:1],
            )
        )
    for i in range(1, 6):
        bad = None
        for x in sorted(r.star[i]):
            nb = g.neighbors(x)
            if nb & r.left[pent(i - 1)] and nb & r.right[pent(i + 3)]:
                bad = (x,)
                break
        checks.append(Check(f"claim5.{i}", bad is None, bad or ()))
    return checks


def _claim4_checks(name, g, ones, trigger_star, join_side, cojoin_side) -> list:
    join_bad = None
    cojoin_bad = None
    for x in sorted(ones):
        if trigger_star & g.neighbors(x):
            if join_bad is None:
                join_bad = _complete_violation(g, [x], join_side)
            if cojoin_bad is None:
                cojoin_bad = _empty_violation(g, [x], cojoin_side)
    return [
        Check(f"{name}1", join_bad is None, join_bad or ()),
        Check(f"{name}2", cojoin_bad is None, cojoin_bad or ()),
    ]


# ---------------------------------------------------------------------------
# Family 1 members


def build_f1(
    g: Graph,
    sides,
    side_labels,
    scratch=SCRATCH_LABELS,
    checked: bool = True,
) -> KExpr | None:
    """Member expression for (star, left, right) sides.

    The star side splits into the part touching the right side and the
    part touching the left side (untouched vertices go with the first);
    each part forms a chain graph with its partner, and the two partner
    sides are completely joined afterwards.
    """
    star, left, right = (frozenset(s) for s in sides)
    label_star, label_left, label_right = side_labels
    if not (star or left or right):
        return None
    touches_right = frozenset(x for x in star if g.neighbors(x) & right)
    touches_left = frozenset(x for x in star if g.neighbors(x) & left)
    overlap = touches_right & touches_left
    if overlap:
        raise StructureViolation("claim5.member", tuple(sorted(overlap))[:1])
    w_part = star - touches_left
    z_part = touches_left
    script = Script()
    script.add(
        _chain_or_violation(
            g, w_part, right, (label_star, label_right, scratch[0]), "f1.chain.right"
        )
    )
    script.add(
        _chain_or_violation(
            g, z_part, left, (label_star, label_left, scratch[0]), "f1.chain.left"
        )
    )
    script.join(label_right, label_left)
    expr = script.result()
    if checked and expr is not None:
        _verify_member(g, star | left | right, expr, "f1")
    return expr


def _chain_or_violation(g, xs, ys, labels, clause) -> KExpr | None:
    if not xs and not ys:
        return None
    sub = g.subgraph(set(xs) | set(ys))
    order, witness = recognize_chain(sub, xs, ys)
    if order is None:
        raise StructureViolation(clause, witness)
    return build_chain_expr(order, labels)


def _verify_member(g, vertices, expr, tag) -> None:
    result = evaluate(expr).graph
    want = g.subgraph(vertices)
    if result != want:
        raise StructureViolation(f"{tag}.eval", tuple(sorted(vertices))[:2])


# ---------------------------------------------------------------------------
# Family 2 members


@dataclass(frozen=True)
class F2Structure:
    """Analyzed member with sides a and b (the two chord parts) and z
    (the middle 1-vertices).

    kind is one of empty / chain / split / blocks.  For blocks,
    a_blocks[0] is the contact-free part (possibly empty) and
    a_blocks[1..p] the neighborhood-equivalence blocks in increasing
    order; z_minus[i] / z_plus[i] split the z vertices whose highest
    contacted a-block is i.
    """

    a_side: frozenset
    b_side: frozenset
    z_side: frozenset
    kind: str
    z_a: frozenset = frozenset()
    z_b: frozenset = frozenset()
    a_blocks: tuple = ()
    b_blocks: tuple = ()
    z_star: frozenset = frozenset()
    z_minus: tuple = ()
    z_plus: tuple = ()

    @property
    def p(self) -> int:
        return len(self.a_blocks) - 1


def analyze_f2(g: Graph, sides, checked: bool = True) -> F2Structure:
    """Compute the dual block partitions and the z split, asserting the
    eight numbered facts and the four relation groups.

    The block partitions must exist with equal counts; when they do
    not, or when a required chain subgraph fails to be a chain, the
    structure cannot be built and StructureViolation is raised even in
    unchecked mode.
    """
    z_side, a_side, b_side = (frozenset(s) for s in sides)
    if not (a_side or b_side or z_side):
        return F2Structure(a_side, b_side, z_side, "empty")
    if not a_side or not b_side or not z_side:
        return F2Structure(a_side, b_side, z_side, "chain")
    a0 = frozenset(x for x in a_side if not g.neighbors(x) & b_side)
    b0 = frozenset(x for x in b_side if not g.neighbors(x) & a_side)
    if a0 == a_side:
        z_a = frozenset(z for z in z_side if a_side <= g.neighbors(z))
        z_b = z_side - z_a
        s = F2Structure(a_side, b_side, z_side, "split", z_a=z_a, z_b=z_b)
        if checked:
            _raise_failures(f2_checks(g, s))
        return s
    chain_ab = _chain_check("f2.chain.ab", g, a_side, b_side)
    if not chain_ab.ok:
        raise StructureViolation(chain_ab.name, chain_ab.witness)
    a_blocks = [a0] + _neighborhood_blocks(g, a_side - a0, b_side)
    b_blocks = [b0] + _neighborhood_blocks(g, b_side - b0, a_side)
    if len(a_blocks) != len(b_blocks):
        raise StructureViolation("f2.duality", (len(a_blocks) - 1, len(b_blocks) - 1))
    p = len(a_blocks) - 1
    z_star = set()
    z_groups: dict = {i: set() for i in range(p + 1)}
    for z in sorted(z_side):
        nb = g.neighbors(z)
        top = -1
        for i in range(p + 1):
            if nb & a_blocks[i]:
                top = i
        if top < 0:
            z_star.add(z)
        else:
            z_groups[top].add(z)
    z_minus, z_plus = [], []
    for i in range(p + 1):
        zm = frozenset(z for z in z_groups[i] if a_blocks[i] - g.neighbors(z))
        z_minus.append(zm)
        z_plus.append(frozenset(z_groups[i]) - zm)
    s = F2Structure(
        a_side,
        b_side,
        z_side,
        "blocks",
        a_blocks=tuple(a_blocks),
        b_blocks=tuple(b_blocks),
        z_star=frozenset(z_star),
        z_minus=tuple(z_minus),
        z_plus=tuple(z_plus),
    )
    if checked:
        _raise_failures(f2_checks(g, s))
    return s


def _neighborhood_blocks(g, vertices, into):
    """Equivalence blocks by neighborhood inside `into`, ascending."""
    groups: dict = {}
    for x in sorted(vertices):
        groups.setdefault(frozenset(g.neighbors(x) & into), []).append(x)
    ordered = sorted(groups.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    return [frozenset(members) for _, members in ordered]


def f2_checks(g: Graph, s: F2Structure) -> list:
    checks = []
    if s.kind == "chain":
        if not s.z_side:
            checks.append(_chain_check("f2.degenerate.ab", g, s.a_side, s.b_side))
        elif not s.a_side:
            checks.append(_chain_check("f2.degenerate.zb", g, s.z_side, s.b_side))
        else:
            checks.append(_chain_check("f2.degenerate.za", g, s.z_side, s.a_side))
        return checks
    if s.kind == "split":
        bad = None
        for z in sorted(s.z_b):
            missing = s.b_side - g.neighbors(z)
            if missing:
                bad = (z, min(missing))
                break
        checks.append(Check("f2.dichotomy", bad is None, bad or ()))
        checks.append(_chain_check("f2.split.chain.za", g, s.z_a, s.b_side))
        checks.append(_chain_check("f2.split.chain.zb", g, s.z_b, s.a_side))
        return checks
    if s.kind != "blocks":
        return checks
    p = s.p
    a, b = s.a_blocks, s.b_blocks
    checks.append(_cojoin_check("eq1.a", g, a[0], s.b_side))
    checks.append(_cojoin_check("eq1.b", g, b[0], s.a_side))
    for i in range(1, p + 1):
        h = p + 1 - i
        checks.append(_cojoin_check(f"eq2.{i}.cojoin", g, a[i], frozenset().union(*b[:h])))
        checks.append(_join_check(f"eq2.{i}.join", g, a[i], frozenset().union(*b[h:])))
        checks.append(_cojoin_check(f"eq3.{i}.cojoin", g, b[i], frozenset().union(*a[:h])))
        checks.append(_join_check(f"eq3.{i}.join", g, b[i], frozenset().union(*a[h:])))
    for i in range(p + 1):
        h = p + 1 - i
        zi = s.z_minus[i] | s.z_plus[i]
        if i >= 1:
            checks.append(_join_check(f"eq4.{i}", g, zi, frozenset().union(*a[:i])))
            checks.append(_cojoin_check(f"eq5.{i}", g, zi, frozenset().union(*b[h:])))
        checks.append(_join_check(f"eq6.{i}", g, zi, frozenset().union(*b[: h - 1])))
        checks.append(_join_check(f"eq7.{i}", g, s.z_minus[i], b[h - 1]))
        checks.append(_join_check(f"eq8.{i}", g, s.z_plus[i], a[i]))
        checks.append(
            _cojoin_check(f"zdef.{i}", g, zi, frozenset().union(*a[i + 1 :]))
        )
        checks.append(_chain_check(f"r.chain.minus.{i}", g, s.z_minus[i], a[i]))
        checks.append(_chain_check(f"r.chain.plus.{i}", g, s.z_plus[i], b[h - 1]))
    if s.z_star:
        if not a[0]:
            checks.append(_chain_check("prop6.chain", g, s.z_star, b[p]))
            checks.append(_join_check("prop6.join", g, s.z_star, frozenset().union(*b[:p])))
        else:
            checks.append(_join_check("prop7.join", g, s.z_star, s.b_side))
    checks.append(_cojoin_check("zstar.cojoin.a", g, s.z_star, s.a_side))
    return checks


def build_f2(
    g: Graph,
    s: F2Structure,
    side_labels,
    scratch=SCRATCH_LABELS,
    checked: bool = True,
) -> KExpr | None:
    """Member expression driven by the staged labeling procedure.

    The three side labels play the accumulated roles for the z, a, b
    sides; the scratch pool supplies the three pale stage labels, one
    extra staging label, and the reserve label for the contact-free z
    part.
    """
    label_z, label_a, label_b = side_labels
    pale_a, pale_z, pale_b, stage, reserve = scratch
    if s.kind == "empty":
        return None
    script = Script()
    if s.kind == "chain":
        if not s.z_side:
            script.add(
                _chain_or_violation(
                    g, s.a_side, s.b_side, (label_a, label_b, pale_z), "f2.degenerate.ab"
                )
            )
        elif not s.a_side:
            script.add(
                _chain_or_violation(
                    g, s.z_side, s.b_side, (label_z, label_b, pale_z), "f2.degenerate.zb"
                )
            )
        else:
            script.add(
                _chain_or_violation(
                    g, s.z_side, s.a_side, (label_z, label_a, pale_z), "f2.degenerate.za"
                )
            )
        expr = script.result()
        if checked and expr is not None:
            _verify_member(g, s.a_side | s.b_side | s.z_side, expr, "f2")
        return expr
    if s.kind == "split":
        script.add(
            _chain_or_violation(
                g, s.z_a, s.b_side, (pale_a, label_b, pale_z), "f2.split.chain.za"
            )
        )
        script.add(
            _chain_or_violation(
                g, s.z_b, s.a_side, (pale_z, label_a, pale_b), "f2.split.chain.zb"
            )
        )
        script.join(pale_a, label_a)
        script.join(pale_z, label_b)
        script.relabel(pale_a, label_z)
        script.relabel(pale_z, label_z)
        expr = script.result()
        if checked and expr is not None:
            _verify_member(g, s.a_side | s.b_side | s.z_side, expr, "f2")
        return expr
    # blocks
    p = s.p
    a, b = s.a_blocks, s.b_blocks
    contactfree_chain = bool(s.z_star) and not a[0]
    if contactfree_chain:
        # the contact-free z part forms a chain with the top b block and
        # joins every lower b block as it appears
        script.add(
            _chain_or_violation(
                g, s.z_star, b[p], (reserve, label_b, pale_z), "prop6.chain"
            )
        )
    else:
        script.add(
            _chain_or_violation(
                g, s.z_minus[0], a[0], (pale_z, label_a, pale_b), "r.chain.minus.0"
            )
        )
        script.add(
            _chain_or_violation(
                g, s.z_plus[0], b[p], (stage, label_b, pale_z), "r.chain.plus.0"
            )
        )
        script.join(pale_z, label_b)
        script.relabel(pale_z, label_z)
        script.relabel(stage, pale_z)
        script.join(pale_z, label_a)
        script.relabel(pale_z, label_z)
    for k in range(1, p + 1):
        h = p + 1 - k
        script.add(
            _chain_or_violation(
                g, s.z_minus[k], a[k], (pale_z, pale_a, pale_b), f"r.chain.minus.{k}"
            )
        )
        script.join(pale_a, label_b)
        script.add(
            _chain_or_violation(
                g, s.z_plus[k], b[h - 1], (stage, pale_b, pale_z), f"r.chain.plus.{k}"
            )
        )
        script.join(pale_b, label_z)
        if contactfree_chain:
            script.join(pale_b, reserve)
        script.join(pale_z, pale_b)
        script.join(pale_z, label_a)
        script.relabel(pale_z, label_z)
        script.relabel(stage, pale_z)
        script.join(pale_z, pale_a)
        script.join(pale_z, label_a)
        script.relabel(pale_z, label_z)
        script.relabel(pale_a, label_a)
        script.relabel(pale_b, label_b)
    if s.z_star:
        if contactfree_chain:
            script.relabel(reserve, label_z)
        else:
            script.create_all(reserve, s.z_star)
            script.join(reserve, label_b)
            script.relabel(reserve, label_z)
    expr = script.result()
    if checked and expr is not None:
        _verify_member(g, s.a_side | s.b_side | s.z_side, expr, "f2")
    return expr


# ---------------------------------------------------------------------------
# Assembly


def side_label_table(refined: RefinedPartition) -> dict:
    """Reserved label (1..30) and owning member for every side key."""
    table = {}
    label = 1
    for member, keys in refined.members():
        for key in keys:
            table[key] = (label, member)
            label += 1
    return table


def assemble(
    g: Graph,
    refined: RefinedPartition,
    stripped: StrippedC5,
    checked: bool = True,
) -> KExpr:
    """Union the ten member expressions, join sides pairwise according
    to a single probe edge (validated against the full join when
    checked), then reinsert the removed vertices one fresh label each.
    """
    table = side_label_table(refined)
    script = Script()
    for (family, i), keys in refined.members():
        labels = tuple(table[k][0] for k in keys)
        sides = tuple(refined.side(k) for k in keys)
        if family == "f1":
            script.add(build_f1(g, sides, labels, SCRATCH_LABELS, checked))
        else:
            structure = analyze_f2(g, sides, checked)
            script.add(build_f2(g, structure, labels, SCRATCH_LABELS, checked))
    populated = [
        (label, member, refined.side(key))
        for key, (label, member) in sorted(table.items(), key=lambda kv: kv[1][0])
        if refined.side(key)
    ]
    for idx, (la, ma, sa) in enumerate(populated):
        for lb, mb, sb in populated[idx + 1 :]:
            if ma == mb:
                continue
            probe = g.has_edge(min(sa), min(sb))
            if checked:
                bad = (
                    _complete_violation(g, sa, sb)
                    if probe
                    else _empty_violation(g, sa, sb)
                )
                if bad:
                    raise StructureViolation("property-star", bad)
            if probe:
                script.join(la, lb)
    for offset, removed in enumerate(stripped.removed):
        label = FIRST_REINSERT_LABEL + offset
        script.create(label, removed.vertex)
        for key in removed.set_keys:
            for side_key in refined.sides_of_set(key):
                if refined.side(side_key):
                    script.join(label, table[side_key][0])
        for earlier_offset, earlier in enumerate(stripped.removed[:offset]):
            if earlier.vertex in removed.removed_neighbors:
                script.join(label, FIRST_REINSERT_LABEL + earlier_offset)
    expr = script.result()
    assert expr is not None
    return expr


# ---------------------------------------------------------------------------
# Frame choice and the full prime-case path


def find_c5_frame(g: Graph):
    """Lexicographically smallest induced 5-cycle, as a tuple, or None."""
    for a in g.vertices:
        for b in sorted(g.neighbors(a)):
            if b < a:
                continue
            for c in sorted(g.neighbors(b)):
                if c <= a or c == b or g.has_edge(c, a):
                    continue
                for d in sorted(g.neighbors(c)):
                    if d <= a or d == b or g.has_edge(d, a) or g.has_edge(d, b):
                        continue
                    for e in sorted(g.neighbors(d)):
                        if e <= b or e == c:
                            continue
                        if g.has_edge(e, b) or g.has_edge(e, c):
                            continue
                        if g.has_edge(e, a):
                            return (a, b, c, d, e)
    return None


def decompose_around_c5(g: Graph, checked: bool = True) -> KExpr:
    """classify, strip, refine, and assemble a prime class member
    containing an induced 5-cycle."""
    frame = find_c5_frame(g)
    if frame is None:
        raise ValueError("graph has no induced 5-cycle")
    c = classify(g, frame, checked)
    if checked:
        _raise_failures(lemma2_checks(g, c), NotS122FreeWitness)
    stripped = strip_constant_set(g, c, checked)
    refined = refine(g, stripped, checked)
    return assemble(g, refined, stripped, checked)


def full_check_suite(g: Graph, frame=None) -> list:
    """Every named check for one graph: classification, chain clauses,
    refinement claims, and the block structure facts of each member."""
    if frame is None:
        frame = find_c5_frame(g)
        if frame is None:
            raise ValueError("graph has no induced 5-cycle")
    c = classify(g, frame, checked=False)
    checks = list(classification_checks(g, c))
    checks.extend(lemma2_checks(g, c))
    if c.zero:
        return checks
    try:
        stripped = strip_constant_set(g, c, checked=False)
    except (NotPrime, StructureViolation) as exc:
        checks.append(Check(f"strip.{exc.clause}", False, exc.witness))
        return checks
    checks.extend(assumption_checks(g, stripped))
    refined = refine(g, stripped, checked=False)
    checks.extend(refinement_checks(g, stripped, refined))
    for i in range(1, 6):
        sides = tuple(refined.side(k) for k in refined.f2_side_keys(i))
        try:
            structure = analyze_f2(g, sides, checked=False)
        except StructureViolation as exc:
            checks.append(Check(f"f2[{i}].{exc.clause}", False, exc.witness))
            continue
        for check in f2_checks(g, structure):
            checks.append(Check(f"f2[{i}].{check.name}", check.ok, check.witness))
    return checks


def diagnostic_report(g: Graph, frame=None) -> str:
    """Stable text dump: sets, sides, and one REL line per check."""
    if frame is None:
        frame = find_c5_frame(g)
        if frame is None:
            raise ValueError("graph has no induced 5-cycle")
    c = classify(g, frame, checked=False)
    lines = ["FRAME " + " ".join(frame)]
    for (kind, i), members in c.all_sets():
        lines.append(f"SET {kind}.{i} " + " ".join(sorted(members)))
    try:
        stripped = strip_constant_set(g, c, checked=False)
        refined = refine(g, stripped, checked=False)
    except (NotPrime, StructureViolation):
        refined = None
    if refined is not None:
        for (family, i), keys in refined.members():
            for kind, j in keys:
                side = refined.side((kind, j))
                lines.append(f"SIDE {family}.{i}.{kind}.{j} " + " ".join(sorted(side)))
    for check in full_check_suite(g, frame):
        status = "PASS" if check.ok else "FAIL"
        suffix = (" " + " ".join(str(w) for w in check.witness)) if not check.ok else ""
        lines.append(f"REL {check.name} {status}{suffix}")
    return "\n".join(lines) + "\n"
