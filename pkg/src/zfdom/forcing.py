"""Zero forcing closure, exact Z(G), and the sequence-based Grundy numbers.

The color-change rule turns a blue vertex's unique non-blue neighbor blue.
Z-sequences are the dual object: vertex orders in which every entry still
sees a vertex outside the union of the previous closed neighborhoods.  The
two exact solvers here are deliberately independent searches so the duality
Z(G) + zgrundy(G) = n(G) can be verified rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, VertexSet, require_isolate_free


@dataclass(frozen=True)
class PropagationTrace:
    """One run of the color-change rule to its fixed point."""

    initial: VertexSet
    steps: tuple[tuple[int, int], ...]  # (forcing vertex, forced vertex)
    final: VertexSet

    def to_json(self) -> dict:
        return {
            "initial": sorted(self.initial),
            "steps": [list(step) for step in self.steps],
            "final": sorted(self.final),
        }


def _closure_mask(g: Graph, mask: int) -> int:
    """Fixed point of the color-change rule, masks only."""
    adj = g.adj
    full = g.full_mask
    changed = True
    while changed and mask != full:
        changed = False
        todo = mask
        while todo:
            v = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            white = adj[v] & ~mask
            if white and not white & (white - 1):
                mask |= white
                changed = True
    return mask


def forcing_closure(g: Graph, blue: VertexSet, reverse_ties: bool = False) -> PropagationTrace:
    """Apply the color-change rule until no force is possible.

    The final set does not depend on the order of rule applications; the
    recorded trace applies, at each step, the lowest-index eligible forcing
    vertex (highest-index under ``reverse_ties``, used to test confluence).
    """
    if blue.n != g.n:
        raise ValueError("blue set belongs to a graph of different order")
    mask = blue.mask
    steps = []
    scan = range(g.n - 1, -1, -1) if reverse_ties else range(g.n)
    while True:
        move = None
        for v in scan:
            if mask >> v & 1:
                white = g.adj[v] & ~mask
                if white and not white & (white - 1):
                    move = (v, white.bit_length() - 1)
                    break
        if move is None:
            break
        steps.append(move)
        mask |= 1 << move[1]
    return PropagationTrace(blue, tuple(steps), VertexSet(mask, g.n))


def is_zero_forcing_set(g: Graph, s: VertexSet) -> bool:
    if s.n != g.n:
        raise ValueError("set belongs to a graph of different order")
    return _closure_mask(g, s.mask) == g.full_mask


def zero_forcing_number(g: Graph) -> tuple[int, VertexSet]:
    """Exact Z(G) with the lexicographically least minimum forcing set.

    Ascending-size subset search starting at the minimum-degree lower
    bound; the whole vertex set always forces, so the search terminates.
    """
    n = g.n
    full = g.full_mask
    for k in range(g.min_degree(), n + 1):
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _closure_mask(g, mask) == full:
                return k, VertexSet(mask, n)
    raise AssertionError("unreachable: the full vertex set always forces")


@dataclass(frozen=True)
class SequenceCheck:
    """Outcome of a Z-sequence validity check with per-step footprints."""

    valid: bool
    footprints: tuple[VertexSet, ...]  # up to and excluding the failing step
    failed_index: int | None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class ZSequence:
    """A valid Z-sequence together with the vertices each step footprints."""

    graph: Graph
    vertices: tuple[int, ...]
    footprints: tuple[VertexSet, ...]

    @classmethod
    def build(cls, g: Graph, vertices) -> ZSequence:
        check = is_z_sequence(g, vertices)
        if not check.valid:
            raise ValueError(f"not a Z-sequence: step {check.failed_index} has no new open neighbor")
        return cls(g, tuple(vertices), check.footprints)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "footprints": [sorted(fp) for fp in self.footprints],
        }


def is_z_sequence(g: Graph, vertices) -> SequenceCheck:
    """Check the Z-sequence condition at every step and report footprints.

    Every entry, including the first, must have a neighbor outside the union
    of the previous closed neighborhoods; a one-vertex sequence is therefore
    valid exactly when its vertex has a neighbor, and the empty sequence is
    valid.  Duplicate or out-of-range entries raise.
    """
    seen = set()
    for v in vertices:
        g._check_vertex(v)
        if v in seen:
            raise ValueError(f"duplicate vertex {v} in sequence")
        seen.add(v)
    covered = 0
    footprints = []
    for i, v in enumerate(vertices):
        if not g.adj[v] & ~covered:
            return SequenceCheck(False, tuple(footprints), i)
        footprints.append(VertexSet(g.cadj[v] & ~covered, g.n))
        covered |= g.cadj[v]
    return SequenceCheck(True, tuple(footprints), None)


def z_grundy_number(g: Graph) -> tuple[int, ZSequence]:
    """Exact Z-Grundy domination number with a witness sequence.

    Depth-first search over sequences keyed by the covered-closed-
    neighborhood mask; a vertex is appendable exactly when its open
    neighborhood leaves the covered mask, which also rules out reuse.  The
    witness is the lexicographically least optimum sequence.  Edgeless
    graphs (and isolated vertices generally) contribute nothing.
    """
    n = g.n
    adj = g.adj
    cadj = g.cadj
    memo: dict[int, int] = {}

    def best(covered: int) -> int:
        cached = memo.get(covered)
        if cached is not None:
            return cached
        value = 0
        for v in range(n):
            if adj[v] & ~covered:
                sub = 1 + best(covered | cadj[v])
                if sub > value:
                    value = sub
        memo[covered] = value
        return value

    total = best(0)
    sequence = []
    covered = 0
    remaining = total
    while remaining:
        for v in range(n):
            if adj[v] & ~covered and 1 + best(covered | cadj[v]) == remaining:
                sequence.append(v)
                covered |= cadj[v]
                remaining -= 1
                break
    return total, ZSequence.build(g, sequence)


def grundy_total_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact Grundy total domination number (open-neighborhood variant).

    Same search with open neighborhoods on both sides of the condition.
    Requires an isolate-free graph; an isolated vertex could never be
    totally dominated by any sequence.
    """
    require_isolate_free(g)
    n = g.n
    adj = g.adj
    memo: dict[int, int] = {}

    def best(covered: int) -> int:
        cached = memo.get(covered)
        if cached is not None:
            return cached
        value = 0
        for v in range(n):
            if adj[v] & ~covered:
                sub = 1 + best(covered | adj[v])
                if sub > value:
                    value = sub
        memo[covered] = value
        return value

    total = best(0)
    sequence = []
    covered = 0
    remaining = total
    while remaining:
        for v in range(n):
            if adj[v] & ~covered and 1 + best(covered | adj[v]) == remaining:
                sequence.append(v)
                covered |= adj[v]
                remaining -= 1
                break
    return total, tuple(sequence)


def complement_duality_check(g: Graph, vertices) -> bool:
    """Whether [the vertices admit a Z-sequence order] iff [complement forces].

    The correspondence between Z-sequences and zero forcing sets is a
    statement about the underlying vertex set: a particular order may fail
    while a reordering succeeds.  The left side is decided by searching
    orders directly, independent of the closure computation on the right,
    so a True return genuinely cross-checks the theorem.  Must return True
    on every input.
    """
    seen = set()
    mask = 0
    for v in vertices:
        g._check_vertex(v)
        if v in seen:
            raise ValueError(f"duplicate vertex {v} in sequence")
        seen.add(v)
        mask |= 1 << v
    left = _orderable_as_z_sequence(g, mask)
    complement = VertexSet(g.full_mask & ~mask, g.n)
    return left == is_zero_forcing_set(g, complement)


def _orderable_as_z_sequence(g: Graph, mask: int) -> bool:
    adj = g.adj
    cadj = g.cadj

    def extend(remaining: int, covered: int) -> bool:
        if not remaining:
            return True
        todo = remaining
        while todo:
            v = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            if adj[v] & ~covered and extend(remaining & ~(1 << v), covered | cadj[v]):
                return True
        return False

    return extend(mask, 0)
