"""Total dominating sets: exact minimum and upper (max minimal) numbers.

A TD-set gives every vertex a neighbor inside it.  Minimality is certified
through private neighborhoods: D is a minimal TD-set exactly when each of
its vertices keeps a private neighbor (internal or external).  Enumeration
streams are ordered by ascending mask value so downstream constructions are
reproducible.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from .graphs import Graph, VertexSet, bits, require_isolate_free


class NotTotalDominatingError(ValueError):
    """The given set fails to totally dominate the graph."""


def _dominated_mask(g: Graph, dmask: int) -> int:
    out = 0
    for v in bits(dmask):
        out |= g.cadj[v]
    return out


def _totally_dominated_mask(g: Graph, dmask: int) -> int:
    out = 0
    for v in bits(dmask):
        out |= g.adj[v]
    return out


def is_dominating_set(g: Graph, d: VertexSet) -> bool:
    """Every vertex is in a closed neighborhood of ``d``."""
    if d.n != g.n:
        raise ValueError("set belongs to a graph of different order")
    return _dominated_mask(g, d.mask) == g.full_mask


def is_total_dominating_set(g: Graph, d: VertexSet) -> bool:
    """Every vertex has a neighbor in ``d`` (open neighborhoods)."""
    if d.n != g.n:
        raise ValueError("set belongs to a graph of different order")
    return _totally_dominated_mask(g, d.mask) == g.full_mask


def private_neighborhoods(g: Graph, d: VertexSet, v: int) -> tuple[VertexSet, VertexSet, VertexSet]:
    """(pn, epn, ipn) of ``v`` with respect to ``d``.

    pn(v, D) collects the vertices whose only D-neighbor is v; epn and ipn
    split it outside/inside D.
    """
    if v not in d:
        raise ValueError(f"vertex {v} is not in the set")
    bit = 1 << v
    pn = 0
    for w in range(g.n):
        if g.adj[w] & d.mask == bit:
            pn |= 1 << w
    n = g.n
    return (
        VertexSet(pn, n),
        VertexSet(pn & ~d.mask, n),
        VertexSet(pn & d.mask, n),
    )


@dataclass(frozen=True)
class TDCertificate:
    """A minimal TD-set with each member's private-neighbor witnesses."""

    dset: VertexSet
    witnesses: dict[int, tuple[VertexSet, VertexSet]]  # v -> (epn, ipn)

    def to_json(self) -> dict:
        return {
            "set": sorted(self.dset),
            "witnesses": {
                str(v): {"epn": sorted(epn), "ipn": sorted(ipn)}
                for v, (epn, ipn) in self.witnesses.items()
            },
        }


def is_minimal_td_set(g: Graph, d: VertexSet) -> TDCertificate | None:
    """Certificate when ``d`` is a minimal TD-set, None when merely a TD-set.

    Raises NotTotalDominatingError when ``d`` does not totally dominate, so
    callers can tell "not minimal" apart from "not even dominating".
    """
    if not is_total_dominating_set(g, d):
        raise NotTotalDominatingError(f"{sorted(d)} is not a total dominating set")
    witnesses = {}
    for v in d:
        pn, epn, ipn = private_neighborhoods(g, d, v)
        if not pn:
            return None
        witnesses[v] = (epn, ipn)
    return TDCertificate(d, witnesses)


def total_domination_number(g: Graph) -> tuple[int, VertexSet]:
    """Exact minimum TD-set size with the lexicographically least witness."""
    require_isolate_free(g)
    n = g.n
    if n == 0:
        return 0, VertexSet.empty(0)
    # any nonempty TD-set has >= 2 vertices: members need neighbors inside
    for k in range(2, n + 1):
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _totally_dominated_mask(g, mask) == g.full_mask:
                return k, VertexSet(mask, n)
    raise AssertionError("isolate-free graph must have a total dominating set")


def upper_total_domination_number(g: Graph) -> tuple[int, VertexSet]:
    """Exact maximum size of a minimal TD-set, with the first witness in mask order."""
    require_isolate_free(g)
    if g.n == 0:
        return 0, VertexSet.empty(0)
    best = None
    for d in enumerate_minimal_td_sets(g):
        if best is None or len(d) > len(best):
            best = d
    assert best is not None
    return len(best), best


def enumerate_gamma_t_sets(g: Graph) -> Iterator[VertexSet]:
    """All minimum total dominating sets, ascending by mask value."""
    k, _ = total_domination_number(g)
    n = g.n
    full = g.full_mask
    for mask in range(1 << n):
        if mask.bit_count() == k and _totally_dominated_mask(g, mask) == full:
            yield VertexSet(mask, n)


def enumerate_minimal_td_sets(g: Graph) -> Iterator[VertexSet]:
    """All minimal total dominating sets, ascending by mask value."""
    require_isolate_free(g)
    n = g.n
    full = g.full_mask
    for mask in range(1 << n):
        if _totally_dominated_mask(g, mask) != full:
            continue
        d = VertexSet(mask, n)
        if _every_member_has_private_neighbor(g, d):
            yield d


def _every_member_has_private_neighbor(g: Graph, d: VertexSet) -> bool:
    for v in d:
        bit = 1 << v
        if not any(g.adj[w] & d.mask == bit for w in range(g.n)):
            return False
    return True
