"""Z-sequences built from total dominating sets, and extremal-graph checks.

Two constructions are implemented as executable proofs.  From a carefully
chosen minimum TD-set one can order all of its vertices into a Z-sequence
(so the Z-Grundy number is at least the total domination number); from any
minimal TD-set one can order at least half of it (so the upper total
domination number is at most twice the Z-Grundy number).  Both results are
re-validated on every call, and the module also evaluates the property list
that graphs attaining the factor-2 bound must satisfy.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .domination import (
    NotTotalDominatingError,
    enumerate_gamma_t_sets,
    is_minimal_td_set,
    is_total_dominating_set,
    total_domination_number,
    upper_total_domination_number,
)
from .forcing import ZSequence, z_grundy_number
from .graphs import (
    Graph,
    VertexSet,
    bits,
    has_clique_component,
    induced_subgraph,
    is_clique,
    is_connected,
    require_isolate_free,
)


class CliqueComponentError(ValueError):
    """A construction that forbids clique components met one."""


@dataclass(frozen=True)
class K2ComponentAnalysis:
    """K2-components of G[D] and the regions they exclusively dominate.

    ``regions[i]`` holds the vertices totally dominated by ``pairs[i]`` and
    by nothing else in D; it always contains the pair itself.  A pair is
    flagged symmetric when both endpoints see the same region vertices
    (other than each other).
    """

    dset: VertexSet
    pairs: tuple[tuple[int, int], ...]
    regions: tuple[VertexSet, ...]
    symmetric: tuple[bool, ...]
    big_components: tuple[VertexSet, ...]  # components of G[D] on >= 3 vertices

    def symmetric_count(self) -> int:
        return sum(self.symmetric)


def _induced_components(g: Graph, dmask: int) -> list[int]:
    """Component masks of the subgraph induced by ``dmask``, by min vertex."""
    out = []
    remaining = dmask
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= g.adj[v] & dmask
            frontier = grown & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def analyze_k2_components(g: Graph, d: VertexSet) -> K2ComponentAnalysis:
    """Split G[d] into K2-components (with exclusive regions) and the rest."""
    if not is_total_dominating_set(g, d):
        raise NotTotalDominatingError(f"{sorted(d)} is not a total dominating set")
    pairs = []
    bigs = []
    for comp in _induced_components(g, d.mask):
        if comp.bit_count() == 2:
            x = (comp & -comp).bit_length() - 1
            y = (comp & comp - 1).bit_length() - 1
            pairs.append((x, y))
        else:
            bigs.append(VertexSet(comp, g.n))
    regions = []
    symmetric = []
    for x, y in pairs:
        pair_mask = 1 << x | 1 << y
        by_pair = g.adj[x] | g.adj[y]
        by_rest = 0
        for u in bits(d.mask & ~pair_mask):
            by_rest |= g.adj[u]
        region = by_pair & ~by_rest
        regions.append(VertexSet(region, g.n))
        seen_x = g.adj[x] & region & ~(1 << y)
        seen_y = g.adj[y] & region & ~(1 << x)
        symmetric.append(seen_x == seen_y)
    return K2ComponentAnalysis(d, tuple(pairs), tuple(regions), tuple(symmetric), tuple(bigs))


def gamma_t_set_minimizing_k2_components(g: Graph) -> VertexSet:
    """The minimum TD-set the sequence construction wants to start from.

    Among all minimum TD-sets, minimize the number of K2-components of the
    induced subgraph, then the number of symmetrically linked ones, and take
    the first in mask order.  An exchange argument shows the winner has no
    symmetrically linked K2-component at all; that is asserted, not assumed.
    """
    require_isolate_free(g)
    if has_clique_component(g):
        raise CliqueComponentError("graph has a clique component")
    best = None
    best_key = None
    for d in enumerate_gamma_t_sets(g):
        analysis = analyze_k2_components(g, d)
        key = (len(analysis.pairs), analysis.symmetric_count())
        if best_key is None or key < best_key:
            best, best_key = d, key
    assert best is not None and best_key is not None
    if best_key[1] != 0:
        raise AssertionError(
            "every minimum total dominating set kept a symmetrically linked "
            "K2-component; the exchange argument rules this out"
        )
    return best


def _component_vertex_order(g: Graph, comp_mask: int) -> list[int]:
    """Leaf-neighbors of the component first, then the rest, ascending.

    Within a component of G[D] on >= 3 vertices, a vertex adjacent to a
    degree-1 vertex of the component footprints that vertex (an internal
    private neighbor); the remaining vertices footprint an external private
    neighbor instead, so they may come later in any order.
    """
    leaves = 0
    for v in bits(comp_mask):
        if (g.adj[v] & comp_mask).bit_count() == 1:
            leaves |= 1 << v
    first = [v for v in bits(comp_mask) if g.adj[v] & leaves]
    rest = [v for v in bits(comp_mask) if not g.adj[v] & leaves]
    return first + rest


def z_sequence_from_gamma_t(g: Graph) -> ZSequence:
    """A validated Z-sequence whose vertex set is a minimum TD-set.

    Orders each large component of G[D] (leaf-neighbors first), then each
    K2-component as (y, x) where x keeps a region neighbor outside N[y] to
    footprint.  The result has length exactly the total domination number.
    """
    d = gamma_t_set_minimizing_k2_components(g)
    analysis = analyze_k2_components(g, d)
    sequence: list[int] = []
    for comp in analysis.big_components:
        sequence.extend(_component_vertex_order(g, comp.mask))
    for (x, y), region in zip(analysis.pairs, analysis.regions):
        if g.adj[x] & ~g.cadj[y] & region.mask:
            sequence.extend((y, x))
        elif g.adj[y] & ~g.cadj[x] & region.mask:
            sequence.extend((x, y))
        else:
            raise AssertionError(
                "asymmetric K2-component has no one-sided region neighbor"
            )
    try:
        return ZSequence.build(g, sequence)
    except ValueError as exc:
        raise AssertionError(f"construction produced an invalid sequence: {exc}") from exc


def half_z_sequence_from_minimal_td(g: Graph, d: VertexSet) -> ZSequence:
    """A validated Z-sequence covering at least half of a minimal TD-set.

    Large components of G[d] contribute all their vertices; each
    K2-component contributes its lower vertex, which footprints its partner.
    """
    if is_minimal_td_set(g, d) is None:
        raise ValueError(f"{sorted(d)} is not a minimal total dominating set")
    analysis = analyze_k2_components(g, d)
    sequence: list[int] = []
    for comp in analysis.big_components:
        sequence.extend(_component_vertex_order(g, comp.mask))
    for x, _y in analysis.pairs:
        sequence.append(x)
    try:
        seq = ZSequence.build(g, sequence)
    except ValueError as exc:
        raise AssertionError(f"construction produced an invalid sequence: {exc}") from exc
    assert 2 * len(seq) >= len(d)
    return seq


# ---------------------------------------------------------------------------
# properties of graphs with upper total domination = 2 * Z-Grundy


@dataclass(frozen=True)
class ExtremalPropertyReport:
    """Per-property verdicts for one maximum minimal TD-set.

    A False entry is a counterexample to the implementation (the properties
    are theorems); ``witnesses`` carries whatever made a property fail.
    ``subset_checks`` counts the subset-bound evaluations and whether they
    were exhaustive.
    """

    properties: dict[str, bool]
    witnesses: dict[str, object] = field(default_factory=dict)
    subset_checks: int = 0
    exhaustive: bool = True

    def all_hold(self) -> bool:
        return all(self.properties.values())


PROPERTY_NAMES = (
    "k2_components_only",
    "pair_sees_region_alike",
    "regions_are_cliques",
    "no_region_cross_edges",
    "region_closed_twins",
    "adjacent_share_region",
    "nonadjacent_share_not_one",
    "subset_bound",
)

_SUBSET_EXHAUSTIVE_MAX = 15
_SUBSET_SAMPLES = 4096


def _rest_of_graph(g: Graph, analysis: K2ComponentAnalysis) -> VertexSet:
    mask = g.full_mask
    for region in analysis.regions:
        mask &= ~region.mask
    return VertexSet(mask, g.n)


def _fully_adjacent(g: Graph, u: int, region: VertexSet) -> bool:
    return g.adj[u] & region.mask == region.mask


def fully_adjacent_indices(g: Graph, analysis: K2ComponentAnalysis, b: VertexSet) -> tuple[int, ...]:
    """Indices of regions some vertex of ``b`` is adjacent to in full."""
    rest = _rest_of_graph(g, analysis)
    if not b <= rest:
        raise ValueError("subset must avoid the exclusively dominated regions")
    out = []
    for i, region in enumerate(analysis.regions):
        if any(_fully_adjacent(g, u, region) for u in b):
            out.append(i)
    return tuple(out)


def max_minimal_cover_size(g: Graph, analysis: K2ComponentAnalysis, b: VertexSet) -> int | None:
    """Largest inclusion-minimal index set whose pair-lows dominate ``b``.

    Covers draw from the fully adjacent indices of ``b``; coverage of a
    vertex means adjacency to the lower pair vertex.  None when no cover
    exists (impossible on genuinely extremal inputs).
    """
    if not b:
        return 0
    candidates = fully_adjacent_indices(g, analysis, b)
    minimal_sizes = []
    for r in range(1, len(candidates) + 1):
        for chosen in itertools.combinations(candidates, r):
            union = 0
            for i in chosen:
                x = analysis.pairs[i][0]
                union |= g.adj[x]
            if b.mask & ~union:
                continue
            if any(
                not b.mask & ~_cover_union(g, analysis, chosen, skip)
                for skip in range(len(chosen))
            ):
                continue  # not inclusion-minimal
            minimal_sizes.append(r)
    return max(minimal_sizes) if minimal_sizes else None


def _cover_union(g: Graph, analysis: K2ComponentAnalysis, chosen, skip: int) -> int:
    union = 0
    for pos, i in enumerate(chosen):
        if pos == skip:
            continue
        union |= g.adj[analysis.pairs[i][0]]
    return union


def check_extremal_properties(g: Graph, d: VertexSet) -> ExtremalPropertyReport:
    """Evaluate the eight structural properties of a factor-2 extremal graph.

    Preconditions (checked): the upper total domination number equals twice
    the Z-Grundy number and ``d`` is a maximum minimal TD-set.
    """
    gk, _ = z_grundy_number(g)
    uk, _ = upper_total_domination_number(g)
    if uk != 2 * gk:
        raise ValueError("graph does not attain the factor-2 bound")
    if is_minimal_td_set(g, d) is None or len(d) != uk:
        raise ValueError("set is not a maximum minimal total dominating set")

    analysis = analyze_k2_components(g, d)
    props: dict[str, bool] = {}
    witnesses: dict[str, object] = {}

    props["k2_components_only"] = not analysis.big_components
    if analysis.big_components:
        witnesses["k2_components_only"] = sorted(analysis.big_components[0])

    alike = True
    for (x, y), region in zip(analysis.pairs, analysis.regions):
        if g.cadj[x] & region.mask != g.cadj[y] & region.mask:
            alike = False
            witnesses["pair_sees_region_alike"] = (x, y)
            break
    props["pair_sees_region_alike"] = alike

    cliques = True
    for region in analysis.regions:
        if not is_clique(g, region):
            cliques = False
            witnesses["regions_are_cliques"] = sorted(region)
            break
    props["regions_are_cliques"] = cliques

    cross_free = True
    for i, j in itertools.combinations(range(len(analysis.regions)), 2):
        reach = 0
        for v in analysis.regions[i]:
            reach |= g.adj[v]
        if reach & analysis.regions[j].mask:
            cross_free = False
            witnesses["no_region_cross_edges"] = (i, j)
            break
    props["no_region_cross_edges"] = cross_free

    twins = True
    for region in analysis.regions:
        closed = {g.cadj[v] for v in region}
        if len(closed) > 1:
            twins = False
            witnesses["region_closed_twins"] = sorted(region)
            break
    props["region_closed_twins"] = twins

    rest = _rest_of_graph(g, analysis)
    shared_ok = True
    disjoint_ok = True
    for u, v in itertools.combinations(sorted(rest), 2):
        shared = sum(
            1
            for region in analysis.regions
            if _fully_adjacent(g, u, region) and _fully_adjacent(g, v, region)
        )
        if g.has_edge(u, v):
            if shared < 1:
                shared_ok = False
                witnesses["adjacent_share_region"] = (u, v)
        elif shared == 1:
            disjoint_ok = False
            witnesses["nonadjacent_share_not_one"] = (u, v)
    props["adjacent_share_region"] = shared_ok
    props["nonadjacent_share_not_one"] = disjoint_ok

    rest_vertices = sorted(rest)
    exhaustive = len(rest_vertices) <= _SUBSET_EXHAUSTIVE_MAX
    if exhaustive:
        subsets = [
            VertexSet.of(combo, g.n)
            for r in range(len(rest_vertices) + 1)
            for combo in itertools.combinations(rest_vertices, r)
        ]
    else:
        rng = random.Random(0)
        subsets = [VertexSet.empty(g.n)]
        for _ in range(_SUBSET_SAMPLES):
            subsets.append(
                VertexSet.of([v for v in rest_vertices if rng.random() < 0.5], g.n)
            )
    bound_ok = True
    for b in subsets:
        isolated = VertexSet(
            sum(1 << u for u in b if not g.adj[u] & b.mask), g.n
        )
        active, _ = induced_subgraph(g, b - isolated)
        lhs_grundy, _ = z_grundy_number(active)
        cover = max_minimal_cover_size(g, analysis, isolated)
        rhs = len(fully_adjacent_indices(g, analysis, b))
        if cover is None or lhs_grundy + cover > rhs:
            bound_ok = False
            witnesses["subset_bound"] = sorted(b)
            break
    props["subset_bound"] = bound_ok

    return ExtremalPropertyReport(props, witnesses, len(subsets), exhaustive)


def check_gamma_two_characterization(g: Graph) -> bool:
    """Whether [both invariants equal 2] iff [non-twin pairs jointly see V].

    The biconditional is a theorem for connected non-complete graphs, so a
    False return is a counterexample to the implementation.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if is_clique(g, g.full_set()):
        raise ValueError("graph must not be complete")
    left = total_domination_number(g)[0] == 2 and z_grundy_number(g)[0] == 2
    right = True
    for x, y in itertools.combinations(range(g.n), 2):
        if g.cadj[x] == g.cadj[y] or g.adj[x] == g.adj[y]:
            continue
        if g.cadj[x] | g.cadj[y] != g.full_mask:
            right = False
            break
    return left == right
