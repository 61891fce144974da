"""Internal catalogues of small graphs up to isomorphism.

Prepares the isomorph-reduced corpora that the exhaustive verification
suite ingests (one labeled representative per isomorphism class).  Not part
of the public API: the library itself never canonicalizes, and the CLI only
enumerates labeled graphs up to n = 6.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, bits

_all_cache: dict[int, list[Graph]] = {}
_connected_cache: dict[int, list[Graph]] = {}


def _refined_classes(g: Graph) -> list[list[int]]:
    """Partition vertices by an isomorphism-invariant iterated coloring.

    Start from degrees and refine by the multiset of neighbor colors until
    the class count stabilizes.  Class order (by color rank) is itself
    invariant, so a canonical form may search only class-respecting orders.
    """
    n = g.n
    colors = [g.adj[v].bit_count() for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(n)
        ]
        rank = {key: i for i, key in enumerate(sorted(set(keys)))}
        new_colors = [rank[key] for key in keys]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_code(g: Graph) -> int:
    """Isomorphism-invariant integer identifying ``g`` among same-order graphs.

    Minimum upper-triangle adjacency code over all vertex orders compatible
    with the refined color classes.  Two graphs of equal order get the same
    code exactly when they are isomorphic.
    """
    n = g.n
    if n <= 1:
        return 0
    adj = g.adj
    classes = _refined_classes(g)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for part in parts for v in part]
        code = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                code = code << 1 | (row >> order[j] & 1)
        if best is None or code < best:
            best = code
    return best


def graphs_upto_iso(n: int) -> list[Graph]:
    """All simple graphs on ``n`` vertices, one per isomorphism class.

    Built by extending the (n-1)-catalogue with a new vertex attached to
    every subset and deduplicating via canonical codes.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n not in _all_cache:
        if n == 0:
            _all_cache[0] = [Graph(0, ())]
        else:
            _all_cache[n] = _extend(graphs_upto_iso(n - 1), include_empty=True)
    return _all_cache[n]


def connected_graphs_upto_iso(n: int) -> list[Graph]:
    """Connected graphs on ``n`` vertices, one per isomorphism class.

    Every connected graph has a non-cut vertex, so extending connected
    (n-1)-graphs by a vertex with a nonempty neighborhood reaches them all.
    """
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n not in _connected_cache:
        if n == 1:
            _connected_cache[1] = [Graph(1, (0,))]
        else:
            _connected_cache[n] = _extend(
                connected_graphs_upto_iso(n - 1), include_empty=False
            )
    return _connected_cache[n]


def _extend(parents: list[Graph], include_empty: bool) -> list[Graph]:
    seen: set[int] = set()
    out: list[Graph] = []
    for parent in parents:
        m = parent.n
        start = 0 if include_empty else 1
        for subset in range(start, 1 << m):
            rows = [row | (subset >> v & 1) << m for v, row in enumerate(parent.adj)]
            rows.append(subset)
            child = Graph(m + 1, rows)
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                out.append(child)
    return out


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return canonical_code(g) == canonical_code(h)
