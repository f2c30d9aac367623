"""Isomorphism-free catalogs of small graphs.

Graphs on n vertices are generated by extending every catalogued graph on
n-1 vertices with a new vertex attached to each possible neighborhood,
deduplicated by a canonical certificate. Intended for n <= 8, where the
known counts are 1, 2, 4, 11, 34, 156, 1044, 12346 graphs (of which
1, 1, 2, 6, 21, 112, 853, 11117 are connected); the test suite pins these.

The certificate is a minimum adjacency code over all vertex orderings
sorted by refined color, searched with prefix pruning and a twin skip
(interchangeable vertices generate the same subtree), which keeps the
degenerate symmetric cases like complete and empty graphs cheap.
"""

from __future__ import annotations

from .graph import Graph


def _bit_vertices(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _refined_colors(n: int, masks: list) -> list:
    """Iterated neighbor-multiset color refinement; colors are canonical ints."""
    colors = [bin(m).count("1") for m in masks]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bit_vertices(masks[v]))))
            for v in range(n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _interchangeable(masks: list, a: int, b: int) -> bool:
    """True iff swapping a and b (fixing everything else) is an automorphism."""
    return masks[a] & ~(1 << b) == masks[b] & ~(1 << a)


def certificate(n: int, masks: list) -> tuple:
    """Canonical adjacency code: equal certificates iff isomorphic graphs.

    Row i of the code holds vertex i's adjacency bits to vertices placed
    before it, minimized lexicographically over admissible orderings.
    """
    if n == 0:
        return (0,)
    colors = _refined_colors(n, masks)
    target = sorted(colors)
    best: tuple | None = None

    def rec(placed: list, rows: list, remaining: set):
        nonlocal best
        p = len(placed)
        if p == n:
            code = tuple(rows)
            if best is None or code < best:
                best = code
            return
        need = target[p]
        reps = []
        for v in sorted(remaining):
            if colors[v] != need:
                continue
            if any(_interchangeable(masks, u, v) for u in reps):
                continue
            reps.append(v)
        scored = []
        for v in reps:
            mv = masks[v]
            row = 0
            for i, u in enumerate(placed):
                if (mv >> u) & 1:
                    row |= 1 << i
            scored.append((row, v))
        scored.sort()
        for row, v in scored:
            if best is not None and tuple(rows) + (row,) > best[: p + 1]:
                break
            placed.append(v)
            rows.append(row)
            remaining.discard(v)
            rec(placed, rows, remaining)
            placed.pop()
            rows.pop()
            remaining.add(v)

    rec([], [], set(range(n)))
    return (n,) + best


def canonical_certificate(g: Graph) -> tuple:
    return certificate(g.n, list(g.adjacency_masks))


def _graph_from_masks(n: int, masks: list) -> Graph:
    edges = [(u, v) for u in range(n) for v in _bit_vertices(masks[u]) if u < v]
    return Graph(n, edges)


_ALL: dict[int, list] = {}


def nonisomorphic_graphs(n: int) -> list:
    """All graphs on exactly n vertices, one representative per isomorphism class."""
    if n < 1:
        raise ValueError(f"catalog needs n >= 1, got {n}")
    if n in _ALL:
        return _ALL[n]
    if n == 1:
        out = [Graph(1)]
    else:
        reps: dict[tuple, list] = {}
        hi = 1 << (n - 1)
        for g in nonisomorphic_graphs(n - 1):
            base = list(g.adjacency_masks) + [0]
            for sub in range(hi):
                masks = base.copy()
                masks[n - 1] = sub
                for v in _bit_vertices(sub):
                    masks[v] |= hi
                cert = certificate(n, masks)
                if cert not in reps:
                    reps[cert] = masks
        out = [_graph_from_masks(n, masks) for masks in reps.values()]
    _ALL[n] = out
    return out


def connected_graphs(n: int) -> list:
    return [g for g in nonisomorphic_graphs(n) if g.is_connected()]


def connected_catalog(max_n: int) -> list:
    """All connected graphs with 1 <= n <= max_n, up to isomorphism."""
    return [g for k in range(1, max_n + 1) for g in connected_graphs(k)]


def full_catalog(max_n: int) -> list:
    """All graphs (connected or not) with 1 <= n <= max_n, up to isomorphism."""
    return [g for k in range(1, max_n + 1) for g in nonisomorphic_graphs(k)]
