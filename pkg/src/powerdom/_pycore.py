"""Pure Python propagation engine over bitmask adjacency.

Same contract as the compiled engine in _core.pyx; used as the fallback
when the extension is not built. Vertex sets are Python ints used as
bitmasks, so any n is supported.
"""

from __future__ import annotations

from typing import Sequence


class PropagationCore:
    """Observation process runner bound to one graph's adjacency masks."""

    backend = "pure"

    __slots__ = ("_adj", "_n")

    def __init__(self, adj_masks: Sequence[int], n: int):
        self._adj = list(adj_masks)
        self._n = n

    def _domination(self, cur: int) -> int:
        adj = self._adj
        nxt = cur
        m = cur
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        return nxt

    def _force_round(self, cur: int) -> int:
        adj = self._adj
        nxt = cur
        m = cur
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            u = adj[v] & ~cur
            if u and not (u & (u - 1)):
                nxt |= u
        return nxt

    def fixed_point(self, start: int) -> tuple[int, int]:
        """Run to the fixed point; return (final mask, least l with S[l+1] == S[l])."""
        cur = start
        nxt = self._domination(cur)
        if nxt == cur:
            return cur, 0
        cur = nxt
        steps = 1
        while True:
            nxt = self._force_round(cur)
            if nxt == cur:
                return cur, steps
            cur = nxt
            steps += 1

    def layer_masks(self, start: int) -> list[int]:
        """All distinct layers S[0], S[1], ... up to the fixed point."""
        layers = [start]
        cur = start
        nxt = self._domination(cur)
        if nxt == cur:
            return layers
        layers.append(nxt)
        cur = nxt
        while True:
            nxt = self._force_round(cur)
            if nxt == cur:
                return layers
            layers.append(nxt)
            cur = nxt
