"""The power domination observation process.

Starting from a seed set S, one domination step observes the closed
neighborhood N[S]; after that, any observed vertex with exactly one
unobserved neighbor forces it, all eligible forcings applied
simultaneously per round. The process is deterministic and monotone, so a
run is fully described by its layer chain S = S[0] <= S[1] <= ... up to
the fixed point.

Layer zero is the seed set itself, so seeds carry time label 0 and the
propagation time of S = V(G) is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NotPowerDominatingError
from .graph import Graph

UNOBSERVED = -1


def _as_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _mask_to_set(mask: int) -> frozenset:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


@dataclass(frozen=True)
class ObservationTrace:
    """Full history of one propagation run.

    time_label is indexed by vertex (UNOBSERVED for vertices never
    reached). forcing_record maps each vertex observed at step i >= 2 to
    (forcer, i) with the smallest eligible forcer, and each vertex
    observed at step 1 outside the seeds to (smallest seed neighbor, 1).
    """

    graph: Graph
    start: frozenset
    layers: tuple
    time_label: tuple
    forcing_record: Mapping
    complete: bool

    @property
    def steps(self) -> int:
        """Least l with S[l+1] == S[l]; equals ppt when complete."""
        return len(self.layers) - 1

    def to_json_dict(self) -> dict:
        return {
            "start": sorted(self.start),
            "layers": [sorted(layer) for layer in self.layers],
            "time_label": list(self.time_label),
            "forcing_record": sorted(
                [v, w, step] for v, (w, step) in self.forcing_record.items()
            ),
            "complete": self.complete,
        }


def domination_step(g: Graph, s: Iterable[int]) -> frozenset:
    """Closed neighborhood N[S] = S together with every neighbor of S."""
    members = _mask_to_set(_as_mask(g, s))
    out = set(members)
    for v in members:
        out |= g.neighbors(v)
    return frozenset(out)


def forcing_step(g: Graph, observed: Iterable[int]) -> frozenset:
    """One simultaneous forcing round.

    A vertex w joins iff some observed v has w as its only unobserved
    neighbor; all such w are added together.
    """
    obs = _mask_to_set(_as_mask(g, observed))
    forced = set()
    for v in obs:
        outside = g.neighbors(v) - obs
        if len(outside) == 1:
            forced |= outside
    return frozenset(obs | forced)


def propagate(g: Graph, s: Iterable[int]) -> ObservationTrace:
    """Run the observation process from S and record the full trace."""
    start_mask = _as_mask(g, s)
    masks = g.core.layer_masks(start_mask)
    layers = tuple(_mask_to_set(m) for m in masks)

    labels = [UNOBSERVED] * g.n
    for v in layers[0]:
        labels[v] = 0
    for i in range(1, len(layers)):
        for v in layers[i] - layers[i - 1]:
            labels[v] = i

    record = {}
    adj_masks = g.adjacency_masks
    for i in range(1, len(masks)):
        prev = masks[i - 1]
        new_bits = masks[i] & ~prev
        for v in sorted(_mask_to_set(new_bits)):
            if i == 1:
                # dominated: smallest seed neighbor
                w = min(g.neighbors(v) & layers[0])
            else:
                # smallest observed vertex whose unique unobserved neighbor was v
                w = min(
                    u
                    for u in g.neighbors(v)
                    if (prev >> u) & 1 and adj_masks[u] & ~prev == (1 << v)
                )
            record[v] = (w, i)

    complete = masks[-1] == g.full_mask
    return ObservationTrace(
        graph=g,
        start=layers[0],
        layers=layers,
        time_label=tuple(labels),
        forcing_record=record,
        complete=complete,
    )


def is_pds(g: Graph, s: Iterable[int]) -> bool:
    """Is S a power dominating set, i.e. does propagation reach all of V?"""
    final, _ = g.core.fixed_point(_as_mask(g, s))
    return final == g.full_mask


def ppt_of_set(g: Graph, s: Iterable[int]) -> int:
    """Power propagation time of S: least l with S[l] = V(G)."""
    final, steps = g.core.fixed_point(_as_mask(g, s))
    if final != g.full_mask:
        raise NotPowerDominatingError(
            f"set {sorted(set(s))} does not power dominate the graph"
        )
    return steps


def edge_time_label(trace: ObservationTrace, u: int, v: int) -> int:
    """Edge label t(uv) = max(t(u), t(v)); both endpoints must be observed."""
    if v not in trace.graph.neighbors(u):
        raise ValueError(f"({u},{v}) is not an edge")
    tu, tv = trace.time_label[u], trace.time_label[v]
    if tu == UNOBSERVED or tv == UNOBSERVED:
        raise ValueError(f"edge ({u},{v}) has an unobserved endpoint in this trace")
    return max(tu, tv)
