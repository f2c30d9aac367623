"""Monotone trails extracted from propagation traces.

A trail is a walk without repeated edges. With edge labels
t(uv) = max(t(u), t(v)) taken from a trace, a trail v_0..v_p is monotone
when p >= 1, consecutive edge labels never decrease and never jump by more
than one, and the last edge's label equals the label of the last vertex.

For any power dominating set whose members all have degree at least two,
every vertex v outside the set is the endpoint of a monotone trail of
length at least t(v) + 1; extract_monotone_trail builds one by walking the
forcing history backwards. That existence is checked constructively by the
test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import InternalConsistencyError
from .graph import Graph
from .propagation import UNOBSERVED, ObservationTrace, edge_time_label


@dataclass(frozen=True)
class MonotoneTrail:
    """A vertex sequence (repeats allowed) with its per-edge time labels."""

    vertices: tuple
    edge_labels: tuple

    @property
    def edges(self) -> tuple:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    @property
    def last_vertex(self) -> int:
        return self.vertices[-1]

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_labels": list(self.edge_labels),
            "length": self.length,
        }


class TrailCheck(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_monotone_trail(
    g: Graph, trace: ObservationTrace, vertices: Sequence[int]
) -> TrailCheck:
    """Check the monotone trail conditions; report the first violation."""
    if len(vertices) < 2:
        raise ValueError("a trail needs at least one edge (two vertices)")
    for v in vertices:
        if trace.time_label[v] == UNOBSERVED:
            raise ValueError(f"vertex {v} is unobserved in this trace")

    seen_edges = set()
    labels = []
    for a, b in zip(vertices, vertices[1:]):
        if b not in g.neighbors(a):
            return TrailCheck(False, f"consecutive vertices {a},{b} are not adjacent")
        key = frozenset((a, b))
        if key in seen_edges:
            return TrailCheck(False, f"edge {{{a},{b}}} repeats")
        seen_edges.add(key)
        labels.append(edge_time_label(trace, a, b))
    for i in range(1, len(labels)):
        if not labels[i - 1] <= labels[i] <= labels[i - 1] + 1:
            return TrailCheck(
                False,
                f"edge labels {labels[i-1]} -> {labels[i]} violate monotonicity at position {i}",
            )
    if labels[-1] != trace.time_label[vertices[-1]]:
        return TrailCheck(
            False,
            f"last edge label {labels[-1]} differs from last vertex label "
            f"{trace.time_label[vertices[-1]]}",
        )
    return TrailCheck(True)


def extract_monotone_trail(g: Graph, trace: ObservationTrace, v: int) -> MonotoneTrail:
    """Build a monotone trail of length >= t(v)+1 ending at v.

    Walks the recorded forcing history backwards: a vertex observed at
    step 1 is reached through its recorded seed neighbor plus that seed's
    smallest other neighbor; a vertex forced at step i extends the trail
    of its forcer (observed at i-1), or of the forcer's smallest neighbor
    observed at exactly i-1 when the forcer was observed earlier. Ties
    always break to the smallest vertex ID, so extraction is deterministic.
    """
    for u in trace.start:
        if g.degree(u) <= 1:
            raise ValueError(f"seed vertex {u} has degree {g.degree(u)} < 2")
    if v in trace.start:
        raise ValueError(f"vertex {v} is a seed; trails end outside the seed set")
    if trace.time_label[v] == UNOBSERVED:
        raise ValueError(f"vertex {v} is unobserved in this trace")

    t = trace.time_label
    memo: dict[int, tuple] = {}

    def build(x: int) -> tuple:
        if x in memo:
            return memo[x]
        i = t[x]
        if i == 1:
            u, _ = trace.forcing_record[x]  # smallest seed neighbor
            w = min(g.neighbors(u) - {x})
            out = (w, u, x)
        else:
            w, _ = trace.forcing_record[x]
            if t[w] == i - 1:
                out = build(w) + (x,)
            else:
                level = [y for y in g.neighbors(w) if t[y] == i - 1]
                if not level:
                    raise InternalConsistencyError(
                        f"forcer {w} of {x} (step {i}) has no neighbor observed at {i-1}"
                    )
                out = build(min(level)) + (w, x)
        memo[x] = out
        return out

    vertices = build(v)
    labels = tuple(edge_time_label(trace, a, b) for a, b in zip(vertices, vertices[1:]))
    trail = MonotoneTrail(vertices=vertices, edge_labels=labels)

    check = is_monotone_trail(g, trace, vertices)
    if not check or trail.length < t[v] + 1:
        raise InternalConsistencyError(
            f"extracted trail for vertex {v} is invalid: {check.reason or 'too short'}"
        )
    return trail
