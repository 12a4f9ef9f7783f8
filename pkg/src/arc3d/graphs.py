"""Graphs with indexed edges, straight-line drawings and rotation systems.

Vertices are opaque string ids.  Edges are unordered pairs of ids; the
identity of an edge is its index in the input list, so per-edge data
(colors, arcs) can live in plain index-aligned lists.  A ``Drawing2D``
assigns distinct planar positions to vertices, and a ``RotationSystem``
records the clockwise cyclic order of incident edges around each vertex.
Clockwise means decreasing mathematical angle in the standard
(x right, y up) plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import (
    CoincidentDirections,
    DuplicateEdge,
    DuplicateVertex,
    InvalidDrawing,
    NoAngles,
    SelfLoop,
    UnknownVertex,
)

TAU = 2.0 * math.pi


@dataclass(frozen=True, eq=True)
class Graph:
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    # vertex id -> indices of incident edges, in edge input order
    incidence: Mapping[str, Tuple[int, ...]] = field(compare=False)

    def degree(self, v: str) -> int:
        return len(self.incidence[v])

    @property
    def max_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(len(inc) for inc in self.incidence.values())

    def other_end(self, edge_index: int, v: str) -> str:
        a, b = self.edges[edge_index]
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertex(f"vertex {v!r} is not an endpoint of edge {edge_index}")


def build_graph(vertices: Sequence[str], edges: Sequence[Tuple[str, str]]) -> Graph:
    """Validate and index a graph given as vertex ids and edge pairs.

    Rejects duplicate vertex ids, self-loops, duplicate (unordered) edges
    and edges naming unknown vertices.  Edge order is preserved.
    """
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise DuplicateVertex("vertex ids must be unique")
    known = set(verts)
    incidence: Dict[str, list] = {v: [] for v in verts}
    seen = set()
    clean = []
    for i, (a, b) in enumerate(edges):
        if a not in known:
            raise UnknownVertex(f"edge {i} names unknown vertex {a!r}")
        if b not in known:
            raise UnknownVertex(f"edge {i} names unknown vertex {b!r}")
        if a == b:
            raise SelfLoop(f"edge {i} is a self-loop at {a!r}")
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"edge {i} ({a!r}, {b!r}) repeats an earlier edge")
        seen.add(key)
        incidence[a].append(i)
        incidence[b].append(i)
        clean.append((a, b))
    return Graph(
        vertices=verts,
        edges=tuple(clean),
        incidence={v: tuple(ix) for v, ix in incidence.items()},
    )


def square_graph(g: Graph) -> Graph:
    """Graph on the same vertices joining every pair at distance <= 2.

    The original edges come first in their input order, followed by the new
    distance-2 pairs sorted by vertex input position, so the result is
    deterministic.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    present = {frozenset(e) for e in g.edges}
    extra = set()
    for mid in g.vertices:
        inc = g.incidence[mid]
        for x in range(len(inc)):
            u = g.other_end(inc[x], mid)
            for y in range(x + 1, len(inc)):
                w = g.other_end(inc[y], mid)
                key = frozenset((u, w))
                if key not in present:
                    pair = (u, w) if index[u] < index[w] else (w, u)
                    extra.add(pair)
    new_edges = list(g.edges) + sorted(extra, key=lambda e: (index[e[0]], index[e[1]]))
    return build_graph(g.vertices, new_edges)


@dataclass(frozen=True)
class Drawing2D:
    """Distinct finite planar positions for a set of vertex ids."""

    positions: Mapping[str, Tuple[float, float]]

    def __post_init__(self):
        seen = set()
        for v, (x, y) in self.positions.items():
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidDrawing(f"position of {v!r} is not finite")
            if (x, y) in seen:
                raise InvalidDrawing(f"position of {v!r} coincides with another vertex")
            seen.add((x, y))


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise cyclic order of incident edge indices around each vertex."""

    order: Mapping[str, Tuple[int, ...]]


def _check_cover(g: Graph, dr: Drawing2D) -> None:
    for v in g.vertices:
        if v not in dr.positions:
            raise InvalidDrawing(f"drawing has no position for vertex {v!r}")


def _direction_angles(g: Graph, dr: Drawing2D, v: str):
    """(angle, edge_index) for each incident edge, angle via atan2."""
    px, py = dr.positions[v]
    out = []
    for ei in g.incidence[v]:
        w = g.other_end(ei, v)
        qx, qy = dr.positions[w]
        out.append((math.atan2(qy - py, qx - px), ei))
    return out

def rotation_from_drawing(g: Graph, dr: Drawing2D) -> RotationSystem:
    """Clockwise rotation system induced by a straight-line drawing.

    Exactly equal outgoing directions at a vertex are an error; callers who
    want a perturbed drawing must perturb it themselves.
    """
    _check_cover(g, dr)
    order = {}
    for v in g.vertices:
        entries = _direction_angles(g, dr, v)
        angles = [a for a, _ in entries]
        if len(set(angles)) != len(angles):
            raise CoincidentDirections(
                f"two edges leave {v!r} in exactly the same direction"
            )
        entries.sort(key=lambda t: -t[0])
        order[v] = tuple(ei for _, ei in entries)
    return RotationSystem(order=order)


def _ray_gap(a1: float, a2: float) -> float:
    """Angle in [0, pi] between two ray directions given by their angles."""
    d = math.fmod(abs(a1 - a2), TAU)
    return min(d, TAU - d)


def angular_resolution_2d(g: Graph, dr: Drawing2D) -> float:
    """Minimum angle between outgoing directions of two incident edges.

    The minimum runs over all vertices and all unordered pairs of incident
    edges.  Raises NoAngles when every vertex has degree <= 1.
    """
    _check_cover(g, dr)
    best: Optional[float] = None
    for v in g.vertices:
        entries = _direction_angles(g, dr, v)
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                gap = _ray_gap(entries[i][0], entries[j][0])
                if best is None or gap < best:
                    best = gap
    if best is None:
        raise NoAngles("no vertex has two incident edges")
    return best
