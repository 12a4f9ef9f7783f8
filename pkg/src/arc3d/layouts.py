"""The four layout constructions and their certified resolution bounds.

Every layout returns an ``ArcDiagram3D`` whose ``params`` carry the data
needed to re-derive each incident pair's guaranteed lower bound, so a
scene written to disk can be re-checked without trusting the producer:

* ``sphere``    -- vertices clustered on the unit sphere, straight chords;
  the bound for a pair at b with far endpoints a, c is asin(|ac| / 2).
* ``stationary``-- vertices keep their 2D positions; perpendicular arcs
  with in-plane angles i * pi / (4(c-1)) over a proper edge coloring;
  pair bound |angle_i - angle_j|.
* ``slanted``   -- arcs tilted and bent according to a palette of
  (plane tilt, bend) color pairs; pair bound by brute force over the
  possible endpoint-role tangents of the two colors.
* ``free``      -- perpendicular arcs over a window-localized coloring;
  different colors bound as stationary, same color bound by half the
  pair's 2D angle (equal elevations at most pi/4).

Angles between edges, in 2D and 3D, are always measured between the two
*outgoing* directions (tangent rays) at the shared vertex, in [0, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .coloring import (
    EdgeColoring,
    edge_coloring_vizing,
    find_edge_conflict,
    greedy_vertex_coloring,
    localized_edge_coloring,
)
from .errors import (
    BoundViolation,
    DomainError,
    NoAngles,
    TooManyColors,
    ZeroResolutionDrawing,
)
from .geometry import (
    ArcDiagram3D,
    CircularArc,
    Vec3,
    angle_between,
    make_arc,
    tangent_at,
)
from .graphs import (
    Drawing2D,
    Graph,
    _check_cover,
    _ray_gap,
    angular_resolution_2d,
    rotation_from_drawing,
    square_graph,
)

HALF_PI = 0.5 * math.pi

# Height of the top and bottom cluster planes on the unit sphere.  This
# value balances the two spacings that shrink as the degree grows: the
# gap between adjacent planes, 2h/d, and the gap between neighboring
# points on the smallest circle, about 2 pi sqrt(1 - h^2) / d.  They are
# equal when h = pi / sqrt(1 + pi^2).
CAP_HEIGHT = math.pi / math.sqrt(1.0 + math.pi * math.pi)

# Azimuth offset between consecutive circles; irrational in turns, so
# stacked circles never line their points up.
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True)
class SphereParams:
    d: int
    epsilon: float


@dataclass(frozen=True)
class BoundCheck:
    vertex: str
    edge_i: int
    edge_j: int
    measured: float
    bound: float
    passed: bool


@dataclass(frozen=True)
class ResolutionReport:
    min_angle: float
    argmin: Tuple[str, int, int]
    per_vertex_min: Mapping[str, float]
    bound_checks: Tuple[BoundCheck, ...] = ()


# ---------------------------------------------------------------------------
# schedules and palettes
# ---------------------------------------------------------------------------

def perpendicular_schedule(c: int) -> List[float]:
    """Strictly increasing in-plane angles for c colors: i * pi / (4(c-1)),
    topping out at pi/4; a single color degenerates to [0]."""
    if c <= 0:
        return []
    if c == 1:
        return [0.0]
    step = math.pi / (4.0 * (c - 1))
    return [i * step for i in range(c)]


def _uniform_angles(count: int) -> List[float]:
    if count <= 1:
        return [0.0]
    step = (math.pi / 4.0) / (count - 1)
    return [i * step for i in range(count)]


def slanted_palette(d: int, interpretation: str = "inplane") -> List[Tuple[float, float]]:
    """Color pairs (plane tilt, bend) covering at least d + 1 colors.

    The base angle set is ceil(sqrt(d)) + 1 values uniformly spread over
    [0, pi/4].  Under the default "inplane" interpretation every ordered
    pair is usable.  Under "elevation" the bend value is a tangent
    elevation, only realizable when bend <= tilt, so the angle set grows
    until enough pairs remain.  Pairs are sorted by (tilt, bend).
    """
    if interpretation not in ("inplane", "elevation"):
        raise DomainError(f"unknown interpretation {interpretation!r}")
    need = d + 1
    k = math.ceil(math.sqrt(d)) + 1 if d >= 1 else 1
    while True:
        angles = _uniform_angles(k)
        if interpretation == "inplane":
            pairs = [(t, b) for t in angles for b in angles]
        else:
            pairs = [(t, b) for t in angles for b in angles if b <= t]
        if len(pairs) >= need:
            return sorted(pairs)
        k += 1


def _realize_color(tilt: float, bend: float, interpretation: str) -> Tuple[float, float]:
    """(plane_tilt, in_plane_angle) of the arc drawn for a color pair."""
    if interpretation == "inplane":
        return tilt, bend
    if bend == 0.0:
        return tilt, 0.0
    if bend > tilt:
        raise DomainError("elevation interpretation needs bend <= tilt")
    return tilt, math.asin(min(1.0, math.sin(bend) / math.sin(tilt)))


# ---------------------------------------------------------------------------
# sphere layout
# ---------------------------------------------------------------------------

def cluster_positions(d: int) -> List[Vec3]:
    """d(d+1) points on the unit sphere: d+1 parallel circles with
    z from -CAP_HEIGHT to +CAP_HEIGHT, d points per circle, consecutive
    circles twisted by the golden angle.  Index = circle * d + point."""
    if d < 1:
        raise DomainError("cluster positions need degree >= 1")
    out = []
    for i in range(d + 1):
        z = -CAP_HEIGHT + i * (2.0 * CAP_HEIGHT / d)
        r = math.sqrt(max(0.0, 1.0 - z * z))
        for j in range(d):
            az = i * GOLDEN_ANGLE + j * (2.0 * math.pi / d)
            out.append(Vec3(r * math.cos(az), r * math.sin(az), z))
    return out


def cluster_min_distance(positions: Sequence[Vec3]) -> float:
    best = math.inf
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            dist = (positions[i] - positions[j]).length
            if dist < best:
                best = dist
    return best


def sphere_layout(g: Graph, epsilon: Optional[float] = None,
                  epsilon_fraction: float = 0.125) -> ArcDiagram3D:
    """Draw g on the unit sphere with straight chords.

    Vertices whose distance in g is at most two land in distinct cluster
    positions (via a first-fit coloring of the square graph); vertices of
    equal color spread on a small circle of radius epsilon around their
    cluster position, re-normalized onto the sphere.
    """
    d = g.max_degree
    if d < 1:
        raise DomainError("sphere layout needs at least one edge")
    clusters = cluster_positions(d)
    dmin = cluster_min_distance(clusters)
    if epsilon is None:
        if not 0.0 < epsilon_fraction < 0.5:
            raise DomainError("epsilon_fraction must lie in (0, 1/2)")
        epsilon = epsilon_fraction * dmin
    if not 0.0 < epsilon < 0.5 * dmin:
        raise DomainError("epsilon must lie in (0, half the cluster spacing)")

    coloring = greedy_vertex_coloring(square_graph(g))
    if coloring.palette_size > len(clusters):
        raise TooManyColors(
            f"square-graph coloring needs {coloring.palette_size} clusters, "
            f"only {len(clusters)} available"
        )

    by_color: Dict[int, List[str]] = {}
    for v in g.vertices:
        by_color.setdefault(coloring.colors[v], []).append(v)

    positions: Dict[str, Vec3] = {}
    for color, members in by_color.items():
        p = clusters[color]
        t1 = Vec3(-p.y, p.x, 0.0).normalized()  # e_z x p, never zero off the poles
        t2 = p.cross(t1)
        k = len(members)
        for idx, v in enumerate(members):
            theta = 2.0 * math.pi * idx / k
            q = p + (t1 * math.cos(theta) + t2 * math.sin(theta)) * epsilon
            positions[v] = q.normalized()

    arcs = tuple(
        make_arc(positions[a], positions[b], 0.0, HALF_PI, 1) for a, b in g.edges
    )
    params = {
        "epsilon": epsilon,
        "cluster_min_distance": dmin,
        "vertex_cluster": {v: coloring.colors[v] for v in g.vertices},
        "square_palette_size": coloring.palette_size,
        "nudges": [0.0] * len(g.edges),
    }
    return _with_min_bound(
        ArcDiagram3D(graph=g, positions=positions, arcs=arcs, method="sphere",
                     params=params)
    )


# ---------------------------------------------------------------------------
# planar-based layouts
# ---------------------------------------------------------------------------

def _planar_positions(g: Graph, dr: Drawing2D) -> Dict[str, Vec3]:
    _check_cover(g, dr)
    return {v: Vec3(dr.positions[v][0], dr.positions[v][1], 0.0) for v in g.vertices}


def stationary_layout(g: Graph, dr: Drawing2D) -> ArcDiagram3D:
    """Keep the 2D vertex positions; lift edges on perpendicular arcs whose
    in-plane angles follow the schedule over a proper edge coloring."""
    positions = _planar_positions(g, dr)
    coloring = edge_coloring_vizing(g)
    schedule = perpendicular_schedule(coloring.palette_size)
    arcs = tuple(
        make_arc(positions[a], positions[b], schedule[coloring.colors[ei]],
                 HALF_PI, 1)
        for ei, (a, b) in enumerate(g.edges)
    )
    params = {
        "edge_colors": list(coloring.colors),
        "palette_size": coloring.palette_size,
        "alpha_schedule": schedule,
        "nudges": [0.0] * len(g.edges),
    }
    return _with_min_bound(
        ArcDiagram3D(graph=g, positions=positions, arcs=arcs, method="stationary",
                     params=params)
    )


def slanted_layout(
    g: Graph,
    dr: Drawing2D,
    interpretation: str = "inplane",
    coloring: Optional[Sequence[int]] = None,
    palette: Optional[Sequence[Tuple[float, float]]] = None,
) -> ArcDiagram3D:
    """Arcs in tilted planes, colored by (plane tilt, bend) pairs.

    With no explicit coloring, a proper edge coloring is mapped onto the
    generated palette.  An explicit coloring (with its palette of angle
    pairs, in radians) is validated for properness and used as given.
    """
    positions = _planar_positions(g, dr)
    d = g.max_degree
    if palette is None:
        palette = slanted_palette(d, interpretation)
    else:
        palette = [(float(t), float(b)) for t, b in palette]
        for t, b in palette:
            if not (0.0 <= t <= HALF_PI and 0.0 <= b <= HALF_PI):
                raise DomainError("palette angles must lie in [0, pi/2]")
    if coloring is None:
        ec = edge_coloring_vizing(g)
        if ec.palette_size > len(palette):
            raise TooManyColors(
                f"{ec.palette_size} colors needed, palette has {len(palette)}"
            )
        edge_colors = list(ec.colors)
    else:
        edge_colors = [int(c) for c in coloring]
        if len(edge_colors) != len(g.edges):
            raise DomainError("coloring must assign a color to every edge")
        if any(c < 0 or c >= len(palette) for c in edge_colors):
            raise DomainError("coloring uses a color outside the palette")
        probe = EdgeColoring(colors=tuple(edge_colors), palette_size=len(palette))
        conflict = find_edge_conflict(g, probe)
        if conflict is not None:
            raise DomainError(
                f"coloring is not proper: edges {conflict[1]} and {conflict[2]} "
                f"share a color at {conflict[0]!r}"
            )

    arcs = []
    for ei, (a, b) in enumerate(g.edges):
        tilt, bend = palette[edge_colors[ei]]
        plane_tilt, in_plane = _realize_color(tilt, bend, interpretation)
        arcs.append(make_arc(positions[a], positions[b], in_plane, plane_tilt, 1))
    params = {
        "edge_colors": edge_colors,
        "palette": [[t, b] for t, b in palette],
        "palette_size": len(palette),
        "interpretation": interpretation,
        "nudges": [0.0] * len(g.edges),
    }
    return _with_min_bound(
        ArcDiagram3D(graph=g, positions=positions, arcs=tuple(arcs),
                     method="slanted", params=params)
    )


def default_window_length(d: int) -> int:
    """Even window length close to sqrt(d): 2 * ceil(sqrt(d) / 2)."""
    if d < 1:
        return 2
    return max(2, 2 * math.ceil(math.sqrt(d) / 2.0))


def free_layout(g: Graph, dr: Drawing2D, L: Optional[int] = None) -> ArcDiagram3D:
    """Perpendicular arcs over a window-localized edge coloring.

    Requires a drawing with strictly positive 2D angular resolution; the
    same-color certificates lean on the window separation in the rotation
    induced by the drawing.
    """
    positions = _planar_positions(g, dr)
    try:
        r2 = angular_resolution_2d(g, dr)
    except NoAngles:
        r2 = None
    if r2 is not None and r2 <= 0.0:
        raise ZeroResolutionDrawing(
            "two incident edges leave a vertex in the same direction"
        )
    d = g.max_degree
    if L is None:
        L = default_window_length(d)
    rot = rotation_from_drawing(g, dr)
    coloring = localized_edge_coloring(g, rot, L)
    schedule = perpendicular_schedule(coloring.palette_size)
    arcs = tuple(
        make_arc(positions[a], positions[b], schedule[coloring.colors[ei]],
                 HALF_PI, 1)
        for ei, (a, b) in enumerate(g.edges)
    )
    params = {
        "edge_colors": list(coloring.colors),
        "palette_size": coloring.palette_size,
        "L": L,
        "alpha_schedule": schedule,
        "nudges": [0.0] * len(g.edges),
    }
    return _with_min_bound(
        ArcDiagram3D(graph=g, positions=positions, arcs=arcs, method="free",
                     params=params)
    )


# ---------------------------------------------------------------------------
# measurement and certification
# ---------------------------------------------------------------------------

def _incident_pairs(d: ArcDiagram3D):
    for v in d.graph.vertices:
        inc = d.graph.incidence[v]
        for x in range(len(inc)):
            for y in range(x + 1, len(inc)):
                yield v, inc[x], inc[y]


def _measure_pair(d: ArcDiagram3D, v: str, ei: int, ej: int) -> float:
    p = d.positions[v]
    return angle_between(tangent_at(d.arcs[ei], p), tangent_at(d.arcs[ej], p))


def angular_resolution_3d(d: ArcDiagram3D) -> ResolutionReport:
    """Minimum angle between outgoing tangents over all incident pairs."""
    best = None
    argmin = None
    per_vertex: Dict[str, float] = {}
    for v, ei, ej in _incident_pairs(d):
        measured = _measure_pair(d, v, ei, ej)
        if v not in per_vertex or measured < per_vertex[v]:
            per_vertex[v] = measured
        if best is None or measured < best:
            best = measured
            argmin = (v, ei, ej)
    if best is None:
        raise NoAngles("no vertex has two incident edges")
    return ResolutionReport(min_angle=best, argmin=argmin, per_vertex_min=per_vertex)


def _outgoing_xy(d: ArcDiagram3D, v: str, ei: int) -> Tuple[float, float]:
    w = d.graph.other_end(ei, v)
    p, q = d.positions[v], d.positions[w]
    return (q.x - p.x, q.y - p.y)


def _slanted_candidates(d: ArcDiagram3D, v: str, ei: int) -> List[Vec3]:
    """Tangent directions the arc's color admits at v, one per endpoint
    role, given the pair's 2D chord direction."""
    dx, dy = _outgoing_xy(d, v, ei)
    norm = math.hypot(dx, dy)
    u = Vec3(dx / norm, dy / norm, 0.0)
    left = Vec3(-u.y, u.x, 0.0)  # e_z x u
    arc = d.arcs[ei]
    alpha, tilt = arc.in_plane_angle, arc.plane_tilt
    ca, sa = math.cos(alpha), math.sin(alpha)
    ct, st = math.cos(tilt), math.sin(tilt)
    up = Vec3(0.0, 0.0, st)
    return [
        u * ca + (up + left * ct) * sa,
        u * ca + (up + left * (-ct)) * sa,
    ]


def _pair_bound(d: ArcDiagram3D, v: str, ei: int, ej: int) -> float:
    nudges = d.params.get("nudges") or [0.0] * len(d.arcs)
    slack = float(nudges[ei]) + float(nudges[ej])
    if d.method == "sphere":
        a = d.graph.other_end(ei, v)
        c = d.graph.other_end(ej, v)
        chord = (d.positions[a] - d.positions[c]).length
        return max(0.0, math.asin(min(1.0, 0.5 * chord)) - slack)
    if d.method in ("stationary", "free"):
        ai = d.arcs[ei].in_plane_angle
        aj = d.arcs[ej].in_plane_angle
        if d.method == "free":
            colors = d.params.get("edge_colors")
            if colors is not None and colors[ei] == colors[ej]:
                ui = _outgoing_xy(d, v, ei)
                uj = _outgoing_xy(d, v, ej)
                gamma = _ray_gap(math.atan2(ui[1], ui[0]), math.atan2(uj[1], uj[0]))
                return max(0.0, 0.5 * gamma - slack)
        return abs(ai - aj)
    if d.method == "slanted":
        best = math.inf
        for ti in _slanted_candidates(d, v, ei):
            for tj in _slanted_candidates(d, v, ej):
                best = min(best, angle_between(ti, tj))
        return best
    raise DomainError(f"no certified bound for method {d.method!r}")


def guarantee_check(
    d: ArcDiagram3D,
    tolerance: float = 1e-9,
    raise_on_violation: bool = True,
) -> ResolutionReport:
    """Compare every incident pair's measured angle with its certified
    lower bound; a pair passes when measured >= bound - tolerance.

    Returns the full report (measurements plus bound checks).  When any
    pair fails and ``raise_on_violation`` is set, raises BoundViolation
    carrying the failing checks.
    """
    checks: List[BoundCheck] = []
    best = None
    argmin = None
    per_vertex: Dict[str, float] = {}
    for v, ei, ej in _incident_pairs(d):
        measured = _measure_pair(d, v, ei, ej)
        bound = _pair_bound(d, v, ei, ej)
        checks.append(BoundCheck(
            vertex=v, edge_i=ei, edge_j=ej, measured=measured, bound=bound,
            passed=measured >= bound - tolerance,
        ))
        if v not in per_vertex or measured < per_vertex[v]:
            per_vertex[v] = measured
        if best is None or measured < best:
            best = measured
            argmin = (v, ei, ej)
    if best is None:
        raise NoAngles("no vertex has two incident edges")
    failures = [c for c in checks if not c.passed]
    if failures and raise_on_violation:
        worst = min(failures, key=lambda c: c.measured - c.bound)
        raise BoundViolation(
            f"measured angle {worst.measured:.12g} at {worst.vertex!r} "
            f"(edges {worst.edge_i}, {worst.edge_j}) is below the certified "
            f"bound {worst.bound:.12g}",
            failures,
        )
    return ResolutionReport(
        min_angle=best, argmin=argmin, per_vertex_min=per_vertex,
        bound_checks=tuple(checks),
    )


def _with_min_bound(d: ArcDiagram3D) -> ArcDiagram3D:
    """Record the smallest certified pair bound in the diagram params
    (None when the diagram has no incident pair)."""
    try:
        report = guarantee_check(d, raise_on_violation=False)
        min_bound = min(c.bound for c in report.bound_checks)
    except NoAngles:
        min_bound = None
    params = dict(d.params)
    params["min_bound"] = min_bound
    return ArcDiagram3D(graph=d.graph, positions=d.positions, arcs=d.arcs,
                        method=d.method, params=params)
