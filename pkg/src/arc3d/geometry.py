"""Circular arcs in 3D and the angle arithmetic behind the layouts.

An arc is parameterized by its endpoints, an *in-plane angle* and a
*plane tilt*:

* the arc lies in a plane through the chord ab whose dihedral angle with
  the base plane (z = 0, about the chord) is ``plane_tilt``; tilt pi/2 is
  the perpendicular plane, tilt 0 keeps the arc inside the base plane;
* within that plane the arc meets the chord at angle ``in_plane_angle``
  at both endpoints, so the radius is |ab| / (2 sin a) and the apex sits
  (|ab|/2) tan(a/2) above the chord; angle 0 degenerates to the straight
  segment;
* ``side`` picks which of the two mirror-image tilted half-planes holds
  the bulge: with side +1 the half-plane is the +z half of the
  perpendicular plane rotated by (pi/2 - tilt) about the directed chord
  a->b toward the left of a->b.

For endpoints in the base plane the outgoing tangent climbs at elevation
asin(sin(in_plane_angle) * sin(plane_tilt)) above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from .errors import DegenerateChord, DomainError, PerturbationFailed, ZeroVector
from .graphs import Graph

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class Vec3:
    x: float
    y: float
    z: float

    def __add__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def dot(self, o: "Vec3") -> float:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "Vec3") -> "Vec3":
        return Vec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    @property
    def length(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vec3":
        n = self.length
        if n == 0.0:
            raise ZeroVector("cannot normalize the zero vector")
        return Vec3(self.x / n, self.y / n, self.z / n)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)


EX = Vec3(1.0, 0.0, 0.0)
EZ = Vec3(0.0, 0.0, 1.0)


def angle_between(v1: Vec3, v2: Vec3) -> float:
    """Angle between two direction vectors, in [0, pi].

    Evaluated as atan2(|v1 x v2|, v1 . v2), which agrees with the arccos
    of the normalized dot product but stays accurate near 0 and pi.
    """
    if v1.length == 0.0 or v2.length == 0.0:
        raise ZeroVector("angle undefined for the zero vector")
    return math.atan2(v1.cross(v2).length, v1.dot(v2))


def _clamped_acos(c: float) -> float:
    return math.acos(max(-1.0, min(1.0, c)))


def equal_elevation_angle(projected_angle: float, elevation: float) -> float:
    """Angle between two unit directions that both climb ``elevation``
    above a plane while their projections onto it are ``projected_angle``
    apart.

    Closed form: cos delta = 1 - cos^2(elevation) (1 - cos(projected_angle)).
    For elevation <= pi/4 the result is at least projected_angle / 2.
    """
    if not 0.0 <= projected_angle <= math.pi:
        raise DomainError("projected_angle must lie in [0, pi]")
    if not 0.0 <= elevation <= math.pi / 4.0:
        raise DomainError("elevation must lie in [0, pi/4]")
    ce = math.cos(elevation)
    return _clamped_acos(1.0 - ce * ce * (1.0 - math.cos(projected_angle)))


def mixed_elevation_angle(in_plane_angle: float, elevation: float) -> float:
    """Angle between a direction inside a plane and one climbing
    ``elevation`` above it, their projections ``in_plane_angle`` apart.

    Closed form: cos delta = cos(in_plane_angle) cos(elevation), which is
    never smaller than ``elevation`` itself.
    """
    if not 0.0 <= in_plane_angle <= HALF_PI:
        raise DomainError("in_plane_angle must lie in [0, pi/2]")
    if not 0.0 <= elevation < math.pi / 4.0:
        raise DomainError("elevation must lie in [0, pi/4)")
    return _clamped_acos(math.cos(in_plane_angle) * math.cos(elevation))


# ---------------------------------------------------------------------------
# arcs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CircularArc:
    a: Vec3
    b: Vec3
    in_plane_angle: float
    plane_tilt: float
    side: int


def make_arc(a: Vec3, b: Vec3, in_plane_angle: float, plane_tilt: float, side: int = 1) -> CircularArc:
    if (b - a).length == 0.0:
        raise DegenerateChord("arc endpoints coincide")
    if not 0.0 <= in_plane_angle <= HALF_PI:
        raise DomainError("in_plane_angle must lie in [0, pi/2]")
    if not 0.0 <= plane_tilt <= HALF_PI:
        raise DomainError("plane_tilt must lie in [0, pi/2]")
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1")
    return CircularArc(a=a, b=b, in_plane_angle=in_plane_angle, plane_tilt=plane_tilt, side=side)


def arc_frame(arc: CircularArc) -> Tuple[Vec3, Vec3]:
    """Unit chord direction u and unit bulge direction v of the arc plane.

    v = up * sin(tilt) + side * left * cos(tilt), where left = e_z x u and
    up = u x left is the chord-perpendicular closest to +z.  Chords
    parallel to the z axis fall back to the x axis as reference.
    """
    u = (arc.b - arc.a).normalized()
    left = EZ.cross(u)
    if left.length < 1e-12:
        left = EX.cross(u)
    left = left.normalized()
    up = u.cross(left)
    s = 1.0 if arc.side > 0 else -1.0
    v = up * math.sin(arc.plane_tilt) + left * (s * math.cos(arc.plane_tilt))
    return u, v


def arc_plane_normal(arc: CircularArc) -> Vec3:
    u, v = arc_frame(arc)
    return u.cross(v)


def arc_radius(arc: CircularArc) -> Optional[float]:
    """Circle radius |ab| / (2 sin a), or None for a straight segment."""
    if arc.in_plane_angle == 0.0:
        return None
    return (arc.b - arc.a).length / (2.0 * math.sin(arc.in_plane_angle))

def arc_center(arc: CircularArc) -> Optional[Vec3]:
    if arc.in_plane_angle == 0.0:
        return None
    u, v = arc_frame(arc)
    mid = (arc.a + arc.b) * 0.5
    half = 0.5 * (arc.b - arc.a).length
    # center sits below the chord, opposite the bulge
    return mid - v * (half * math.cos(arc.in_plane_angle) / math.sin(arc.in_plane_angle))


def apex_height(arc: CircularArc) -> float:
    """Height of the arc apex above the chord: (|ab|/2) tan(a/2)."""
    half = 0.5 * (arc.b - arc.a).length
    return half * math.tan(0.5 * arc.in_plane_angle)


def sample_arc(arc: CircularArc, k: int) -> List[Vec3]:
    """k points along the arc at uniform parameter values, endpoints included."""
    if k < 2:
        raise DomainError("need at least two sample points")
    if arc.in_plane_angle == 0.0:
        out = []
        for i in range(k):
            t = i / (k - 1)
            out.append(arc.a * (1.0 - t) + arc.b * t)
        return out
    u, v = arc_frame(arc)
    alpha = arc.in_plane_angle
    half = 0.5 * (arc.b - arc.a).length
    r = half / math.sin(alpha)
    center = arc_center(arc)
    out = []
    for i in range(k):
        t = i / (k - 1)
        # sweep from phi = pi/2 + a (at a) down to pi/2 - a (at b)
        phi = HALF_PI + alpha * (1.0 - 2.0 * t)
        out.append(center + (u * math.cos(phi) + v * math.sin(phi)) * r)
    return out


def tangent_at(arc: CircularArc, endpoint: Vec3) -> Vec3:
    """Unit tangent of the arc at one of its endpoints, pointing into it.

    The endpoint must equal ``arc.a`` or ``arc.b`` exactly.  The tangent
    forms ``in_plane_angle`` with the chord at either end, rotated toward
    the bulge.
    """
    u, v = arc_frame(arc)
    alpha = arc.in_plane_angle
    if endpoint == arc.a:
        sgn = 1.0
    elif endpoint == arc.b:
        sgn = -1.0
    else:
        raise DomainError("endpoint is not an endpoint of this arc")
    if alpha == 0.0:
        return u * sgn
    return u * (sgn * math.cos(alpha)) + v * math.sin(alpha)


def tangent_elevation(arc: CircularArc) -> float:
    """Elevation of the endpoint tangents above the base plane when the
    chord lies in it: asin(sin(in_plane_angle) sin(plane_tilt))."""
    return math.asin(math.sin(arc.in_plane_angle) * math.sin(arc.plane_tilt))


# ---------------------------------------------------------------------------
# assembled diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class ArcDiagram3D:
    """A graph, vertex positions in space, one arc per edge, and the
    method metadata needed to re-derive the certified bounds."""

    graph: Graph
    positions: Mapping[str, Vec3]
    arcs: Tuple[CircularArc, ...]
    method: str
    params: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class ClearanceReport:
    min_distance: float  # inf when no non-incident pair exists
    argmin: Optional[Tuple[int, int]]
    distances: Mapping[Tuple[int, int], float]


def arc_clearance(d: ArcDiagram3D, samples: int = 32) -> ClearanceReport:
    """Minimum sampled distance between arcs of non-incident edges.

    Each arc is sampled at ``samples`` points; the reported distance per
    pair is the minimum over the sample-point grid, so it is an upper
    bound on the true clearance, suitable for flagging near-collisions.
    """
    if samples < 2:
        raise DomainError("need at least two sample points")
    m = len(d.arcs)
    pts = np.empty((m, samples, 3))
    for i, arc in enumerate(d.arcs):
        pts[i] = [p.as_tuple() for p in sample_arc(arc, samples)]
    distances: Dict[Tuple[int, int], float] = {}
    best = math.inf
    argmin = None
    for i in range(m):
        si = set(d.graph.edges[i])
        for j in range(i + 1, m):
            if si & set(d.graph.edges[j]):
                continue
            diff = pts[i][:, None, :] - pts[j][None, :, :]
            dist = float(np.sqrt((diff * diff).sum(axis=2)).min())
            distances[(i, j)] = dist
            if dist < best:
                best = dist
                argmin = (i, j)
    return ClearanceReport(min_distance=best, argmin=argmin, distances=distances)


def perturb(
    d: ArcDiagram3D,
    epsilon_fraction: float,
    samples: int = 32,
    threshold: float = 1e-9,
    budget: int = 8,
) -> ArcDiagram3D:
    """Resolve sampled arc collisions by nudging in-plane angles.

    For every non-incident pair whose sampled clearance is at most
    ``threshold``, the arc with the higher edge index gets its in-plane
    angle increased by epsilon_fraction * (the diagram's stored minimum
    guaranteed bound), then the clearance check is repeated, up to
    ``budget`` rounds.  Accumulated nudges are recorded in
    ``params["nudges"]`` so certification can subtract them.  A diagram
    with no flagged pair is returned unchanged.
    """
    if epsilon_fraction < 0.0:
        raise DomainError("epsilon_fraction must be nonnegative")
    base = d.params.get("min_bound")
    if not isinstance(base, (int, float)) or not base or base <= 0.0:
        base = math.pi / 4.0
    step = epsilon_fraction * float(base)
    work = d
    for _ in range(budget + 1):
        rep = arc_clearance(work, samples)
        flagged = sorted(
            pair for pair, dist in rep.distances.items() if dist <= threshold
        )
        if not flagged:
            return work
        if step == 0.0:
            raise PerturbationFailed(
                "flagged pairs present but the nudge step is zero", flagged
            )
        nudges = list(work.params.get("nudges", [0.0] * len(work.arcs)))
        arcs = list(work.arcs)
        for (_, j) in flagged:
            arc = arcs[j]
            new_angle = min(HALF_PI, arc.in_plane_angle + step)
            nudges[j] += new_angle - arc.in_plane_angle
            arcs[j] = replace(arc, in_plane_angle=new_angle)
        params = dict(work.params)
        params["nudges"] = nudges
        work = ArcDiagram3D(
            graph=work.graph,
            positions=work.positions,
            arcs=tuple(arcs),
            method=work.method,
            params=params,
        )
    rep = arc_clearance(work, samples)
    flagged = sorted(pair for pair, dist in rep.distances.items() if dist <= threshold)
    if flagged:
        raise PerturbationFailed(
            f"collisions remained after {budget} rounds", flagged
        )
    return work
