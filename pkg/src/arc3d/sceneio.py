"""JSON file formats for graphs and scenes, plus OBJ polyline export.

Both formats are single JSON documents.  Emission is canonical: fixed key
order, floats in shortest round-trip notation (Python repr), so emitting
a parsed document reproduces it byte for byte and parse(emit(x)) == x.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import Arc3dError, ParseError, ValidationError
from .geometry import (
    ArcDiagram3D,
    Vec3,
    arc_center,
    arc_plane_normal,
    arc_radius,
    make_arc,
    sample_arc,
)
from .graphs import Drawing2D, Graph, RotationSystem, build_graph
from .layouts import ResolutionReport


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    drawing: Optional[Drawing2D]
    rotation: Optional[RotationSystem]
    meta: Mapping


# ---------------------------------------------------------------------------
# graph files
# ---------------------------------------------------------------------------

def emit_graph(
    g: Graph,
    drawing: Optional[Drawing2D] = None,
    rotation: Optional[RotationSystem] = None,
    meta: Optional[Mapping] = None,
) -> str:
    verts = []
    for v in g.vertices:
        entry: Dict[str, object] = {"id": v}
        if drawing is not None:
            x, y = drawing.positions[v]
            entry["x"] = float(x)
            entry["y"] = float(y)
        verts.append(entry)
    doc: Dict[str, object] = {
        "format": "graph",
        "vertices": verts,
        "edges": [[a, b] for a, b in g.edges],
    }
    if rotation is not None:
        doc["rotation"] = {v: list(rotation.order[v]) for v in g.vertices}
    if meta:
        doc["meta"] = dict(meta)
    return json.dumps(doc, indent=2) + "\n"


def parse_graph(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != "graph":
        raise ParseError('expected a JSON object with "format": "graph"')
    verts = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise ParseError('"vertices" and "edges" must be lists')

    ids: List[str] = []
    positions: Dict[str, Tuple[float, float]] = {}
    for entry in verts:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError('each vertex needs a string "id"')
        vid = entry["id"]
        ids.append(vid)
        has_x = "x" in entry
        has_y = "y" in entry
        if has_x != has_y:
            raise ParseError(f'vertex {vid!r} has only one of "x"/"y"')
        if has_x:
            x, y = entry["x"], entry["y"]
            if not isinstance(x, (int, float)) or not isinstance(y, (int, float)):
                raise ParseError(f"position of {vid!r} must be numeric")
            positions[vid] = (float(x), float(y))

    pairs: List[Tuple[str, str]] = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list)) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise ParseError(f"edge {i} must be a pair of vertex ids")
        pairs.append((e[0], e[1]))

    try:
        g = build_graph(ids, pairs)
    except Arc3dError as exc:
        raise ValidationError(str(exc)) from exc

    drawing = None
    if positions:
        if len(positions) != len(ids):
            raise ValidationError("either every vertex has a position or none does")
        try:
            drawing = Drawing2D(positions)
        except Arc3dError as exc:
            raise ValidationError(str(exc)) from exc

    rotation = None
    rot = doc.get("rotation")
    if rot is not None:
        if not isinstance(rot, dict):
            raise ParseError('"rotation" must map vertex ids to edge index lists')
        order = {}
        for v, lst in rot.items():
            if not isinstance(lst, list) or not all(
                isinstance(i, int) and 0 <= i < len(pairs) for i in lst
            ):
                raise ParseError(f"rotation at {v!r} must list edge indices")
            order[v] = tuple(lst)
        rotation = RotationSystem(order=order)

    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise ParseError('"meta" must be an object')
    return GraphDocument(graph=g, drawing=drawing, rotation=rotation, meta=meta)


# ---------------------------------------------------------------------------
# scene files
# ---------------------------------------------------------------------------

def _vec(v: Vec3) -> List[float]:
    return [v.x, v.y, v.z]


def report_to_dict(report: ResolutionReport) -> Dict[str, object]:
    failures = [c for c in report.bound_checks if not c.passed]
    out: Dict[str, object] = {
        "min_angle": report.min_angle,
        "argmin": [report.argmin[0], report.argmin[1], report.argmin[2]],
        "per_vertex_min": {v: report.per_vertex_min[v] for v in sorted(report.per_vertex_min)},
    }
    if report.bound_checks:
        out["bound_checks"] = {
            "count": len(report.bound_checks),
            "failures": len(failures),
            "worst_margin": min(c.measured - c.bound for c in report.bound_checks),
            "min_bound": min(c.bound for c in report.bound_checks),
        }
    return out


def emit_scene(d: ArcDiagram3D, report=None) -> str:
    """Serialize a diagram (and optional measurement report) to JSON."""
    verts = []
    for v in d.graph.vertices:
        p = d.positions[v]
        verts.append({"id": v, "x": p.x, "y": p.y, "z": p.z})
    arcs = []
    for ei, arc in enumerate(d.arcs):
        a, b = d.graph.edges[ei]
        center = arc_center(arc)
        radius = arc_radius(arc)
        arcs.append({
            "edge": [a, b],
            "a": _vec(arc.a),
            "b": _vec(arc.b),
            "in_plane_angle": arc.in_plane_angle,
            "plane_tilt": arc.plane_tilt,
            "side": arc.side,
            "center": None if center is None else _vec(center),
            "radius": radius,
            "plane_normal": _vec(arc_plane_normal(arc)),
        })
    if isinstance(report, ResolutionReport):
        report = report_to_dict(report)
    doc = {
        "format": "scene",
        "method": d.method,
        "parameters": dict(d.params),
        "vertices": verts,
        "arcs": arcs,
        "report": report,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_scene(text: str) -> Tuple[ArcDiagram3D, Optional[Dict]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != "scene":
        raise ParseError('expected a JSON object with "format": "scene"')
    method = doc.get("method")
    if not isinstance(method, str):
        raise ParseError('"method" must be a string')
    params = doc.get("parameters")
    if not isinstance(params, dict):
        raise ParseError('"parameters" must be an object')
    verts = doc.get("vertices")
    arcs_doc = doc.get("arcs")
    if not isinstance(verts, list) or not isinstance(arcs_doc, list):
        raise ParseError('"vertices" and "arcs" must be lists')

    positions: Dict[str, Vec3] = {}
    ids: List[str] = []
    for entry in verts:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError('each vertex needs a string "id"')
        vid = entry["id"]
        try:
            p = Vec3(float(entry["x"]), float(entry["y"]), float(entry["z"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"vertex {vid!r} needs numeric x, y, z") from exc
        if not all(math.isfinite(c) for c in p.as_tuple()):
            raise ValidationError(f"position of {vid!r} is not finite")
        ids.append(vid)
        positions[vid] = p

    edges: List[Tuple[str, str]] = []
    arc_list = []
    for i, entry in enumerate(arcs_doc):
        if not isinstance(entry, dict):
            raise ParseError(f"arc {i} must be an object")
        e = entry.get("edge")
        if (not isinstance(e, list)) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise ParseError(f"arc {i} needs an edge pair of vertex ids")
        edges.append((e[0], e[1]))
        try:
            a = Vec3(*[float(c) for c in entry["a"]])
            b = Vec3(*[float(c) for c in entry["b"]])
            in_plane = float(entry["in_plane_angle"])
            tilt = float(entry["plane_tilt"])
            side = int(entry["side"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"arc {i} has missing or non-numeric fields") from exc
        arc_list.append((a, b, in_plane, tilt, side))

    try:
        g = build_graph(ids, edges)
    except Arc3dError as exc:
        raise ValidationError(str(exc)) from exc

    arcs = []
    for i, ((u, v), (a, b, in_plane, tilt, side)) in enumerate(zip(edges, arc_list)):
        if a != positions[u] or b != positions[v]:
            raise ValidationError(
                f"arc {i} endpoints disagree with the positions of {u!r}, {v!r}"
            )
        try:
            arcs.append(make_arc(a, b, in_plane, tilt, side))
        except Arc3dError as exc:
            raise ValidationError(f"arc {i}: {exc}") from exc

    report = doc.get("report")
    if report is not None and not isinstance(report, dict):
        raise ParseError('"report" must be an object or null')
    diagram = ArcDiagram3D(graph=g, positions=positions, arcs=tuple(arcs),
                           method=method, params=params)
    return diagram, report


# ---------------------------------------------------------------------------
# OBJ export
# ---------------------------------------------------------------------------

def export_obj(d: ArcDiagram3D, samples: int = 32) -> str:
    """Sampled polylines, one per arc: ``samples`` vertices each followed
    by an ``l`` record with 1-based contiguous indices.  Arc endpoints are
    repeated per arc, so the vertex count is samples * |E|."""
    lines: List[str] = []
    count = 0
    for arc in d.arcs:
        for p in sample_arc(arc, samples):
            lines.append(f"v {p.x} {p.y} {p.z}")
        lines.append("l " + " ".join(str(i) for i in range(count + 1, count + samples + 1)))
        count += samples
    return "\n".join(lines) + "\n"
