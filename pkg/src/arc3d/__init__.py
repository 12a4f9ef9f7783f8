"""3D arc diagrams of bounded-degree graphs with certified angular resolution.

A drawing places vertices in the plane z = 0 (or on the unit sphere) and
realizes each edge as a circular arc in 3D. Four constructions are provided,
each shipping a per-pair lower bound on the angle between arcs meeting at a
shared vertex; ``guarantee_check`` re-measures every pair and certifies the
bounds numerically.
"""

from .errors import (
    Arc3dError,
    BadParams,
    BoundViolation,
    CoincidentDirections,
    ColoringError,
    DegenerateChord,
    DomainError,
    DrawingError,
    DuplicateEdge,
    DuplicateVertex,
    GeometryError,
    GraphError,
    InvalidDrawing,
    IOFormatError,
    MissingRotation,
    NoAngles,
    OddL,
    ParseError,
    PerturbationFailed,
    SelfLoop,
    TooManyColors,
    UnknownVertex,
    ValidationError,
    ZeroResolutionDrawing,
    ZeroVector,
)
from .graphs import (
    Drawing2D,
    Graph,
    RotationSystem,
    angular_resolution_2d,
    build_graph,
    rotation_from_drawing,
    square_graph,
)
from .coloring import (
    EdgeColoring,
    VertexColoring,
    edge_coloring_vizing,
    find_edge_conflict,
    greedy_vertex_coloring,
    localized_edge_coloring,
    localized_greedy,
    verify_edge_coloring,
    verify_localized,
    window_edges,
)
from .geometry import (
    ArcDiagram3D,
    CircularArc,
    ClearanceReport,
    Vec3,
    angle_between,
    apex_height,
    arc_center,
    arc_clearance,
    arc_frame,
    arc_plane_normal,
    arc_radius,
    equal_elevation_angle,
    make_arc,
    mixed_elevation_angle,
    perturb,
    sample_arc,
    tangent_at,
    tangent_elevation,
)
from .layouts import (
    BoundCheck,
    ResolutionReport,
    angular_resolution_3d,
    cluster_positions,
    default_window_length,
    free_layout,
    guarantee_check,
    perpendicular_schedule,
    slanted_layout,
    slanted_palette,
    sphere_layout,
    stationary_layout,
)
from .generators import generate
from .sceneio import (
    GraphDocument,
    emit_graph,
    emit_scene,
    export_obj,
    parse_graph,
    parse_scene,
    report_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "Arc3dError",
    "ArcDiagram3D",
    "BadParams",
    "BoundCheck",
    "BoundViolation",
    "CircularArc",
    "ClearanceReport",
    "CoincidentDirections",
    "ColoringError",
    "DegenerateChord",
    "DomainError",
    "Drawing2D",
    "DrawingError",
    "DuplicateEdge",
    "DuplicateVertex",
    "EdgeColoring",
    "GeometryError",
    "Graph",
    "GraphDocument",
    "GraphError",
    "IOFormatError",
    "InvalidDrawing",
    "MissingRotation",
    "NoAngles",
    "OddL",
    "ParseError",
    "PerturbationFailed",
    "ResolutionReport",
    "RotationSystem",
    "SelfLoop",
    "TooManyColors",
    "UnknownVertex",
    "ValidationError",
    "Vec3",
    "VertexColoring",
    "ZeroResolutionDrawing",
    "ZeroVector",
    "angle_between",
    "angular_resolution_2d",
    "angular_resolution_3d",
    "apex_height",
    "arc_center",
    "arc_clearance",
    "arc_frame",
    "arc_plane_normal",
    "arc_radius",
    "build_graph",
    "cluster_positions",
    "default_window_length",
    "edge_coloring_vizing",
    "emit_graph",
    "emit_scene",
    "equal_elevation_angle",
    "export_obj",
    "find_edge_conflict",
    "free_layout",
    "generate",
    "greedy_vertex_coloring",
    "guarantee_check",
    "localized_edge_coloring",
    "localized_greedy",
    "make_arc",
    "mixed_elevation_angle",
    "parse_graph",
    "parse_scene",
    "perpendicular_schedule",
    "perturb",
    "report_to_dict",
    "rotation_from_drawing",
    "sample_arc",
    "slanted_layout",
    "slanted_palette",
    "sphere_layout",
    "square_graph",
    "stationary_layout",
    "tangent_at",
    "tangent_elevation",
    "verify_edge_coloring",
    "verify_localized",
    "window_edges",
]
