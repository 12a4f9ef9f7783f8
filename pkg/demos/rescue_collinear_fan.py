"""A fan whose spokes are almost collinear, rescued without moving a vertex.

The hub sees its six neighbours under angles of about a hundredth of a
degree, so the flat drawing is unreadable.  The stationary layout keeps
every vertex exactly where it is and lifts the edges onto perpendicular
circular arcs whose in-plane angles follow a uniform schedule over a
proper edge coloring.  Any two edges meeting at a vertex then differ in
tangent direction by at least the schedule gap, no matter how tight the
flat drawing was.
"""

import math

from arc3d import Drawing2D, angular_resolution_2d, build_graph, guarantee_check, stationary_layout

k = 6
kappa = 2e-5

vertices = ["hub"] + [f"tip{i}" for i in range(k)]
edges = [("hub", f"tip{i}") for i in range(k)]
g = build_graph(vertices, edges)
positions = {"hub": (0.0, 0.0)}
for i in range(k):
    positions[f"tip{i}"] = (1.0, kappa * i)
drawing = Drawing2D(positions)

flat = angular_resolution_2d(g, drawing)
print(f"flat drawing resolution : {flat:.3e} rad "
      f"({math.degrees(flat):.5f} degrees)")

diagram = stationary_layout(g, drawing)
c = diagram.params["palette_size"]
report = guarantee_check(diagram)

print(f"edge colors             : {diagram.params['edge_colors']}")
print(f"schedule ({c} colors)     : "
      + ", ".join(f"{a:.4f}" for a in diagram.params["alpha_schedule"]))
print(f"lifted resolution       : {report.min_angle:.6f} rad "
      f"({math.degrees(report.min_angle):.2f} degrees)")
print(f"guaranteed floor        : {math.pi / (4 * (c - 1)):.6f} rad")
print(f"improvement             : {report.min_angle / flat:.0f}x")

assert report.min_angle >= math.pi / (4 * (c - 1)) - 1e-9
for v in vertices:
    assert diagram.positions[v].as_tuple()[:2] == positions[v]
print("all vertices kept their 2D coordinates")
