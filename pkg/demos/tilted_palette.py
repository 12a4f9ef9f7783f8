"""A hand-picked palette of (plane tilt, bend) pairs on a dense graph.

Instead of lifting all arcs perpendicular to the page, each color class
gets its own combination of plane tilt and in-plane bend, so a degree-5
graph needs only five classes built from three tilt values.  The palette
below uses tilts 0, 22.5 and 45 degrees; all arcs bulge to the same side
of the base plane, so the picture stays one-sided.
"""

import math

from arc3d import Drawing2D, build_graph, guarantee_check, sample_arc, slanted_layout

positions = {"a": (0.0, 0.0), "b": (1.0, 0.4), "c": (1.5, -0.4),
             "d": (1.7, 1.1), "e": (1.8, -1.1), "f": (2.1, -1.6)}
edges = [("a", "b"), ("a", "d"), ("a", "e"), ("a", "f"),
         ("b", "c"), ("b", "d"), ("b", "e"), ("c", "d"),
         ("c", "e"), ("d", "e"), ("d", "f"), ("e", "f")]
colors = [2, 0, 4, 1, 0, 1, 3, 4, 1, 2, 3, 0]

t8 = math.pi / 8
t4 = math.pi / 4
palette = [(0.0, 0.0), (t8, 0.0), (t8, t8), (t4, 0.0), (t4, t4)]

g = build_graph(list(positions), edges)
diagram = slanted_layout(g, Drawing2D(positions),
                         coloring=colors, palette=palette)

print(f"{len(edges)} edges, max degree {g.max_degree}, "
      f"{len(palette)} palette entries")
for ei, (u, v) in enumerate(edges):
    tilt, bend = palette[colors[ei]]
    print(f"  {u}-{v}: color {colors[ei]}  tilt {math.degrees(tilt):4.1f}  "
          f"bend {math.degrees(bend):4.1f}")

report = guarantee_check(diagram)
print(f"min angle between edges at a shared vertex: "
      f"{math.degrees(report.min_angle):.2f} degrees")

zmin = min(p.z for arc in diagram.arcs for p in sample_arc(arc, 64))
zmax = max(p.z for arc in diagram.arcs for p in sample_arc(arc, 64))
print(f"sampled z range: [{zmin:.3g}, {zmax:.3f}] (never below the page)")
