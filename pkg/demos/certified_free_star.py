"""Per-pair certificates on a free layout, and what happens when they lie.

The free layout colors edges through rotation windows, lifts each color
class to its own in-plane angle, and stores enough metadata to re-derive
a lower bound for every pair of edges meeting at a vertex.  The check
re-measures all pairs against those bounds.  Tampering with the arcs
afterwards is caught, because the stored same-color certificate no
longer matches what the arcs deliver.
"""

from dataclasses import replace

from arc3d import (
    ArcDiagram3D,
    BoundViolation,
    free_layout,
    generate,
    guarantee_check,
)

g, drawing, _ = generate("star", 8)
diagram = free_layout(g, drawing, L=4)

print(f"colors   : {diagram.params['edge_colors']}")
print(f"schedule : "
      + ", ".join(f"{a:.4f}" for a in diagram.params["alpha_schedule"]))

report = guarantee_check(diagram)
print(f"{len(report.bound_checks)} pairs checked, min angle "
      f"{report.min_angle:.4f}, smallest bound "
      f"{min(c.bound for c in report.bound_checks):.4f}")
worst = min(report.bound_checks, key=lambda c: c.measured - c.bound)
print(f"tightest pair: edges {worst.edge_i} and {worst.edge_j} at "
      f"{worst.vertex!r}, measured {worst.measured:.4f} vs bound "
      f"{worst.bound:.4f}")

# now sabotage two same-colored arcs: raise both to a quarter turn so
# their tangents at the hub point straight up, parallel to each other
colors = diagram.params["edge_colors"]
same = [ei for ei in range(len(colors)) if colors[ei] == colors[0]]
arcs = list(diagram.arcs)
for ei in same[:2]:
    arcs[ei] = replace(arcs[ei], in_plane_angle=3.14159 / 2)
tampered = ArcDiagram3D(graph=diagram.graph, positions=diagram.positions,
                        arcs=tuple(arcs), method=diagram.method,
                        params=diagram.params)

try:
    guarantee_check(tampered)
    print("tampering went unnoticed (this should not happen)")
except BoundViolation as exc:
    print(f"tampering caught: {exc}")
