"""Drawing a bounded-degree graph on the unit sphere with straight chords.

Vertices that are close in the graph (adjacent, or sharing a neighbour)
must not crowd each other on the sphere, so they are assigned to distinct
cluster positions spread over a band around the equator.  Vertices that
are far apart in the graph may share a cluster; they sit on a small
circle around it.  Every edge becomes a straight chord, and the angle two
chords make at a shared vertex is at least asin(half the distance between
the two far endpoints), which the cluster spacing keeps large.

Writes sphere_scene.obj next to the current directory for any viewer
that reads OBJ polylines.
"""

from arc3d import export_obj, generate, guarantee_check, sphere_layout

g, _, _ = generate("random", 14, 4, seed=3)
print(f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges, "
      f"max degree {g.max_degree}")

diagram = sphere_layout(g)
report = guarantee_check(diagram)

clusters = diagram.params["vertex_cluster"]
used = sorted(set(clusters.values()))
print(f"clusters used           : {len(used)} of d(d+1) = "
      f"{g.max_degree * (g.max_degree + 1)}")
print(f"cluster spacing         : {diagram.params['cluster_min_distance']:.4f}")
print(f"epsilon circle radius   : {diagram.params['epsilon']:.4f}")
print(f"min angle at a vertex   : {report.min_angle:.4f} rad")
print(f"smallest certified bound: {diagram.params['min_bound']:.4f} rad")

with open("sphere_scene.obj", "w", encoding="utf-8") as fh:
    fh.write(export_obj(diagram, samples=2))
print("wrote sphere_scene.obj (chords as 2-point polylines)")
