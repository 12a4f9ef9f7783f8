"""Why a localized edge coloring can use far fewer colors than a proper one.

A proper edge coloring of a 12-spoke star needs 12 colors, one per
spoke.  But if two spokes only ever interfere when they are rotational
neighbours, it is enough that each spoke differ from the L/2 spokes
before and after it around the hub.  The window-greedy pass hands out at
most min(d, 2L) + 1 colors in one sweep, whatever the graph.
"""

from arc3d import (
    edge_coloring_vizing,
    generate,
    localized_edge_coloring,
    rotation_from_drawing,
    verify_localized,
)

g, drawing, _ = generate("star", 12)
rot = rotation_from_drawing(g, drawing)

proper = edge_coloring_vizing(g)
print(f"proper coloring: {proper.palette_size} colors "
      f"(every pair of spokes conflicts)")

for L in (2, 4, 6, 10):
    col = localized_edge_coloring(g, rot, L)
    assert verify_localized(g, rot, L, col)
    print(f"window L={L:<2}    : {col.palette_size} colors  "
          f"{list(col.colors)}")

# at L = 12 the window swallows the whole hub and properness is back
col = localized_edge_coloring(g, rot, 12)
print(f"window L=12    : {col.palette_size} colors "
      f"(window covers all spokes)")
