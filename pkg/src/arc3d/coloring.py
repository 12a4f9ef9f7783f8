"""Vertex and edge colorings.

Three coloring routines feed the layout constructions:

* ``greedy_vertex_coloring`` -- first-fit over vertices in input order,
  at most max_degree + 1 colors.
* ``edge_coloring_vizing`` -- proper edge coloring with at most d + 1
  colors via the fan-and-alternating-path recoloring scheme of Misra and
  Gries.
* ``localized_greedy`` / ``localized_edge_coloring`` -- colorings that are
  *window-localized*: around each endpoint of an edge, none of the L/2
  edges before it nor the L/2 edges after it in the clockwise rotation
  share its color.  The greedy pass runs in O(m * L) and uses at most
  2L + 1 colors; the combined op returns whichever of {greedy, classical}
  uses fewer colors, hence at most min(d, 2L) + 1.

Any proper edge coloring is window-localized for every L, because window
edges are incident to the shared endpoint.  The converse holds only when
the windows cover all incident edges (degree <= L).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import MissingRotation, OddL
from .graphs import Graph, RotationSystem


@dataclass(frozen=True)
class VertexColoring:
    colors: Mapping[str, int]
    palette_size: int


@dataclass(frozen=True)
class EdgeColoring:
    colors: Tuple[int, ...]  # aligned with edge indices
    palette_size: int


def greedy_vertex_coloring(g: Graph) -> VertexColoring:
    """First-fit coloring over vertices in input order."""
    colors: Dict[str, int] = {}
    for v in g.vertices:
        taken = set()
        for ei in g.incidence[v]:
            w = g.other_end(ei, v)
            if w in colors:
                taken.add(colors[w])
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    palette = 1 + max(colors.values()) if colors else 0
    return VertexColoring(colors=colors, palette_size=palette)


# ---------------------------------------------------------------------------
# classical proper edge coloring (fan rotation + alternating-path recoloring)
# ---------------------------------------------------------------------------

def edge_coloring_vizing(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree + 1 colors.

    Deterministic: neighbors are scanned in adjacency (edge input) order
    and the smallest free color is always preferred.
    """
    m = len(g.edges)
    if m == 0:
        return EdgeColoring(colors=(), palette_size=0)
    d = g.max_degree
    n_palette = d + 1
    color_of: List[Optional[int]] = [None] * m
    # per vertex: color -> edge index currently carrying it
    used: Dict[str, Dict[int, int]] = {v: {} for v in g.vertices}

    def other(ei: int, x: str) -> str:
        a, b = g.edges[ei]
        return b if x == a else a

    def first_free(v: str) -> int:
        for c in range(n_palette):
            if c not in used[v]:
                return c
        raise AssertionError("palette of d+1 colors left no free color")

    def assign(ei: int, c: int) -> None:
        a, b = g.edges[ei]
        old = color_of[ei]
        if old is not None:
            del used[a][old]
            del used[b][old]
        color_of[ei] = c
        used[a][c] = ei
        used[b][c] = ei

    def unassign(ei: int) -> None:
        a, b = g.edges[ei]
        old = color_of[ei]
        if old is not None:
            del used[a][old]
            del used[b][old]
            color_of[ei] = None

    for ei in range(m):
        u, v = g.edges[ei]
        # maximal fan around u starting at v: each next fan edge is colored
        # and its color is free at the previous fan tip
        fan_vert = [v]
        fan_edge = [ei]
        in_fan = {v}
        while True:
            tip = fan_vert[-1]
            found = None
            for ej in g.incidence[u]:
                if color_of[ej] is None:
                    continue
                w = other(ej, u)
                if w in in_fan:
                    continue
                if color_of[ej] not in used[tip]:
                    found = (w, ej)
                    break
            if found is None:
                break
            fan_vert.append(found[0])
            fan_edge.append(found[1])
            in_fan.add(found[0])

        c = first_free(u)
        d2 = first_free(fan_vert[-1])

        def rotate_prefix(j: int) -> None:
            # shift: edge to fan_vert[i] takes the color of the edge to
            # fan_vert[i+1]; edge j ends up uncolored
            targets = [color_of[fan_edge[i + 1]] for i in range(j)]
            for i in range(1, j + 1):
                unassign(fan_edge[i])
            for i in range(j):
                assign(fan_edge[i], targets[i])

        if d2 not in used[u]:
            # covers c == d2; rotate the whole fan and finish with d2
            rotate_prefix(len(fan_edge) - 1)
            assign(fan_edge[-1], d2)
            continue

        # invert the alternating (d2, c) path starting at u
        path = []
        cur = u
        want = d2
        while want in used[cur]:
            pe = used[cur][want]
            path.append(pe)
            cur = other(pe, cur)
            want = c if want == d2 else d2
        olds = [color_of[pe] for pe in path]
        for pe in path:
            unassign(pe)
        for pe, oc in zip(path, olds):
            assign(pe, c if oc == d2 else d2)

        # shortest fan prefix, still valid under the new colors, whose tip
        # has d2 free
        j = None
        for k in range(len(fan_vert)):
            if k > 0 and color_of[fan_edge[k]] in used[fan_vert[k - 1]]:
                break  # fan property broken past here
            if d2 not in used[fan_vert[k]]:
                j = k
                break
        if j is None:
            raise AssertionError("no fan prefix accepts the free color")
        rotate_prefix(j)
        assign(fan_edge[j], d2)

    final = [c for c in color_of]
    assert all(c is not None for c in final)
    return EdgeColoring(colors=tuple(final), palette_size=1 + max(final))


def find_edge_conflict(g: Graph, coloring: EdgeColoring):
    """First (vertex, edge, edge) sharing a color at a vertex, or None."""
    for v in g.vertices:
        seen: Dict[int, int] = {}
        for ei in g.incidence[v]:
            c = coloring.colors[ei]
            if c in seen:
                return (v, seen[c], ei)
            seen[c] = ei
    return None


def verify_edge_coloring(g: Graph, coloring: EdgeColoring) -> bool:
    """True iff no two incident edges share a color."""
    if len(coloring.colors) != len(g.edges):
        return False
    if any(c < 0 or c >= coloring.palette_size for c in coloring.colors):
        return False
    return find_edge_conflict(g, coloring) is None


# ---------------------------------------------------------------------------
# window-localized colorings
# ---------------------------------------------------------------------------

def _check_localized_args(g: Graph, rot: RotationSystem, L: int) -> None:
    if not isinstance(L, int) or L < 2 or L % 2 != 0:
        raise OddL(f"L must be a positive even integer, got {L!r}")
    for v in g.vertices:
        if v not in rot.order:
            raise MissingRotation(f"rotation system has no entry for {v!r}")
        if sorted(rot.order[v]) != sorted(g.incidence[v]):
            raise MissingRotation(
                f"rotation at {v!r} does not list exactly the incident edges"
            )


def window_edges(g: Graph, rot: RotationSystem, L: int, ei: int, v: str) -> Tuple[int, ...]:
    """Edges within L/2 positions of ``ei`` in the rotation at ``v``.

    When degree(v) <= L the window is all other incident edges.  The edge
    itself is never part of its own window.  Order: increasing offset,
    predecessor before successor.
    """
    lst = rot.order[v]
    k = len(lst)
    if k <= L:
        return tuple(ej for ej in lst if ej != ei)
    i = lst.index(ei)
    out = []
    for off in range(1, L // 2 + 1):
        out.append(lst[(i - off) % k])
        out.append(lst[(i + off) % k])
    return tuple(out)


def verify_localized(g: Graph, rot: RotationSystem, L: int, coloring: EdgeColoring) -> bool:
    """True iff no edge shares its color with any edge in either window."""
    _check_localized_args(g, rot, L)
    if len(coloring.colors) != len(g.edges):
        return False
    if any(c < 0 or c >= coloring.palette_size for c in coloring.colors):
        return False
    for ei, (u, v) in enumerate(g.edges):
        c = coloring.colors[ei]
        for end in (u, v):
            for ej in window_edges(g, rot, L, ei, end):
                if coloring.colors[ej] == c:
                    return False
    return True


def localized_greedy(g: Graph, rot: RotationSystem, L: int) -> EdgeColoring:
    """Window-localized first-fit coloring; O(m * L), at most 2L + 1 colors.

    Processes edges in input order; each edge takes the smallest color not
    used by an already-colored edge of its two windows.  The result always
    satisfies ``verify_localized`` but need not be a proper edge coloring:
    incident edges outside both windows may share a color.
    """
    _check_localized_args(g, rot, L)
    m = len(g.edges)
    colors: List[Optional[int]] = [None] * m
    half = L // 2
    pos_in: Dict[str, Dict[int, int]] = {
        v: {ej: i for i, ej in enumerate(rot.order[v])} for v in g.vertices
    }
    for ei, (u, v) in enumerate(g.edges):
        mask = 0
        for end in (u, v):
            lst = rot.order[end]
            k = len(lst)
            if k <= L:
                for ej in lst:
                    if ej != ei and colors[ej] is not None:
                        mask |= 1 << colors[ej]
            else:
                i = pos_in[end][ei]
                for off in range(1, half + 1):
                    for ej in (lst[(i - off) % k], lst[(i + off) % k]):
                        cj = colors[ej]
                        if cj is not None:
                            mask |= 1 << cj
        c = 0
        while (mask >> c) & 1:
            c += 1
        colors[ei] = c
    palette = 1 + max(colors) if colors else 0
    return EdgeColoring(colors=tuple(colors), palette_size=palette)


def localized_edge_coloring(g: Graph, rot: RotationSystem, L: int) -> EdgeColoring:
    """Window-localized coloring with at most min(d, 2L) + 1 colors.

    Runs the window-greedy pass (<= 2L + 1 colors) and the classical
    coloring (<= d + 1 colors, localized for free because it is proper)
    and returns whichever palette is smaller; ties go to the greedy.
    """
    _check_localized_args(g, rot, L)
    greedy = localized_greedy(g, rot, L)
    classical = edge_coloring_vizing(g)
    if greedy.palette_size <= classical.palette_size:
        return greedy
    return classical
