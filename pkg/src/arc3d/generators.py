"""Deterministic instance generators: star, fan, grid, random.

Each generator returns (graph, drawing, meta).  The meta dict records the
family, its parameters, the seed where one applies, and the exact 2D
angular resolution for the families where it is known in closed form
(star: 2 pi / k, fan: spread / (k - 1), grid: pi / 2).
"""

from __future__ import annotations

import math
import random
from typing import Dict, Tuple

from .errors import BadParams
from .graphs import Drawing2D, Graph, build_graph


def _star(k: int) -> Tuple[Graph, Drawing2D, Dict]:
    if k < 1:
        raise BadParams("star needs at least one leaf")
    vertices = ["v0"] + [f"v{i}" for i in range(1, k + 1)]
    edges = [("v0", f"v{i}") for i in range(1, k + 1)]
    positions = {"v0": (0.0, 0.0)}
    for i in range(1, k + 1):
        ang = 2.0 * math.pi * (i - 1) / k
        positions[f"v{i}"] = (math.cos(ang), math.sin(ang))
    meta = {"family": "star", "k": k}
    if k >= 2:
        meta["resolution2d"] = 2.0 * math.pi / k
    return build_graph(vertices, edges), Drawing2D(positions), meta


def _fan(k: int, spread: float) -> Tuple[Graph, Drawing2D, Dict]:
    if k < 2:
        raise BadParams("fan needs at least two leaves")
    if not 0.0 < spread < math.pi:
        raise BadParams("fan spread must lie in (0, pi)")
    vertices = ["v0"] + [f"v{i}" for i in range(1, k + 1)]
    edges = [("v0", f"v{i}") for i in range(1, k + 1)]
    positions = {"v0": (0.0, 0.0)}
    for i in range(1, k + 1):
        ang = spread * (i - 1) / (k - 1)
        positions[f"v{i}"] = (math.cos(ang), math.sin(ang))
    meta = {"family": "fan", "k": k, "spread": spread,
            "resolution2d": spread / (k - 1)}
    return build_graph(vertices, edges), Drawing2D(positions), meta


def _grid(rows: int, cols: int) -> Tuple[Graph, Drawing2D, Dict]:
    if rows < 1 or cols < 1:
        raise BadParams("grid needs positive dimensions")
    if rows * cols < 2:
        raise BadParams("grid needs at least two vertices")

    def vid(r: int, c: int) -> str:
        return f"v{r}_{c}"

    vertices = [vid(r, c) for r in range(rows) for c in range(cols)]
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    positions = {vid(r, c): (float(c), float(rows - 1 - r))
                 for r in range(rows) for c in range(cols)}
    meta = {"family": "grid", "rows": rows, "cols": cols}
    if rows > 1 and cols > 1:
        meta["resolution2d"] = 0.5 * math.pi
    elif rows * cols >= 3:  # a path; interior vertices see opposite rays
        meta["resolution2d"] = math.pi
    return build_graph(vertices, edges), Drawing2D(positions), meta


def _random(n: int, d: int, seed: int) -> Tuple[Graph, Drawing2D, Dict]:
    if n < 2:
        raise BadParams("random graph needs at least two vertices")
    if d < 1:
        raise BadParams("random graph needs degree bound >= 1")
    rng = random.Random(seed)
    vertices = [f"v{i}" for i in range(n)]
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(candidates)
    degree = [0] * n
    edges = []
    for i, j in candidates:
        if degree[i] < d and degree[j] < d and rng.random() < 0.75:
            degree[i] += 1
            degree[j] += 1
            edges.append((vertices[i], vertices[j]))
    if not edges:  # tiny n with an unlucky stream; force one edge
        edges.append((vertices[0], vertices[1]))
    positions = {}
    taken = set()
    for v in vertices:
        while True:
            p = (rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0))
            if p not in taken:
                taken.add(p)
                positions[v] = p
                break
    meta = {"family": "random", "n": n, "d": d, "seed": seed}
    return build_graph(vertices, edges), Drawing2D(positions), meta


def generate(family: str, *args, seed: int = 0) -> Tuple[Graph, Drawing2D, Dict]:
    """Build a named instance family.

    star k | fan k spread | grid rows cols | random n d
    """
    try:
        if family == "star":
            (k,) = args
            return _star(int(k))
        if family == "fan":
            k, spread = args
            return _fan(int(k), float(spread))
        if family == "grid":
            rows, cols = args
            return _grid(int(rows), int(cols))
        if family == "random":
            n, d = args
            return _random(int(n), int(d), seed)
    except ValueError as exc:
        raise BadParams(f"bad parameters for {family!r}: {exc}") from exc
    raise BadParams(f"unknown family {family!r}")
