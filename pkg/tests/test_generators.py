import math

import pytest

from arc3d import BadParams, angular_resolution_2d, generate


def test_star():
    g, dr, meta = generate("star", 5)
    assert len(g.vertices) == 6
    assert len(g.edges) == 5
    assert g.max_degree == 5
    assert meta["resolution2d"] == pytest.approx(2 * math.pi / 5)
    assert angular_resolution_2d(g, dr) == pytest.approx(meta["resolution2d"])


def test_fan():
    g, dr, meta = generate("fan", 4, 0.01)
    assert g.max_degree == 4
    assert meta["resolution2d"] == pytest.approx(0.01 / 3)
    assert angular_resolution_2d(g, dr) == pytest.approx(meta["resolution2d"],
                                                         abs=1e-12)


def test_grid():
    g, dr, meta = generate("grid", 3, 4)
    assert len(g.vertices) == 12
    assert len(g.edges) == 3 * 3 + 2 * 4
    assert g.max_degree == 4
    assert meta["resolution2d"] == pytest.approx(math.pi / 2)
    assert angular_resolution_2d(g, dr) == pytest.approx(math.pi / 2)


def test_random_deterministic_and_bounded():
    g1, dr1, meta1 = generate("random", 20, 4, seed=11)
    g2, _, _ = generate("random", 20, 4, seed=11)
    g3, _, _ = generate("random", 20, 4, seed=12)
    assert g1.edges == g2.edges
    assert g1.edges != g3.edges
    assert g1.max_degree <= 4
    assert len(set(dr1.positions.values())) == 20


def test_bad_params():
    with pytest.raises(BadParams):
        generate("torus", 3)
    with pytest.raises(BadParams):
        generate("star", 5, 9, 9)
    with pytest.raises(BadParams):
        generate("fan", 1, 1.0)
    with pytest.raises(BadParams):
        generate("fan", 4, 4.0)  # spread must stay below pi
    with pytest.raises(BadParams):
        generate("star", "many")
