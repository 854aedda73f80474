import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helly_plane.errors import (
    DegenerateHull,
    NotConvexBody,
    NotPolygonal,
    NotSymmetric,
    ZeroDirection,
)
from helly_plane.generators import gen_random_ball
from helly_plane.norms import (
    ball_from_json,
    ball_to_json,
    boundary_point,
    edge_functionals,
    gauge,
    make_polygonal_ball,
    symmetric_hull,
)
from helly_plane.vectors import Vec2

from oracles import ray_gauge

F = Fraction

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=60)


def test_square_ball_canonical_order(square):
    assert square.vertices == (Vec2(1, 1), Vec2(-1, 1), Vec2(-1, -1), Vec2(1, -1))


def test_make_ball_accepts_shuffled_redundant_input(square):
    messy = [
        Vec2(-1, -1),
        Vec2(1, 1),
        Vec2(0, 1),  # interior of an edge: dropped
        Vec2(1, -1),
        Vec2(-1, 1),
        Vec2(1, 1),  # duplicate
    ]
    assert make_polygonal_ball(messy).vertices == square.vertices


def test_degenerate_segment_rejected():
    with pytest.raises(NotConvexBody):
        make_polygonal_ball([Vec2(1, 0), Vec2(-1, 0)])


def test_asymmetric_rejected():
    with pytest.raises(NotSymmetric):
        make_polygonal_ball([Vec2(2, -1), Vec2(-2, -1), Vec2(0, 2), Vec2(0, -2)])


def test_hexagon_construction(hexagon):
    assert len(hexagon.vertices) == 6
    assert hexagon.vertices[0] == Vec2(1, 1)
    for v in hexagon.vertices:
        assert gauge(hexagon, v) == 1


def test_gauge_square_examples(square):
    assert gauge(square, Vec2(0, F(1, 2))) == F(1, 2)
    assert gauge(square, Vec2(1, 1)) == 1
    assert gauge(square, Vec2(0, 0)) == 0


def test_gauge_hexagon_matches_ray_oracle(hexagon):
    z = Vec2(0, F(7, 5))
    expected = ray_gauge(hexagon, z)
    assert expected == F(91, 85)  # frozen from the oracle
    assert gauge(hexagon, z) == expected
    assert abs(float(gauge(hexagon, z)) - 1.0706) < 1e-3


def test_gauge_oracle_equivalence_random():
    rng = random.Random(991)
    for trial in range(40):
        ball = gen_random_ball(trial)
        for _ in range(25):
            z = Vec2(
                F(rng.randint(-2000, 2000), 1000), F(rng.randint(-2000, 2000), 1000)
            )
            if z.is_zero():
                continue
            assert gauge(ball, z) == ray_gauge(ball, z)


def test_gauge_euclidean(euclid):
    assert abs(gauge(euclid, Vec2(3.0, 4.0)) - 5.0) < 1e-12


@given(
    x=rationals,
    y=rationals,
    t=st.fractions(min_value=-4, max_value=4, max_denominator=20),
)
def test_gauge_homogeneity_and_symmetry(hexagon, x, y, t):
    z = Vec2(x, y)
    assert gauge(hexagon, z.scale(t)) == abs(t) * gauge(hexagon, z)
    assert gauge(hexagon, -z) == gauge(hexagon, z)


def test_triangle_inequality_random_pairs():
    rng = random.Random(7)
    for seed in range(4):
        ball = gen_random_ball(seed + 100)
        for _ in range(2500):
            x = Vec2(F(rng.randint(-999, 999), 500), F(rng.randint(-999, 999), 500))
            y = Vec2(F(rng.randint(-999, 999), 500), F(rng.randint(-999, 999), 500))
            assert gauge(ball, x + y) <= gauge(ball, x) + gauge(ball, y)


def test_edge_functionals_square(square):
    got = {(e.p, e.q) for e in edge_functionals(square)}
    assert got == {(0, 1), (0, -1), (1, 0), (-1, 0)}


def test_edge_functionals_parallelogram():
    ball = make_polygonal_ball([Vec2(1, 1), Vec2(-1, 1), Vec2(-1, -1), Vec2(1, -1)])
    got = {(e.p, e.q) for e in edge_functionals(ball)}
    assert got == {(0, 1), (0, -1), (1, 0), (-1, 0)}


def test_edge_functionals_hexagon_frozen(hexagon):
    # first edge [(1,1), (-3/10, 7/5)] solved by hand
    e = hexagon.edges[0]
    assert (e.p, e.q) == (F(4, 17), F(13, 17))
    for i, e in enumerate(hexagon.edges):
        a = hexagon.vertices[i]
        b = hexagon.vertices[(i + 1) % 6]
        assert e(a) == 1 and e(b) == 1
        assert e(Vec2(0, 0)) == 0


def test_edge_functionals_euclidean_raises(euclid):
    with pytest.raises(NotPolygonal):
        edge_functionals(euclid)


def test_boundary_point(square, euclid):
    assert boundary_point(square, Vec2(2, 0)) == Vec2(1, 0)
    assert boundary_point(square, Vec2(1, 1)) == Vec2(1, 1)
    b = boundary_point(euclid, Vec2(3.0, 4.0))
    assert abs(b.x - 0.6) < 1e-12 and abs(b.y - 0.8) < 1e-12
    with pytest.raises(ZeroDirection):
        boundary_point(square, Vec2(0, 0))


def test_vertex_normalization_random_balls():
    for seed in range(30):
        ball = gen_random_ball(seed)
        assert len(ball.vertices) >= 4
        assert len(ball.vertices) % 2 == 0
        for v in ball.vertices:
            assert gauge(ball, v) == 1


def test_symmetric_hull_square(square):
    ball = symmetric_hull([Vec2(1, 1), Vec2(-1, 1)])
    assert ball.vertices == square.vertices


def test_symmetric_hull_degenerate():
    with pytest.raises(DegenerateHull):
        symmetric_hull([Vec2(1, 0), Vec2(2, 0)])


def test_symmetric_hull_hexagon():
    ball = symmetric_hull([Vec2(1, 0), Vec2(0, 1), Vec2(1, 1)])
    got = [(v.x, v.y) for v in ball.vertices]
    assert got == [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def test_symmetric_hull_contains_inputs():
    rng = random.Random(55)
    for _ in range(30):
        pts = [
            Vec2(F(rng.randint(-100, 100), 50), F(rng.randint(-100, 100), 50))
            for _ in range(5)
        ]
        try:
            ball = symmetric_hull(pts)
        except DegenerateHull:
            continue
        vert_set = {(v.x, v.y) for v in ball.vertices}
        for p in pts:
            assert gauge(ball, p) <= 1
        for v in ball.vertices:
            assert (v.x, v.y) in {(p.x, p.y) for p in pts} | {(-p.x, -p.y) for p in pts}


def test_ball_json_roundtrip(square, hexagon, euclid):
    for ball in (square, hexagon, euclid):
        doc = ball_to_json(ball)
        back = ball_from_json(doc)
        assert back.kind == ball.kind
        assert back.vertices == ball.vertices


def test_ball_json_example():
    doc = {
        "type": "polygonal",
        "vertices": [["1", "1"], ["-1", "1"], ["-1", "-1"], ["1", "-1"]],
    }
    ball = ball_from_json(doc)
    assert gauge(ball, Vec2(F(1, 3), F(1, 7))) == F(1, 3)
