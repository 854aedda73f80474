"""Norms of the plane: the Euclidean one and gauges of 0-symmetric polygons.

A polygonal unit ball is stored as its counterclockwise vertex cycle
(starting at the vertex of smallest polar angle) together with one linear
functional per edge, normalized to take the value 1 on that edge. The gauge
of a point is the maximum of the edge functionals, which is exact on
rational data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateHull,
    NotConvexBody,
    NotPolygonal,
    NotSymmetric,
    ZeroDirection,
)
from .geometry import OriginPosition, convex_hull, origin_in_hull
from .scalars import Scalar, exact_div
from .vectors import Vec2

EUCLIDEAN = "euclidean"
POLYGONAL = "polygonal"


@dataclass(frozen=True)
class EdgeFunctional:
    """The linear map z -> p*z.x + q*z.y equal to 1 on its defining edge."""

    p: Scalar
    q: Scalar

    def __call__(self, z: Vec2) -> Scalar:
        return self.p * z.x + self.q * z.y

    def direction(self) -> Vec2:
        """A direction vector of the level line {value == const}."""
        return Vec2(-self.q, self.p)


@dataclass(frozen=True)
class UnitBall:
    kind: str
    vertices: tuple[Vec2, ...] = ()
    edges: tuple[EdgeFunctional, ...] = ()

    @property
    def is_polygonal(self) -> bool:
        return self.kind == POLYGONAL


def euclidean_ball() -> UnitBall:
    return UnitBall(EUCLIDEAN)


def _exactify(v: Vec2) -> Vec2:
    """Promote rational coordinates to Fraction so divisions stay exact."""
    x = v.x if isinstance(v.x, float) else Fraction(v.x)
    y = v.y if isinstance(v.y, float) else Fraction(v.y)
    return Vec2(x, y)


def _edge_functional(a: Vec2, b: Vec2) -> EdgeFunctional:
    # unique (p, q) with p*a.x + q*a.y = p*b.x + q*b.y = 1; the determinant
    # is nonzero because no edge of a valid ball is collinear with the origin
    det = a.cross(b)
    return EdgeFunctional(exact_div(b.y - a.y, det), exact_div(a.x - b.x, det))


def _polar_less(a: Vec2, b: Vec2) -> bool:
    """Compare polar angles in [0, 2*pi) without trigonometry."""
    ha = 0 if (a.y > 0 or (a.y == 0 and a.x > 0)) else 1
    hb = 0 if (b.y > 0 or (b.y == 0 and b.x > 0)) else 1
    if ha != hb:
        return ha < hb
    return a.cross(b) > 0


def make_polygonal_ball(vertices: Sequence[Vec2]) -> UnitBall:
    """Validate and canonicalize a 0-symmetric convex polygon as a unit ball.

    Input vertices may be in any order and may contain duplicates or points
    interior to the hull; canonicalization reorders counterclockwise from
    the vertex of smallest polar angle and drops non-extreme points.
    """
    pts = list(vertices)
    if not pts:
        raise NotConvexBody("empty vertex list")
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise NotConvexBody("hull is degenerate (a point or a segment)")
    signed = {(p.x, p.y) for p in hull}
    if signed != {(-x, -y) for x, y in signed}:
        raise NotSymmetric("vertex set is not invariant under negation")
    if origin_in_hull(hull) is not OriginPosition.INTERIOR:
        raise NotConvexBody("origin is not strictly inside")
    start = 0
    for i in range(1, len(hull)):
        if _polar_less(hull[i], hull[start]):
            start = i
    cyc = tuple(_exactify(v) for v in hull[start:] + hull[:start])
    edges = tuple(
        _edge_functional(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
    )
    return UnitBall(POLYGONAL, cyc, edges)


def square_ball() -> UnitBall:
    """The unit ball of the max norm."""
    return make_polygonal_ball(
        [Vec2(1, 1), Vec2(-1, 1), Vec2(-1, -1), Vec2(1, -1)]
    )


def gauge(ball: UnitBall, z: Vec2) -> Scalar:
    """The norm of z: gauge(z) <= 1 exactly when z is in the ball."""
    if ball.kind == EUCLIDEAN:
        return math.hypot(float(z.x), float(z.y))
    return max(e(z) for e in ball.edges)


def edge_functionals(ball: UnitBall) -> list[EdgeFunctional]:
    """The edge functionals in edge order; polygonal balls only."""
    if not ball.is_polygonal:
        raise NotPolygonal("the Euclidean ball has no edge functionals")
    return list(ball.edges)


def boundary_point(ball: UnitBall, direction: Vec2) -> Vec2:
    """The unique positive multiple of `direction` with gauge 1."""
    if direction.is_zero():
        raise ZeroDirection("cannot normalize the zero vector")
    g = gauge(ball, direction)
    return direction.scale(exact_div(1, g))


def symmetric_hull(points: Sequence[Vec2]) -> UnitBall:
    """The polygonal ball conv{+-p : p in points}."""
    pts = list(points) + [-p for p in points]
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise DegenerateHull("all points lie on one line through the origin")
    return make_polygonal_ball(hull)


def ball_to_json(ball: UnitBall) -> dict:
    if ball.kind == EUCLIDEAN:
        return {"type": EUCLIDEAN}
    return {"type": POLYGONAL, "vertices": [v.to_json() for v in ball.vertices]}


def ball_from_json(obj: dict, mode: str = "exact") -> UnitBall:
    kind = obj.get("type")
    if kind == EUCLIDEAN:
        return euclidean_ball()
    if kind == POLYGONAL:
        verts = [Vec2.from_json(pair, mode) for pair in obj["vertices"]]
        return make_polygonal_ball(verts)
    raise ValueError(f"unknown ball type: {kind!r}")


def load_vectors(obj: dict, mode: str = "exact") -> list[Vec2]:
    """Parse a vector-set document of the form {"vectors": [[x, y], ...]}."""
    return [Vec2.from_json(pair, mode) for pair in obj["vectors"]]
