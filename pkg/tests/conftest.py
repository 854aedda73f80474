import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helly_plane.norms import euclidean_ball, make_polygonal_ball, square_ball
from helly_plane.vectors import Vec2


@pytest.fixture(scope="session")
def square():
    return square_ball()


@pytest.fixture(scope="session")
def euclid():
    return euclidean_ball()


@pytest.fixture(scope="session")
def hexagon():
    """The 0-symmetric hexagon with vertices (1,1), (-3/10, 7/5), (-1,1) and
    their negatives."""
    return make_polygonal_ball(
        [
            Vec2(1, 1),
            Vec2(Fraction(-3, 10), Fraction(7, 5)),
            Vec2(-1, 1),
            Vec2(-1, -1),
            Vec2(Fraction(3, 10), Fraction(-7, 5)),
            Vec2(1, -1),
        ]
    )
