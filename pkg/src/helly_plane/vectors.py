"""Plane vectors over exact rationals or floats."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import Scalar, format_scalar, parse_scalar


@dataclass(frozen=True)
class Vec2:
    x: Scalar
    y: Scalar

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scale(self, s: Scalar) -> "Vec2":
        return Vec2(s * self.x, s * self.y)

    def dot(self, other: "Vec2") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> Scalar:
        return self.x * other.y - self.y * other.x

    def perp(self) -> "Vec2":
        # counterclockwise quarter turn
        return Vec2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_json(self) -> list[str]:
        return [format_scalar(self.x), format_scalar(self.y)]

    @classmethod
    def from_json(cls, pair: Sequence, mode: str = "exact") -> "Vec2":
        return cls(parse_scalar(pair[0], mode), parse_scalar(pair[1], mode))


ORIGIN = Vec2(0, 0)


def vsum(vectors: Iterable[Vec2]) -> Vec2:
    total = ORIGIN
    for v in vectors:
        total = total + v
    return total


# An ordered multiset of plane vectors; order is preserved, duplicates allowed.
VectorMultiset = Sequence[Vec2]
