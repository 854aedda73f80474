"""Constructive procedures: rotation reduction of a halfplane family,
the odd-subset sign choice, and general-position perturbation of a family
against a polygonal norm.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    EpsilonTooLarge,
    EvenCardinality,
    HalfplaneViolated,
    NotPolygonal,
    NotUnitVectors,
    SamplingExhausted,
    TheoremFalsified,
    ZeroDirection,
)
from .norms import UnitBall, gauge
from .scalars import DEFAULT_TOL, Scalar, eq, ge
from .vectors import Vec2, VectorMultiset, vsum


@dataclass
class RotationStep:
    """State snapshot after i vectors have been pinned to the horizontal axis."""

    moving: tuple[Vec2, ...]
    fixed: tuple[Vec2, ...]
    total: Vec2
    norm: float

    def to_json(self) -> dict:
        return {
            "moving": [v.to_json() for v in self.moving],
            "fixed": [v.to_json() for v in self.fixed],
            "sum": self.total.to_json(),
            "norm": self.norm,
        }


@dataclass
class RotationTrace:
    """n+1 snapshots (initial state plus one per pinned vector).

    The norm sequence is non-increasing; the last snapshot has every vector
    at (1,0) or (-1,0), so the final norm is an odd nonnegative integer.
    All coordinates live in the rotated frame where the halfplane direction
    is (0,1).
    """

    steps: list[RotationStep]
    final_sum: Vec2


@dataclass
class SignVector:
    signs: list[int]


def _rotation_snapshot(angles, fixed_axis, order):
    moving = tuple(Vec2(math.cos(angles[i]), math.sin(angles[i])) for i in order if fixed_axis[i] is None)
    fixed = tuple(Vec2(fixed_axis[i], 0.0) for i in order if fixed_axis[i] is not None)
    total = vsum(moving) + vsum(fixed)
    return RotationStep(moving, fixed, total, math.hypot(total.x, total.y))


def ginzburg_reduce(
    vectors: VectorMultiset, u: Vec2, tol: float = DEFAULT_TOL
) -> RotationTrace:
    """Rotate a Euclidean halfplane family onto the axis, one pin per step.

    Works in the frame where u points straight up. At each step the not yet
    pinned vectors rotate rigidly in whichever direction keeps the norm of
    the running sum from growing, until the first of them reaches (1,0) or
    (-1,0); that one (lowest index on ties) is pinned. After n steps every
    vector sits on the horizontal axis and the norm of the sum is an odd
    integer, hence at least 1.
    """
    if u.is_zero():
        raise ZeroDirection("halfplane direction must be nonzero")
    vs = [Vec2(float(v.x), float(v.y)) for v in vectors]
    n = len(vs)
    if n % 2 == 0:
        raise EvenCardinality("the family must have odd size")
    # rotate the frame so that u becomes (0, 1)
    shift = math.pi / 2 - math.atan2(float(u.y), float(u.x))
    cs, sn = math.cos(shift), math.sin(shift)
    angles: list[float] = []
    for i, v in enumerate(vs):
        if abs(math.hypot(v.x, v.y) - 1.0) > tol:
            raise NotUnitVectors(f"vector {i} has Euclidean norm {math.hypot(v.x, v.y)}")
        x, y = cs * v.x - sn * v.y, sn * v.x + cs * v.y
        if y < -tol:
            raise HalfplaneViolated(f"vector {i} lies below the halfplane")
        a = math.atan2(max(y, 0.0), x)
        angles.append(min(max(a, 0.0), math.pi))
    fixed_axis: list[float | None] = [None] * n
    order = list(range(n))
    steps = [_rotation_snapshot(angles, fixed_axis, order)]
    for _ in range(n):
        moving = [i for i in order if fixed_axis[i] is None]
        f = vsum(Vec2(fixed_axis[i], 0.0) for i in order if fixed_axis[i] is not None)
        m = vsum(Vec2(math.cos(angles[i]), math.sin(angles[i])) for i in moving)
        theta_ccw = min(math.pi - angles[i] for i in moving)
        theta_cw = min(angles[i] for i in moving)
        c = m.cross(f)
        if abs(c) > 1e-12:
            ccw = c < 0
        else:
            # locally flat: compare the end states of both feasible stops
            end_ccw = _end_norm(f, m, theta_ccw)
            end_cw = _end_norm(f, m, -theta_cw)
            if abs(end_ccw - end_cw) > 1e-12:
                ccw = end_ccw < end_cw
            else:
                # still flat: send the vector closest to an axis to its
                # nearer axis endpoint (final tie goes clockwise)
                closest = min(moving, key=lambda i: min(angles[i], math.pi - angles[i]))
                ccw = math.pi - angles[closest] < angles[closest]
        theta = theta_ccw if ccw else theta_cw
        target = math.pi if ccw else 0.0
        for i in moving:
            angles[i] = angles[i] + theta if ccw else angles[i] - theta
            angles[i] = min(max(angles[i], 0.0), math.pi)
        arrivals = [i for i in moving if abs(angles[i] - target) <= 1e-9]
        pin = arrivals[0]  # lowest index on simultaneous arrivals
        fixed_axis[pin] = -1.0 if target == math.pi else 1.0
        angles[pin] = target
        steps.append(_rotation_snapshot(angles, fixed_axis, order))
    final = steps[-1].total
    if abs(round(steps[-1].norm) - steps[-1].norm) > 10 * tol:  # pragma: no cover
        raise TheoremFalsified("final norm is not an integer")
    return RotationTrace(steps, final)


def _end_norm(f: Vec2, m: Vec2, theta: float) -> float:
    cs, sn = math.cos(theta), math.sin(theta)
    rotated = Vec2(cs * m.x - sn * m.y, sn * m.x + cs * m.y)
    return math.hypot(f.x + rotated.x, f.y + rotated.y)


def choose_signs(
    ball: UnitBall, vectors: VectorMultiset, tol: float = DEFAULT_TOL
) -> SignVector:
    """Signs making every odd-size subset sum have norm at least 1.

    Flipping each vector into the closed upper halfplane does it: any odd
    subfamily of the signed vectors then satisfies the halfplane bound.
    For up to 15 vectors the guarantee is re-verified exhaustively before
    returning; larger families get a 1000-subset sample check.
    """
    vs = tuple(vectors)
    for i, v in enumerate(vs):
        if not eq(gauge(ball, v), 1, tol):
            raise NotUnitVectors(f"vector {i} has gauge {gauge(ball, v)}")
    u = Vec2(0, 1)
    signs = [1 if ge(u.dot(v), 0, tol) else -1 for v in vs]
    signed = [v.scale(s) for v, s in zip(vs, signs)]
    n = len(vs)
    if n <= 15:
        subsets = (
            t for size in range(1, n + 1, 2) for t in combinations(range(n), size)
        )
    else:
        rng = random.Random(0x5163)
        def _sampled():
            for _ in range(1000):
                size = rng.randrange(1, n + 1, 2)
                yield tuple(sorted(rng.sample(range(n), size)))
        subsets = _sampled()
    for t in subsets:
        total = vsum(signed[i] for i in t)
        if not ge(gauge(ball, total), 1, tol):
            raise TheoremFalsified(f"odd subset {t} has signed sum of norm < 1")
    return SignVector(signs)


def _grid_fraction(rng: random.Random, radius: Fraction, grid: int = 10**6) -> Fraction:
    return Fraction(rng.randint(-grid, grid), grid) * radius


def make_generic(
    ball: UnitBall,
    vectors: VectorMultiset,
    lam: Scalar,
    eps: Scalar,
    seed: int,
    max_tries: int = 10_000,
) -> tuple[Vec2, ...]:
    """Perturb a scaled family into general position against the ball.

    Each output vector lands within gauge-distance eps of lam times its
    input, and no two distinct subsets of size at most 5 produce equal
    values under any pair of edge functionals. In particular all 3-sum and
    5-sum gauges are pairwise distinct, which is verified before returning.

    Rejection-samples each vector on a fine rational grid; the bad set is a
    finite union of lines, so a handful of tries suffices, but a retry
    budget turns any surprise into SamplingExhausted instead of a hang.
    """
    if not ball.is_polygonal:
        raise NotPolygonal("general-position perturbation needs a polygonal ball")
    lam = Fraction(lam)
    eps = Fraction(eps)
    if not 0 < lam < 1:
        raise ValueError(f"lambda must be in (0, 1); got {lam}")
    if eps <= 0:
        raise ValueError(f"epsilon must be positive; got {eps}")
    vs = tuple(vectors)
    for i, v in enumerate(vs):
        if lam * gauge(ball, v) + eps >= 1:
            raise EpsilonTooLarge(
                f"eps-neighbourhood of vector {i} does not stay inside the ball"
            )
    coeff_bound = max(abs(e.p) + abs(e.q) for e in ball.edges)
    radius = eps / (2 * coeff_bound)  # sup-ball of this radius has gauge <= eps/2
    rng = random.Random(seed)

    # value -> subset over everything committed so far; a collision between
    # different subsets is exactly a violation of the genericity conditions
    committed: dict[Scalar, frozenset[int]] = {0: frozenset()}
    presums: dict[frozenset[int], Vec2] = {frozenset(): Vec2(0, 0)}
    chosen: list[Vec2] = []
    for i in range(len(vs)):
        center = vs[i].scale(lam)
        extendable = [s for s in presums if len(s) <= 4]
        for _ in range(max_tries):
            cand = center + Vec2(_grid_fraction(rng, radius), _grid_fraction(rng, radius))
            fresh: dict[Scalar, frozenset[int]] = {}
            ok = True
            for s in extendable:
                subset = s | {i}
                total = presums[s] + cand
                for e in ball.edges:
                    val = e(total)
                    owner = committed.get(val)
                    if owner is None:
                        owner = fresh.get(val)
                    if owner is not None and owner != subset:
                        ok = False
                        break
                    fresh[val] = subset
                if not ok:
                    break
            if ok:
                committed.update(fresh)
                for s in extendable:
                    if len(s) <= 3:
                        presums[s | {i}] = presums[s] + cand
                chosen.append(cand)
                break
        else:
            raise SamplingExhausted(f"no valid perturbation found for vector {i}")
    out = tuple(chosen)
    _check_generic(ball, vs, out, lam, eps)
    return out


def _check_generic(
    ball: UnitBall,
    originals: Sequence[Vec2],
    perturbed: Sequence[Vec2],
    lam: Fraction,
    eps: Fraction,
) -> None:
    for v, w in zip(originals, perturbed):
        assert gauge(ball, w - v.scale(lam)) <= eps, "perturbation moved too far"
    n = len(perturbed)
    seen: dict[Scalar, tuple[int, ...]] = {}
    for size in (3, 5):
        if size > n:
            continue
        for t in combinations(range(n), size):
            g = gauge(ball, vsum(perturbed[i] for i in t))
            if g in seen and seen[g] != t:
                raise TheoremFalsified(
                    f"subsets {seen[g]} and {t} share the sum norm {g}"
                )
            seen[g] = t
