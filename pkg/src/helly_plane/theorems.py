"""Extensional verifiers for the vector-sum statements of the library.

Each verifier reports whether its hypothesis holds on the concrete input
and whether the claimed conclusion holds, without ever raising on a
hypothesis miss: a verifier that said "hypothesis holds" and "conclusion
fails" would be evidence against the statement itself, which is exactly
what the fuzzing harness looks for (and must never find).

Report labels: T1 is the halfplane bound (odd unit families in a closed
halfplane have sums of norm >= 1), T2 its three-sum Helly form with unit
vectors and non-strict bounds, T3 the strict form for vectors inside the
ball, COR the k-sum corollary of T3.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    BadK,
    EvenCardinality,
    HypothesisFailed,
    NotOnBoundary,
    PreconditionFailed,
    TheoremFalsified,
    TooFew,
    ZeroDirection,
)
from .geometry import point_in_triangle
from .norms import EdgeFunctional, UnitBall, gauge
from .scalars import DEFAULT_TOL, Scalar, eq, ge, gt, le, sgn, format_scalar
from .vectors import ORIGIN, Vec2, VectorMultiset, vsum


@dataclass(frozen=True)
class KSum:
    """A subset of indices together with the sum of the indexed vectors."""

    subset: tuple[int, ...]
    value: Vec2

    def to_json(self) -> dict:
        return {"subset": list(self.subset), "value": self.value.to_json()}


@dataclass
class VerifyReport:
    theorem: str
    hypothesis_holds: bool
    conclusion_holds: bool
    total: Vec2
    total_norm: Scalar
    witnesses: list[KSum] = field(default_factory=list)
    notes: str = ""

    @property
    def falsifies(self) -> bool:
        """True when the input satisfies the hypothesis but not the conclusion."""
        return self.hypothesis_holds and not self.conclusion_holds

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis": self.hypothesis_holds,
            "conclusion": self.conclusion_holds,
            "total": self.total.to_json(),
            "total_norm": format_scalar(self.total_norm),
            "witnesses": [w.to_json() for w in self.witnesses],
            "notes": self.notes,
        }


@dataclass
class Certificate:
    """A projection certificate for the halfplane bound.

    The input family is reordered by angle across the closed halfplane of
    u; `k` is the 1-based position of the middle vector in that order,
    `tangent` a supporting functional of the ball at the middle vector, and
    `projections` the coefficients of each vector on the middle vector in
    the basis {middle vector, tangent-line direction}. Their sum being at
    least 1 forces the sum of the family out of the open unit ball.
    """

    k: int
    u: Vec2
    tangent: EdgeFunctional
    ordered: tuple[Vec2, ...]
    projections: list[Scalar]
    projection_sum: Scalar


def all_ksums(vectors: VectorMultiset, k: int) -> list[KSum]:
    """All k-element subset sums, subsets in lexicographic order."""
    vs = tuple(vectors)
    if not 0 <= k <= len(vs):
        raise ValueError(f"k={k} out of range for {len(vs)} vectors")
    return [
        KSum(subset, vsum(vs[i] for i in subset))
        for subset in combinations(range(len(vs)), k)
    ]


def verify_theorem1(
    ball: UnitBall, vectors: VectorMultiset, u: Vec2, tol: float = DEFAULT_TOL
) -> VerifyReport:
    """Check the halfplane bound on one instance.

    Hypothesis: odd count, every vector of norm exactly 1, every dot with u
    nonnegative. Conclusion: the total has norm at least 1.
    """
    if u.is_zero():
        raise ZeroDirection("halfplane direction must be nonzero")
    vs = tuple(vectors)
    notes = []
    bad: list[KSum] = []
    if len(vs) % 2 == 0:
        notes.append("even cardinality")
    for i, v in enumerate(vs):
        if not eq(gauge(ball, v), 1, tol):
            bad.append(KSum((i,), v))
            notes.append(f"vector {i} is not a unit vector")
        elif not ge(u.dot(v), 0, tol):
            bad.append(KSum((i,), v))
            notes.append(f"vector {i} leaves the halfplane")
    hypothesis = len(vs) % 2 == 1 and not bad
    total = vsum(vs)
    total_norm = gauge(ball, total)
    conclusion = ge(total_norm, 1, tol)
    return VerifyReport(
        "T1", hypothesis, conclusion, total, total_norm,
        witnesses=bad if not hypothesis else [],
        notes="; ".join(notes),
    )


def _halfplane_angle_cmp(u: Vec2):
    """Order vectors of the closed halfplane of u by angle, from the side
    at -90 degrees from u around to +90 degrees.

    Vectors orthogonal to u are the only antipodal pairs possible here; the
    one at -90 degrees sorts first. Exact duplicates keep input order.
    Comparisons are raw (no tolerance): a tolerant order is not transitive.
    """

    def cmp(a: Vec2, b: Vec2) -> int:
        s = sgn(a.cross(b))
        if s > 0:
            return -1
        if s < 0:
            return 1
        if a.dot(b) >= 0:
            return 0  # same direction: stable sort keeps input order
        return -1 if sgn(u.cross(a)) < 0 else 1

    return functools.cmp_to_key(cmp)


def _supporting_functional(ball: UnitBall, v: Vec2, tol: float) -> EdgeFunctional:
    """A functional of value 1 at boundary point v and at most 1 on the ball."""
    if not ball.is_polygonal:
        return EdgeFunctional(v.x, v.y)
    hits = [e for e in ball.edges if eq(e(v), 1, tol)]
    if len(hits) == 1:
        return hits[0]
    if len(hits) == 2:
        # v is a vertex: average the two incident functionals, normalized
        # so the value at v stays 1; this picks an interior support line
        e, f = hits
        return EdgeFunctional((e.p + f.p) / 2, (e.q + f.q) / 2)
    raise AssertionError(f"{len(hits)} supporting edges at a boundary point")


def halfplane_certificate(
    ball: UnitBall, vectors: VectorMultiset, u: Vec2, tol: float = DEFAULT_TOL
) -> Certificate:
    """Construct the projection certificate for a halfplane instance.

    Requires the hypothesis of the halfplane bound; raises HypothesisFailed
    otherwise. The certificate's projection sum is always at least 1, and
    since the tangent functional is at most the gauge everywhere, that
    already implies the conclusion; both facts are re-checked here.
    """
    report = verify_theorem1(ball, vectors, u, tol)
    if not report.hypothesis_holds:
        raise HypothesisFailed(report.notes or "hypothesis does not hold")
    ordered = tuple(sorted(vectors, key=_halfplane_angle_cmp(u)))
    n = len(ordered)
    k = (n + 1) // 2  # 1-based position of the middle vector
    vk = ordered[k - 1]
    tangent = _supporting_functional(ball, vk, tol)
    d = tangent.direction()
    denom = vk.cross(d)
    projections = [v.cross(d) / denom for v in ordered]
    projection_sum = sum(projections)
    if not ge(projection_sum, 1, tol):
        raise TheoremFalsified(
            f"projection sum {projection_sum} < 1 on a halfplane instance"
        )
    if not ge(report.total_norm, 1, tol):  # pragma: no cover - implied by the above
        raise TheoremFalsified("certificate exists but total norm < 1")
    return Certificate(k, u, tangent, ordered, projections, projection_sum)


def _collinear(vectors: Sequence[Vec2], tol: float) -> bool:
    pivot = next((v for v in vectors if not v.is_zero()), None)
    if pivot is None:
        return True
    t = tol if any(isinstance(v.x, float) or isinstance(v.y, float) for v in vectors) else 0.0
    return all(sgn(pivot.cross(v), t) == 0 for v in vectors)


def _signed_lengths(ball: UnitBall, vectors: Sequence[Vec2], tol: float) -> list[Scalar]:
    """Map collinear vectors to signed norms along their common direction."""
    pivot = next((v for v in vectors if not v.is_zero()), None)
    out: list[Scalar] = []
    for v in vectors:
        g = gauge(ball, v)
        if pivot is not None:
            d = pivot.dot(v)
            if sgn(d, tol if isinstance(d, float) else 0.0) < 0:
                g = -g
        out.append(g)
    return out


def _helly_core(values_norm, triple_norms, total_norm, strict, tol):
    """Shared hypothesis/conclusion logic for the three-sum theorems.

    `values_norm` and `triple_norms` carry (index-tuple, norm) pairs.
    """
    bad: list[tuple[tuple[int, ...], str]] = []
    for idx, g in values_norm:
        if strict:
            if not le(g, 1, tol):
                bad.append((idx, "outside the ball"))
        else:
            if not eq(g, 1, tol):
                bad.append((idx, "not a unit vector"))
    for idx, g in triple_norms:
        if strict:
            if not gt(g, 1, tol):
                bad.append((idx, "3-sum not strictly outside"))
        else:
            if not ge(g, 1, tol):
                bad.append((idx, "3-sum inside the open ball"))
    hypothesis = not bad
    conclusion = gt(total_norm, 1, tol) if strict else ge(total_norm, 1, tol)
    return hypothesis, conclusion, bad


def verify_helly(
    ball: UnitBall, vectors: VectorMultiset, strict: bool, tol: float = DEFAULT_TOL
) -> VerifyReport:
    """Check one of the two three-sum theorems on an instance.

    strict=False: unit vectors whose 3-sums all have norm >= 1 must sum to
    norm >= 1. strict=True: vectors in the ball whose 3-sums all have norm
    > 1 must sum to norm > 1. Collinear families are routed through the
    one-dimensional path.
    """
    vs = tuple(vectors)
    if len(vs) < 3:
        raise TooFew("need at least 3 vectors")
    if len(vs) % 2 == 0:
        raise EvenCardinality("the family must have odd size")
    label = "T3" if strict else "T2"
    total = vsum(vs)
    total_norm = gauge(ball, total)
    if _collinear(vs, tol):
        xs = _signed_lengths(ball, vs, tol)
        hypothesis, conclusion, bad = _helly_core(
            [((i,), abs(x)) for i, x in enumerate(xs)],
            [(t, abs(xs[t[0]] + xs[t[1]] + xs[t[2]])) for t in combinations(range(len(xs)), 3)],
            abs(sum(xs)),
            strict,
            tol,
        )
        witnesses = [KSum(idx, vsum(vs[i] for i in idx)) for idx, _ in bad]
        return VerifyReport(
            label, hypothesis, conclusion, total, total_norm,
            witnesses=witnesses, notes="collinear family: 1d path",
        )
    singles = [((i,), gauge(ball, v)) for i, v in enumerate(vs)]
    triples = [
        (t, gauge(ball, vsum(vs[i] for i in t)))
        for t in combinations(range(len(vs)), 3)
    ]
    hypothesis, conclusion, bad = _helly_core(singles, triples, total_norm, strict, tol)
    witnesses = [KSum(idx, vsum(vs[i] for i in idx)) for idx, _ in bad]
    return VerifyReport(
        label, hypothesis, conclusion, total, total_norm, witnesses=witnesses
    )


def verify_helly_1d(
    xs: Sequence[Scalar], strict: bool, tol: float = DEFAULT_TOL
) -> VerifyReport:
    """The three-sum theorems for collinear data given as signed lengths.

    The unit ball of the line is the segment [-1, 1]; each x is the signed
    norm of a vector along a common direction.
    """
    values = list(xs)
    if len(values) < 3:
        raise TooFew("need at least 3 values")
    if len(values) % 2 == 0:
        raise EvenCardinality("the family must have odd size")
    hypothesis, conclusion, bad = _helly_core(
        [((i,), abs(x)) for i, x in enumerate(values)],
        [
            (t, abs(values[t[0]] + values[t[1]] + values[t[2]]))
            for t in combinations(range(len(values)), 3)
        ],
        abs(sum(values)),
        strict,
        tol,
    )
    total = Vec2(sum(values), 0)
    witnesses = [
        KSum(idx, Vec2(sum(values[i] for i in idx), 0)) for idx, _ in bad
    ]
    return VerifyReport(
        "T3" if strict else "T2",
        hypothesis,
        conclusion,
        total,
        abs(sum(values)),
        witnesses=witnesses,
        notes="1d instance over the segment [-1, 1]",
    )


def corollary_check(
    ball: UnitBall, vectors: VectorMultiset, k: int, tol: float = DEFAULT_TOL
) -> VerifyReport:
    """If every 3-sum is strictly outside the ball, so is every k-sum (k odd, k > 3)."""
    vs = tuple(vectors)
    if k % 2 == 0 or k <= 3 or k > len(vs):
        raise BadK(f"k must be odd, > 3, and <= {len(vs)}; got {k}")
    bad: list[KSum] = []
    hypothesis = True
    for i, v in enumerate(vs):
        if not le(gauge(ball, v), 1, tol):
            hypothesis = False
            bad.append(KSum((i,), v))
    for t in combinations(range(len(vs)), 3):
        s = vsum(vs[i] for i in t)
        if not gt(gauge(ball, s), 1, tol):
            hypothesis = False
            bad.append(KSum(t, s))
    conclusion = True
    failing: list[KSum] = []
    for t in combinations(range(len(vs)), k):
        s = vsum(vs[i] for i in t)
        if not gt(gauge(ball, s), 1, tol):
            conclusion = False
            failing.append(KSum(t, s))
    total = vsum(vs)
    return VerifyReport(
        "COR",
        hypothesis,
        conclusion,
        total,
        gauge(ball, total),
        witnesses=(bad if not hypothesis else failing),
        notes=f"k={k}",
    )


def lemma_conv_check(
    ball: UnitBall, a: Vec2, b: Vec2, c: Vec2, tol: float = DEFAULT_TOL
) -> tuple[bool, bool]:
    """For boundary points a, b, c: (origin in conv, a+b+c in conv).

    The two memberships are equivalent for every norm; callers assert the
    equivalence, this function just computes both closed memberships.
    """
    for v in (a, b, c):
        if not eq(gauge(ball, v), 1, tol):
            raise NotOnBoundary(f"{v} has gauge {gauge(ball, v)}, expected 1")
    t = tol if any(isinstance(w, float) for w in (a.x, a.y, b.x, b.y, c.x, c.y)) else 0.0
    origin_in = point_in_triangle(ORIGIN, a, b, c, t)
    h_in = point_in_triangle(a + b + c, a, b, c, t)
    return origin_in, h_in


def lemma_main_witness(
    ball: UnitBall, vectors: VectorMultiset, tol: float = DEFAULT_TOL
) -> tuple[int, int, int]:
    """For six vectors in the ball with zero sum, a triple whose sum is in the ball.

    Brute force over all 20 triples, lexicographically first hit. One always
    exists; not finding one raises TheoremFalsified, which is a hard bug.
    """
    zs = tuple(vectors)
    if len(zs) != 6:
        raise PreconditionFailed(f"need exactly 6 vectors, got {len(zs)}")
    for i, z in enumerate(zs):
        if not le(gauge(ball, z), 1, tol):
            raise PreconditionFailed(f"vector {i} is outside the ball")
    total = vsum(zs)
    if isinstance(total.x, float) or isinstance(total.y, float):
        if abs(total.x) > tol or abs(total.y) > tol:
            raise PreconditionFailed("vectors do not sum to zero")
    elif not total.is_zero():
        raise PreconditionFailed("vectors do not sum to zero")
    for t in combinations(range(6), 3):
        if le(gauge(ball, vsum(zs[i] for i in t)), 1, tol):
            return t
    raise TheoremFalsified("no triple of a zero-sum 6-family lands in the ball")


def claim1_triplets(xs: Sequence[Scalar], tol: float = DEFAULT_TOL) -> list[tuple[int, int, int]]:
    """All triples of six zero-sum reals in [-1, 1] whose sum is back in [-1, 1].

    At least 12 of the 20 triples always qualify, and the qualifying set is
    closed under complement; both facts are what the callers test.
    """
    values = list(xs)
    if len(values) != 6:
        raise PreconditionFailed(f"need exactly 6 values, got {len(values)}")
    for i, x in enumerate(values):
        if not le(abs(x), 1, tol):
            raise PreconditionFailed(f"value {i} is outside [-1, 1]")
    total = sum(values)
    if isinstance(total, float):
        if abs(total) > tol:
            raise PreconditionFailed("values do not sum to zero")
    elif total != 0:
        raise PreconditionFailed("values do not sum to zero")
    return [
        t
        for t in combinations(range(6), 3)
        if le(abs(values[t[0]] + values[t[1]] + values[t[2]]), 1, tol)
    ]
