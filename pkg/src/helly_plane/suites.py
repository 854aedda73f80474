"""Deterministic property suites over seeded random instances.

A suite runs `trials` independent instances; the sub-seed of trial i is
`seed XOR i`, so trials are order-independent and a config reproduces its
report byte for byte. Wall time is measured but kept out of the canonical
JSON for exactly that reason.

Instances that fail to satisfy a suite's hypothesis within the per-trial
retry budget are recorded as "vacuous" rather than silently redrawn
forever; substantive passes are the only thing that counts as evidence.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algorithms import choose_signs, make_generic
from .errors import SamplingExhausted, SearchBudgetExceeded, TheoremFalsified, UnknownSuite
from .gallery import CASE_NAMES, run_gallery
from .generators import (
    antipodal_pair_on_boundary,
    gen_asymmetric_body,
    gen_claim1_tuple,
    gen_collinear_family,
    gen_direction,
    gen_random_ball,
    gen_symmetric_body,
    gen_unit_vectors,
    gen_zero_sum_six,
)
from .norms import UnitBall, ball_from_json, ball_to_json, euclidean_ball, gauge, square_ball
from .symmetry import (
    find_violation_halfplane,
    find_violation_surrounding,
    is_centrally_symmetric,
    verify_halfplane_witness,
    verify_surrounding_witness,
)
from .theorems import (
    claim1_triplets,
    corollary_check,
    halfplane_certificate,
    lemma_conv_check,
    lemma_main_witness,
    verify_helly,
    verify_theorem1,
)
from .vectors import Vec2, vsum

SUITE_NAMES = (
    "thm1",
    "thm2",
    "thm3",
    "lemma-conv",
    "lemma-main",
    "claim1",
    "corollary",
    "signs",
    "generic",
    "symmetry",
    "gallery",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    trials: int
    seed: int
    mode: str = "exact"
    tol: float = 1e-9
    ball_source: str = "random"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "mode": self.mode,
            "tol": self.tol,
            "ball_source": self.ball_source,
        }


@dataclass
class TrialRecord:
    index: int
    digest: str
    outcome: str  # "pass" | "fail" | "vacuous"
    detail: str = ""
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "trial": self.index,
            "digest": self.digest,
            "outcome": self.outcome,
            "detail": self.detail,
            "witnesses": self.witnesses,
        }


@dataclass
class SuiteReport:
    config: SuiteConfig
    records: list[TrialRecord]
    wall_time: float  # informational only; not part of the canonical JSON

    @property
    def passes(self) -> int:
        return sum(1 for r in self.records if r.outcome == "pass")

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if r.outcome == "fail")

    @property
    def vacuous(self) -> int:
        return sum(1 for r in self.records if r.outcome == "vacuous")

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "counts": {
                "pass": self.passes,
                "fail": self.failures,
                "vacuous": self.vacuous,
            },
            "records": [r.to_json() for r in self.records],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _digest(payload) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _as_mode(vectors, mode: str):
    if mode == "float":
        return tuple(Vec2(float(v.x), float(v.y)) for v in vectors)
    return tuple(vectors)


def _ball_for(cfg: SuiteConfig, rng: random.Random) -> UnitBall:
    source = cfg.ball_source
    if source == "maxnorm":
        return square_ball()
    if source == "euclidean":
        return euclidean_ball()
    if source == "random":
        return gen_random_ball(rng.getrandbits(32))
    with open(source, encoding="utf-8") as f:
        return ball_from_json(json.load(f), cfg.mode)


def _instance_payload(ball: UnitBall, vectors, extra=None) -> dict:
    payload = {
        "ball": ball_to_json(ball),
        "vectors": [v.to_json() for v in vectors],
    }
    if extra:
        payload.update(extra)
    return payload


def _trial_thm1(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    n = rng.choice([3, 5, 7, 9])
    u = gen_direction(rng)
    vectors = _as_mode(
        gen_unit_vectors(ball, n, rng.getrandbits(32), halfplane=u), cfg.mode
    )
    digest = _digest(_instance_payload(ball, vectors, {"u": u.to_json()}))
    report = verify_theorem1(ball, vectors, u, cfg.tol)
    if not report.hypothesis_holds:
        return TrialRecord(index, digest, "vacuous", report.notes)
    if not report.conclusion_holds:
        return TrialRecord(
            index, digest, "fail", "halfplane bound failed",
            [w.to_json() for w in report.witnesses],
        )
    cert = halfplane_certificate(ball, vectors, u, cfg.tol)
    detail = f"projection_sum={cert.projection_sum}"
    return TrialRecord(index, digest, "pass", detail)


def _trial_thm2(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    n = rng.choice([3, 5, 7, 9])
    u = gen_direction(rng)
    vectors = list(gen_unit_vectors(ball, n, rng.getrandbits(32), halfplane=u))
    note = "halfplane family"
    if index % 3 == 0 and ball.is_polygonal and n >= 5:
        # adversarial antipodal pair on the halfplane boundary line
        w, nw = antipodal_pair_on_boundary(ball, u)
        vectors[-2], vectors[-1] = w, nw
        note = "halfplane family + antipodal pair"
    vectors = _as_mode(vectors, cfg.mode)
    digest = _digest(_instance_payload(ball, vectors, {"u": u.to_json()}))
    report = verify_helly(ball, vectors, strict=False, tol=cfg.tol)
    if not report.hypothesis_holds:
        return TrialRecord(index, digest, "vacuous", report.notes)
    if not report.conclusion_holds:
        return TrialRecord(
            index, digest, "fail", "three-sum bound failed",
            [w.to_json() for w in report.witnesses],
        )
    return TrialRecord(index, digest, "pass", note)


def _trial_thm3(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    if index % 10 == 9 and ball.is_polygonal:
        # dedicated collinear instance for the one-dimensional path
        vectors, _ = gen_collinear_family(ball, rng.getrandbits(32))
        vectors = _as_mode(vectors, cfg.mode)
        digest = _digest(_instance_payload(ball, vectors, {"collinear": True}))
        report = verify_helly(ball, vectors, strict=True, tol=cfg.tol)
        if not report.hypothesis_holds:
            return TrialRecord(index, digest, "vacuous", report.notes)
        if not report.conclusion_holds:
            return TrialRecord(
                index, digest, "fail", "strict three-sum bound failed (1d)",
                [w.to_json() for w in report.witnesses],
            )
        return TrialRecord(index, digest, "pass", "collinear 1d path")
    n = rng.choice([3, 5, 7, 9])
    for _ in range(50):
        u = gen_direction(rng)
        vectors = _as_mode(
            gen_unit_vectors(ball, n, rng.getrandbits(32), halfplane=u), cfg.mode
        )
        report = verify_helly(ball, vectors, strict=True, tol=cfg.tol)
        if report.hypothesis_holds:
            digest = _digest(_instance_payload(ball, vectors, {"u": u.to_json()}))
            if not report.conclusion_holds:
                return TrialRecord(
                    index, digest, "fail", "strict three-sum bound failed",
                    [w.to_json() for w in report.witnesses],
                )
            return TrialRecord(index, digest, "pass")
    digest = _digest(_instance_payload(ball, vectors))
    return TrialRecord(index, digest, "vacuous", "no strict instance in budget")


def _trial_lemma_conv(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    a, b, c = _as_mode(gen_unit_vectors(ball, 3, rng.getrandbits(32)), cfg.mode)
    digest = _digest(_instance_payload(ball, (a, b, c)))
    origin_in, h_in = lemma_conv_check(ball, a, b, c, cfg.tol)
    if origin_in != h_in:
        return TrialRecord(
            index, digest, "fail",
            f"memberships disagree: origin={origin_in}, sum={h_in}",
        )
    return TrialRecord(index, digest, "pass", f"both={origin_in}")


def _trial_lemma_main(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    zs = _as_mode(gen_zero_sum_six(ball, rng.getrandbits(32)), cfg.mode)
    digest = _digest(_instance_payload(ball, zs))
    try:
        trip = lemma_main_witness(ball, zs, cfg.tol)
    except TheoremFalsified as exc:
        return TrialRecord(index, digest, "fail", str(exc))
    s = vsum(zs[i] for i in trip)
    g = gauge(ball, s)
    ok = g <= 1 if not isinstance(g, float) else g <= 1 + cfg.tol
    if not ok:
        return TrialRecord(index, digest, "fail", f"witness {trip} not in the ball")
    return TrialRecord(index, digest, "pass", f"triple={trip}")


def _trial_claim1(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    xs = gen_claim1_tuple(rng.getrandbits(32))
    if cfg.mode == "float":
        xs = [float(x) for x in xs]
    digest = _digest({"xs": [str(x) for x in xs]})
    triples = claim1_triplets(xs, cfg.tol)
    hits = set(triples)
    if len(hits) < 12:
        return TrialRecord(index, digest, "fail", f"only {len(hits)} triples")
    full = set(range(6))
    for t in hits:
        comp = tuple(sorted(full - set(t)))
        if comp not in hits:
            return TrialRecord(
                index, digest, "fail", f"complement of {t} missing"
            )
    return TrialRecord(index, digest, "pass", f"count={len(hits)}")


def _trial_corollary(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    n = rng.choice([7, 9])
    for _ in range(50):
        u = gen_direction(rng)
        vectors = _as_mode(
            gen_unit_vectors(ball, n, rng.getrandbits(32), halfplane=u), cfg.mode
        )
        probe = corollary_check(ball, vectors, 5, cfg.tol)
        if not probe.hypothesis_holds:
            continue
        digest = _digest(_instance_payload(ball, vectors, {"u": u.to_json()}))
        for k in (5, 7):
            if k > n:
                continue
            report = corollary_check(ball, vectors, k, cfg.tol)
            if not report.conclusion_holds:
                return TrialRecord(
                    index, digest, "fail", f"a {k}-sum landed in the ball",
                    [w.to_json() for w in report.witnesses],
                )
        return TrialRecord(index, digest, "pass", f"n={n}")
    digest = _digest(_instance_payload(ball, vectors))
    return TrialRecord(index, digest, "vacuous", "no strict instance in budget")


def _trial_signs(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    n = rng.randint(1, 11)
    vectors = _as_mode(gen_unit_vectors(ball, n, rng.getrandbits(32)), cfg.mode)
    digest = _digest(_instance_payload(ball, vectors))
    try:
        sv = choose_signs(ball, vectors, cfg.tol)
    except TheoremFalsified as exc:
        return TrialRecord(index, digest, "fail", str(exc))
    return TrialRecord(index, digest, "pass", f"signs={sv.signs}")


def _trial_generic(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    ball = _ball_for(cfg, rng)
    if not ball.is_polygonal:
        ball = square_ball()
    n = rng.randint(1, 7)
    vectors = gen_unit_vectors(ball, n, rng.getrandbits(32))
    lam = Fraction(rng.choice([90, 95, 99]), 100)
    eps = Fraction(1, 1000)
    digest = _digest(_instance_payload(ball, vectors, {"lam": str(lam), "eps": str(eps)}))
    try:
        perturbed = make_generic(ball, vectors, lam, eps, rng.getrandbits(32))
    except SamplingExhausted as exc:
        return TrialRecord(index, digest, "fail", str(exc))
    except TheoremFalsified as exc:
        return TrialRecord(index, digest, "fail", str(exc))
    worst = max(gauge(ball, p - v.scale(lam)) for p, v in zip(perturbed, vectors))
    if worst > eps:
        return TrialRecord(index, digest, "fail", "perturbation left the neighbourhood")
    return TrialRecord(index, digest, "pass", f"n={n}")


def _trial_symmetry(cfg: SuiteConfig, index: int) -> TrialRecord:
    rng = random.Random(cfg.seed ^ index)
    if index % 2 == 0:
        body = gen_symmetric_body(rng.getrandbits(32))
        digest = _digest({"body": [v.to_json() for v in body.vertices]})
        if not is_centrally_symmetric(body):
            return TrialRecord(index, digest, "fail", "symmetric body misclassified")
        if find_violation_halfplane(body) is not None:
            return TrialRecord(index, digest, "fail", "witness on symmetric body (i)")
        if find_violation_surrounding(body) is not None:
            return TrialRecord(index, digest, "fail", "witness on symmetric body (ii)")
        return TrialRecord(index, digest, "pass", "symmetric")
    body = gen_asymmetric_body(rng.getrandbits(32))
    digest = _digest({"body": [v.to_json() for v in body.vertices]})
    if is_centrally_symmetric(body):
        return TrialRecord(index, digest, "fail", "asymmetric body misclassified")
    try:
        w1 = find_violation_halfplane(body)
        w2 = find_violation_surrounding(body)
    except SearchBudgetExceeded as exc:
        return TrialRecord(index, digest, "fail", str(exc))
    if w1 is None or not verify_halfplane_witness(body, w1):
        return TrialRecord(index, digest, "fail", "no verified halfplane witness")
    if w2 is None or not verify_surrounding_witness(body, w2):
        return TrialRecord(index, digest, "fail", "no verified surrounding witness")
    return TrialRecord(
        index, digest, "pass", "asymmetric",
        [w1.to_json(), w2.to_json()],
    )


def _run_gallery_suite(cfg: SuiteConfig) -> list[TrialRecord]:
    records = []
    results = run_gallery()
    for i, name in enumerate(CASE_NAMES):
        checks = results[name]
        bad = [c for c in checks if not c.passed]
        digest = _digest({"case": name})
        if bad:
            detail = "; ".join(f"{c.name}: expected {c.expected}, got {c.actual}" for c in bad)
            records.append(TrialRecord(i, digest, "fail", detail))
        else:
            records.append(TrialRecord(i, digest, "pass", name))
    return records


_TRIALS = {
    "thm1": _trial_thm1,
    "thm2": _trial_thm2,
    "thm3": _trial_thm3,
    "lemma-conv": _trial_lemma_conv,
    "lemma-main": _trial_lemma_main,
    "claim1": _trial_claim1,
    "corollary": _trial_corollary,
    "signs": _trial_signs,
    "generic": _trial_generic,
    "symmetry": _trial_symmetry,
}


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run a named suite; deterministic for a fixed config."""
    start = time.perf_counter()
    if config.suite == "gallery":
        records = _run_gallery_suite(config)
    else:
        try:
            trial = _TRIALS[config.suite]
        except KeyError:
            raise UnknownSuite(
                f"no suite named {config.suite!r}; known: {', '.join(SUITE_NAMES)}"
            ) from None
        records = [trial(config, i) for i in range(config.trials)]
    return SuiteReport(config, records, time.perf_counter() - start)
