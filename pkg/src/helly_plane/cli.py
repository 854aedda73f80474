"""Command line interface.

    helly-plane verify <suite> --trials N --seed S [--mode exact|float]
                       [--tol 1e-9] [--ball maxnorm|euclidean|random|FILE]
                       [--out report.json] [--svg out.svg]
    helly-plane gallery run
    helly-plane signs <vectors.json> --ball <ball.json> [--svg out.svg]
    helly-plane ginzburg <vectors.json> [--u 0,1] [--svg out.svg]
    helly-plane symmetry check <polygon.json> [--svg out.svg]

Exit status is 0 exactly when there were no substantive failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algorithms import choose_signs, ginzburg_reduce
from .errors import HellyPlaneError
from .gallery import CASE_NAMES, run_gallery
from .generators import gen_random_ball, gen_unit_vectors
from .norms import ball_from_json, euclidean_ball, load_vectors, square_ball
from .scalars import parse_scalar
from .suites import SUITE_NAMES, SuiteConfig, run_suite
from .svgout import instance_svg
from .symmetry import (
    find_violation_halfplane,
    find_violation_surrounding,
    is_centrally_symmetric,
    make_convex_body,
)
from .vectors import Vec2


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def _parse_direction(text: str, mode: str = "float") -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"direction must look like '0,1'; got {text!r}")
    return Vec2(parse_scalar(parts[0], mode), parse_scalar(parts[1], mode))


def _write_svg(path: str, ball, vectors, outline=None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(instance_svg(ball, vectors, outline))


def _cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        trials=args.trials,
        seed=args.seed,
        mode=args.mode,
        tol=args.tol,
        ball_source=args.ball,
    )
    report = run_suite(config)
    text = report.to_json_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        print(text)
    print(
        f"suite {args.suite}: {report.passes} pass / {report.failures} fail / "
        f"{report.vacuous} vacuous ({report.wall_time:.2f}s)",
        file=sys.stderr,
    )
    if args.svg:
        # render the first trial's data as a representative picture
        import random

        rng = random.Random(config.seed)
        if config.ball_source == "maxnorm":
            ball = square_ball()
        elif config.ball_source == "euclidean":
            ball = euclidean_ball()
        else:
            ball = gen_random_ball(rng.getrandbits(32))
        vectors = gen_unit_vectors(ball, 5, rng.getrandbits(32))
        _write_svg(args.svg, ball, vectors)
    return 0 if report.failures == 0 else 1


def _cmd_gallery(args) -> int:
    if args.action != "run":
        print(f"unknown gallery action {args.action!r}", file=sys.stderr)
        return 2
    results = run_gallery()
    failures = 0
    for name in CASE_NAMES:
        for check in results[name]:
            status = "ok" if check.passed else "FAIL"
            print(f"{name}: {check.name}: expected {check.expected}, got {check.actual} [{status}]")
            if not check.passed:
                failures += 1
    print(f"gallery: {len(CASE_NAMES)} cases, {failures} failing checks")
    return 0 if failures == 0 else 1


def _cmd_signs(args) -> int:
    ball = ball_from_json(_load_json(args.ball))
    mode = "float" if not ball.is_polygonal else "exact"
    vectors = load_vectors(_load_json(args.vectors), mode)
    sv = choose_signs(ball, vectors)
    n = len(vectors)
    checked = 2 ** (n - 1) if n <= 15 else 1000  # odd-size subsets of [n]
    print(json.dumps({"signs": sv.signs, "odd_subsets_checked": checked, "all_pass": True}))
    if args.svg:
        _write_svg(args.svg, ball, vectors)
    return 0


def _cmd_ginzburg(args) -> int:
    vectors = load_vectors(_load_json(args.vectors), "float")
    u = _parse_direction(args.u)
    trace = ginzburg_reduce(vectors, u)
    for step in trace.steps:
        print(json.dumps(step.to_json()))
    if args.svg:
        _write_svg(args.svg, euclidean_ball(), vectors)
    return 0


def _cmd_symmetry(args) -> int:
    if args.action != "check":
        print(f"unknown symmetry action {args.action!r}", file=sys.stderr)
        return 2
    doc = _load_json(args.polygon)
    body = make_convex_body([Vec2.from_json(p) for p in doc["vertices"]])
    symmetric = is_centrally_symmetric(body)
    w1 = find_violation_halfplane(body)
    w2 = find_violation_surrounding(body)
    print(
        json.dumps(
            {
                "symmetric": symmetric,
                "witness_i": w1.to_json() if w1 else None,
                "witness_ii": w2.to_json() if w2 else None,
            }
        )
    )
    if args.svg:
        marks = [w1.a, w1.b, w1.c] if w1 else []
        _write_svg(args.svg, None, marks, outline=body.vertices)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helly-plane",
        description="verify vector-sum bounds and central symmetry in normed planes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--ball", default="random",
                   help="maxnorm | euclidean | random | path to a ball JSON file")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--svg", help="render a representative instance to this file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gallery", help="evaluate the fixed instance gallery")
    p.add_argument("action", choices=["run"])
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("signs", help="choose odd-subset-safe signs for unit vectors")
    p.add_argument("vectors", help="vector-set JSON file")
    p.add_argument("--ball", required=True, help="ball JSON file")
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_signs)

    p = sub.add_parser("ginzburg", help="rotation reduction of a Euclidean halfplane family")
    p.add_argument("vectors", help="vector-set JSON file")
    p.add_argument("--u", default="0,1", help="halfplane direction, e.g. 0,1")
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_ginzburg)

    p = sub.add_parser("symmetry", help="central symmetry check with witnesses")
    p.add_argument("action", choices=["check"])
    p.add_argument("polygon", help="polygon JSON file")
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_symmetry)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HellyPlaneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
