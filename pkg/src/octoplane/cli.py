"""`verify` command line entry point.

Runs the numerical verification suites over the four plane geometries and
prints one pass/fail line per check, optionally writing a deterministic
JSON report.  Exit status: 0 all checks passed, 1 at least one check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .plane import ALL_PLANES
from .suites import SUITE_NAMES, PLANE_BY_NAME, run_suite
from .isometry import steps_from_json, IsometryComposition, verify_isometry
from .sampling import make_rng, sample_chart1_point


def _build_parser():
    p = argparse.ArgumentParser(
        prog="verify",
        description="numerically verify the structure of the four plane geometries",
    )
    p.add_argument(
        "suite",
        choices=("all",) + SUITE_NAMES,
        help="which verification suite to run",
    )
    p.add_argument(
        "--plane",
        choices=("all", "op2", "para", "op11", "oh2"),
        default="all",
        help="restrict to one plane geometry",
    )
    p.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
    p.add_argument("--samples", type=int, default=100, help="samples per randomized check")
    p.add_argument("--tol", type=float, default=None, help="override the suite tolerance")
    p.add_argument("--fd-step", type=float, default=None, help="override the finite-difference step")
    p.add_argument("--json", metavar="PATH", default=None, help="write a JSON report to PATH")
    p.add_argument(
        "--steps",
        metavar="FILE",
        default=None,
        help="JSON file with an isometry step list to check against the metric "
        "(used with the isometry suite)",
    )
    return p


def _check_steps(args, planes):
    if len(planes) != 1:
        print("--steps needs a single --plane", file=sys.stderr)
        return None, 2
    kind = planes[0]
    try:
        with open(args.steps) as fh:
            steps = steps_from_json(kind, fh.read())
    except (OSError, ValueError, KeyError) as exc:
        print(f"could not read steps file: {exc}", file=sys.stderr)
        return None, 2
    rng = make_rng(args.seed)
    pts = [sample_chart1_point(rng, kind, margin=0.4) for _ in range(5)]
    rep = verify_isometry(kind, IsometryComposition(steps), pts, fd_step=args.fd_step or 1e-5)
    tol = args.tol if args.tol is not None else 1e-7
    passed = rep["max_deviation"] <= tol
    block = {
        "plane": kind.name,
        "checks": [
            {
                "name": "user_steps_pullback",
                "statement": "the supplied step composition preserves the metric",
                "worst": rep["max_deviation"],
                "tol": tol,
                "passed": passed,
            }
        ],
        "passed": passed,
    }
    return block, 0 if passed else 1


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)

    if args.samples <= 0 or (args.tol is not None and args.tol <= 0):
        print("--samples and --tol must be positive", file=sys.stderr)
        return 2

    planes = ALL_PLANES if args.plane == "all" else [PLANE_BY_NAME[args.plane]]
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)

    report = {"schema": 1, "seed": args.seed, "samples": args.samples, "suites": []}
    all_passed = True

    if args.steps is not None:
        block, status = _check_steps(args, planes)
        if status == 2:
            return 2
        report["suites"].append({"suite": "isometry_steps", "planes": [block]})
        all_passed = all_passed and block["passed"]
        _emit("isometry_steps", [block])
    else:
        for suite in suites:
            blocks = []
            for kind in planes:
                blocks.append(
                    run_suite(
                        suite,
                        kind,
                        seed=args.seed,
                        samples=args.samples,
                        tol=args.tol,
                        fd_step=args.fd_step,
                    )
                )
            report["suites"].append({"suite": suite, "planes": blocks})
            all_passed = all_passed and all(b["passed"] for b in blocks)
            _emit(suite, blocks)

    report["passed"] = all_passed
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print("RESULT: PASS" if all_passed else "RESULT: FAIL")
    return 0 if all_passed else 1


def _emit(suite, blocks):
    for block in blocks:
        for c in block["checks"]:
            tag = "PASS" if c["passed"] else "FAIL"
            print(
                f"[{tag}] {suite}/{block['plane']}/{c['name']}: "
                f"worst={c['worst']:.3e} tol={c['tol']:.1e}"
            )


if __name__ == "__main__":
    sys.exit(main())
