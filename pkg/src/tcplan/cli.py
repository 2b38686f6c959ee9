"""Command line front end: ``tcplan plan|verify|render``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 no rule accepted the requested pair.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import suite
from .core import sample_path
from .errors import NoApplicableRule, TCPlanError
from .fixtures import FIXTURES
from .render import render_svg
from .scenario import ScenarioError, build_space, load_scenario, parse_space_arg

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_NO_RULE = 0, 1, 2, 3


def _plan(sc):
    planner = sc.planner()
    path, rule = planner.plan(sc.start, sc.goal)
    ts = np.linspace(0.0, 1.0, sc.samples)
    return planner, rule, ts, sample_path(path, sc.samples)


def format_csv(planner, rule, ts, pts) -> str:
    buf = io.StringIO()
    buf.write(f"# planner={planner.space_name}\n# rule_index={rule}\n"
              f"# rule_count={planner.rule_count}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t"] + [f"x{i + 1}" for i in range(pts.shape[1])])
    for t, p in zip(ts, pts):
        w.writerow([repr(float(t))] + [repr(float(x)) for x in p])
    return buf.getvalue()


def format_json(planner, rule, ts, pts) -> str:
    doc = {
        "planner": planner.space_name,
        "rule_index": rule,
        "rule_count": planner.rule_count,
        "t": ts.tolist(),
        "points": pts.tolist(),
    }
    return json.dumps(doc, indent=1) + "\n"


def _emit(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_plan(args) -> int:
    sc = load_scenario(args.scenario)
    planner, rule, ts, pts = _plan(sc)
    fmt = format_csv if args.format == "csv" else format_json
    _emit(fmt(planner, rule, ts, pts), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise ScenarioError(f"unknown fixture {args.fixture!r}; choose from {sorted(FIXTURES)}")
        label = f"fixture:{args.fixture}"
        reports = suite.fixture_suite(FIXTURES[args.fixture](), args.seed, args.n)
    else:
        if args.scenario:
            space = load_scenario(args.scenario).space
        elif args.space:
            space = parse_space_arg(args.space)
        else:
            raise ScenarioError("verify needs --scenario, --space or --fixture")
        built = build_space(space)
        label = json.dumps(space, sort_keys=True)
        if "sphere" in built:
            reports = suite.sphere_suite(built["sphere"], args.seed, args.n)
        elif "annulus" in built:
            reports = suite.annulus_suite(built["annulus"], args.seed, args.n)
        else:
            reports = suite.star_suite(built["star"], args.seed, args.n)
    for r in reports:
        print(r.to_line())
    if args.report:
        from .verify import reports_to_json
        _emit(reports_to_json(reports, space=label, seed=args.seed, n=args.n) + "\n", args.report)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_render(args) -> int:
    sc = load_scenario(args.scenario)
    if sc.dim != 2:
        raise ScenarioError(f"render needs a planar scenario, got ambient dimension {sc.dim}")
    _, _, _, pts = _plan(sc)
    svg = render_svg(pts, sc.start, sc.goal, annulus=sc.annulus,
                     unit_circle=sc.sphere is not None, star=sc.star)
    _emit(svg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tcplan", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="plan a scenario and write the sampled path")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_plan)

    v = sub.add_parser("verify", help="run the property checks for a space")
    v.add_argument("--scenario")
    v.add_argument("--space", help="e.g. sphere:m=1, annulus:l_O=0.3,l_R=0.2, star:disk")
    v.add_argument("--fixture", help="run the checks on a deliberately broken planner")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n", type=int, default=1000)
    v.add_argument("--report", help="write a JSON report here")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a planar scenario as SVG")
    r.add_argument("--scenario", required=True)
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoApplicableRule as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_RULE
    except (ScenarioError, TCPlanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
