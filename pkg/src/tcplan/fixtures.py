"""Deliberately broken planners used to self-test the harness."""

import numpy as np

from .core import Path, segment
from .planners import (
    LocalRule,
    MotionPlanner,
    SphereSpec,
    geodesic_path,
    ruleset,
    sphere_planner,
    sphere_rule1,
)
from .transfer import AnnulusSpec, annulus_planner


def broken_rule_planner() -> MotionPlanner:
    """S^1 planner whose first rule overshoots the goal by about 0.1 rad."""
    base = sphere_planner(SphereSpec(1))
    good = base.rules[0]

    def section(a, b):
        c, s = np.cos(0.1), np.sin(0.1)
        off = np.array([c * b[0] - s * b[1], s * b[0] + c * b[1]])
        return geodesic_path(a, off)

    def domain(a, b):
        # keep the overshoot target away from -a
        return good.domain(a, b) & (np.linalg.norm(np.asarray(a) + np.asarray(b), axis=-1) > 0.5)

    return ruleset([LocalRule("broken", domain, section), *base.rules], base, "broken-rule")


def rule1_only_planner() -> MotionPlanner:
    """S^1 with the geodesic rule alone; antipodal pairs are uncovered."""
    base = sphere_planner(SphereSpec(1))
    return ruleset([sphere_rule1(SphereSpec(1))], base, "rule1-only")


def broken_junction_planner() -> MotionPlanner:
    """S^1 planner whose paths jump from the goal's antipode to the goal at t = 1/2."""
    base = sphere_planner(SphereSpec(1))

    def section(a, b):
        a = np.asarray(a, float)
        b = np.asarray(b, float)

        def func(ts):
            out = np.empty((ts.size, 2))
            left = ts <= 0.5
            out[left] = a
            out[~left] = b
            return out

        return Path(2, func, (0.5,))

    everything = LocalRule("jump", lambda a, b: np.ones(np.shape(a)[:-1], bool), section)
    return ruleset([everything], base, "broken-junction")


def straight_line_planner(spec: AnnulusSpec = AnnulusSpec(0.3, 0.2)) -> MotionPlanner:
    """Ignores the obstacle: straight segment from start to goal."""
    base = annulus_planner(spec)
    rule = LocalRule("segment", lambda a, b: np.ones(np.shape(a)[:-1], bool), segment)
    return ruleset([rule], base, "straight-line")


FIXTURES = {
    "broken-rule": broken_rule_planner,
    "rule1-only": rule1_only_planner,
    "broken-junction": broken_junction_planner,
    "straight-line": straight_line_planner,
}
