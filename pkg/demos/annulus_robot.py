"""
A disk robot around a disk obstacle
===================================

The free positions of a disk robot of radius l_R around an obstacle of
radius l_O form the punctured plane |p| > l_O + l_R. Pushing every position
radially onto the circle of radius rho turns the circle planner into a
planner for the robot with the same two rules.

Usage: python demos/annulus_robot.py [out.svg]
"""

import sys

import numpy as np

from tcplan import AnnulusSpec, annulus_planner
from tcplan.core import sample_path
from tcplan.render import render_svg

spec = AnnulusSpec(l_O=0.3, l_R=0.2)
planner = annulus_planner(spec)
print(planner.space_name, "clearance", spec.clearance)

start, goal = np.array([2.0, 0.0]), np.array([0.0, 2.0])
path, rule = planner.plan(start, goal)

# three legs: slide in to the circle, go round it, slide out
for t in (0.0, 1 / 6, 1 / 3, 1 / 2, 2 / 3, 5 / 6, 1.0):
    print(f"t={t:.3f}  {np.round(path(t), 6)}")

pts = sample_path(path, 400)
print("rule", rule, "closest approach", np.linalg.norm(pts, axis=1).min())

# goals in the opposite direction are handled by the second rule
_, rule = planner.plan(start, -1.5 * start)
print("opposite goal uses rule", rule)

# positions inside the clearance disk are rejected
try:
    planner.plan([0.45, 0.0], goal)
except ValueError as exc:
    print("rejected:", exc)

out = sys.argv[1] if len(sys.argv) > 1 else "annulus.svg"
with open(out, "w") as fh:
    fh.write(render_svg(pts, start, goal, annulus=spec))
print("wrote", out)
