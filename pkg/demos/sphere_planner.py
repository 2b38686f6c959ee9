"""
Two rules on odd spheres
========================

A walk through the two-rule planner on S^1 and S^3: which rule answers which
request, what the paths look like, and why one rule alone cannot work.
"""

import numpy as np

from tcplan import SphereSpec, sphere_planner
from tcplan.core import polyline_length, sample_path

circle = sphere_planner(SphereSpec(1))
print(circle.space_name, "uses", circle.rule_count, "rules")

# generic pairs go to the first rule: the short great-circle arc
a = np.array([1.0, 0.0])
b = np.array([np.cos(2.0), np.sin(2.0)])
path, rule = circle.plan(a, b)
print("rule", rule, "length", polyline_length(path, 10_000), "angle", np.arccos(a @ b))

# antipodal pairs have no preferred arc; the second rule heads for -b first
# and then turns through the tangent direction nu(-b)
path, rule = circle.plan(a, -a)
print("rule", rule)
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"  t={t:.2f}  {np.round(path(t), 6)}")

# just before the antipode the first rule is still in charge and swings the
# other way round, so arbitrarily close requests get paths 2 apart
eps = 1e-6
near = np.array([np.cos(np.pi - eps), np.sin(np.pi - eps)])
p_near, r_near = circle.plan(a, near)
gap = np.max(np.linalg.norm(sample_path(p_near, 257) - sample_path(path, 257), axis=1))
print(f"rules {r_near} and {rule}, goals {np.linalg.norm(near + a):.1e} apart, paths {gap:.3f} apart")

# the same construction on S^3 inside R^4
s3 = sphere_planner(SphereSpec(2))
rng = np.random.default_rng(0)
x, y = rng.standard_normal((2, 4))
x /= np.linalg.norm(x)
y /= np.linalg.norm(y)
for goal in (y, -x):
    path, rule = s3.plan(x, goal)
    radii = np.linalg.norm(sample_path(path, 1000), axis=1)
    print(f"S^3 rule {rule}: |gamma(t)| within [{radii.min():.12f}, {radii.max():.12f}]")
