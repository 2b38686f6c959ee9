"""
Checking planners empirically
=============================

The harness samples start/goal pairs from a seeded generator and reports the
worst violation of each property. Deliberately broken planners show that
each check can fail.
"""

from tcplan import AnnulusSpec, SphereSpec
from tcplan.fixtures import FIXTURES
from tcplan.suite import annulus_suite, fixture_suite, sphere_suite

for spec in (SphereSpec(1), SphereSpec(2)):
    print(f"-- S^{spec.sphere_dim}")
    for report in sphere_suite(spec, seed=1, n=500):
        print(report.to_line())

print("-- disk robot, l_O=3, l_R=1")
for report in annulus_suite(AnnulusSpec(3.0, 1.0), seed=1, n=500):
    print(report.to_line())

# every fixture should produce at least one FAIL line
for name, make in FIXTURES.items():
    failed = [r.check_name for r in fixture_suite(make(), seed=1, n=300) if not r.passed]
    print(f"fixture {name}: failing checks {failed}")
