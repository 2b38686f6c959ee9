"""Full check suites for the shipped spaces."""

from __future__ import annotations

import numpy as np

from . import verify
from .errors import WitnessNotFound
from .planners import (
    MotionPlanner,
    SphereSpec,
    StarDomain,
    circle_planner,
    sphere_planner,
    star_planner,
)
from .transfer import AnnulusSpec, annulus_planner, annulus_retraction


def _witness(planner, hint, seed):
    try:
        return verify.discontinuity_witness(planner, hint, seed=seed)
    except WitnessNotFound as exc:
        return exc.report


def _generic(planner: MotionPlanner, sampler, seed: int, n: int, path_samples: int,
             h: float = 1e-8):
    return [
        verify.check_endpoints(planner, sampler, n, seed),
        verify.check_membership(planner, sampler, min(n, 1000), path_samples, seed),
        verify.check_cover(planner, sampler, n, seed),
        verify.check_junctions(planner, sampler, min(n, 1000), h=h, seed=seed),
    ]


def sphere_suite(spec: SphereSpec, seed: int = 0, n: int = 1000, path_samples: int = 256):
    """Every check that applies to S^(2m-1). The heavier checks cap at 1000 pairs."""
    planner = sphere_planner(spec)
    reports = _generic(planner, verify.sphere_pairs(spec), seed, n, path_samples)
    if spec.m == 1:
        reports.append(verify.check_cover(planner, verify.circle_grid_pairs(720), 720 * 720, seed))
    far = verify.sphere_pairs(spec, min_sum_norm=0.1)
    reports.append(verify.check_geodesic(spec, far, min(n, 1000), seed))
    reports.append(verify.continuity_probe(planner.rules[0], verify.sphere_pairs(spec, 0.2),
                                           min(n, 1000), 1e-4, seed, planner.project))
    e = np.zeros(spec.ambient_dim)
    e[0] = 1.0
    reports.append(_witness(planner, (e, -e), seed))
    return reports


def annulus_suite(spec: AnnulusSpec, seed: int = 0, n: int = 1000, path_samples: int = 256):
    planner = annulus_planner(spec)
    sampler = verify.annulus_pairs(spec)
    # path speed grows with rho; shrink the probe so the gap bound stays in length units
    h = 1e-8 / max(1.0, spec.rho)
    reports = _generic(planner, sampler, seed, n, path_samples, h)
    reports.append(verify.check_transfer_wiring(
        planner, circle_planner(spec.rho), annulus_retraction(spec), sampler, min(n, 1000),
        seed=seed))
    reports.append(verify.continuity_probe(planner.rules[0], verify.annulus_pairs(spec, 0.2),
                                           min(n, 1000), 1e-4, seed, planner.project))
    r = 2.0 * spec.clearance
    reports.append(_witness(planner, ((r, 0.0), (-r, 0.0)), seed))
    return reports


def star_suite(K: StarDomain, seed: int = 0, n: int = 1000, path_samples: int = 256):
    planner = star_planner(K)
    sampler = verify.star_pairs(K)
    reports = _generic(planner, sampler, seed, n, path_samples)
    reports.append(verify.continuity_probe(planner.rules[0], sampler, min(n, 1000), 1e-4, seed))
    return reports


def fixture_suite(planner: MotionPlanner, seed: int = 0, n: int = 1000, path_samples: int = 256):
    """Generic checks for an arbitrary planner (used with the broken fixtures)."""
    if planner.dim == 2 and planner.space_name in ("straight-line",):
        sampler = verify.annulus_pairs(AnnulusSpec(0.3, 0.2))
    else:
        sampler = verify.sphere_pairs(SphereSpec(1))
    reports = _generic(planner, sampler, seed, n, path_samples)
    if planner.space_name != "straight-line":
        reports.append(verify.check_cover(planner, verify.circle_grid_pairs(720), 720 * 720, seed))
    return reports
