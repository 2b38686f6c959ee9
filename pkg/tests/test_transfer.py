import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from tcplan import (
    AnnulusSpec,
    HomotopyContractViolation,
    OutsideFreeSpace,
    SphereSpec,
    TransferData,
    annulus_planner,
    annulus_retraction,
    sphere_planner,
    transfer_planner,
)
from tcplan.core import sample_path

EPS = 1e-9
angles = st.floats(0.0, 2 * math.pi, allow_nan=False)
radii = st.floats(0.51, 20.0, allow_nan=False)


def polar(r, th):
    return r * np.array([math.cos(th), math.sin(th)])


class TestAnnulusSpec:
    def test_default_rho(self):
        spec = AnnulusSpec(0.3, 0.2)
        assert spec.clearance == pytest.approx(0.5)
        assert spec.rho == pytest.approx(1.0)

    @pytest.mark.parametrize("args", [(0.3, 0.2, 0.5), (0.3, 0.2, 0.4), (0.0, 0.2), (0.3, -1.0)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            AnnulusSpec(*args)

    def test_clearance_circle_is_not_free(self, annulus_spec):
        assert not annulus_spec.membership(np.array([0.5, 0.0]))
        assert annulus_spec.membership(np.array([0.5 + 1e-12, 0.0]))
        assert annulus_spec.violation(np.array([0.5, 0.0])) > 0


class TestRetraction:
    def test_homotopy_example(self, annulus_spec):
        data = annulus_retraction(annulus_spec)
        assert_allclose(data.H(np.array([2.0, 0.0]), 0.5), [1.5, 0.0])
        assert_allclose(data.g(np.array([0.0, -3.0])), [0.0, -1.0])

    @given(radii, angles, st.floats(0.0, 1.0))
    def test_track_matches_homotopy(self, r, th, t):
        data = annulus_retraction(AnnulusSpec(0.3, 0.2))
        z = polar(r, th)
        assert_allclose(data.track_of(z)(t), data.H(z, t), atol=1e-12)

    def test_bad_homotopy_rejected(self):
        g = lambda z: z / np.linalg.norm(z, axis=-1, keepdims=True)
        with pytest.raises(HomotopyContractViolation):
            TransferData(g, lambda x: x, lambda z, t: z, 2, 2, probe_points=[[2.0, 0.0]])


class TestAnnulusPlanner:
    def test_two_rules(self, annulus):
        assert annulus.rule_count == 2

    def test_example_path(self, annulus):
        path, rule = annulus.plan([2.0, 0.0], [0.0, 2.0])
        assert rule == 1
        assert_allclose(path(1 / 6), [1.5, 0.0])
        assert_allclose(path(0.5), [math.sqrt(0.5), math.sqrt(0.5)])
        assert_allclose(path(5 / 6), [0.0, 1.5])
        assert np.min(np.linalg.norm(sample_path(path, 1000), axis=1)) >= 1.0 - EPS

    def test_opposite_directions_use_second_rule(self, annulus):
        _, rule = annulus.plan([2.0, 0.0], [-3.0, 0.0])
        assert rule == 2

    def test_collision_start_rejected(self, annulus):
        with pytest.raises(OutsideFreeSpace):
            annulus.plan([0.4, 0.0], [2.0, 0.0])

    @settings(max_examples=80, deadline=None)
    @given(radii, angles, radii, angles)
    def test_radius_bound(self, r1, t1, r2, t2):
        # radius moves linearly between |z| and rho on the tracks, sits at rho between
        P = annulus_planner(AnnulusSpec(0.3, 0.2))
        z1, z2 = polar(r1, t1), polar(r2, t2)
        path, _ = P.plan(z1, z2)
        rs = np.linalg.norm(sample_path(path, 300), axis=1)
        assert rs.min() >= min(r1, r2, 1.0) - EPS
        assert rs.max() <= max(r1, r2, 1.0) + EPS
        assert np.linalg.norm(path(0.0) - z1) <= EPS
        assert np.linalg.norm(path(1.0) - z2) <= EPS

    @settings(max_examples=50)
    @given(radii, angles, radii, angles)
    def test_pullback_domains(self, r1, t1, r2, t2):
        spec = AnnulusSpec(0.3, 0.2)
        P = annulus_planner(spec)
        src = sphere_planner(SphereSpec(1))
        z1, z2 = polar(r1, t1), polar(r2, t2)
        u1, u2 = z1 / r1, z2 / r2
        for rule, base in zip(P.rules, src.rules):
            assert rule.accepts(z1, z2) == base.accepts(u1, u2)

    def test_large_obstacle(self):
        P = annulus_planner(AnnulusSpec(3.0, 1.0))
        assert P.contains([4.5, 0.0]) and not P.contains([4.0, 0.0])
        path, _ = P.plan([4.5, 0.0], [0.0, -5.0])
        assert np.min(np.linalg.norm(sample_path(path, 500), axis=1)) > 4.0


def test_identity_transfer_reproduces_source():
    src = sphere_planner(SphereSpec(1))
    ident = lambda x: x
    data = TransferData(ident, ident, lambda y, t: y + 0.0 * t, 2, 2, probe_points=[[1.0, 0.0]])
    P = transfer_planner(src, data, src.membership)
    assert P.rule_count == 2
    for a, b in [([1.0, 0.0], [0.0, 1.0]), ([1.0, 0.0], [-1.0, 0.0])]:
        path, rule = P.plan(a, b)
        base, base_rule = src.plan(a, b)
        assert rule == base_rule
        for t in np.linspace(1 / 3, 2 / 3, 11):
            assert_allclose(path(t), base(3 * t - 1), atol=1e-15)
        assert_allclose(path(0.2), a)
        assert_allclose(path(0.9), b)
