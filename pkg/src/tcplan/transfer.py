"""Carrying planners across homotopy equivalences.

Given maps ``g: Y -> X`` and ``f: X -> Y`` with a homotopy ``H`` on ``Y`` from
the identity to ``f o g``, every local rule on ``X`` induces one on ``Y``: push
the start along its ``H``-track onto the image of ``f``, follow the image of
the ``X``-path, then run the goal's ``H``-track backwards. The induced domain
is the preimage of the original one under ``g x g``.

The punctured plane around a disk obstacle deformation-retracts radially
onto a circle, which gives the two-rule planner of :func:`annulus_planner`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    Path,
    ToleranceConfig,
    concat3,
    homotopy_track,
    norm,
    normalize,
)
from .errors import HomotopyContractViolation
from .planners import LocalRule, MotionPlanner, circle_planner

Map = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class TransferData:
    """Maps ``g`` (target -> source), ``f`` (source -> target) and the homotopy
    ``H`` on the target with ``H(y, 0) = y`` and ``H(y, 1) = f(g(y))``.

    When ``probe_points`` (target members) are given, both homotopy endpoint
    conditions are checked on them at construction. ``track``, if given, is
    called as ``track(y, g(y))`` and builds the path ``t -> H(y, t)``
    directly; it must agree with ``H``.
    """

    g: Map
    f: Map
    H: Callable
    source_dim: int
    target_dim: int
    probe_points: Optional[np.ndarray] = None
    tol: ToleranceConfig = DEFAULT_TOLERANCES
    track: Optional[Callable[[np.ndarray, np.ndarray], Path]] = None

    def __post_init__(self):
        if self.probe_points is not None:
            self.check(self.probe_points)

    def check(self, points) -> float:
        """Largest endpoint-condition error of ``H`` over ``points``."""
        ys = np.atleast_2d(np.asarray(points, float))
        err0 = norm(self.H(ys, 0.0) - ys)
        err1 = norm(self.H(ys, 1.0) - self.f(self.g(ys)))
        worst = float(max(err0.max(initial=0.0), err1.max(initial=0.0)))
        if worst > self.tol.eps_assert:
            i = int(np.argmax(np.maximum(err0, err1)))
            raise HomotopyContractViolation(
                f"homotopy endpoint error {worst:.3g} at y={ys[i].tolist()}")
        return worst

    def track_of(self, y, gy=None) -> Path:
        """The path ``t -> H(y, t)``; ``gy`` is ``g(y)`` if already known."""
        if self.track is not None:
            return self.track(y, self.g(y) if gy is None else gy)
        return homotopy_track(self.H, y)


def transfer_rule(rule: LocalRule, data: TransferData) -> LocalRule:
    """Induced rule on the target space; domain is the pullback under ``g x g``."""
    g, f, tol = data.g, data.f, data.tol

    def domain(y1, y2):
        return rule.domain(g(np.asarray(y1, float)), g(np.asarray(y2, float)))

    def section(y1, y2):
        x1, x2 = g(y1), g(y2)
        middle = rule.section(x1, x2).map(f, data.target_dim)
        return concat3(data.track_of(y1, x1), middle, data.track_of(y2, x2).reversed(), tol)

    return LocalRule("~" + rule.label, domain, section)


def transfer_planner(planner: MotionPlanner, data: TransferData, target_membership, *,
                     name: Optional[str] = None, violation=None, violation_tol: float = 0.0,
                     project=None) -> MotionPlanner:
    """Transfer every rule of ``planner``; rule count and order are kept."""
    kwargs = {} if project is None else {"project": project}
    return MotionPlanner(
        tuple(transfer_rule(r, data) for r in planner.rules),
        name or f"transfer({planner.space_name})",
        target_membership,
        data.target_dim,
        violation=violation,
        violation_tol=violation_tol,
        **kwargs,
    )


@dataclass(frozen=True)
class AnnulusSpec:
    """Disk robot of radius ``l_R`` around a disk obstacle of radius ``l_O``.

    The free space is ``{p : |p| > l_O + l_R}``. ``rho`` is the radius of the
    circle the space is retracted onto; it defaults to ``2 (l_O + l_R)``.
    """

    l_O: float
    l_R: float
    rho: Optional[float] = None

    def __post_init__(self):
        if not (self.l_O > 0 and self.l_R > 0):
            raise ValueError("obstacle and robot radii must be positive")
        if self.rho is None:
            object.__setattr__(self, "rho", 2.0 * (self.l_O + self.l_R))
        if not self.rho > self.clearance:
            raise ValueError(
                f"rho={self.rho} must exceed l_O + l_R = {self.clearance}")

    @property
    def clearance(self) -> float:
        return self.l_O + self.l_R

    def membership(self, p) -> np.ndarray:
        return norm(np.asarray(p, float)) > self.clearance

    def violation(self, p) -> np.ndarray:
        r = norm(np.asarray(p, float))
        # a point exactly on the clearance circle is already a collision
        return np.where(r > self.clearance, 0.0, self.clearance - r + np.spacing(self.clearance))

    def sample_points(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Log-uniform radius in [l_O + l_R + 0.01, r_max] times a uniform angle.

        ``r_max`` is 10, raised to ``3 (l_O + l_R)`` for large obstacles so the
        retraction circle stays inside the sampled band.
        """
        lo = self.clearance + 0.01
        hi = max(10.0, 3.0 * self.clearance)
        r = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
        th = rng.uniform(0.0, 2 * np.pi, n)
        return r[:, None] * np.stack([np.cos(th), np.sin(th)], axis=1)


def annulus_retraction(spec: AnnulusSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES,
                       probe_count: int = 1000, seed: int = 0) -> TransferData:
    """Radial deformation of the free space onto the circle of radius ``rho``."""
    rho = spec.rho

    def g(z):
        return rho * normalize(z, tol)

    def f(x):
        return x

    def H(z, t):
        return (1.0 - t) * z + t * g(z)

    def track(z, u):
        z = np.asarray(z, float)
        # same arithmetic as H, with the projection computed once
        return Path(2, lambda ts: (1.0 - ts)[:, None] * z + ts[:, None] * u,
                    start=z, end=u)

    probes = spec.sample_points(np.random.default_rng(seed), probe_count)
    return TransferData(g, f, H, 2, 2, probes, tol, track)


def annulus_planner(spec: AnnulusSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> MotionPlanner:
    """Two-rule planner for the disk robot, induced from the circle planner."""
    data = annulus_retraction(spec, tol)
    rho = spec.rho

    def project(z):
        z = np.asarray(z, float)
        r = np.linalg.norm(z, axis=-1, keepdims=True)
        floor = spec.clearance + tol.eps_predicate
        return np.where(r > floor, z, z / r * floor)

    return transfer_planner(
        circle_planner(rho, tol), data, spec.membership,
        name=f"annulus(l_O={spec.l_O:g}, l_R={spec.l_R:g}, rho={rho:g})",
        violation=spec.violation, violation_tol=0.0, project=project,
    )
