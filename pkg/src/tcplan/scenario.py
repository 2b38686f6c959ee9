"""Scenario files: a space, a start and a goal, as JSON.

Example::

    {"space": {"type": "annulus", "l_O": 0.3, "l_R": 0.2},
     "start": [2, 0], "goal": [0, 2], "samples": 256}

Space types are ``sphere`` (``m``), ``annulus`` (``l_O``, ``l_R``, optional
``rho``) and ``star`` (``shape`` = ``disk`` with ``radius``/``center``, or
``rectangle`` with ``lower``/``upper`` and optional ``star_point``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .planners import (
    MotionPlanner,
    SphereSpec,
    StarDomain,
    disk_domain,
    rectangle_domain,
    sphere_planner,
    star_planner,
)
from .transfer import AnnulusSpec, annulus_planner


class ScenarioError(ValueError):
    """The scenario file is malformed or violates an invariant."""


@dataclass
class Scenario:
    space: dict
    start: np.ndarray
    goal: np.ndarray
    samples: int = 256
    annulus: Optional[AnnulusSpec] = field(default=None, repr=False)
    sphere: Optional[SphereSpec] = field(default=None, repr=False)
    star: Optional[StarDomain] = field(default=None, repr=False)

    @property
    def kind(self) -> str:
        return self.space["type"]

    @property
    def dim(self) -> int:
        if self.sphere is not None:
            return self.sphere.ambient_dim
        if self.star is not None:
            return self.star.dim
        return 2

    def planner(self) -> MotionPlanner:
        if self.annulus is not None:
            return annulus_planner(self.annulus)
        if self.sphere is not None:
            return sphere_planner(self.sphere)
        return star_planner(self.star)


def _num(d, key, default=None):
    if key not in d:
        if default is not None:
            return default
        raise ScenarioError(f"space.{key} is required")
    try:
        return float(d[key])
    except (TypeError, ValueError):
        raise ScenarioError(f"space.{key} must be a number, got {d[key]!r}") from None


def _vec(x, what):
    try:
        v = np.array(x, dtype=float)
    except (TypeError, ValueError):
        raise ScenarioError(f"{what} must be a list of numbers") from None
    if v.ndim != 1 or v.size == 0 or not np.isfinite(v).all():
        raise ScenarioError(f"{what} must be a nonempty list of finite numbers")
    return v


def build_space(space: dict) -> dict:
    """Turn a space description into ``{"annulus"|"sphere"|"star": object}``."""
    if not isinstance(space, dict) or "type" not in space:
        raise ScenarioError("space must be an object with a 'type' field")
    kind = space["type"]
    try:
        if kind == "sphere":
            m = space.get("m", 1)
            if not isinstance(m, int) or isinstance(m, bool):
                raise ScenarioError("space.m must be a positive integer")
            return {"sphere": SphereSpec(m)}
        if kind == "annulus":
            rho = space.get("rho")
            return {"annulus": AnnulusSpec(_num(space, "l_O"), _num(space, "l_R"),
                                           None if rho is None else _num(space, "rho"))}
        if kind == "star":
            shape = space.get("shape", "disk")
            if shape == "disk":
                center = _vec(space.get("center", [0.0, 0.0]), "space.center")
                return {"star": disk_domain(_num(space, "radius", 1.0), center)}
            if shape == "rectangle":
                sp = space.get("star_point")
                return {"star": rectangle_domain(
                    _vec(space.get("lower", [-1.0, -1.0]), "space.lower"),
                    _vec(space.get("upper", [1.0, 1.0]), "space.upper"),
                    None if sp is None else _vec(sp, "space.star_point"))}
            raise ScenarioError(f"unknown star shape {shape!r} (expected disk or rectangle)")
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(f"space: {exc}") from None
    raise ScenarioError(f"unknown space type {kind!r} (expected sphere, annulus or star)")


def parse_scenario(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a JSON object")
    for key in ("space", "start", "goal"):
        if key not in doc:
            raise ScenarioError(f"missing required field {key!r}")
    built = build_space(doc["space"])
    samples = doc.get("samples", 256)
    if not isinstance(samples, int) or isinstance(samples, bool) or samples < 2:
        raise ScenarioError("samples must be an integer >= 2")
    sc = Scenario(dict(doc["space"]), _vec(doc["start"], "start"), _vec(doc["goal"], "goal"),
                  samples, **built)
    planner = sc.planner()
    for name, x in (("start", sc.start), ("goal", sc.goal)):
        if x.size != sc.dim:
            raise ScenarioError(f"{name} has dimension {x.size}, space has dimension {sc.dim}")
        if not planner.contains(x):
            raise ScenarioError(f"{name} {x.tolist()} violates membership: {_membership_text(sc)}")
    return sc


def _membership_text(sc: Scenario) -> str:
    if sc.annulus is not None:
        return f"|p| > l_O + l_R = {sc.annulus.clearance:g}"
    if sc.sphere is not None:
        return "|x| = 1"
    return f"point must lie in the {sc.star.name}"


def load_scenario(path) -> Scenario:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON ({exc})") from None
    return parse_scenario(doc)


def parse_space_arg(text: str) -> dict:
    """Parse a compact space spec such as ``sphere:m=2`` or ``annulus:l_O=0.3,l_R=0.2``."""
    kind, _, rest = text.partition(":")
    space: dict = {"type": kind}
    if kind == "star" and rest and "=" not in rest:
        space["shape"] = rest
        return space
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ScenarioError(f"bad space parameter {item!r} (expected key=value)")
        try:
            space[key] = int(val) if key == "m" else float(val)
        except ValueError:
            raise ScenarioError(f"space parameter {key} must be numeric, got {val!r}") from None
    return space
