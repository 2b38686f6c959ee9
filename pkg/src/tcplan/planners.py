"""Local rules, least-index planners, and the explicit planners.

A planner is an ordered list of local rules. Each rule pairs an open set of
(start, goal) pairs, given as a predicate, with a continuous section on it.
:func:`plan` picks the first rule whose domain accepts the pair. The number
of rules is an upper bound for the topological complexity of the space, and
for every planner shipped here it equals it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    Path,
    ToleranceConfig,
    as_vector,
    concat2,
    homotopy_track,
    norm,
    normalize,
    tangent_field_nu,
)
from .errors import (
    HomotopyContractViolation,
    NearZeroVector,
    NoApplicableRule,
    NotSingleRule,
    OddDimension,
    OutsideFreeSpace,
)

Predicate = Callable[[np.ndarray], np.ndarray]
PairPredicate = Callable[[np.ndarray, np.ndarray], np.ndarray]
Section = Callable[[np.ndarray, np.ndarray], Path]


@dataclass(frozen=True)
class LocalRule:
    """A domain predicate on pairs together with a section defined on it.

    ``domain`` must broadcast over stacked pairs (shape ``(n, d)``).
    """

    label: str
    domain: PairPredicate
    section: Section

    def accepts(self, a, b) -> bool:
        return bool(self.domain(np.asarray(a, float), np.asarray(b, float)))


def _indicator_violation(membership: Predicate) -> Callable[[np.ndarray], np.ndarray]:
    return lambda pts: np.where(membership(pts), 0.0, 1.0)


@dataclass(frozen=True)
class MotionPlanner:
    """Ordered local rules over a free space with least-index dispatch.

    ``violation`` scores how far points lie outside the free space (0 inside)
    and ``violation_tol`` is the largest score the harness accepts.
    ``project`` pulls a nearby ambient point back into the space; the
    harness uses it to build perturbed inputs.
    """

    rules: tuple
    space_name: str
    membership: Predicate
    dim: int
    violation: Optional[Callable[[np.ndarray], np.ndarray]] = None
    violation_tol: float = 0.0
    project: Callable[[np.ndarray], np.ndarray] = field(default=lambda x: x)

    def __post_init__(self):
        if not self.rules:
            raise ValueError("a planner needs at least one rule")
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.violation is None:
            object.__setattr__(self, "violation", _indicator_violation(self.membership))

    @property
    def rule_count(self) -> int:
        return len(self.rules)

    def contains(self, x) -> bool:
        return bool(self.membership(np.asarray(x, float)))

    def dispatch(self, a, b) -> int:
        """Zero-based index of the first rule accepting (a, b)."""
        for i, rule in enumerate(self.rules):
            if rule.accepts(a, b):
                return i
        raise NoApplicableRule(f"no rule of {self.space_name!r} accepts ({a}, {b})")

    def plan(self, a, b) -> tuple[Path, int]:
        """Plan from ``a`` to ``b``; returns the path and the 1-based rule index."""
        a = as_vector(a, self.dim)
        b = as_vector(b, self.dim)
        for name, x in (("start", a), ("goal", b)):
            if not self.contains(x):
                raise OutsideFreeSpace(f"{name} {x.tolist()} is not in {self.space_name}")
        i = self.dispatch(a, b)
        return self.rules[i].section(a, b), i + 1


def plan(planner: MotionPlanner, a, b) -> tuple[Path, int]:
    return planner.plan(a, b)


def rule_count(planner: MotionPlanner) -> int:
    return planner.rule_count


# contractible spaces ---------------------------------------------------------

def _probe_members(membership: Predicate, dim: int, n: int = 1000, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(n, dim))
    return pts[membership(pts)]


def _eval_h(H, x, t: float) -> np.ndarray:
    return np.broadcast_to(np.asarray(H(x, t), float), np.shape(x))


def contractible_planner(H, membership: Predicate, dim: int, *,
                         probe_points=None, name: str = "contractible",
                         tol: ToleranceConfig = DEFAULT_TOLERANCES,
                         violation=None, violation_tol: float = 0.0,
                         track=None) -> MotionPlanner:
    """Single-rule planner built from a contraction ``H``.

    ``H(x, 0)`` must be ``x`` and ``H(x, 1)`` a fixed point ``x0``. The
    section runs the track of the start into ``x0`` and then the reversed
    track of the goal out of it. The contract is checked on ``probe_points``
    (default: members found in the cube [-1, 1]^dim). ``track(x)``, if
    given, builds the path ``t -> H(x, t)`` directly and must agree with ``H``.
    """
    pts = _probe_members(membership, dim) if probe_points is None else np.atleast_2d(
        np.asarray(probe_points, float))
    if len(pts) == 0:
        raise HomotopyContractViolation("no member points available to check the contraction")
    x0 = _eval_h(H, pts[0], 1.0)
    for x in pts:
        err0 = norm(_eval_h(H, x, 0.0) - x)
        err1 = norm(_eval_h(H, x, 1.0) - x0)
        if err0 > tol.eps_assert or err1 > tol.eps_assert:
            raise HomotopyContractViolation(
                f"at x={x.tolist()}: |H(x,0)-x|={err0:.3g}, |H(x,1)-x0|={err1:.3g}")

    track = track or (lambda x: homotopy_track(H, x))

    def section(x1, x2):
        return concat2(track(x1), track(x2).reversed(), tol)

    def everything(a, b):
        batch = np.shape(a) if np.ndim(a) >= np.ndim(b) else np.shape(b)
        return np.ones(batch[:-1], dtype=bool)

    rule = LocalRule("contraction", everything, section)
    return MotionPlanner((rule,), name, membership, dim,
                         violation=violation, violation_tol=violation_tol)


@dataclass(frozen=True)
class StarDomain:
    """A star-shaped set with a designated star point.

    The star property cannot be certified for an arbitrary predicate; it is
    spot-checked on random members and segment parameters.
    """

    star_point: np.ndarray
    membership: Predicate
    dim: int
    violation: Optional[Callable[[np.ndarray], np.ndarray]] = None
    name: str = "star"
    probe_points: Optional[np.ndarray] = None
    outline: Optional[tuple] = None  # ("disk", center, radius) or ("rectangle", lower, upper)

    def __post_init__(self):
        object.__setattr__(self, "star_point", as_vector(self.star_point, self.dim))
        if not bool(self.membership(self.star_point)):
            raise ValueError("star point must belong to the domain")
        pts = self.members()
        rng = np.random.default_rng(1)
        ts = rng.uniform(0.0, 1.0, size=(len(pts), 1))
        moved = (1.0 - ts) * pts + ts * self.star_point
        bad = ~self.membership(moved)
        if np.any(bad):
            x = pts[np.argmax(bad)]
            raise ValueError(f"segment from {x.tolist()} to the star point leaves the domain")

    def members(self) -> np.ndarray:
        if self.probe_points is not None:
            return np.atleast_2d(np.asarray(self.probe_points, float))
        return _probe_members(self.membership, self.dim)


def star_homotopy(x0) -> Callable:
    """Straight-line contraction (1 - t) x + t x0."""
    x0 = as_vector(x0)
    return lambda x, t: (1.0 - t) * x + t * x0


def star_planner(K: StarDomain, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> MotionPlanner:
    """Continuous planner: straight to the star point, then straight out."""
    x0, d = K.star_point, K.dim

    def track(x):
        x = np.asarray(x, float)
        # same arithmetic as star_homotopy; the endpoints are known exactly
        return Path(d, lambda ts: (1.0 - ts)[:, None] * x + ts[:, None] * x0, start=x, end=x0)

    return contractible_planner(star_homotopy(x0), K.membership, d,
                                probe_points=K.members(), name=K.name, tol=tol,
                                violation=K.violation, track=track)


def disk_domain(radius: float = 1.0, center=(0.0, 0.0)) -> StarDomain:
    """Closed disk, star-shaped about its center."""
    center = as_vector(center)

    def inside(p):
        return norm(np.asarray(p, float) - center) <= radius

    def violation(p):
        return np.maximum(0.0, norm(np.asarray(p, float) - center) - radius)

    rng = np.random.default_rng(0)
    ang = rng.uniform(0, 2 * np.pi, 500)
    rad = radius * np.sqrt(rng.uniform(0, 1, 500))
    probes = center + rad[:, None] * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    return StarDomain(center, inside, center.size, violation, name="disk", probe_points=probes,
                      outline=("disk", center, float(radius)))


def rectangle_domain(lower=(-1.0, -1.0), upper=(1.0, 1.0), star_point=None) -> StarDomain:
    """Closed axis-aligned box; convex, so any member works as star point."""
    lo = as_vector(lower)
    hi = as_vector(upper, lo.size)
    if np.any(hi <= lo):
        raise ValueError("rectangle needs lower < upper in every coordinate")
    x0 = (lo + hi) / 2 if star_point is None else as_vector(star_point, lo.size)

    def inside(p):
        p = np.asarray(p, float)
        return np.all((p >= lo) & (p <= hi), axis=-1)

    def violation(p):
        p = np.asarray(p, float)
        return norm(np.maximum(0.0, np.maximum(lo - p, p - hi)))

    probes = np.random.default_rng(0).uniform(lo, hi, size=(500, lo.size))
    return StarDomain(x0, inside, lo.size, violation, name="rectangle", probe_points=probes,
                      outline=("rectangle", lo, hi))


def contraction_from_planner(planner: MotionPlanner, x0) -> Callable:
    """Contraction H(x, t) = s(x, x0)(t) read off a single-rule planner.

    ``t`` may be a float or an array of parameters (any shape; flattened).
    """
    if planner.rule_count != 1:
        raise NotSingleRule(
            f"{planner.space_name} planner has {planner.rule_count} rules; only a "
            "continuous (single-rule) planner yields a contraction")
    x0 = as_vector(x0, planner.dim)
    if not planner.contains(x0):
        raise OutsideFreeSpace(f"base point {x0.tolist()} is not in {planner.space_name}")

    def H(x, t):
        path, _ = planner.plan(x, x0)
        return path(np.ravel(t) if np.ndim(t) else t)

    return H


# odd spheres ------------------------------------------------------------------

@dataclass(frozen=True)
class SphereSpec:
    """The unit sphere S^(2m-1) inside R^(2m)."""

    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")

    @classmethod
    def from_sphere_dim(cls, d: int) -> "SphereSpec":
        if d < 1 or d % 2 == 0:
            raise OddDimension(
                f"S^{d} has odd ambient dimension {d + 1}; only odd spheres carry "
                "the nowhere-zero tangent field")
        return cls((d + 1) // 2)

    @property
    def ambient_dim(self) -> int:
        return 2 * self.m

    @property
    def sphere_dim(self) -> int:
        return 2 * self.m - 1


def geodesic_path(a, b, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Path:
    """Normalized linear interpolation from ``a`` to ``b`` on the unit sphere."""
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    if norm(a + b) <= tol.eps_predicate:
        raise NearZeroVector("geodesic between antipodal points is undefined")

    def func(ts):
        # for unit a, b the chord is shortest at t = 1/2, where its norm is
        # |a + b| / 2 > 0, so the division needs no near-zero guard
        v = (1.0 - ts)[:, None] * a + ts[:, None] * b
        return v / norm(v)[:, None]

    # closed-form ends; they match func at 0 and 1 up to rounding
    return Path(a.size, func, start=normalize(a, tol), end=normalize(b, tol))


def sphere_rule1(spec: SphereSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> LocalRule:
    """Shortest geodesic, on pairs that are not antipodal."""

    def domain(a, b):
        return norm(np.asarray(a) + np.asarray(b)) > tol.eps_predicate

    return LocalRule("s1", domain, lambda a, b: geodesic_path(a, b, tol))


def alpha_detour(spec: SphereSpec, a, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Path:
    """Path from ``a`` to ``-a`` through the tangent vector nu(a)."""
    a = as_vector(a, spec.ambient_dim)
    if abs(norm(a) - 1.0) > tol.eps_assert:
        raise OutsideFreeSpace(f"{a.tolist()} is not on the unit sphere")
    v = tangent_field_nu(a)
    return concat2(geodesic_path(a, v, tol), geodesic_path(v, -a, tol), tol)


def sphere_rule2(spec: SphereSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> LocalRule:
    """Geodesic to ``-b`` followed by the detour from ``-b`` to ``b``; on a != b."""

    def domain(a, b):
        return norm(np.asarray(a) - np.asarray(b)) > tol.eps_predicate

    def section(a, b):
        nb = -np.asarray(b, float)
        return concat2(geodesic_path(a, nb, tol), alpha_detour(spec, nb, tol), tol)

    return LocalRule("s2", domain, section)


def sphere_planner(spec: SphereSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> MotionPlanner:
    """Optimal two-rule planner on S^(2m-1)."""

    def on_sphere(x):
        return np.abs(norm(x) - 1.0) <= tol.eps_assert

    def violation(x):
        return np.abs(norm(x) - 1.0)

    return MotionPlanner(
        (sphere_rule1(spec, tol), sphere_rule2(spec, tol)),
        f"S^{spec.sphere_dim}",
        on_sphere,
        spec.ambient_dim,
        violation=violation,
        violation_tol=tol.eps_assert,
        project=lambda x: normalize(x, tol),
    )


def scale_rule(rule: LocalRule, factor: float) -> LocalRule:
    """Conjugate a rule by the dilation x -> factor * x."""

    def domain(a, b):
        return rule.domain(np.asarray(a) / factor, np.asarray(b) / factor)

    def section(a, b):
        return rule.section(np.asarray(a) / factor, np.asarray(b) / factor).map(
            lambda pts: factor * pts)

    return LocalRule(rule.label, domain, section)


def scale_planner(planner: MotionPlanner, factor: float, name: Optional[str] = None) -> MotionPlanner:
    """The planner carried to the dilated space ``factor * X``."""
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    inner_violation = planner.violation
    return MotionPlanner(
        tuple(scale_rule(r, factor) for r in planner.rules),
        name or f"{factor:g}*{planner.space_name}",
        lambda x: planner.membership(np.asarray(x) / factor),
        planner.dim,
        violation=lambda x: factor * inner_violation(np.asarray(x) / factor),
        violation_tol=factor * planner.violation_tol,
        project=lambda x: factor * planner.project(np.asarray(x) / factor),
    )


def circle_planner(radius: float = 1.0, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> MotionPlanner:
    """Two-rule planner on the circle of the given radius about the origin."""
    base = sphere_planner(SphereSpec(1), tol)
    if radius == 1.0:
        return base
    return scale_planner(base, radius, name=f"circle(r={radius:g})")


def ruleset(rules: Sequence[LocalRule], like: MotionPlanner, name: Optional[str] = None) -> MotionPlanner:
    """A planner over the same space as ``like`` with a different rule list."""
    return MotionPlanner(tuple(rules), name or like.space_name, like.membership, like.dim,
                         violation=like.violation, violation_tol=like.violation_tol,
                         project=like.project)
