"""Property harness for motion planners.

Each check samples (start, goal) pairs from a seeded generator, measures the
worst violation of one property and returns a :class:`VerificationReport`.
Pair samplers are plain callables ``sampler(rng, n) -> (A, B)`` returning two
``(n, d)`` arrays of admissible starts and goals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import DEFAULT_TOLERANCES, ToleranceConfig, norm, polyline_length, sample_path
from .errors import NoApplicableRule, PreconditionViolation, WitnessNotFound
from .planners import LocalRule, MotionPlanner, SphereSpec, StarDomain, sphere_rule1
from .transfer import AnnulusSpec, TransferData

PairSampler = Callable[[np.random.Generator, int], tuple]


@dataclass
class VerificationReport:
    check_name: str
    samples: int
    max_violation: float
    tolerance: float
    seed: Optional[int] = None
    witnesses: list = field(default_factory=list)
    passed: bool = field(init=False)

    def __post_init__(self):
        self.max_violation = float(self.max_violation)
        self.passed = bool(self.max_violation <= self.tolerance)

    def to_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.check_name} samples={self.samples} "
                f"max_violation={self.max_violation:.3e} tol={self.tolerance:.1e} seed={self.seed}")
        if not self.passed and self.witnesses:
            line += f" witness={json.dumps(_jsonable(self.witnesses[0]))}"
        return line

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "seed": self.seed,
            "samples": self.samples,
            "max_violation": _jsonable(self.max_violation),
            "tolerance": self.tolerance,
            "witnesses": _jsonable(self.witnesses),
            "passed": self.passed,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else str(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


def reports_to_json(reports, **meta) -> str:
    doc = dict(meta)
    doc["all_passed"] = all(r.passed for r in reports)
    doc["reports"] = [r.to_dict() for r in reports]
    return json.dumps(doc, indent=2, sort_keys=True)


# samplers -------------------------------------------------------------------

def sphere_points(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    """Uniform points on S^(2m-1); on the circle this is a uniform angle."""
    if m == 1:
        th = rng.uniform(0.0, 2 * np.pi, n)
        return np.stack([np.cos(th), np.sin(th)], axis=1)
    x = rng.standard_normal((n, 2 * m))
    return x / norm(x)[:, None]


def sphere_pairs(spec: SphereSpec, min_sum_norm: Optional[float] = None) -> PairSampler:
    """Uniform pairs on the sphere, optionally kept away from antipodes."""

    def sampler(rng, n):
        A = sphere_points(rng, n, spec.m)
        B = sphere_points(rng, n, spec.m)
        if min_sum_norm is not None:
            bad = norm(A + B) <= min_sum_norm
            while bad.any():
                B[bad] = sphere_points(rng, int(bad.sum()), spec.m)
                bad = norm(A + B) <= min_sum_norm
        return A, B

    return sampler


def circle_grid_pairs(k: int = 720) -> PairSampler:
    """The full k x k grid of angle pairs on S^1, in row-major order."""
    th = 2 * np.pi * np.arange(k) / k
    pts = np.stack([np.cos(th), np.sin(th)], axis=1)

    def sampler(rng, n):
        i, j = np.divmod(np.arange(min(n, k * k)), k)
        return pts[i], pts[j]

    return sampler


def annulus_pairs(spec: AnnulusSpec, min_direction_sum: Optional[float] = None) -> PairSampler:
    """Free-space pairs; optionally with radial directions far from antipodal."""

    def sampler(rng, n):
        A = spec.sample_points(rng, n)
        B = spec.sample_points(rng, n)
        if min_direction_sum is not None:
            def bad_rows():
                return norm(A / norm(A)[:, None] + B / norm(B)[:, None]) <= min_direction_sum
            bad = bad_rows()
            while bad.any():
                B[bad] = spec.sample_points(rng, int(bad.sum()))
                bad = bad_rows()
        return A, B

    return sampler


def box_pairs(membership, lower, upper) -> PairSampler:
    """Rejection sampling of member pairs from a bounding box."""
    lower = np.asarray(lower, float)
    upper = np.asarray(upper, float)

    def draw(rng, n):
        out = np.empty((0, lower.size))
        while len(out) < n:
            cand = rng.uniform(lower, upper, size=(2 * n + 8, lower.size))
            out = np.concatenate([out, cand[membership(cand)]])
        return out[:n]

    def sampler(rng, n):
        return draw(rng, n), draw(rng, n)

    return sampler


def star_pairs(K: StarDomain) -> PairSampler:
    pts = K.members()
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    pad = 0.05 * (hi - lo) + 1e-9
    return box_pairs(K.membership, lo - pad, hi + pad)


# checks ---------------------------------------------------------------------

def _draw(sampler: PairSampler, n: int, seed):
    if n < 1:
        raise PreconditionViolation("need at least one sample")
    A, B = sampler(np.random.default_rng(seed), n)
    return np.asarray(A, float), np.asarray(B, float)


def check_endpoints(planner: MotionPlanner, pair_sampler: PairSampler, n: int, seed: int = 0,
                    tol: ToleranceConfig = DEFAULT_TOLERANCES) -> VerificationReport:
    """Worst |path(0) - a| or |path(1) - b| over sampled pairs."""
    A, B = _draw(pair_sampler, n, seed)
    worst, witnesses = 0.0, []
    for a, b in zip(A, B):
        try:
            path, rule = planner.plan(a, b)
        except NoApplicableRule:
            worst = math.inf
            witnesses.append({"a": a, "b": b, "error": "NoApplicableRule"})
            continue
        err = max(norm(path(0.0) - a), norm(path(1.0) - b))
        if err > tol.eps_assert:
            witnesses.append({"a": a, "b": b, "rule": rule, "error": err})
        worst = max(worst, err)
    return VerificationReport("endpoints", len(A), worst, tol.eps_assert, seed, witnesses[:10])


def check_membership(planner: MotionPlanner, pair_sampler: PairSampler, n: int,
                     samples_per_path: int = 1000, seed: int = 0) -> VerificationReport:
    """Worst free-space violation along sampled planned paths."""
    A, B = _draw(pair_sampler, n, seed)
    ts = np.linspace(0.0, 1.0, samples_per_path)
    worst, witnesses = 0.0, []
    for a, b in zip(A, B):
        path, rule = planner.plan(a, b)
        v = planner.violation(path.eval_many(ts))
        k = int(np.argmax(v))
        if v[k] > planner.violation_tol:
            witnesses.append({"a": a, "b": b, "rule": rule, "t": ts[k], "violation": v[k]})
        worst = max(worst, float(v[k]))
    return VerificationReport("membership", len(A), worst, planner.violation_tol, seed,
                              witnesses[:10])


def check_cover(planner: MotionPlanner, pair_sampler: PairSampler, n: int,
                seed: int = 0) -> VerificationReport:
    """Count sampled pairs accepted by no rule domain."""
    A, B = _draw(pair_sampler, n, seed)
    covered = np.zeros(len(A), dtype=bool)
    for rule in planner.rules:
        covered |= np.asarray(rule.domain(A, B), dtype=bool)
    holes = np.flatnonzero(~covered)
    witnesses = [{"a": A[i], "b": B[i]} for i in holes[:10]]
    return VerificationReport("cover", len(A), len(holes), 0.0, seed, witnesses)


def check_junctions(planner: MotionPlanner, pair_sampler: PairSampler, n: int,
                    h: float = 1e-8, seed: int = 0, tolerance: float = 1e-6,
                    all_rules: bool = True) -> VerificationReport:
    """Worst jump |path(b - h) - path(b + h)| over all breakpoints b.

    With ``all_rules`` every rule whose domain accepts a pair is probed, not
    only the dispatched one, so later rules are exercised on generic pairs.
    """
    if not 0 < h <= 1e-6:
        raise PreconditionViolation("probe offset h must lie in (0, 1e-6]")
    A, B = _draw(pair_sampler, n, seed)
    worst, witnesses, probed = 0.0, [], 0
    for a, b in zip(A, B):
        if all_rules:
            paths = [(i + 1, r.section(a, b)) for i, r in enumerate(planner.rules) if r.accepts(a, b)]
        else:
            path, rule = planner.plan(a, b)
            paths = [(rule, path)]
        for rule, path in paths:
            if not path.breakpoints:
                continue
            probed += 1
            bp = np.asarray(path.breakpoints)
            gaps = norm(path.eval_many(bp - h) - path.eval_many(bp + h))
            k = int(np.argmax(gaps))
            if gaps[k] > tolerance:
                witnesses.append({"a": a, "b": b, "rule": rule, "breakpoint": bp[k], "gap": gaps[k]})
            worst = max(worst, float(gaps[k]))
    return VerificationReport("junctions", probed, worst, tolerance, seed, witnesses[:10])


def geodesic_angle(a, b) -> np.ndarray:
    return np.arccos(np.clip(np.sum(np.asarray(a) * np.asarray(b), axis=-1), -1.0, 1.0))


def check_geodesic(spec: SphereSpec, pair_sampler: PairSampler, n: int, seed: int = 0,
                   polyline_samples: int = 10_000, tolerance: float = 1e-6,
                   tol: ToleranceConfig = DEFAULT_TOLERANCES) -> VerificationReport:
    """Compare the refined polyline length of rule-1 paths with the great-circle angle."""
    A, B = _draw(pair_sampler, n, seed)
    rule = sphere_rule1(spec, tol)
    worst, witnesses = 0.0, []
    for a, b in zip(A, B):
        if norm(a + b) <= 0.1:
            raise PreconditionViolation("geodesic check needs |a + b| > 0.1")
        err = abs(polyline_length(rule.section(a, b), polyline_samples) - float(geodesic_angle(a, b)))
        if err > tolerance:
            witnesses.append({"a": a, "b": b, "error": err})
        worst = max(worst, err)
    return VerificationReport("geodesic", len(A), worst, tolerance, seed, witnesses[:10])


def continuity_probe(rule: LocalRule, pair_sampler: PairSampler, n: int, delta: float = 1e-4,
                     seed: int = 0, project=None, path_samples: int = 100,
                     tol: ToleranceConfig = DEFAULT_TOLERANCES) -> VerificationReport:
    """Empirical modulus of continuity of one local rule.

    Each sampled pair is pushed by ``delta`` in a random direction of the
    product space (then mapped back into the space by ``project``); the
    sup-distance between the two paths divided by the input displacement must
    stay below ``tol.continuity_modulus``. The sampler must keep pairs well
    inside the rule's domain.
    """
    if not 0 < delta <= 1e-3:
        raise PreconditionViolation("delta must lie in (0, 1e-3]")
    project = project or (lambda x: x)
    rng = np.random.default_rng(seed)
    A, B = pair_sampler(rng, n)
    ts = np.linspace(0.0, 1.0, path_samples)
    worst, witnesses, used = 0.0, [], 0
    for a, b in zip(A, B):
        u = rng.standard_normal(2 * a.size)
        u *= delta / norm(u)
        a2 = project(a + u[: a.size])
        b2 = project(b + u[a.size:])
        if not (rule.accepts(a, b) and rule.accepts(a2, b2)):
            continue
        moved = math.sqrt(norm(a2 - a) ** 2 + norm(b2 - b) ** 2)
        if moved == 0.0:
            continue
        used += 1
        gap = float(np.max(norm(rule.section(a, b).eval_many(ts) - rule.section(a2, b2).eval_many(ts))))
        ratio = gap / moved
        if ratio > tol.continuity_modulus:
            witnesses.append({"a": a, "b": b, "a_perturbed": a2, "b_perturbed": b2, "ratio": ratio})
        worst = max(worst, ratio)
    return VerificationReport(f"continuity[{rule.label}]", used, worst, tol.continuity_modulus,
                              seed, witnesses[:10])


def _sup_gap(P, Q) -> float:
    return float(np.max(norm(P - Q)))


def discontinuity_witness(planner: MotionPlanner, boundary_hint, radius: float = 1e-3,
                          jump: float = 0.5, seed: int = 0, levels: int = 12,
                          random_directions: int = 8, path_samples: int = 256) -> VerificationReport:
    """Search near ``boundary_hint`` for nearby pairs with far-apart plans.

    Candidates are the hint plus perturbations along every coordinate axis of
    the product space and a few random directions, at scales
    ``radius / 2, radius / 4, ...``. Two candidates form a witness when they
    are within ``radius`` of each other (product Euclidean metric), are
    dispatched to different rules, and their paths are at least ``jump``
    apart in sup-distance. Raises WitnessNotFound when no scale yields one.
    """
    if planner.rule_count < 2:
        raise PreconditionViolation(
            "a single-rule planner has no dispatch boundary to search")
    a0 = np.asarray(boundary_hint[0], float)
    b0 = np.asarray(boundary_hint[1], float)
    d = a0.size
    rng = np.random.default_rng(seed)
    ts = np.linspace(0.0, 1.0, path_samples)
    dirs = np.concatenate([np.eye(2 * d), -np.eye(2 * d),
                           rng.standard_normal((random_directions, 2 * d))])
    dirs /= norm(dirs)[:, None]

    best = {"sup_distance": 0.0}
    evaluated = 0
    for level in range(levels):
        scale = radius / 2 ** (level + 1)
        cands = []
        for u in np.concatenate([np.zeros((1, 2 * d)), scale * dirs]):
            a = np.asarray(planner.project(a0 + u[:d]), float)
            b = np.asarray(planner.project(b0 + u[d:]), float)
            if not (planner.contains(a) and planner.contains(b)):
                continue
            try:
                path, rule = planner.plan(a, b)
            except NoApplicableRule:
                continue
            cands.append((np.concatenate([a, b]), rule, path.eval_many(ts)))
        evaluated += len(cands)
        for i in range(len(cands)):
            for j in range(i + 1, len(cands)):
                x, ri, P = cands[i]
                y, rj, Q = cands[j]
                if ri == rj:
                    continue
                dist = norm(x - y)
                if dist > radius:
                    continue
                gap = _sup_gap(P, Q)
                if gap > best["sup_distance"]:
                    best = {"pair_1": [x[:d], x[d:]], "pair_2": [y[:d], y[d:]],
                            "rules": [ri, rj], "input_distance": dist, "sup_distance": gap}
        if best["sup_distance"] >= jump:
            break

    report = VerificationReport("discontinuity_witness", evaluated,
                                max(0.0, jump - best["sup_distance"]), 0.0, seed,
                                [best] if "pair_1" in best else [])
    if not report.passed:
        raise WitnessNotFound(
            f"no pair within {radius} of each other with paths {jump} apart near the hint", report)
    return report


def check_transfer_wiring(planner: MotionPlanner, source: MotionPlanner, data: TransferData,
                          pair_sampler: PairSampler, n: int, t_count: int = 100, seed: int = 0,
                          tolerance: float = 1e-12) -> VerificationReport:
    """Middle third of each transferred path against f(s_i(g(y1), g(y2))(3t - 1))."""
    A, B = _draw(pair_sampler, n, seed)
    ts = np.linspace(1 / 3, 2 / 3, t_count + 2)[1:-1]
    worst, witnesses = 0.0, []
    for a, b in zip(A, B):
        path, rule = planner.plan(a, b)
        direct = data.f(source.rules[rule - 1].section(data.g(a), data.g(b)).eval_many(3 * ts - 1))
        err = float(np.max(norm(path.eval_many(ts) - direct)))
        if err > tolerance:
            witnesses.append({"a": a, "b": b, "rule": rule, "error": err})
        worst = max(worst, err)
    return VerificationReport("transfer_wiring", len(A), worst, tolerance, seed, witnesses[:10])
