"""Vectors, tolerances and the closed-form path type every planner emits.

Vectors are plain 1-D float numpy arrays. Every map and predicate in the
package follows one broadcasting convention: coordinates live on the last
axis, so a function written for a single point ``x`` of shape ``(d,)`` also
works on a stack of points of shape ``(n, d)``. Homotopies ``H(x, t)`` are
called with ``t`` either a float or a column array of shape ``(k, 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DimensionMismatch, JunctionGap, NearZeroVector, OddDimension


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances shared by the planners and the harness.

    ``continuity_modulus`` is the empirical bound used by the continuity
    probe (sup-distance between paths divided by input perturbation). It is a
    regression constant, not a proven Lipschitz bound.
    """

    eps_predicate: float = 1e-6
    eps_assert: float = 1e-9
    sample_count: int = 256
    continuity_modulus: float = 100.0

    def __post_init__(self):
        if not 0 < self.eps_assert < self.eps_predicate < 1:
            raise ValueError(
                "need 0 < eps_assert < eps_predicate < 1, got "
                f"eps_assert={self.eps_assert}, eps_predicate={self.eps_predicate}"
            )
        if self.sample_count < 2:
            raise ValueError("sample_count must be at least 2")


DEFAULT_TOLERANCES = ToleranceConfig()


def as_vector(v, dim: int | None = None) -> np.ndarray:
    """Validate ``v`` as a finite point of R^d and return it as a float array."""
    arr = np.array(v, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError(f"expected a nonempty 1-D coordinate list, got shape {arr.shape}")
    # the sum is finite for all finite inputs short of overflow; confirm otherwise
    if not math.isfinite(sum(arr.tolist())) and not np.isfinite(arr).all():
        raise ValueError(f"non-finite coordinates in {arr}")
    if dim is not None and arr.size != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {arr.size}")
    arr.setflags(write=False)
    return arr


def norm(v) -> np.ndarray | float:
    """Euclidean norm along the last axis."""
    v = np.asarray(v, dtype=float)
    if v.ndim == 1:
        return math.sqrt(v @ v)
    return np.sqrt(np.einsum("...i,...i->...", v, v))


def normalize(v, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> np.ndarray:
    """Return ``v / |v|``, row-wise for stacked input.

    Raises NearZeroVector if any row has norm at most ``tol.eps_predicate``.
    """
    v = np.asarray(v, dtype=float)
    if v.ndim == 1:
        n = math.sqrt(v @ v)
        if n <= tol.eps_predicate:
            raise NearZeroVector(f"cannot normalize a vector of norm {n:.3g}")
        return v / n
    n = np.sqrt(np.einsum("...i,...i->...", v, v))[..., None]
    if n.min() <= tol.eps_predicate:
        raise NearZeroVector(f"cannot normalize a vector of norm {float(n.min()):.3g}")
    return v / n


def tangent_field_nu(v) -> np.ndarray:
    """Rotate each coordinate pair a quarter turn: (x, y, ...) -> (-y, x, ...).

    The result is orthogonal to ``v`` and has the same norm, which makes it a
    nowhere-vanishing tangent field on odd-dimensional spheres.
    """
    v = np.asarray(v, dtype=float)
    if v.shape[-1] % 2:
        raise OddDimension(f"tangent field needs even dimension, got {v.shape[-1]}")
    out = np.empty_like(v)
    out[..., 0::2] = -v[..., 1::2]
    out[..., 1::2] = v[..., 0::2]
    return out


class Path:
    """A path [0, 1] -> R^d given by a closed-form evaluator.

    ``func`` receives a 1-D array of parameters and returns an array of shape
    ``(len(t), dim)``. ``breakpoints`` lists the parameters in (0, 1) where the
    defining formula switches; the harness probes continuity there.

    Calling the path with a float returns a point of shape ``(dim,)``; calling
    it with an array returns one row per parameter.
    """

    __slots__ = ("dim", "_func", "breakpoints", "_start", "_end")

    def __init__(self, dim: int, func: Callable[[np.ndarray], np.ndarray],
                 breakpoints: Sequence[float] = (), *, start=None, end=None):
        if dim < 1:
            raise ValueError("path dimension must be positive")
        self.dim = int(dim)
        self._func = func
        self.breakpoints = tuple(sorted(map(float, breakpoints))) if breakpoints else ()
        # endpoint values, filled lazily; concatenation reuses the pieces' values
        self._start = start
        self._end = end

    def __call__(self, t):
        if isinstance(t, (float, int)):
            if not 0.0 <= t <= 1.0:
                raise ValueError("path parameter must lie in [0, 1]")
            return self._func(np.array([float(t)]))[0]
        ts = np.asarray(t, dtype=float)
        if ((ts < 0.0) | (ts > 1.0)).any():
            raise ValueError("path parameter must lie in [0, 1]")
        if ts.ndim == 0:
            return self._func(ts.reshape(1))[0]
        return self._func(ts.ravel())

    def eval_many(self, ts: np.ndarray) -> np.ndarray:
        """Evaluate at a 1-D array of parameters without range checks."""
        if ts.size == 0:
            return np.empty((0, self.dim))
        return self._func(ts)

    @property
    def start(self) -> np.ndarray:
        if self._start is None:
            self._start = self._func(np.array([0.0]))[0]
        return self._start

    @property
    def end(self) -> np.ndarray:
        if self._end is None:
            self._end = self._func(np.array([1.0]))[0]
        return self._end

    def map(self, fn: Callable[[np.ndarray], np.ndarray], dim: int | None = None) -> "Path":
        """Compose with a pointwise map ``fn`` acting on the last axis."""
        func = self._func
        # fn acts on the last axis, so it maps cached endpoints directly
        start = None if self._start is None else fn(self._start)
        end = None if self._end is None else fn(self._end)
        return Path(self.dim if dim is None else dim, lambda ts: fn(func(ts)), self.breakpoints,
                    start=start, end=end)

    def reversed(self) -> "Path":
        func = self._func
        return Path(self.dim, lambda ts: func(1.0 - ts), [1.0 - b for b in self.breakpoints],
                    start=self._end, end=self._start)

    def __repr__(self):
        return f"Path(dim={self.dim}, breakpoints={self.breakpoints})"


def constant_path(x) -> Path:
    x = as_vector(x)
    return Path(x.size, lambda ts: np.broadcast_to(x, (ts.size, x.size)).copy())


def segment(a, b) -> Path:
    """Straight segment (1 - t) a + t b."""
    a = as_vector(a)
    b = as_vector(b, a.size)
    return Path(a.size, lambda ts: (1.0 - ts)[:, None] * a + ts[:, None] * b)


def homotopy_track(H, x) -> Path:
    """The path t -> H(x, t) of a single point under a homotopy."""
    x = as_vector(x)
    d = x.size

    def func(ts):
        out = np.asarray(H(x, ts[:, None]), dtype=float)
        if out.shape != (ts.size, d):
            out = np.broadcast_to(out, (ts.size, d)).copy()
        return out

    return Path(d, func)


def _check_junction(p: Path, q: Path, tol: ToleranceConfig):
    if p.dim != q.dim:
        raise DimensionMismatch(f"cannot join paths of dimension {p.dim} and {q.dim}")
    gap = float(norm(p.end - q.start))
    if gap > tol.eps_assert:
        raise JunctionGap(f"pieces are {gap:.3g} apart at the junction")


def _concat(pieces: Sequence[Path]) -> Path:
    k = len(pieces)
    funcs = [p._func for p in pieces]
    dim = pieces[0].dim

    def func(ts):
        scaled = ts * k
        if ts.size == 1:
            i = min(max(math.ceil(scaled[0]) - 1, 0), k - 1)
            return funcs[i](scaled - i)
        # piece i owns [i/k, (i+1)/k]; shared endpoints go to the left piece
        idx = np.clip(np.ceil(scaled).astype(int) - 1, 0, k - 1)
        out = np.empty((ts.size, dim))
        for i, f in enumerate(funcs):
            mask = idx == i
            if mask.any():
                out[mask] = f(scaled[mask] - i)
        return out

    bps = [i / k for i in range(1, k)]
    for i, p in enumerate(pieces):
        bps.extend((i + b) / k for b in p.breakpoints)
    return Path(dim, func, bps, start=pieces[0]._start, end=pieces[-1]._end)


def concat2(p: Path, q: Path, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Path:
    """Run ``p`` on [0, 1/2] and ``q`` on [1/2, 1], each at double speed."""
    _check_junction(p, q, tol)
    return _concat((p, q))


def concat3(p: Path, q: Path, r: Path, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Path:
    """Three-piece concatenation on the schedule 0, 1/3, 2/3, 1."""
    _check_junction(p, q, tol)
    _check_junction(q, r, tol)
    return _concat((p, q, r))


def sample_path(p: Path, n: int) -> np.ndarray:
    """Evaluate ``p`` at ``n`` uniformly spaced parameters, endpoints included."""
    if n < 2:
        raise ValueError("need at least 2 samples")
    return p.eval_many(np.linspace(0.0, 1.0, n))


def polyline_length(p: Path, n: int) -> float:
    """Length of the chord polyline through ``sample_path(p, n)``."""
    pts = sample_path(p, n)
    return float(np.sum(np.linalg.norm(np.diff(pts, axis=0), axis=1)))


def sup_distance(p: Path, q: Path, n: int = 101) -> float:
    """Max pointwise distance between two paths over ``n`` shared samples."""
    return float(np.max(np.linalg.norm(sample_path(p, n) - sample_path(q, n), axis=1)))
