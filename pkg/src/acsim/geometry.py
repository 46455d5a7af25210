"""Planar geometry of transport paths.

Closed polylines store their closure explicitly: the last vertex repeats the
first (within ``CLOSURE_TOL``), so every closed path of ``k`` stored
vertices has ``k - 1`` segments and no implicit wrap-around segment.

The hot loops (winding by ray crossings, angle sums, point-to-segment
distance, shoelace area) live in :mod:`acsim._backend`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from acsim._backend import kernels as _k
from acsim.errors import DegeneratePath, InvalidParameter, NonIntegerAngleSum, PathTooClose

EPS_CLEARANCE = 1e-9
CLOSURE_TOL = 1e-12
ANGLE_SUM_TOL = 1e-6 * 2.0 * math.pi
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParameter(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def distance(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


def as_point(p) -> Point2:
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2(float(x), float(y))


class Polyline:
    """Ordered 2D vertex list, optionally closed.

    ``vertices`` is a read-only ``(k, 2)`` float64 array. For closed paths
    the last row equals the first; use :meth:`loop` to build a closed path
    from its distinct vertices.
    """

    __slots__ = ("vertices", "closed", "_xs", "_ys")

    def __init__(self, vertices, closed: bool):
        v = np.array(vertices, dtype=np.float64)
        if v.ndim != 2 or v.shape[1] != 2:
            raise InvalidParameter(f"vertices must have shape (k, 2), got {v.shape}")
        if v.shape[0] < 2:
            raise DegeneratePath("a polyline needs at least 2 vertices")
        if not np.all(np.isfinite(v)):
            raise InvalidParameter("non-finite vertex")
        closed = bool(closed)
        if closed:
            gap = math.hypot(*(v[-1] - v[0]))
            if gap > CLOSURE_TOL:
                raise InvalidParameter(
                    f"closed polyline must repeat its first vertex (gap {gap:.3e})"
                )
            v[-1] = v[0]
            if len(np.unique(v[:-1], axis=0)) < 3:
                raise DegeneratePath("a closed polyline needs at least 3 distinct vertices")
        v.setflags(write=False)
        self.vertices = v
        self.closed = closed
        self._xs = np.ascontiguousarray(v[:, 0])
        self._ys = np.ascontiguousarray(v[:, 1])

    @classmethod
    def loop(cls, points: Iterable) -> Polyline:
        """Closed polyline through ``points``, appending the first point."""
        v = np.array([tuple(as_point(p)) for p in points], dtype=np.float64)
        if len(v) == 0:
            raise DegeneratePath("empty vertex list")
        return cls(np.vstack([v, v[:1]]), closed=True)

    @property
    def xs(self) -> np.ndarray:
        return self._xs

    @property
    def ys(self) -> np.ndarray:
        return self._ys

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Polyline):
            return NotImplemented
        return self.closed == other.closed and np.array_equal(self.vertices, other.vertices)

    def __repr__(self):
        kind = "closed" if self.closed else "open"
        return f"Polyline({len(self)} vertices, {kind})"

    def reversed(self) -> Polyline:
        return Polyline(self.vertices[::-1], self.closed)

    def translated(self, dx: float, dy: float) -> Polyline:
        return Polyline(self.vertices + np.array([dx, dy]), self.closed)

    def scaled(self, factor: float, about=(0.0, 0.0)) -> Polyline:
        c = np.array(tuple(as_point(about)))
        return Polyline(c + factor * (self.vertices - c), self.closed)


@dataclass(frozen=True)
class WindingResult:
    n: int
    clearance: float


def _require_closed(path: Polyline):
    if not path.closed:
        raise InvalidParameter("operation requires a closed polyline")


def min_distance(path: Polyline, point) -> float:
    """Exact minimum distance from ``point`` to the segments of ``path``."""
    p = as_point(point)
    return _k.min_distance(path.xs, path.ys, p.x, p.y)


def _check_clearance(path: Polyline, center: Point2, eps: float) -> float:
    _require_closed(path)
    clearance = min_distance(path, center)
    if clearance <= eps:
        raise PathTooClose(clearance, eps)
    return clearance


def winding_number(path: Polyline, center, eps: float = EPS_CLEARANCE) -> WindingResult:
    """Signed winding number of a closed path around ``center`` (CCW positive).

    Counts signed crossings of a ray cast from ``center``. The ray is
    horizontal unless a vertex lies on it, in which case it is rotated by a
    fixed golden-angle step until no vertex is within 1e-12 of it.

    Raises:
        PathTooClose: the path passes within ``eps`` of ``center``.
    """
    c = as_point(center)
    clearance = _check_clearance(path, c, eps)
    return WindingResult(int(_k.crossing_winding(path.xs, path.ys, c.x, c.y)), clearance)


def winding_number_oracle(path: Polyline, center, eps: float = EPS_CLEARANCE) -> int:
    """Winding number from the sum of signed turn angles seen from ``center``.

    Independent of the ray-crossing count; used to cross-check it.
    """
    c = as_point(center)
    _check_clearance(path, c, eps)
    total = _k.angle_sum(path.xs, path.ys, c.x, c.y)
    n = round(total / TWO_PI)
    residual = abs(total - n * TWO_PI)
    if residual > ANGLE_SUM_TOL:
        raise NonIntegerAngleSum(f"angle sum {total!r} is {residual:.3e} rad off a multiple of 2*pi")
    return int(n)


def enclosed_area(path: Polyline) -> float:
    """Signed shoelace area, positive for counter-clockwise paths."""
    _require_closed(path)
    return _k.shoelace(path.xs, path.ys)


def perturb_path(path: Polyline, sigma: float, seed) -> Polyline:
    """Jitter vertices with i.i.d. Gaussian noise of std ``sigma`` per coordinate.

    Closed paths move every vertex and keep the closure; open paths keep
    their endpoints. ``seed`` is anything ``numpy.random.default_rng``
    accepts. The result may violate clearance; callers check that.
    """
    if not math.isfinite(sigma) or sigma < 0:
        raise InvalidParameter(f"sigma must be finite and >= 0, got {sigma}")
    if sigma == 0:
        return path
    rng = np.random.default_rng(seed)
    v = np.array(path.vertices)
    if path.closed:
        v[:-1] += rng.normal(0.0, sigma, size=(len(v) - 1, 2))
        v[-1] = v[0]
    else:
        v[1:-1] += rng.normal(0.0, sigma, size=(len(v) - 2, 2))
    return Polyline(v, path.closed)


def max_displacement(a: Polyline, b: Polyline) -> float:
    """Largest vertex-wise distance between two paths of equal length."""
    if a.vertices.shape != b.vertices.shape:
        raise InvalidParameter("paths differ in vertex count")
    d = a.vertices - b.vertices
    return float(np.sqrt((d * d).sum(axis=1)).max())


def circle_path(center, radius: float, turns: int, samples_per_turn: int = 32) -> Polyline:
    """Closed polygonal circle covering ``|turns|`` revolutions.

    Orientation follows the sign of ``turns``, so the winding number around
    ``center`` equals ``turns``.
    """
    c = as_point(center)
    if not (math.isfinite(radius) and radius > 0):
        raise InvalidParameter(f"radius must be > 0, got {radius}")
    if int(turns) != turns or turns == 0:
        raise InvalidParameter(f"turns must be a nonzero integer, got {turns}")
    if int(samples_per_turn) != samples_per_turn or samples_per_turn < 8:
        raise InvalidParameter(f"samples_per_turn must be an integer >= 8, got {samples_per_turn}")
    turns, spt = int(turns), int(samples_per_turn)
    k = abs(turns) * spt
    step = math.copysign(TWO_PI / spt, turns)
    angles = step * np.arange(k + 1)
    v = np.column_stack([c.x + radius * np.cos(angles), c.y + radius * np.sin(angles)])
    v[-1] = v[0]
    return Polyline(v, closed=True)


def polyline_from_flat(coords: Sequence[float], closed: bool = True) -> Polyline:
    """Build a path from ``[x1, y1, x2, y2, ...]``; closed paths are closed
    implicitly if the last pair does not repeat the first."""
    if len(coords) % 2:
        raise InvalidParameter("odd number of coordinates")
    pts = np.asarray(coords, dtype=np.float64).reshape(-1, 2)
    if closed and (len(pts) < 2 or math.hypot(*(pts[-1] - pts[0])) > CLOSURE_TOL):
        return Polyline.loop(pts)
    return Polyline(pts, closed)
