"""Pure numpy fallback for the compiled geometry kernels.

Same inputs and results as ``_kernels.pyx``: xs and ys are the coordinates
of an explicitly closed polyline (last vertex repeats the first).
"""
import math

import numpy as np

ON_RAY_TOL = 1e-12
MAX_RAY_TRIES = 64
RAY_STEP = 3.883222077450933


def _rotated(xs, ys, cx, cy, c, s):
    dx = xs - cx
    dy = ys - cy
    return c * dx + s * dy, -s * dx + c * dy


def crossing_winding(xs, ys, cx, cy):
    theta, c, s = 0.0, 1.0, 0.0
    for _ in range(MAX_RAY_TRIES):
        u, v = _rotated(xs, ys, cx, cy, c, s)
        if not np.any((u > -ON_RAY_TOL) & (np.abs(v) <= ON_RAY_TOL)):
            break
        theta += RAY_STEP
        c, s = math.cos(theta), math.sin(theta)
    else:
        raise ArithmeticError("no vertex-free ray direction found")
    u0, v0, u1, v1 = u[:-1], v[:-1], u[1:], v[1:]
    left = u0 * v1 - u1 * v0
    up = (v0 <= 0.0) & (v1 > 0.0) & (left > 0.0)
    down = (v0 > 0.0) & (v1 <= 0.0) & (left < 0.0)
    return int(np.count_nonzero(up)) - int(np.count_nonzero(down))


def angle_sum(xs, ys, cx, cy):
    dx = xs - cx
    dy = ys - cy
    ax, ay, bx, by = dx[:-1], dy[:-1], dx[1:], dy[1:]
    angles = np.arctan2(ax * by - ay * bx, ax * bx + ay * by)
    # sequential sum, same accumulation order as the compiled loop
    return float(sum(angles.tolist(), 0.0))


def min_distance(xs, ys, px, py):
    ex = np.diff(xs)
    ey = np.diff(ys)
    wx = px - xs[:-1]
    wy = py - ys[:-1]
    len2 = ex * ex + ey * ey
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(len2 > 0.0, (wx * ex + wy * ey) / np.where(len2 > 0.0, len2, 1.0), 0.0)
    t = np.clip(t, 0.0, 1.0)
    qx = wx - t * ex
    qy = wy - t * ey
    d = np.sqrt(qx * qx + qy * qy)
    first = math.sqrt((xs[0] - px) ** 2 + (ys[0] - py) ** 2)
    return float(min(first, d.min())) if d.size else first


def shoelace(xs, ys):
    terms = xs[:-1] * ys[1:] - xs[1:] * ys[:-1]
    return 0.5 * float(sum(terms.tolist(), 0.0))
