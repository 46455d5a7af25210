# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels.

Every function takes the vertex coordinates of an explicitly closed
polyline (last vertex repeats the first) as two contiguous float64 arrays.
Semantics must match ``acsim._pykernels`` exactly.
"""
from libc.math cimport atan2, cos, fabs, sin, sqrt

cdef double ON_RAY_TOL = 1e-12
cdef int MAX_RAY_TRIES = 64
# golden-ratio fraction of a full turn; never returns to the start angle
cdef double RAY_STEP = 3.883222077450933


cdef bint _ray_hits_vertex(const double[::1] xs, const double[::1] ys,
                           double cx, double cy, double c, double s) noexcept nogil:
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double dx, dy, u, v
    for i in range(n):
        dx = xs[i] - cx
        dy = ys[i] - cy
        u = c * dx + s * dy
        v = -s * dx + c * dy
        if u > -ON_RAY_TOL and fabs(v) <= ON_RAY_TOL:
            return True
    return False


def crossing_winding(const double[::1] xs, const double[::1] ys, double cx, double cy):
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double c = 1.0, s = 0.0, theta = 0.0
    cdef double dx0, dy0, dx1, dy1, u0, v0, u1, v1, left
    cdef int k, wn = 0
    for k in range(MAX_RAY_TRIES):
        if not _ray_hits_vertex(xs, ys, cx, cy, c, s):
            break
        theta += RAY_STEP
        c = cos(theta)
        s = sin(theta)
    else:
        raise ArithmeticError("no vertex-free ray direction found")
    with nogil:
        dx0 = xs[0] - cx
        dy0 = ys[0] - cy
        u0 = c * dx0 + s * dy0
        v0 = -s * dx0 + c * dy0
        for i in range(1, n):
            dx1 = xs[i] - cx
            dy1 = ys[i] - cy
            u1 = c * dx1 + s * dy1
            v1 = -s * dx1 + c * dy1
            left = u0 * v1 - u1 * v0
            if v0 <= 0.0:
                if v1 > 0.0 and left > 0.0:
                    wn += 1
            elif v1 <= 0.0 and left < 0.0:
                wn -= 1
            u0 = u1
            v0 = v1
    return wn


def angle_sum(const double[::1] xs, const double[::1] ys, double cx, double cy):
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double total = 0.0, ax, ay, bx, by
    with nogil:
        ax = xs[0] - cx
        ay = ys[0] - cy
        for i in range(1, n):
            bx = xs[i] - cx
            by = ys[i] - cy
            total += atan2(ax * by - ay * bx, ax * bx + ay * by)
            ax = bx
            ay = by
    return total


def min_distance(const double[::1] xs, const double[::1] ys, double px, double py):
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double best, d, ex, ey, wx, wy, t, len2, qx, qy
    with nogil:
        best = sqrt((xs[0] - px) * (xs[0] - px) + (ys[0] - py) * (ys[0] - py))
        for i in range(n - 1):
            ex = xs[i + 1] - xs[i]
            ey = ys[i + 1] - ys[i]
            wx = px - xs[i]
            wy = py - ys[i]
            len2 = ex * ex + ey * ey
            if len2 > 0.0:
                t = (wx * ex + wy * ey) / len2
                if t < 0.0:
                    t = 0.0
                elif t > 1.0:
                    t = 1.0
            else:
                t = 0.0
            qx = wx - t * ex
            qy = wy - t * ey
            d = sqrt(qx * qx + qy * qy)
            if d < best:
                best = d
    return best


def shoelace(const double[::1] xs, const double[::1] ys):
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double acc = 0.0
    with nogil:
        for i in range(n - 1):
            acc += xs[i] * ys[i + 1] - xs[i + 1] * ys[i]
    return 0.5 * acc
