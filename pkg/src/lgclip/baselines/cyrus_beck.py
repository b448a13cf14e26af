"""Classical O(N) parametric clipping against every edge's inner half-plane."""

from __future__ import annotations

import math

from ..geom import ConvexPolygon, Point2, line_through
from ..result import MISS, ClipResult, Cross, clamp_to_segment
from ..counting import Counted
from .oracle import line_interval

# relative thresholds for handing a query to the oracle
_PARALLEL = 1e-9
_THIN = 1e-9


def cyrus_beck_clip(poly: ConvexPolygon, a: Point2, b: Point2,
                    mode: str = "segment") -> ClipResult:
    line = line_through(a, b)
    ax, ay = line.base
    dx, dy = line.dir
    xs, ys, n = poly.xs, poly.ys, poly.n
    dlen = math.hypot(dx, dy)
    ctx = dx.ctx if type(dx) is Counted else None
    # |den| below this means the edge is nearly parallel to the line
    par = _PARALLEL * dlen * poly.max_edge
    on_edge_line = _THIN * poly.max_edge * poly.diameter
    thin = _THIN * poly.diameter / dlen

    t_lo = -math.inf
    t_hi = math.inf
    x0, y0 = xs[n - 1], ys[n - 1]
    for i in range(n):
        x1, y1 = xs[i], ys[i]
        # inner (left) normal of the anti-clockwise edge
        nx = y0 - y1
        ny = x1 - x0
        num = nx * (ax - x0) + ny * (ay - y0)
        den = nx * dx + ny * dy
        if abs(den) <= par and abs(num) <= on_edge_line:
            # line runs along this edge
            return _fallback(poly, line, mode)
        if den == 0:
            if num < 0:
                return MISS
        else:
            t = -num / den
            if den > 0:
                if t > t_lo:
                    t_lo = t
                    if ctx is not None:
                        ctx.assign += 1
            elif t < t_hi:
                t_hi = t
                if ctx is not None:
                    ctx.assign += 1
        x0, y0 = x1, y1

    if t_hi - t_lo <= thin:
        # empty, or a zero-width contact at a vertex that the band must settle
        if t_lo - t_hi <= thin:
            return _fallback(poly, line, mode)
        return MISS
    if mode == "line":
        return Cross(float(t_lo), float(t_hi))
    return clamp_to_segment(t_lo, t_hi)


def _fallback(poly, line, mode):
    result = line_interval(poly, line)
    if mode == "line" or result is MISS:
        return result
    return clamp_to_segment(result.t1, result.t2)
