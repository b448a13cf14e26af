"""Brute-force ground truth: scan every edge of the window."""

from __future__ import annotations

from ..geom import ConvexPolygon, ImplicitLine, Point2, line_through, zero_band
from ..result import MISS, ClipResult, Cross, clamp_to_segment


def line_interval(poly: ConvexPolygon, line: ImplicitLine) -> ClipResult:
    """Visible parameter interval of an unbounded line, O(N).

    Vertices within the zero band are contacts in their own right: a single
    one yields ``Cross(t, t)``, two adjacent ones the span of that edge.
    Crossing parameters are computed from the line/edge cross product, not
    from the F-ratio used by the fast clippers.
    """
    eps = zero_band(line, poly.diameter)
    a, b, c = line.a, line.b, line.c
    bx, by = line.base
    dx, dy = line.dir
    dd = dx * dx + dy * dy
    xs, ys, n = poly.xs, poly.ys, poly.n

    fs = [a * xs[i] + b * ys[i] + c for i in range(n)]
    signs = [0 if abs(f) <= eps else (1 if f > 0 else -1) for f in fs]

    ts = []
    for i in range(n):
        if signs[i] == 0:
            ts.append(((xs[i] - bx) * dx + (ys[i] - by) * dy) / dd)
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        if signs[i] * signs[j] < 0:
            ex, ey = xs[j] - xs[i], ys[j] - ys[i]
            num = (xs[i] - bx) * ey - (ys[i] - by) * ex
            ts.append(num / (dx * ey - dy * ex))
    if not ts:
        return MISS
    return Cross(float(min(ts)), float(max(ts)))


def oracle_clip(poly: ConvexPolygon, a: Point2, b: Point2,
                mode: str = "segment") -> ClipResult:
    line = line_through(a, b)
    result = line_interval(poly, line)
    if mode == "line" or result is MISS:
        return result
    return clamp_to_segment(result.t1, result.t2)


def is_degenerate(poly: ConvexPolygon, line: ImplicitLine) -> bool:
    """True when some window vertex lies within the zero band of ``line``."""
    eps = zero_band(line, poly.diameter)
    a, b, c = line.a, line.b, line.c
    return any(abs(a * x + b * y + c) <= eps for x, y in zip(poly.xs, poly.ys))
