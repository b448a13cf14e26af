"""O(lg N) clipping of a line or segment by a convex window.

The window boundary is searched as an index interval ``[i, j]`` over the
vertex ring (``j = n`` names vertex 0 again).  While both interval ends lie
on the same side of the line, half of the interval is discarded using the
monotonicity of the separation function along a convex chain.  As soon as a
midpoint lands on the other side, each of the two half-chains holds exactly
one crossing, located by bisection (:func:`solve`).
"""

from __future__ import annotations

import math

from .baselines.oracle import line_interval
from .counting import Counted
from .geom import (ConvexPolygon, ImplicitLine, Point2, VertexF, ZeroVertex,
                   crossing_param, line_through, ZERO_BAND)
from .result import MISS, ClipResult, Cross, clamp_to_segment


class ClipTrace:
    """Diagnostics of one query: main-loop passes, discard cases taken and
    whether the degenerate fallback answered it."""

    __slots__ = ("iterations", "discard_cases", "fallback_used")

    def __init__(self, iterations=0, discard_cases=None, fallback_used=False):
        self.iterations = iterations
        self.discard_cases = [] if discard_cases is None else discard_cases
        self.fallback_used = fallback_used

    def __repr__(self):
        return (f"ClipTrace(iterations={self.iterations}, "
                f"discard_cases={self.discard_cases!r}, fallback_used={self.fallback_used})")


def solve(poly: ConvexPolygon, line: ImplicitLine, i: int, j: int, f: VertexF) -> float:
    """Parameter of the single crossing on chain ``i..j``.

    Requires ``f[i] * f[j] < 0``.
    """
    fi = f[i]
    while j - i >= 2:
        k = (i + j) // 2
        if fi * f[k] < 0:
            j = k
        else:
            i = k
            fi = f[k]
    n = poly.n
    a = i if i < n else i - n
    b = j if j < n else j - n
    return crossing_param(line, poly.xs[a], poly.ys[a], poly.xs[b], poly.ys[b], fi, f[j])


def discard_step(poly: ConvexPolygon, f: VertexF, i: int, j: int, k: int):
    """Halve ``[i, j]`` when ``x_i`` and ``x_k`` lie on the same side.

    Returns ``(new_i, new_j, case_label)``.  The four cases are written for
    ``F(x_i) > 0``; the opposite orientation uses the same cases on ``-F``,
    which only reverses each comparison.
    """
    fi = f[i]
    fk = f[k]
    if fi > 0:
        if fi < fk:
            if f[i + 1] < fi:
                return i, k, "a"
            return k, j, "b"
        if f[k + 1] > fk:
            return i, k, "c"
        return k, j, "d"
    if fi > fk:
        if f[i + 1] > fi:
            return i, k, "mirrored-a"
        return k, j, "mirrored-b"
    if f[k + 1] < fk:
        return i, k, "mirrored-c"
    return k, j, "mirrored-d"


def degenerate_fallback(poly: ConvexPolygon, line: ImplicitLine) -> ClipResult:
    return line_interval(poly, line)


_LABELS = {
    (True, True, True): "a", (True, True, False): "b",
    (True, False, True): "c", (True, False, False): "d",
    (False, True, True): "mirrored-a", (False, True, False): "mirrored-b",
    (False, False, True): "mirrored-c", (False, False, False): "mirrored-d",
}


def _clip_core(poly: ConvexPolygon, x1, y1, x2, y2, trace):
    # Same steps as discard_step() and solve(), with the lazy F lookups and
    # the crossing parameter inlined: this loop is the timed hot path.  The
    # Cross returned may still hold instrumented scalars.  ``trace`` may be
    # None.
    xs, ys, n = poly.xs, poly.ys, poly.n
    A = y1 - y2
    B = x2 - x1
    C = x1 * y2 - x2 * y1
    dy = y2 - y1
    eps = ZERO_BAND * math.hypot(A, B) * poly.diameter
    ctx = A.ctx if type(A) is Counted else None
    f = {}
    iterations = 0
    try:
        fi = A * xs[0] + B * ys[0] + C
        if -eps <= fi <= eps:
            raise ZeroVertex(0)
        f[0] = fi
        if ctx is not None:
            ctx.assign += 1
        i, j = 0, n
        while j - i >= 2:
            iterations += 1
            k = (i + j) // 2
            fk = f.get(k)
            if fk is None:
                m = k if k < n else k - n
                fk = A * xs[m] + B * ys[m] + C
                if -eps <= fk <= eps:
                    raise ZeroVertex(m)
                f[k] = fk
                if ctx is not None:
                    ctx.assign += 1
            if fi * fk < 0:
                ts = []
                for lo, hi, flo in ((i, k, fi), (k, j, fk)):
                    while hi - lo >= 2:
                        mid = (lo + hi) // 2
                        fm = f.get(mid)
                        if fm is None:
                            m = mid if mid < n else mid - n
                            fm = A * xs[m] + B * ys[m] + C
                            if -eps <= fm <= eps:
                                raise ZeroVertex(m)
                            f[mid] = fm
                            if ctx is not None:
                                ctx.assign += 1
                        if flo * fm < 0:
                            hi = mid
                        else:
                            lo = mid
                            flo = fm
                    fhi = f.get(hi)
                    if fhi is None:
                        m = hi if hi < n else hi - n
                        fhi = A * xs[m] + B * ys[m] + C
                        if -eps <= fhi <= eps:
                            raise ZeroVertex(m)
                    a = lo if lo < n else lo - n
                    b = hi if hi < n else hi - n
                    s = flo / (flo - fhi)
                    # divide by the larger direction component
                    if abs(B) >= abs(dy):
                        ts.append((xs[a] + s * (xs[b] - xs[a]) - x1) / B)
                    else:
                        ts.append((ys[a] + s * (ys[b] - ys[a]) - y1) / dy)
                t1, t2 = ts
                if t2 < t1:
                    t1, t2 = t2, t1
                if ctx is not None:
                    ctx.assign += 2
                if trace is not None:
                    trace.iterations = iterations
                return Cross(t1, t2)

            # discard half of [i, j]; G = F when F(x_i) > 0, else G = -F
            pos = fi > 0
            rising = fi < fk if pos else fi > fk          # G(x_i) < G(x_k)
            nxt = i + 1 if rising else k + 1
            g = f.get(nxt)
            if g is None:
                m = nxt if nxt < n else nxt - n
                g = A * xs[m] + B * ys[m] + C
                if -eps <= g <= eps:
                    raise ZeroVertex(m)
                f[nxt] = g
                if ctx is not None:
                    ctx.assign += 1
            if rising:
                keep_front = g < fi if pos else g > fi      # G falls after x_i
            else:
                keep_front = g > fk if pos else g < fk      # G rises after x_k
            if keep_front:
                j = k
            else:
                i = k
                fi = fk
            if trace is not None:
                trace.discard_cases.append(_LABELS[pos, rising, keep_front])
        if trace is not None:
            trace.iterations = iterations
        return MISS
    except ZeroVertex:
        if trace is not None:
            trace.iterations = iterations
            trace.fallback_used = True
        return degenerate_fallback(poly, line_through((x1, y1), (x2, y2)))


def _line_ends(line: ImplicitLine):
    x1, y1 = line.base
    return x1, y1, x1 + line.dir[0], y1 + line.dir[1]


def clip_line(poly: ConvexPolygon, line: ImplicitLine):
    """Clip an unbounded line; returns ``(ClipResult, ClipTrace)``."""
    trace = ClipTrace()
    result = _clip_core(poly, *_line_ends(line), trace)
    if result is MISS:
        return result, trace
    return Cross(float(result.t1), float(result.t2)), trace


def clip_segment(poly: ConvexPolygon, a: Point2, b: Point2):
    """Clip the segment ``a -> b``; returns ``(ClipResult, ClipTrace)``."""
    line_through(a, b)  # rejects coincident endpoints
    trace = ClipTrace()
    result = _clip_core(poly, a[0], a[1], b[0], b[1], trace)
    if result is MISS:
        return result, trace
    return clamp_to_segment(result.t1, result.t2), trace


def chain_clip(poly: ConvexPolygon, a: Point2, b: Point2, mode: str = "segment") -> ClipResult:
    """Uniform ``(poly, a, b, mode)`` entry point used by the harnesses."""
    x1, y1 = a
    x2, y2 = b
    if x1 == x2 and y1 == y2:
        line_through(a, b)  # raises DegenerateLineError
    result = _clip_core(poly, x1, y1, x2, y2, None)
    if result is MISS:
        return result
    if mode == "line":
        return Cross(float(result.t1), float(result.t2))
    return clamp_to_segment(result.t1, result.t2)
