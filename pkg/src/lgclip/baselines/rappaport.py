"""Rappaport's O(lg N) segment clipper and its binary searches.

Point location uses the vertex fan anchored at vertex 0.  For an interior
start point the exit edge is found by an angular search around that point.
For an exterior start point the two supporting vertices are the angular
extremes of the window as seen from it, found by bisection over the
bitonic angle sequence; they split the boundary into a front chain (facing
the start point, running anti-clockwise from ``left_sup`` to ``right_sup``)
and a back chain, each crossed at most once by the line.

Side tests use the anti-clockwise convention: left is positive.  Any test
that lands inside the tolerance band hands the query to the oracle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from ..geom import (ZERO_BAND, ConvexPolygon, GeometryError, Point2,
                    VertexF, ZeroVertex, crossing_param, line_through)
from ..result import ENDPOINT_SNAP, MISS, ClipResult, Cross
from .oracle import oracle_clip


class Location(enum.Enum):
    IN = "In"
    OUT = "Out"


class SupportPair(NamedTuple):
    left_sup: int
    right_sup: int


class SectorPair(NamedTuple):
    s: int
    s1: int


class RappaportPreconditionError(GeometryError):
    pass


class _Boundary(Exception):
    pass


@dataclass
class RappTrace:
    """Bisection steps taken by each helper search, keyed by helper name."""

    probes: dict = field(default_factory=dict)
    fallback_used: bool = False


_IN, _ON, _OUT = 1, 0, -1


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _locate(poly, px, py, tol, trace=None):
    """Fan search from vertex 0: returns _IN, _ON or _OUT."""
    xs, ys, n, el = poly.xs, poly.ys, poly.n, poly.edge_lengths
    x0, y0 = xs[0], ys[0]
    band0 = tol * el[0]
    o_first = _cross(x0, y0, xs[1], ys[1], px, py)
    if o_first < -band0:
        return _OUT
    band_last = tol * el[n - 1]
    o_last = _cross(xs[n - 1], ys[n - 1], x0, y0, px, py)
    if o_last < -band_last:
        return _OUT
    lo, hi = 1, n - 1
    steps = 0
    while hi - lo >= 2:
        steps += 1
        mid = (lo + hi) // 2
        if _cross(x0, y0, xs[mid], ys[mid], px, py) >= 0:
            lo = mid
        else:
            hi = mid
    if trace is not None:
        trace.probes["classify"] = steps
    band = tol * el[lo]
    e = _cross(xs[lo], ys[lo], xs[hi], ys[hi], px, py)
    if e < -band:
        return _OUT
    if e <= band or o_first <= band0 or o_last <= band_last:
        return _ON
    return _IN


def _sector(poly, ax, ay, dx, dy, trace=None) -> SectorPair:
    """Edge through which the ray from interior point a along d leaves."""
    xs, ys, n = poly.xs, poly.ys, poly.n
    rx = xs[0] - ax
    ry = ys[0] - ay
    # angles are measured anti-clockwise from r = x_0 - a, in [0, 2*pi)
    c = rx * dy - ry * dx
    d_upper = c > 0 or (c == 0 and rx * dx + ry * dy > 0)
    lo, hi = 0, n
    steps = 0
    while hi - lo >= 2:
        steps += 1
        mid = (lo + hi) // 2
        wx = xs[mid] - ax
        wy = ys[mid] - ay
        cw = rx * wy - ry * wx
        w_upper = cw > 0 or (cw == 0 and rx * wx + ry * wy > 0)
        if w_upper != d_upper:
            not_after = w_upper
        else:
            not_after = wx * dy - wy * dx >= 0
        if not_after:
            lo = mid
        else:
            hi = mid
    if trace is not None:
        trace.probes["sector"] = steps
    return SectorPair(lo, hi if hi < n else 0)


def _bitonic_min(n, less):
    """Index of the minimum of a cyclic bitonic sequence, O(lg n) probes.

    ``less(i, k)`` compares the sequence at indices in ``0..n`` (``n``
    aliases 0).  Same chain-halving rule as the line clipper's discard step.
    """
    i, j = 0, n
    steps = 0
    while j - i >= 2:
        steps += 1
        k = (i + j) // 2
        if less(i, k):
            if less(i + 1, i):
                j = k
            else:
                i = k
        elif less(k, k + 1):
            j = k
        else:
            i = k
    best = j if less(j, i) else i
    return (best if best < n else best - n), steps


def _support(poly, ax, ay, trace=None, tol=None) -> SupportPair:
    """Tangent vertices seen from exterior point a.

    With ``tol`` set, each result is certified in O(1): both neighbours of a
    tangent vertex lie strictly on one side of the line from a through it.
    A failed or borderline certificate (a on or near an edge line, where
    the angle sequence has a tie) raises ``_Boundary``.
    """
    xs, ys, n = poly.xs, poly.ys, poly.n

    def ccw_of(i, k):
        # vertex k lies anti-clockwise of vertex i as seen from a
        if i >= n:
            i -= n
        if k >= n:
            k -= n
        return (xs[i] - ax) * (ys[k] - ay) - (ys[i] - ay) * (xs[k] - ax) > 0

    right, s1 = _bitonic_min(n, ccw_of)
    left, s2 = _bitonic_min(n, lambda i, k: ccw_of(k, i))
    if trace is not None:
        # two independent bisections, one per tangent
        trace.probes["support_right"] = s1
        trace.probes["support_left"] = s2
    if tol is not None:
        el = poly.edge_lengths
        for v, side in ((right, 1), (left, -1)):
            for nb, length in ((v - 1 if v else n - 1, el[v - 1]), (v + 1 if v + 1 < n else 0, el[v])):
                c = _cross(ax, ay, xs[v], ys[v], xs[nb], ys[nb])
                if not side * c > tol * length:
                    raise _Boundary
    return SupportPair(left, right)


def _support_scan(poly, ax, ay) -> SupportPair:
    """O(N) angular extremes; used when a sits on an edge line."""
    ang = [math.atan2(y - ay, x - ax) for x, y in zip(poly.xs, poly.ys)]
    cx = sum(poly.xs) / poly.n - ax
    cy = sum(poly.ys) / poly.n - ay
    ref = math.atan2(cy, cx)
    rel = [(t - ref + math.pi) % (2 * math.pi) - math.pi for t in ang]
    return SupportPair(max(range(poly.n), key=rel.__getitem__),
                       min(range(poly.n), key=rel.__getitem__))


def _chain_search(n, f, start, m, positive_first):
    """Edge on chain start..start+m where F changes sign."""
    lo, hi = 0, m
    steps = 0
    while hi - lo >= 2:
        steps += 1
        mid = (lo + hi) // 2
        idx = start + mid
        if idx >= n:
            idx -= n
        if (f[idx] > 0) == positive_first:
            lo = mid
        else:
            hi = mid
    s = start + lo
    if s >= n:
        s -= n
    return SectorPair(s, s + 1 if s + 1 < n else 0), steps


def _front(poly, f, sup, trace=None):
    left, right = sup
    n = poly.n
    pair, steps = _chain_search(n, f, left, (right - left) % n, True)
    if trace is not None:
        trace.probes["front_sector"] = steps
    return pair


def _back(poly, f, sup, trace=None):
    left, right = sup
    n = poly.n
    pair, steps = _chain_search(n, f, right, (left - right) % n, False)
    if trace is not None:
        trace.probes["back_sector"] = steps
    return pair


def _side(poly, pair, bx, by, tol):
    """Side of b w.r.t. edge pair: 1 left, -1 right; raises inside the band."""
    s, s1 = pair
    xs, ys = poly.xs, poly.ys
    e = _cross(xs[s], ys[s], xs[s1], ys[s1], bx, by)
    band = tol * poly.edge_lengths[s]
    if e > band:
        return 1
    if e < -band:
        return -1
    raise _Boundary


def _edge_t(poly, line, f, pair):
    s, s1 = pair
    xs, ys = poly.xs, poly.ys
    fs, fs1 = f[s], f[s1]
    if not fs * fs1 < 0:
        raise _Boundary
    return crossing_param(line, xs[s], ys[s], xs[s1], ys[s1], fs, fs1)


def _rappaport(poly, a, b, trace=None):
    line = line_through(a, b)
    ax, ay = line.base
    bx, by = b
    dx, dy = line.dir
    f = VertexF(poly, line)
    tol = ZERO_BAND * poly.diameter + ENDPOINT_SNAP * math.hypot(float(dx), float(dy))
    try:
        where = _locate(poly, ax, ay, tol, trace)
        if where == _ON:
            raise _Boundary
        if where == _IN:
            edge = _sector(poly, ax, ay, dx, dy, trace)
            if _side(poly, edge, bx, by, tol) > 0:
                return Cross(0.0, 1.0)
            return Cross(0.0, float(_edge_t(poly, line, f, edge)))

        sup = _support(poly, ax, ay, trace, tol)
        if f[sup.left_sup] < 0 or f[sup.right_sup] > 0:
            return MISS
        edge = _front(poly, f, sup, trace)
        if _side(poly, edge, bx, by, tol) < 0:
            return MISS
        t1 = _edge_t(poly, line, f, edge)
        edge = _back(poly, f, sup, trace)
        if _side(poly, edge, bx, by, tol) > 0:
            return Cross(float(t1), 1.0)
        t2 = _edge_t(poly, line, f, edge)
        return Cross(float(t1), float(t2))
    except (ZeroVertex, _Boundary):
        if trace is not None:
            trace.fallback_used = True
        return oracle_clip(poly, a, b, "segment")


def rappaport_clip(poly: ConvexPolygon, a: Point2, b: Point2) -> ClipResult:
    """Clip segment ``a -> b`` (segments only)."""
    return _rappaport(poly, a, b)


def rappaport_clip_traced(poly: ConvexPolygon, a: Point2, b: Point2):
    trace = RappTrace()
    return _rappaport(poly, a, b, trace), trace


# -- helper searches exposed individually -----------------------------------

def _classify_tol(poly):
    return ZERO_BAND * poly.diameter


def rapp_classify(poly: ConvexPolygon, p: Point2) -> Location:
    """Point location in O(lg N); boundary points count as inside."""
    where = _locate(poly, p[0], p[1], _classify_tol(poly))
    return Location.OUT if where == _OUT else Location.IN


def rapp_sector(poly: ConvexPolygon, a: Point2, b: Point2) -> SectorPair:
    if rapp_classify(poly, a) is Location.OUT:
        raise RappaportPreconditionError("start point lies outside the window")
    if a[0] == b[0] and a[1] == b[1]:
        raise RappaportPreconditionError("zero-length direction")
    return _sector(poly, a[0], a[1], b[0] - a[0], b[1] - a[1])


def rapp_support_vertices(poly: ConvexPolygon, a: Point2) -> SupportPair:
    if rapp_classify(poly, a) is Location.IN:
        raise RappaportPreconditionError("start point lies inside the window")
    try:
        return _support(poly, a[0], a[1], tol=0.0)
    except _Boundary:
        return _support_scan(poly, a[0], a[1])


def _line_f(poly, a, b):
    return VertexF(poly, line_through(a, b))


def rapp_front_sector(poly: ConvexPolygon, a: Point2, b: Point2,
                      supports: SupportPair) -> Optional[SectorPair]:
    """Front-chain edge crossed by segment a->b, or None if it falls short.

    None covers both a line that passes outside the supports and a segment
    whose end stays in front of the crossed edge.
    """
    f = _line_f(poly, a, b)
    if f[supports.left_sup] < 0 or f[supports.right_sup] > 0:
        return None
    edge = _front(poly, f, supports)
    try:
        if _side(poly, edge, b[0], b[1], _classify_tol(poly)) < 0:
            return None
    except _Boundary:
        pass
    return edge


def rapp_back_sector(poly: ConvexPolygon, a: Point2, b: Point2,
                     supports: SupportPair) -> Optional[SectorPair]:
    """Back-chain edge crossed by the line a->b, or None if it misses."""
    f = _line_f(poly, a, b)
    if f[supports.left_sup] < 0 or f[supports.right_sup] > 0:
        return None
    return _back(poly, f, supports)
