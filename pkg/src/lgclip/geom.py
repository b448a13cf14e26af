"""Geometric primitives shared by every clipper.

Points, implicit lines ``F(x) = A*x + B*y + C``, sign classification with an
explicit tolerance, convex window validation and the edge crossing parameter.

All arithmetic is written so that it also works on the instrumented scalar
from :mod:`lgclip.counting`; nothing here forces values to ``float`` except
where a tolerance (never counted) is derived.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple, Sequence

import numpy as np

from .counting import tally_assign

#: relative width of the zero band, in units of |(A, B)| * window diameter
ZERO_BAND = 1e-12


class GeometryError(ValueError):
    pass


class DegenerateLineError(GeometryError):
    """Raised when a line is requested through two coincident points."""


class NoCrossingError(GeometryError):
    """Raised when an edge does not properly cross a line."""


class InvalidPolygonError(GeometryError):
    pass


class TooFewVerticesError(InvalidPolygonError):
    pass


class NotStrictlyConvexError(InvalidPolygonError):
    pass


class DuplicateVertexError(InvalidPolygonError):
    pass


class Point2(NamedTuple):
    x: float
    y: float


class ImplicitLine(NamedTuple):
    """Line ``a*x + b*y + c = 0`` together with its parametrisation.

    ``base`` is the point at ``t = 0`` and ``dir`` the displacement to
    ``t = 1``.
    """

    a: float
    b: float
    c: float
    base: Point2
    dir: Point2


class SignClass(enum.Enum):
    NEG = -1
    ZERO = 0
    POS = 1


def line_through(a: Point2, b: Point2) -> ImplicitLine:
    x1, y1 = a
    x2, y2 = b
    if x1 == x2 and y1 == y2:
        raise DegenerateLineError(f"coincident endpoints {tuple(a)!r}")
    return ImplicitLine(
        y1 - y2,
        x2 - x1,
        x1 * y2 - x2 * y1,
        Point2(x1, y1),
        Point2(x2 - x1, y2 - y1),
    )


def eval_f(line: ImplicitLine, p: Point2) -> float:
    return line.a * p[0] + line.b * p[1] + line.c


def signed_distance(line: ImplicitLine, p: Point2) -> float:
    """Oriented distance of ``p`` from ``line``; positive on the left."""
    return eval_f(line, p) / math.hypot(float(line.a), float(line.b))


def classify_sign(value: float, eps_abs: float) -> SignClass:
    if eps_abs < 0:
        raise ValueError("eps_abs must be non-negative")
    if abs(value) <= eps_abs:
        return SignClass.ZERO
    return SignClass.POS if value > 0 else SignClass.NEG


def zero_band(line: ImplicitLine, diameter: float) -> float:
    """Absolute |F| threshold below which a vertex counts as on the line."""
    return ZERO_BAND * math.hypot(line.a, line.b) * diameter


def crossing_param(line: ImplicitLine, x0, y0, x1, y1, f0, f1):
    """Line parameter of the crossing with edge (x0,y0)-(x1,y1).

    ``f0`` and ``f1`` are the F values at the edge ends and must have
    strictly opposite signs; this is not re-checked.
    """
    s = f0 / (f0 - f1)
    bx, by = line.base
    dx, dy = line.dir
    if abs(dx) >= abs(dy):
        return (x0 + s * (x1 - x0) - bx) / dx
    return (y0 + s * (y1 - y0) - by) / dy


def edge_intersection_param(line: ImplicitLine, xi: Point2, xj: Point2,
                            fi=None, fj=None) -> float:
    if fi is None:
        fi = eval_f(line, xi)
    if fj is None:
        fj = eval_f(line, xj)
    if not fi * fj < 0:
        raise NoCrossingError(
            f"edge {tuple(xi)!r}->{tuple(xj)!r} does not cross the line")
    return crossing_param(line, xi[0], xi[1], xj[0], xj[1], fi, fj)


class ZeroVertex(Exception):
    """A probed vertex lies within the zero band of the line."""


class VertexF(dict):
    """Lazily filled map ``index -> F(vertex)`` for one query.

    Indices run over ``0..n``; ``n`` aliases vertex 0.  Probing a vertex in
    the zero band raises :class:`ZeroVertex`.
    """

    __slots__ = ("a", "b", "c", "xs", "ys", "n", "eps")

    def __init__(self, poly: ConvexPolygon, line: ImplicitLine, eps=None):
        super().__init__()
        self.a, self.b, self.c = line.a, line.b, line.c
        self.xs, self.ys, self.n = poly.xs, poly.ys, poly.n
        self.eps = zero_band(line, poly.diameter) if eps is None else eps

    def __missing__(self, k):
        idx = k if k < self.n else k - self.n
        v = self.a * self.xs[idx] + self.b * self.ys[idx] + self.c
        if abs(v) <= self.eps:
            raise ZeroVertex(idx)
        tally_assign(v)
        self[k] = v
        return v


def point_at(line: ImplicitLine, t: float) -> Point2:
    return Point2(line.base[0] + t * line.dir[0], line.base[1] + t * line.dir[1])


def cross(ox, oy, ax, ay, bx, by):
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


class ConvexPolygon:
    """Strictly convex, anti-clockwise clipping window.

    The closing vertex is not stored: index ``n`` refers to vertex 0.
    Use :func:`polygon_new` to build one from user data.
    """

    __slots__ = ("vertices", "xs", "ys", "n", "diameter", "edge_lengths", "max_edge")

    def __init__(self, vertices, diameter, edge_lengths):
        self.vertices = tuple(vertices)
        self.xs = tuple(v[0] for v in self.vertices)
        self.ys = tuple(v[1] for v in self.vertices)
        self.n = len(self.vertices)
        self.diameter = diameter
        self.edge_lengths = edge_lengths
        self.max_edge = max(edge_lengths)

    def vertex(self, i: int) -> Point2:
        return self.vertices[i % self.n]

    def with_coordinates(self, vertices) -> "ConvexPolygon":
        """Same window with substituted coordinate objects (no re-validation).

        Used to run the clippers on instrumented scalars.
        """
        return ConvexPolygon(vertices, self.diameter, self.edge_lengths)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"ConvexPolygon(n={self.n}, vertices={list(map(tuple, self.vertices))!r})"


def _diameter(arr: np.ndarray) -> float:
    best = 0.0
    for lo in range(0, len(arr), 512):  # bounded memory for large windows
        d = arr[lo:lo + 512, None, :] - arr[None, :, :]
        best = max(best, float((d * d).sum(axis=-1).max()))
    return math.sqrt(best)


def polygon_new(vertices: Sequence[Sequence[float]]) -> ConvexPolygon:
    arr = np.array([(float(v[0]), float(v[1])) for v in vertices], dtype=float).reshape(-1, 2)
    n = len(arr)
    if n < 3:
        raise TooFewVerticesError(f"need at least 3 vertices, got {n}")
    if not np.isfinite(arr).all():
        bad = int(np.flatnonzero(~np.isfinite(arr).all(axis=1))[0])
        raise GeometryError(f"non-finite coordinate in vertex {bad}: {tuple(arr[bad].tolist())!r}")
    edges = np.roll(arr, -1, axis=0) - arr
    dup = np.flatnonzero((edges == 0).all(axis=1))
    if len(dup):
        i = int(dup[0])
        raise DuplicateVertexError(f"vertices {i} and {(i + 1) % n} coincide")

    nxt = np.roll(edges, -1, axis=0)
    turns = edges[:, 0] * nxt[:, 1] - edges[:, 1] * nxt[:, 0]
    bad = np.flatnonzero(~(turns > 0))
    if len(bad):
        i = int(bad[0])
        raise NotStrictlyConvexError(
            f"vertices {i}, {(i + 1) % n}, {(i + 2) % n} do not turn left")
    dots = (edges * nxt).sum(axis=1)
    # all-left turns that wind more than once (e.g. a pentagram)
    if abs(float(np.arctan2(turns, dots).sum()) - 2 * math.pi) > 1e-6:
        raise NotStrictlyConvexError("boundary winds more than once")

    pts = [Point2(x, y) for x, y in arr.tolist()]
    edge_lengths = tuple(np.hypot(edges[:, 0], edges[:, 1]).tolist())
    return ConvexPolygon(pts, _diameter(arr), edge_lengths)
