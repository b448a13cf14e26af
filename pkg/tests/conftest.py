import math

import numpy as np
import pytest

from lgclip.geom import polygon_new

UNIT_SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def regular(n, r=1.0, rotation=0.0, center=(0.0, 0.0)):
    cx, cy = center
    return polygon_new([(cx + r * math.cos(rotation + 2 * math.pi * k / n),
                         cy + r * math.sin(rotation + 2 * math.pi * k / n)) for k in range(n)])


def random_inscribed(rng, n, r=1.0):
    while True:
        ang = np.sort(rng.uniform(0, 2 * math.pi, n))
        try:
            return polygon_new(np.column_stack((r * np.cos(ang), r * np.sin(ang))))
        except ValueError:
            continue


def random_point(rng, r=2.0):
    while True:
        x, y = rng.uniform(-r, r, 2)
        if x * x + y * y <= r * r:
            return (float(x), float(y))


def close(u, v, tol=1e-9):
    return abs(u - v) <= tol


@pytest.fixture
def square():
    return polygon_new(UNIT_SQUARE)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def compose_clipper(discard=None):
    """Clipper assembled from the public solve/discard_step pieces.

    Serves as a slow reference for the inlined fast path and, with a
    corrupted ``discard``, as a mutant for the verifier's smoke test.
    """
    from lgclip.chain_clip import degenerate_fallback, discard_step, solve
    from lgclip.geom import VertexF, ZeroVertex, line_through
    from lgclip.result import MISS, Cross, clamp_to_segment

    step = discard or discard_step

    def clip(poly, a, b, mode="segment"):
        line = line_through(a, b)
        f = VertexF(poly, line)
        i, j = 0, poly.n
        try:
            while j - i >= 2:
                k = (i + j) // 2
                if f[i] * f[k] < 0:
                    t1, t2 = sorted((solve(poly, line, i, k, f), solve(poly, line, k, j, f)))
                    res = Cross(t1, t2)
                    break
                i, j, _ = step(poly, f, i, j, k)
            else:
                res = MISS
        except ZeroVertex:
            res = degenerate_fallback(poly, line)
        if res is MISS or mode == "line":
            return res
        return clamp_to_segment(*res)

    return clip


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
