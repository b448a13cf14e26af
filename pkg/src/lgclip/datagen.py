"""Seeded benchmark instances: a regular N-gon and segments in a larger disc.

Randomness comes from numpy's PCG64 generator; its name and the seed go into
every instance header.  Endpoints are drawn by rejection from the disc's
bounding square.  A hit percentage is met exactly by classifying candidate
segments with the oracle and filling separate hit and miss quotas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .baselines.oracle import oracle_clip
from .fileio import Instance
from .geom import ConvexPolygon, Point2, polygon_new
from .result import MISS

RNG_NAME = "pcg64"


class InfeasibleTargetError(ValueError):
    """The requested hit percentage was not reached within the draw budget."""


@dataclass(frozen=True)
class GenConfig:
    n: int
    count: int = 1000
    seed: int = 0
    r_poly: float = 0.5
    r_points: float = 1.0
    target_hit_pct: Optional[float] = None
    rotation: Optional[float] = None    # None: seeded random angle

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if not 0 < self.r_poly < self.r_points:
            raise ValueError("need 0 < r_poly < r_points")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.target_hit_pct is not None:
            if not 0 <= self.target_hit_pct <= 100:
                raise ValueError("target_hit_pct must lie in [0, 100]")
            hits = self.count * self.target_hit_pct / 100
            if hits != int(hits):
                raise ValueError(
                    f"{self.target_hit_pct}% of {self.count} segments is not a whole number")

    @property
    def target_hits(self) -> Optional[int]:
        if self.target_hit_pct is None:
            return None
        return int(self.count * self.target_hit_pct / 100)


def gen_polygon(n: int, r: float, rotation: float = 0.0) -> ConvexPolygon:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not r > 0:
        raise ValueError("radius must be positive")
    angles = rotation + 2 * math.pi * np.arange(n) / n
    return polygon_new(np.column_stack((r * np.cos(angles), r * np.sin(angles))))


def points_in_disc(rng: np.random.Generator, count: int, r: float) -> np.ndarray:
    """``count`` points uniform in the disc of radius ``r``, shape (count, 2)."""
    out = np.empty((0, 2))
    while len(out) < count:
        need = count - len(out)
        cand = rng.uniform(-r, r, size=(int(need * 1.3) + 8, 2))
        cand = cand[(cand ** 2).sum(axis=1) <= r * r]
        out = np.concatenate((out, cand[:need]))
    return out


def _pairs(pts: np.ndarray):
    return [(Point2(float(p[0]), float(p[1])), Point2(float(p[2]), float(p[3])))
            for p in pts.reshape(-1, 4)]


def _rotation(cfg: GenConfig, rng: np.random.Generator) -> float:
    # drawn unconditionally so the segment stream does not depend on it
    angle = float(rng.uniform(0.0, 2 * math.pi))
    return angle if cfg.rotation is None else cfg.rotation


def gen_segments(cfg: GenConfig, poly: Optional[ConvexPolygon] = None,
                 rng: Optional[np.random.Generator] = None,
                 max_draws: Optional[int] = None) -> list:
    """Segments for ``cfg``; ``poly`` is only needed with a hit target."""
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(cfg.seed))
        rotation = _rotation(cfg, rng)
        if poly is None:
            poly = gen_polygon(cfg.n, cfg.r_poly, rotation)
    want_hits = cfg.target_hits
    if want_hits is None:
        return _pairs(points_in_disc(rng, 2 * cfg.count, cfg.r_points))

    want_misses = cfg.count - want_hits
    if max_draws is None:
        max_draws = max(100 * cfg.count, 10_000)
    out = []
    draws = 0
    while want_hits or want_misses:
        if draws >= max_draws:
            raise InfeasibleTargetError(
                f"could not reach {cfg.target_hit_pct}% hits within {max_draws} draws")
        batch = min(max_draws - draws, max(64, 2 * (want_hits + want_misses)))
        for a, b in _pairs(points_in_disc(rng, 2 * batch, cfg.r_points)):
            draws += 1
            if a == b:
                continue
            hit = oracle_clip(poly, a, b) is not MISS
            if hit and want_hits:
                want_hits -= 1
                out.append((a, b))
            elif not hit and want_misses:
                want_misses -= 1
                out.append((a, b))
            if not (want_hits or want_misses):
                break
    return out


def gen_instance(cfg: GenConfig, max_draws: Optional[int] = None) -> Instance:
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    rotation = _rotation(cfg, rng)
    poly = gen_polygon(cfg.n, cfg.r_poly, rotation)
    segments = gen_segments(cfg, poly, rng, max_draws)
    meta = {"rng": RNG_NAME, "r_poly": repr(cfg.r_poly), "r_points": repr(cfg.r_points),
            "rotation": repr(rotation),
            "hit_pct": "any" if cfg.target_hit_pct is None else repr(cfg.target_hit_pct)}
    return Instance(poly, segments, cfg.seed, meta)
