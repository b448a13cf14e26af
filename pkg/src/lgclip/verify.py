"""Differential fuzzing of every clipper against the brute-force oracle.

Trial ``k`` of a run with seed ``s`` draws everything from
``default_rng([s, k])``, so any single trial can be rebuilt from the pair
``(s, k)`` alone (:func:`trial_instance`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algorithms import CLIPPERS, LINE_CAPABLE
from .baselines.oracle import is_degenerate, oracle_clip
from .datagen import gen_polygon, points_in_disc
from .geom import ConvexPolygon, GeometryError, Point2, line_through, polygon_new
from .result import MISS

T_TOL = 1e-9


@dataclass
class Disagreement:
    seed: int
    trial: int
    algo: str
    mode: str
    n: int
    degenerate: bool
    expected: object
    got: object

    def reproducer(self) -> str:
        return (f"seed={self.seed} trial={self.trial} algo={self.algo} mode={self.mode} "
                f"n={self.n}{' degenerate' if self.degenerate else ''}: "
                f"oracle {self.expected!r} vs {self.got!r}")


@dataclass
class VerifyReport:
    trials: int = 0
    checks: int = 0
    degenerate_trials: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def hard_failures(self) -> list:
        """Disagreements outside the degenerate band; these fail the run."""
        return [d for d in self.disagreements if not d.degenerate]

    @property
    def ok(self) -> bool:
        return not self.hard_failures


def _random_inscribed(rng: np.random.Generator, n: int, r: float) -> Optional[ConvexPolygon]:
    angles = np.sort(rng.uniform(0.0, 2 * math.pi, size=n))
    try:
        return polygon_new(np.column_stack((r * np.cos(angles), r * np.sin(angles))))
    except GeometryError:
        return None  # near-coincident angles; caller uses a regular polygon


def trial_instance(seed: int, trial: int, n_min: int, n_max: int):
    """``(poly, a, b)`` for one trial; half regular, half random inscribed."""
    rng = np.random.default_rng([seed, trial])
    n = int(rng.integers(n_min, n_max + 1))
    r_poly = float(rng.uniform(0.1, 0.9))
    poly = _random_inscribed(rng, n, r_poly) if rng.random() < 0.5 else None
    if poly is None:
        poly = gen_polygon(n, r_poly, float(rng.uniform(0, 2 * math.pi)))
    while True:
        x1, y1, x2, y2 = points_in_disc(rng, 2, 1.0).ravel().tolist()
        if (x1, y1) != (x2, y2):
            return poly, Point2(x1, y1), Point2(x2, y2)


def results_agree(expected, got, mode: str) -> bool:
    if expected is MISS or got is MISS:
        return expected is got
    for u, v in zip(expected, got):
        # segment t lies in [0, 1]; line t is scaled relative to its size
        tol = T_TOL if mode == "segment" else T_TOL * max(1.0, abs(u))
        if not abs(u - v) <= tol:
            return False
    return True


def run_verify(trials: int, seed: int, n_min: int = 3, n_max: int = 100,
               clippers: Optional[dict] = None, progress=None) -> VerifyReport:
    if not 3 <= n_min <= n_max:
        raise ValueError("need 3 <= n_min <= n_max")
    if trials < 0:
        raise ValueError("trials must be >= 0")
    clippers = dict(CLIPPERS if clippers is None else clippers)
    clippers.pop("oracle", None)
    report = VerifyReport()
    for trial in range(trials):
        poly, a, b = trial_instance(seed, trial, n_min, n_max)
        degenerate = is_degenerate(poly, line_through(a, b))
        report.degenerate_trials += degenerate
        for mode in ("segment", "line"):
            expected = oracle_clip(poly, a, b, mode)
            for name, clip in clippers.items():
                if mode == "line" and name not in LINE_CAPABLE:
                    continue
                report.checks += 1
                try:
                    got = clip(poly, a, b, mode)
                except Exception as exc:  # a crash is a disagreement too
                    got = exc
                if isinstance(got, Exception) or not results_agree(expected, got, mode):
                    report.disagreements.append(Disagreement(
                        seed, trial, name, mode, poly.n, degenerate, expected, got))
        report.trials += 1
        if progress is not None:
            progress(trial)
    return report
