"""Wall-clock and operation-count benchmarks with effectivity coefficients.

Every (N, hit percentage) cell clips one generated instance set with each
algorithm.  Timings interleave the algorithms within each repetition and
report the median over repetitions of the mean time per call, so drifts in
machine load hit all algorithms alike.
"""

from __future__ import annotations

import csv
import gc
import io
import platform
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .algorithms import get_clipper
from .costmodel import counting_run, theoretical_nu, weighted_time
from .datagen import GenConfig, gen_instance

ALGOS = ("skala", "cyrus-beck", "rappaport")
COUNT_FIELDS = ("assign", "cmp", "addsub", "mul", "div")
CSV_COLUMNS = ("n", "hit_pct", "algo", "calls", "mean_ns", *COUNT_FIELDS,
               "nu1", "nu2_analytic", "nu3")
MIN_CALLS = 1000


class BenchError(ValueError):
    pass


@dataclass
class BenchCell:
    n: int
    hit_pct: Optional[float]
    algo: str
    calls: int = 0
    mean_ns: Optional[float] = None
    counts: Optional[dict] = None       # mean per call, keyed by COUNT_FIELDS


@dataclass
class BenchReport:
    cells: list = field(default_factory=list)
    nu: dict = field(default_factory=dict)      # (n, hit_pct) -> {"nu1", "nu2_analytic", "nu3"}
    meta: dict = field(default_factory=dict)

    def cell(self, n, hit_pct, algo) -> BenchCell:
        for c in self.cells:
            if (c.n, c.hit_pct, c.algo) == (n, hit_pct, algo):
                return c
        raise KeyError((n, hit_pct, algo))

    @property
    def n_values(self) -> list:
        return sorted({c.n for c in self.cells})

    @property
    def hit_values(self) -> list:
        return list(dict.fromkeys(c.hit_pct for c in self.cells))


def cell_seed(seed: int, n: int, hit_pct: Optional[float]) -> int:
    code = -1 if hit_pct is None else int(round(hit_pct * 1000))
    ss = np.random.SeedSequence([seed, n, code + 1])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def time_algorithms(fns: dict, poly, segments, reps: int = 7, warmup: int = 5) -> dict:
    """Median over ``reps`` of the mean ns per call, algorithms interleaved."""
    names = list(fns)
    samples = {name: [] for name in names}
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(warmup):
            for name in names:
                fn = fns[name]
                for a, b in segments:
                    fn(poly, a, b, "segment")
        for rep in range(reps):
            # rotate the order so no algorithm always runs first
            for name in names[rep % len(names):] + names[:rep % len(names)]:
                fn = fns[name]
                t0 = time.perf_counter_ns()
                for a, b in segments:
                    fn(poly, a, b, "segment")
                samples[name].append((time.perf_counter_ns() - t0) / len(segments))
    finally:
        if enabled:
            gc.enable()
    return {name: statistics.median(v) for name, v in samples.items()}


def count_algorithm(algo: str, poly, segments) -> dict:
    totals = dict.fromkeys(COUNT_FIELDS, 0)
    for a, b in segments:
        counts = counting_run(algo, poly, a, b)[1]
        for k in COUNT_FIELDS:
            totals[k] += getattr(counts, k)
    return {k: v / len(segments) for k, v in totals.items()}


def environment(seed: int) -> dict:
    clock = time.get_clock_info("perf_counter")
    return {
        "host": platform.platform(),
        "machine": platform.machine(),
        "python": sys.version.split()[0],
        "timer": f"perf_counter_ns resolution={clock.resolution!r}s",
        "seed": seed,
        "rng": "pcg64",
    }


def run_bench(n_list: Sequence[int], segments: int = 1000,
              hit_pcts: Sequence[Optional[float]] = (None,), seed: int = 1,
              mode: str = "time", reps: int = 7, warmup: int = 5,
              min_calls: int = MIN_CALLS) -> BenchReport:
    if mode not in ("time", "ops", "both"):
        raise BenchError(f"mode must be time, ops or both, not {mode!r}")
    if not n_list:
        raise BenchError("empty N list")
    if reps < 1 or warmup < 0:
        raise BenchError("need reps >= 1 and warmup >= 0")
    timed = mode in ("time", "both")
    counted = mode in ("ops", "both")
    calls = segments * reps if timed else segments
    if calls < min_calls:
        raise BenchError(f"each cell needs >= {min_calls} calls, got {calls}")

    report = BenchReport(meta=environment(seed))
    report.meta.update(mode=mode, segments=segments, reps=reps, warmup=warmup,
                       nu_basis="time" if timed else "ops (weighted operation counts)")
    fns = {name: get_clipper(name) for name in ALGOS}
    for n in n_list:
        for pct in hit_pcts:
            inst = gen_instance(GenConfig(n=n, count=segments,
                                          seed=cell_seed(seed, n, pct), target_hit_pct=pct))
            times = time_algorithms(fns, inst.poly, inst.segments, reps, warmup) if timed else {}
            cost = {}
            for name in ALGOS:
                cell = BenchCell(n, pct, name, calls, times.get(name))
                if counted:
                    cell.counts = count_algorithm(name, inst.poly, inst.segments)
                    cost[name] = weighted_time([cell.counts[k] for k in COUNT_FIELDS])
                report.cells.append(cell)
            basis = times if timed else cost
            report.nu[n, pct] = {
                "nu1": basis["cyrus-beck"] / basis["skala"],
                "nu2_analytic": theoretical_nu(n)[1],
                "nu3": basis["rappaport"] / basis["skala"],
            }
    return report


def _num(v) -> str:
    return "" if v is None else f"{v:.6g}"


def _pct(p) -> str:
    return "any" if p is None else f"{p:g}"


def to_csv(report: BenchReport) -> str:
    out = io.StringIO()
    for k, v in report.meta.items():
        out.write(f"# {k}: {v}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in report.cells:
        nu = report.nu[c.n, c.hit_pct]
        counts = c.counts or {}
        w.writerow([c.n, _pct(c.hit_pct), c.algo, c.calls, _num(c.mean_ns),
                    *(_num(counts.get(k)) for k in COUNT_FIELDS),
                    _num(nu["nu1"]), _num(nu["nu2_analytic"]), _num(nu["nu3"])])
    return out.getvalue()


def theoretical_table(n_list: Sequence[int]) -> str:
    """Worst-case estimates in the layout of the published table."""
    head = "| | " + " | ".join(f"N={n}" for n in n_list) + " |"
    rule = "|---" * (len(n_list) + 1) + "|"
    rows = [head, rule]
    values = [theoretical_nu(n) for n in n_list]
    for i, label in enumerate(("ν₁ (CB)", "ν₂ (ECB)", "ν₃ (Rappaport)")):
        rows.append(f"| {label} | " + " | ".join(f"{v[i]:.2f}" for v in values) + " |")
    return "\n".join(rows)


def to_markdown(report: BenchReport) -> str:
    ns = report.n_values
    lines = ["## Environment", ""]
    lines += [f"- {k}: {v}" for k, v in report.meta.items()]
    lines += ["", "## Theoretical estimates (analytic, worst case)", "",
              theoretical_table(ns), "",
              f"## Measured ν₁ / ν₃ (basis: {report.meta.get('nu_basis')})", "",
              "| hit % | " + " | ".join(f"N={n}" for n in ns) + " |",
              "|---" * (len(ns) + 1) + "|"]
    for pct in report.hit_values:
        row = [f"{report.nu[n, pct]['nu1']:.2f} / {report.nu[n, pct]['nu3']:.2f}" for n in ns]
        lines.append(f"| {_pct(pct)} | " + " | ".join(row) + " |")
    if any(c.mean_ns is not None for c in report.cells):
        lines += ["", "## Mean time per call (µs, measured)", ""]
        lines += _algo_table(report, lambda c: f"{c.mean_ns / 1000:.2f}")
    if any(c.counts for c in report.cells):
        lines += ["", "## Mean operation count per call (measured)", ""]
        lines += _algo_table(report, lambda c: f"{sum(c.counts.values()):.1f}")
    return "\n".join(lines) + "\n"


def _algo_table(report, fmt) -> list:
    ns = report.n_values
    rows = ["| hit % | algorithm | " + " | ".join(f"N={n}" for n in ns) + " |",
            "|---" * (len(ns) + 2) + "|"]
    for pct in report.hit_values:
        for algo in ALGOS:
            vals = [fmt(report.cell(n, pct, algo)) for n in ns]
            rows.append(f"| {_pct(pct)} | {algo} | " + " | ".join(vals) + " |")
    return rows
