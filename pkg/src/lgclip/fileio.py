"""Text formats for clipping instances and per-segment results.

Instance file::

    # algo-instance v1
    # seed 42
    # n 6
    # rng pcg64            (further "# key value" lines are kept as metadata)
    poly
    x y                    (n lines, anti-clockwise)
    segments 1000
    x1 y1 x2 y2            (one line per segment)

Result file, one line per segment in input order::

    <id> miss
    <id> hit <t1> <t2> <px1> <py1> <px2> <py2>

Floats are written with ``repr`` so that reading back is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, TextIO

from .geom import ConvexPolygon, GeometryError, Point2, polygon_new
from .result import MISS, ClipResult, Cross

MAGIC = "# algo-instance v1"


class FormatError(ValueError):
    """Malformed instance or result file."""


@dataclass
class Instance:
    poly: ConvexPolygon
    segments: list
    seed: Optional[int] = None
    meta: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.poly == other.poly and self.seed == other.seed
                and self.meta == other.meta
                and [tuple(map(tuple, s)) for s in self.segments]
                == [tuple(map(tuple, s)) for s in other.segments])


def format_instance(inst: Instance) -> str:
    lines = [MAGIC]
    if inst.seed is not None:
        lines.append(f"# seed {inst.seed}")
    lines.append(f"# n {inst.poly.n}")
    for key, value in inst.meta.items():
        lines.append(f"# {key} {value}")
    lines.append("poly")
    lines += [f"{x!r} {y!r}" for x, y in inst.poly.vertices]
    lines.append(f"segments {len(inst.segments)}")
    lines += [f"{a[0]!r} {a[1]!r} {b[0]!r} {b[1]!r}" for a, b in inst.segments]
    return "\n".join(lines) + "\n"


def write_instance(inst: Instance, fh: TextIO) -> None:
    fh.write(format_instance(inst))


def _floats(line: str, k: int, lineno: int):
    parts = line.split()
    if len(parts) != k:
        raise FormatError(f"line {lineno}: expected {k} numbers, got {line!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: not a number in {line!r}") from None


def parse_instance(text: str) -> Instance:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines or lines[0][1] != MAGIC:
        raise FormatError("missing '# algo-instance v1' header")
    seed = None
    n = None
    meta = {}
    pos = 1
    while pos < len(lines) and lines[pos][1].startswith("#"):
        lineno, ln = lines[pos]
        key, _, value = ln[1:].strip().partition(" ")
        value = value.strip()
        try:
            if key == "seed":
                seed = int(value)
            elif key == "n":
                n = int(value)
            else:
                meta[key] = value
        except ValueError:
            raise FormatError(f"line {lineno}: bad header value {ln!r}") from None
        pos += 1
    if n is None:
        raise FormatError("missing '# n' header")
    if pos >= len(lines) or lines[pos][1] != "poly":
        raise FormatError("expected 'poly' section")
    pos += 1
    if pos + n > len(lines):
        raise FormatError(f"expected {n} polygon vertices")
    verts = [tuple(_floats(ln, 2, lineno)) for lineno, ln in lines[pos:pos + n]]
    pos += n
    try:
        poly = polygon_new(verts)
    except GeometryError as exc:
        raise FormatError(f"invalid window: {exc}") from None

    if pos >= len(lines):
        raise FormatError("expected 'segments <count>' section")
    lineno, ln = lines[pos]
    head = ln.split()
    if len(head) != 2 or head[0] != "segments" or not head[1].isdigit():
        raise FormatError(f"line {lineno}: expected 'segments <count>', got {ln!r}")
    count = int(head[1])
    pos += 1
    body = lines[pos:]
    if len(body) != count:
        raise FormatError(f"expected {count} segments, found {len(body)} lines")
    segments = []
    for lineno, ln in body:
        x1, y1, x2, y2 = _floats(ln, 4, lineno)
        segments.append((Point2(x1, y1), Point2(x2, y2)))
    return Instance(poly, segments, seed, meta)


def read_instance(fh: TextIO) -> Instance:
    return parse_instance(fh.read())


def format_result(idx: int, a: Point2, b: Point2, result: ClipResult) -> str:
    if result is MISS:
        return f"{idx} miss"
    t1, t2 = result
    dx, dy = b[0] - a[0], b[1] - a[1]
    p1 = (a[0] + t1 * dx, a[1] + t1 * dy)
    p2 = (a[0] + t2 * dx, a[1] + t2 * dy)
    return f"{idx} hit {t1!r} {t2!r} {p1[0]!r} {p1[1]!r} {p2[0]!r} {p2[1]!r}"


def write_results(fh: TextIO, segments, results) -> None:
    for idx, ((a, b), res) in enumerate(zip(segments, results)):
        fh.write(format_result(idx, a, b, res) + "\n")


def parse_results(text: str) -> list:
    """Results as a list of ``MISS`` or ``Cross(t1, t2)``, indexed by id."""
    out = []
    for lineno, ln in enumerate(text.splitlines(), 1):
        parts = ln.split()
        if not parts:
            continue
        if not parts[0].isdigit() or int(parts[0]) != len(out):
            raise FormatError(f"line {lineno}: expected id {len(out)}, got {ln!r}")
        if parts[1:] == ["miss"]:
            out.append(MISS)
        elif len(parts) == 8 and parts[1] == "hit":
            t1, t2 = _floats(" ".join(parts[2:4]), 2, lineno)
            out.append(Cross(t1, t2))
        else:
            raise FormatError(f"line {lineno}: malformed record {ln!r}")
    return out
