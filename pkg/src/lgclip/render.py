"""Static SVG view of a clipping instance.

Geometry is emitted in world coordinates inside one group whose
``transform`` maps world to viewport (uniform scale, y axis flipped), so the
file can be checked numerically against the instance.
"""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .result import MISS


def _bounds(poly, segments):
    xs = list(poly.xs) + [p[0] for s in segments for p in s]
    ys = list(poly.ys) + [p[1] for s in segments for p in s]
    return min(xs), min(ys), max(xs), max(ys)


def world_to_view(poly, segments, size: int = 600, margin: int = 20):
    """``(s, tx, ty)`` with view = (s*x + tx, -s*y + ty)."""
    x0, y0, x1, y1 = _bounds(poly, segments)
    span = max(x1 - x0, y1 - y0) or 1.0
    s = (size - 2 * margin) / span
    tx = margin - s * x0 + (size - 2 * margin - s * (x1 - x0)) / 2
    ty = margin + s * y1 + (size - 2 * margin - s * (y1 - y0)) / 2
    return s, tx, ty


def render_svg(poly, segments, results=None, size: int = 600, title: str = "") -> str:
    s, tx, ty = world_to_view(poly, segments, size)
    dot = 3.0 / s
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    out.append(f'<g transform="matrix({s!r} 0 0 {-s!r} {tx!r} {ty!r})">')
    pts = " ".join(f"{x!r},{y!r}" for x, y in poly.vertices)
    out.append(f'<polygon class="window" points={quoteattr(pts)} fill="#dde8f6" '
               'stroke="#1f4e8c" stroke-width="1.5" vector-effect="non-scaling-stroke"/>')
    for (a, b) in segments:
        out.append(f'<line class="segment" x1="{a[0]!r}" y1="{a[1]!r}" x2="{b[0]!r}" '
                   f'y2="{b[1]!r}" stroke="#999999" stroke-width="0.75" '
                   'vector-effect="non-scaling-stroke"/>')
    for (a, b), res in zip(segments, results or ()):
        if res is MISS:
            continue
        dx, dy = b[0] - a[0], b[1] - a[1]
        t1, t2 = res
        p1 = (a[0] + t1 * dx, a[1] + t1 * dy)
        p2 = (a[0] + t2 * dx, a[1] + t2 * dy)
        out.append(f'<line class="clip" x1="{p1[0]!r}" y1="{p1[1]!r}" x2="{p2[0]!r}" '
                   f'y2="{p2[1]!r}" stroke="#d62728" stroke-width="2" '
                   'vector-effect="non-scaling-stroke"/>')
        for t, p in ((t1, p1), (t2, p2)):
            if 0 < t < 1:  # an end of the clipped part that lies on the boundary
                out.append(f'<circle class="crossing" cx="{p[0]!r}" cy="{p[1]!r}" '
                           f'r="{dot!r}" fill="#d62728"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
