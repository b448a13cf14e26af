"""Clip results shared by all algorithms."""

from __future__ import annotations

from typing import NamedTuple, Union

#: t values within this distance of 0 or 1 are snapped onto the segment end
ENDPOINT_SNAP = 1e-9


class Cross(NamedTuple):
    """Visible parameter interval ``[t1, t2]`` with ``t1 <= t2``."""

    t1: float
    t2: float


class _Miss:
    __slots__ = ()

    def __repr__(self):
        return "MISS"

    def __reduce__(self):
        return "MISS"


MISS = _Miss()
ClipResult = Union[Cross, _Miss]


def is_miss(result) -> bool:
    return result is MISS


def clamp_to_segment(t1, t2) -> ClipResult:
    """Intersect a line interval with the segment range [0, 1].

    Values within :data:`ENDPOINT_SNAP` of an end are snapped onto it first,
    so an endpoint lying on the window boundary yields a zero-width
    ``Cross`` instead of a rounding-dependent miss.
    """
    if abs(t1) <= ENDPOINT_SNAP:
        t1 = 0.0
    elif abs(t1 - 1) <= ENDPOINT_SNAP:
        t1 = 1.0
    if abs(t2) <= ENDPOINT_SNAP:
        t2 = 0.0
    elif abs(t2 - 1) <= ENDPOINT_SNAP:
        t2 = 1.0
    lo = t1 if t1 > 0 else 0.0
    hi = t2 if t2 < 1 else 1.0
    if lo > hi:
        return MISS
    return Cross(float(lo), float(hi))
