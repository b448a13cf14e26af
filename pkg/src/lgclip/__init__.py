"""Line and segment clipping against convex windows in O(lg N).

Quick use::

    from lgclip import polygon_new, chain_clip
    square = polygon_new([(0, 0), (1, 0), (1, 1), (0, 1)])
    chain_clip(square, (-1, 0.5), (2, 0.5))      # Cross(t1=0.333.., t2=0.666..)
"""

from .algorithms import CLIPPERS, LINE_CAPABLE, get_clipper
from .baselines import (cyrus_beck_clip, is_degenerate, oracle_clip,
                        rappaport_clip)
from .chain_clip import (ClipTrace, chain_clip, clip_line, clip_segment,
                         degenerate_fallback, discard_step, solve)
from .counting import Counted, OpCounts
from .geom import (ConvexPolygon, DegenerateLineError, GeometryError,
                   ImplicitLine, InvalidPolygonError, NoCrossingError,
                   Point2, SignClass, classify_sign, edge_intersection_param,
                   eval_f, line_through, point_at, polygon_new,
                   signed_distance)
from .result import MISS, ClipResult, Cross, clamp_to_segment, is_miss

__version__ = "0.1.0"

__all__ = [
    "CLIPPERS", "ClipResult", "ClipTrace", "ConvexPolygon", "Counted", "Cross",
    "DegenerateLineError", "GeometryError", "ImplicitLine", "InvalidPolygonError",
    "LINE_CAPABLE", "MISS", "NoCrossingError", "OpCounts", "Point2", "SignClass",
    "chain_clip", "clamp_to_segment", "classify_sign", "clip_line", "clip_segment",
    "cyrus_beck_clip", "degenerate_fallback", "discard_step", "edge_intersection_param",
    "eval_f", "get_clipper", "is_degenerate", "is_miss", "line_through", "oracle_clip",
    "point_at", "polygon_new", "rappaport_clip", "signed_distance", "solve",
]
