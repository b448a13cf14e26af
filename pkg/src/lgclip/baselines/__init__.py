"""Competing clippers and the brute-force reference."""

from .oracle import is_degenerate, line_interval, oracle_clip
from .cyrus_beck import cyrus_beck_clip
from .rappaport import (Location, RappaportPreconditionError, RappTrace,
                        SectorPair, SupportPair, rapp_back_sector,
                        rapp_classify, rapp_front_sector, rapp_sector,
                        rapp_support_vertices, rappaport_clip,
                        rappaport_clip_traced)

__all__ = [
    "Location", "RappTrace", "RappaportPreconditionError", "SectorPair",
    "SupportPair", "cyrus_beck_clip", "is_degenerate", "line_interval",
    "oracle_clip", "rapp_back_sector", "rapp_classify", "rapp_front_sector",
    "rapp_sector", "rapp_support_vertices", "rappaport_clip",
    "rappaport_clip_traced",
]
