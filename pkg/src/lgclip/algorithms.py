"""Name -> clipper registry shared by the CLI, verifier and benchmarks.

Every entry has the signature ``(poly, a, b, mode) -> ClipResult``.
"""

from .baselines import cyrus_beck_clip, oracle_clip, rappaport_clip
from .chain_clip import chain_clip


def _rappaport(poly, a, b, mode="segment"):
    if mode != "segment":
        raise ValueError("rappaport clips segments only")
    return rappaport_clip(poly, a, b)


CLIPPERS = {
    "skala": chain_clip,
    "cyrus-beck": cyrus_beck_clip,
    "rappaport": _rappaport,
    "oracle": oracle_clip,
}

#: algorithms defined for unbounded lines as well as segments
LINE_CAPABLE = ("skala", "cyrus-beck", "oracle")


def get_clipper(name: str):
    try:
        return CLIPPERS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {sorted(CLIPPERS)}") from None
