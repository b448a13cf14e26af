import io

import pytest
from hypothesis import given, settings, strategies as st

from lgclip.datagen import GenConfig, gen_instance
from lgclip.fileio import (FormatError, Instance, format_instance, format_result,
                           parse_instance, parse_results, read_instance, write_instance,
                           write_results)
from lgclip.geom import Point2, polygon_new
from lgclip.result import MISS, Cross

from conftest import UNIT_SQUARE

SQUARE_TEXT = """# algo-instance v1
# seed 0
# n 4
poly
0 0
1 0
1 1
0 1
segments 2
-1 0.5 2 0.5
-1 2 2 2
"""


def test_parse_handwritten_instance():
    inst = parse_instance(SQUARE_TEXT)
    assert inst.poly == polygon_new(UNIT_SQUARE)
    assert inst.seed == 0 and inst.meta == {}
    assert inst.segments == [((-1, 0.5), (2, 0.5)), ((-1, 2), (2, 2))]


def test_round_trip_generated():
    inst = gen_instance(GenConfig(n=9, count=300, seed=123, target_hit_pct=40))
    buf = io.StringIO()
    write_instance(inst, buf)
    back = read_instance(io.StringIO(buf.getvalue()))
    assert back == inst
    assert format_instance(back) == buf.getvalue()


finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=50)
@given(st.lists(st.tuples(finite, finite, finite, finite), min_size=1, max_size=20),
       st.one_of(st.none(), st.integers(0, 2 ** 64 - 1)))
def test_round_trip_property(segs, seed):
    poly = polygon_new([(0.1, 0.2), (1.3, 0.1), (0.7, 1.9)])
    inst = Instance(poly, [(Point2(a, b), Point2(c, d)) for a, b, c, d in segs], seed)
    assert parse_instance(format_instance(inst)) == inst


@pytest.mark.parametrize("text", [
    "",
    "poly\n0 0\n",
    "# algo-instance v1\npoly\n0 0\n1 0\n0 1\nsegments 0\n",
    "# algo-instance v1\n# n 3\npoly\n0 0\n1 0\nsegments 0\n",
    "# algo-instance v1\n# n 3\npoly\n0 0\n0 1\n1 0\nsegments 0\n",
    "# algo-instance v1\n# n 3\npoly\n0 0\n1 0\n0 1\nsegments 2\n0 0 1 1\n",
    "# algo-instance v1\n# n 3\npoly\n0 0\n1 0\n0 x\nsegments 0\n",
    "# algo-instance v1\n# n three\npoly\n",
])
def test_malformed_instances(text):
    with pytest.raises(FormatError):
        parse_instance(text)


def test_result_records():
    a, b = (-1.0, 0.5), (2.0, 0.5)
    line = format_result(0, a, b, Cross(1 / 3, 2 / 3))
    parts = line.split()
    assert parts[:2] == ["0", "hit"]
    assert [float(p) for p in parts[2:]] == pytest.approx([1 / 3, 2 / 3, 0, 0.5, 1, 0.5])
    assert format_result(3, a, b, MISS) == "3 miss"


def test_results_round_trip():
    segs = [((-1.0, 0.5), (2.0, 0.5)), ((-1.0, 2.0), (2.0, 2.0))]
    res = [Cross(1 / 3, 2 / 3), MISS]
    buf = io.StringIO()
    write_results(buf, segs, res)
    assert parse_results(buf.getvalue()) == res
    with pytest.raises(FormatError):
        parse_results("1 miss\n")
    with pytest.raises(FormatError):
        parse_results("0 hit 1 2\n")
