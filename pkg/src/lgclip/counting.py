"""Instrumented scalar for counting floating point operations.

A :class:`Counted` wraps a float and bumps the counters of the
:class:`OpCounts` it carries on every ``+ - * /`` and comparison.  The value
computed is exactly the float computation, so results stay bit-identical to
an uninstrumented run.  Assignments cannot be observed through operator
overloading; the clippers report the stores the cost model cares about via
:func:`tally_assign`.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass


@dataclass
class OpCounts:
    assign: int = 0
    cmp: int = 0
    addsub: int = 0
    mul: int = 0
    div: int = 0

    def total(self) -> int:
        return self.assign + self.cmp + self.addsub + self.mul + self.div

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return astuple(self)


def _v(o):
    return o.v if type(o) is Counted else o


class Counted:
    __slots__ = ("v", "ctx")

    def __init__(self, v: float, ctx: OpCounts):
        self.v = float(v)
        self.ctx = ctx

    def __repr__(self):
        return f"Counted({self.v!r})"

    def __float__(self):
        return self.v

    def __add__(self, o):
        self.ctx.addsub += 1
        return Counted(self.v + _v(o), self.ctx)

    def __radd__(self, o):
        self.ctx.addsub += 1
        return Counted(_v(o) + self.v, self.ctx)

    def __sub__(self, o):
        self.ctx.addsub += 1
        return Counted(self.v - _v(o), self.ctx)

    def __rsub__(self, o):
        self.ctx.addsub += 1
        return Counted(_v(o) - self.v, self.ctx)

    def __mul__(self, o):
        self.ctx.mul += 1
        return Counted(self.v * _v(o), self.ctx)

    def __rmul__(self, o):
        self.ctx.mul += 1
        return Counted(_v(o) * self.v, self.ctx)

    def __truediv__(self, o):
        self.ctx.div += 1
        return Counted(self.v / _v(o), self.ctx)

    def __rtruediv__(self, o):
        self.ctx.div += 1
        return Counted(_v(o) / self.v, self.ctx)

    def __neg__(self):
        self.ctx.addsub += 1
        return Counted(-self.v, self.ctx)

    # sign-bit manipulation, not an arithmetic operation
    def __abs__(self):
        return Counted(abs(self.v), self.ctx)

    def __lt__(self, o):
        self.ctx.cmp += 1
        return self.v < _v(o)

    def __le__(self, o):
        self.ctx.cmp += 1
        return self.v <= _v(o)

    def __gt__(self, o):
        self.ctx.cmp += 1
        return self.v > _v(o)

    def __ge__(self, o):
        self.ctx.cmp += 1
        return self.v >= _v(o)

    def __eq__(self, o):
        self.ctx.cmp += 1
        return self.v == _v(o)

    def __ne__(self, o):
        self.ctx.cmp += 1
        return self.v != _v(o)

    __hash__ = None


def tally_assign(value, k: int = 1) -> None:
    """Record ``k`` stores of a real value (no-op for plain floats)."""
    if type(value) is Counted:
        value.ctx.assign += k
