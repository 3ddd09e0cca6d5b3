"""Points of Z^n with the componentwise partial order, plus axis-aligned regions.

Python compares tuples lexicographically.  That total order is what we use for
deterministic sorting of output, but it is NOT the semigroup order.  All order
tests in this package go through leq/lt/geq below, which compare componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch

__all__ = [
    "Point",
    "meet",
    "join",
    "leq",
    "lt",
    "geq",
    "add_trunc",
    "zero",
    "ones",
    "unit",
    "Region",
    "delta",
    "delta_bar",
    "in_region",
]


class Point(tuple):
    """An immutable point of Z^n.  Addition and subtraction are componentwise."""

    def __new__(cls, coords):
        p = super().__new__(cls, (int(c) for c in coords))
        if not p:
            raise ValueError("a point needs at least one coordinate")
        return p

    @property
    def dim(self) -> int:
        return len(self)

    def __add__(self, other):
        _check_dims(self, other)
        return Point(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        _check_dims(self, other)
        return Point(a - b for a, b in zip(self, other))

    def __repr__(self):
        return "Point(%s)" % (tuple(self),)


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(
            "dimension mismatch: %d vs %d" % (len(a), len(b))
        )


def meet(a: Point, b: Point) -> Point:
    """Componentwise minimum (infimum in the product order)."""
    _check_dims(a, b)
    return Point(min(x, y) for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    """Componentwise maximum (supremum in the product order)."""
    _check_dims(a, b)
    return Point(max(x, y) for x, y in zip(a, b))


def leq(a, b) -> bool:
    """a <= b in every coordinate."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a, b) -> bool:
    """a <= b and a != b (strict in at least one coordinate)."""
    _check_dims(a, b)
    return leq(a, b) and tuple(a) != tuple(b)


def geq(a, b) -> bool:
    return leq(b, a)


def add_trunc(a: Point, b: Point, cap: Point) -> Point:
    """(a + b) truncated componentwise at cap."""
    _check_dims(a, b)
    _check_dims(a, cap)
    return Point(min(x + y, c) for x, y, c in zip(a, b, cap))


def zero(n: int) -> Point:
    return Point((0,) * n)


def ones(n: int) -> Point:
    return Point((1,) * n)


def unit(n: int, i: int) -> Point:
    """The i-th standard basis vector of Z^n."""
    if not 0 <= i < n:
        raise IndexError("axis %d out of range for dimension %d" % (i, n))
    return Point(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class Region:
    """An axis-aligned region anchored at a base point.

    kind "delta":     coordinates in axes equal the base, all others strictly larger.
    kind "delta_bar": coordinates in axes equal the base, all others weakly larger.

    With axes = None the region is the union over all singleton axis sets,
    which is the usual unadorned form.
    """

    kind: str
    base: Point
    axes: frozenset | None = None

    def __post_init__(self):
        if self.kind not in ("delta", "delta_bar"):
            raise ValueError("unknown region kind %r" % (self.kind,))
        if self.axes is not None:
            object.__setattr__(self, "axes", frozenset(self.axes))
            for i in self.axes:
                if not 0 <= i < self.base.dim:
                    raise IndexError("axis %d out of range" % (i,))


def delta(base: Point, axes=None) -> Region:
    return Region("delta", base, None if axes is None else frozenset(axes))


def delta_bar(base: Point, axes=None) -> Region:
    return Region("delta_bar", base, None if axes is None else frozenset(axes))


def _in_fixed_axes(p, base, axes, strict):
    for i in range(base.dim):
        if i in axes:
            if p[i] != base[i]:
                return False
        elif strict:
            if p[i] <= base[i]:
                return False
        else:
            if p[i] < base[i]:
                return False
    return True


def in_region(p: Point, region: Region) -> bool:
    """Decide membership of p in the region."""
    _check_dims(p, region.base)
    strict = region.kind == "delta"
    if region.axes is not None:
        return _in_fixed_axes(p, region.base, region.axes, strict)
    return any(
        _in_fixed_axes(p, region.base, frozenset((i,)), strict)
        for i in range(region.base.dim)
    )
