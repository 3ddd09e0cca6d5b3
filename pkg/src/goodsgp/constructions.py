"""Ways to build good semigroups of N^2 from one dimensional data.

Each construction enumerates its membership rule on the conductor box,
normalizes the conductor defensively, and runs full validation, so a
returned object is always a genuine good semigroup.
"""

from __future__ import annotations

import itertools

from .errors import ConstructionError
from .lattice import Point
from .numerical import (
    NumericalIdeal,
    NumericalSemigroup,
    ideal_contains,
    ideal_preimage_scale,
    ns_contains,
)
from .semigroup import (
    GoodSemigroup,
    SmallSet,
    good_semigroup,
    normalize_conductor,
)

__all__ = [
    "duplication",
    "amalgamation",
    "cartesian",
    "from_maximal_elements",
]


def _from_membership(member, top) -> GoodSemigroup:
    top = Point(top)
    pts = [
        Point(p)
        for p in itertools.product(*(range(t + 1) for t in top))
        if member(p)
    ]
    small = normalize_conductor(SmallSet(tuple(sorted(pts)), top))
    return good_semigroup(small)


def duplication(s: NumericalSemigroup, e: NumericalIdeal) -> GoodSemigroup:
    """The good semigroup {(a, a) : a in s} joined with e x e, closed under meets.

    Requires e to be an ideal of s contained in s.  A pair (x, y) with x != y
    belongs exactly when min(x, y) is in e and max(x, y) is in s; the
    conductor is (c, c) for c the conductor of e.
    """
    if e.ambient != s:
        raise ConstructionError("the ideal is not an ideal of the given semigroup")
    for v in e.small_elements:
        if not ns_contains(s, v):
            raise ConstructionError("ideal element %d is outside the semigroup" % (v,))
    for v in range(e.conductor, s.conductor):
        if not ns_contains(s, v):
            raise ConstructionError("ideal element %d is outside the semigroup" % (v,))

    def member(p):
        x, y = p
        if x == y:
            return ns_contains(s, x)
        return ns_contains(s, max(x, y)) and ideal_contains(e, min(x, y))

    return _from_membership(member, (e.conductor, e.conductor))


def amalgamation(
    s: NumericalSemigroup, t: NumericalSemigroup, e: NumericalIdeal, k: int
) -> GoodSemigroup:
    """The good semigroup generated by {(a, k*a) : a in s} and the preimage
    pairing with e, closed under meets.

    e must be an ideal of t and k*s must land inside t.  Writing g for
    multiplication by k and E' = {x in s : k*x in e}, the members are

        (x, k*x)            for x in s,
        E' x e,
        (x, y) with x in s, y in e, y < k*x,
        (x, k*u) with x in E', u in s, u >= x,

    and the conductor is (conductor of E', conductor of e).
    """
    if k < 1:
        raise ConstructionError("the scale factor must be a positive integer")
    if e.ambient != t:
        raise ConstructionError("the ideal is not an ideal of the target semigroup")
    top_check = max(s.conductor, -(-t.conductor // k))
    for v in list(s.small_elements) + list(range(s.conductor, top_check + 1)):
        if not ns_contains(t, k * v):
            raise ConstructionError(
                "%d times %d falls outside the target semigroup" % (k, v)
            )
    ginv = ideal_preimage_scale(e, k, s)
    top = (ginv.conductor, e.conductor)

    def member(p):
        x, y = p
        if ns_contains(s, x) and y == k * x:
            return True
        if ideal_contains(ginv, x) and ideal_contains(e, y):
            return True
        if ns_contains(s, x) and ideal_contains(e, y) and y < k * x:
            return True
        if (
            ideal_contains(ginv, x)
            and y % k == 0
            and ns_contains(s, y // k)
            and y // k >= x
        ):
            return True
        return False

    return _from_membership(member, top)


def cartesian(s1: NumericalSemigroup, s2: NumericalSemigroup) -> GoodSemigroup:
    """The product semigroup, with conductor (c1, c2)."""

    def member(p):
        return ns_contains(s1, p[0]) and ns_contains(s2, p[1])

    return _from_membership(member, (s1.conductor, s2.conductor))


def from_maximal_elements(
    s1: NumericalSemigroup, s2: NumericalSemigroup, maximals
) -> GoodSemigroup:
    """The largest subset of s1 x s2 admitting the given points as complete
    maximal elements: pairs sharing a coordinate with a listed point and
    strictly exceeding it on the other axis are removed.

    Whether the survivor set really is a good semigroup depends on the list;
    validation raises NotGoodSemigroup when it is not.
    """
    mpts = [Point(a) for a in maximals]
    for a in mpts:
        if a.dim != 2:
            raise ConstructionError("maximal elements must be points of N^2")
        if not (ns_contains(s1, a[0]) and ns_contains(s2, a[1])):
            raise ConstructionError(
                "listed point %s is outside the product" % (tuple(a),)
            )
    if not mpts:
        return cartesian(s1, s2)
    top = (
        max(s1.conductor, 1 + max(a[0] for a in mpts)),
        max(s2.conductor, 1 + max(a[1] for a in mpts)),
    )

    def member(p):
        x, y = p
        if not (ns_contains(s1, x) and ns_contains(s2, y)):
            return False
        for a in mpts:
            if x == a[0] and y > a[1]:
                return False
            if y == a[1] and x > a[0]:
                return False
        return True

    return _from_membership(member, top)
