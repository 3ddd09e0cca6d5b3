"""Good semigroups of N^n represented by their finite set of small elements.

A good semigroup S is determined by its conductor C (least point with
C + N^n inside S) and Small(S) = {a in S : a <= C}.  A point p belongs to S
exactly when min(p, C) is a small element, which is what every membership
test below reduces to.  The semigroup reconstructed from an arbitrary
candidate set X with top element T is

    X, plus the ray a + t*e_j for every a in X with a_j = T_j, plus T + N^n,

and validation checks whether that reconstruction is closed under meets and
sums, has the coordinate witness property, and uses a minimal conductor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DimensionMismatch,
    NotGoodSemigroup,
    UnsupportedDimension,
)
from .lattice import Point, meet
from .numerical import NumericalSemigroup, ns_from_small

__all__ = [
    "SmallSet",
    "small_set",
    "GoodSemigroup",
    "good_semigroup",
    "Violation",
    "ValidationReport",
    "closure_small",
    "normalize_conductor",
    "validate_small_set",
    "gs_from_generators",
    "gs_contains",
    "gs_subset",
    "gs_equal",
    "borders",
    "border_axes",
    "is_local",
    "maximal_elements",
    "delta_fiber_nonempty",
    "projection",
]


@dataclass(frozen=True)
class SmallSet:
    """A finite candidate set of small elements with its top element.

    Type level invariants: points are deduplicated, lexicographically sorted,
    within [0, top], of equal dimension, and top itself is present.  Whether
    the set actually describes a good semigroup (or a good ideal) is decided
    by the validators, not here.
    """

    points: tuple
    top: Point

    def __post_init__(self):
        if not self.points:
            raise ValueError("empty point set")
        n = self.top.dim
        for p in self.points:
            if p.dim != n:
                raise DimensionMismatch("point %r vs top %r" % (p, self.top))
            if any(x < 0 for x in p):
                raise ValueError("point %r has a negative coordinate" % (p,))
            if any(x > t for x, t in zip(p, self.top)):
                raise ValueError("point %r exceeds the top %r" % (p, self.top))
        if tuple(self.top) not in set(map(tuple, self.points)):
            raise ValueError("top %r is not in the point set" % (self.top,))

    @cached_property
    def point_set(self) -> frozenset:
        return frozenset(map(tuple, self.points))

    @property
    def dim(self) -> int:
        return self.top.dim

    def contains(self, p) -> bool:
        """Membership in the reconstructed semigroup, not just the finite set."""
        if len(p) != self.dim:
            raise DimensionMismatch("point %r vs top %r" % (p, self.top))
        if any(x < 0 for x in p):
            return False
        clamped = tuple(min(x, t) for x, t in zip(p, self.top))
        return clamped in self.point_set


def small_set(points, top=None) -> SmallSet:
    """Normalize raw point data into a SmallSet.

    With top omitted, the componentwise maximum of the points is used; it
    must itself be one of the points.
    """
    pts = sorted(set(Point(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    if top is None:
        top = Point(max(x) for x in zip(*pts))
    else:
        top = Point(top)
    return SmallSet(tuple(pts), top)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    axis: int | None
    detail: str

    def __str__(self):
        pts = ", ".join(str(tuple(p)) for p in self.witness)
        where = "" if self.axis is None else " (axis %d)" % (self.axis,)
        return "%s%s: %s [%s]" % (self.axiom, where, self.detail, pts)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class GoodSemigroup:
    """A validated good semigroup of N^n."""

    small: SmallSet

    @property
    def conductor(self) -> Point:
        return self.small.top

    @property
    def dim(self) -> int:
        return self.small.dim

    def __contains__(self, p):
        return gs_contains(self, p)

    @cached_property
    def _fiber_index(self):
        # n = 2 only: per axis, fiber value -> (max other coordinate,
        # whether some fiber member touches the top on the other axis)
        top = self.small.top
        idx = []
        for i in (0, 1):
            j = 1 - i
            m = {}
            for p in self.small.points:
                cur = m.get(p[i], -1)
                if p[j] > cur:
                    m[p[i]] = p[j]
            idx.append({v: (mx, mx == top[j]) for v, mx in m.items()})
        return idx


def fiber_reaches(s: GoodSemigroup, axis: int, value: int, floor: int) -> bool:
    """Does some member of s have exactly `value` on `axis` and at least
    `floor` on the other axis?  Rays from the border and the conductor cone
    count as members.  n = 2 only."""
    if s.dim != 2:
        raise UnsupportedDimension("fiber queries are implemented for n = 2 only")
    if value < 0:
        return False
    if value >= s.small.top[axis]:
        return True
    entry = s._fiber_index[axis].get(value)
    if entry is None:
        return False
    best, touches_top = entry
    return touches_top or best >= floor


def closure_small(gens, conductor) -> SmallSet:
    """Truncated closure of the generators under sums and meets.

    Returns the fixpoint of X -> X union {min(a+b, C)} union {min(a, b)}
    seeded with {0, C} and the truncated generators.  The result is the small
    element candidate set of the least good semigroup containing the
    generators when one exists; validation decides that separately.
    """
    top = Point(conductor)
    n = top.dim
    if any(t < 0 for t in top):
        raise ValueError("conductor must be in N^n")
    seeds = {(0,) * n, tuple(top)}
    for g in gens:
        g = Point(g)
        if g.dim != n:
            raise DimensionMismatch("generator %r vs conductor %r" % (g, top))
        if any(x < 0 for x in g):
            raise ValueError("generator %r has a negative coordinate" % (g,))
        seeds.add(tuple(min(x, t) for x, t in zip(g, top)))
    cap = tuple(top)
    pts = set()
    queue = list(seeds)
    while queue:
        p = queue.pop()
        if p in pts:
            continue
        pts.add(p)
        for q in list(pts):
            m = tuple(map(min, p, q))
            if m not in pts:
                queue.append(m)
            s = tuple(min(a + b, t) for a, b, t in zip(p, q, cap))
            if s not in pts:
                queue.append(s)
    return SmallSet(tuple(sorted(Point(p) for p in pts)), top)


def normalize_conductor(small: SmallSet) -> SmallSet:
    """Lower the top as far as the filled corner box allows, then re-truncate.

    A candidate conductor m is usable when every lattice point of [m, top] is
    present.  For meet closed sets the usable region is itself a box, so
    per axis descent finds its minimum.  Points are then replaced by their
    meets with the new top.
    """
    pts = small.point_set
    top = tuple(small.top)
    n = len(top)
    m = list(top)

    def slab_filled(axis):
        # the layer at m[axis] - 1 between m and top on the other axes
        ranges = []
        for j in range(n):
            if j == axis:
                ranges.append((m[axis] - 1,))
            else:
                ranges.append(range(m[j], top[j] + 1))
        return all(p in pts for p in itertools.product(*ranges))

    changed = True
    while changed:
        changed = False
        for i in range(n):
            while m[i] > 0 and slab_filled(i):
                m[i] -= 1
                changed = True
    new_top = Point(m)
    new_pts = sorted(set(meet(p, new_top) for p in small.points))
    return SmallSet(tuple(new_pts), new_top)


def _witness_search(point_set, top, exact, floor, axis, strict_above):
    """Is there x in the point set with x[axis] > strict_above (or x[axis] at
    the top, where the outgoing ray supplies arbitrarily large values), exact
    coordinates on `exact` axes and at least `floor` elsewhere?"""
    for x in point_set:
        ok = True
        for j, v in exact:
            if x[j] != v:
                ok = False
                break
        if not ok:
            continue
        for j, v in floor:
            if x[j] < v:
                ok = False
                break
        if not ok:
            continue
        if x[axis] > strict_above or x[axis] == top[axis]:
            return True
    return False


def _coordinate_witness_violations(small: SmallSet, stop_after_first=True):
    """Violations of the shared coordinate axiom.

    For distinct members a, b with a_i = b_i there must be a member c with
    c_i strictly larger, c_j = min(a_j, b_j) on axes where a_j != b_j, and
    c_j >= min(a_j, b_j) elsewhere.  Pairs with a = b are always satisfied
    by the conductor ray, so only distinct pairs are scanned.  For n = 2 the
    condition collapses to a per point test: a point a that is not the top of
    its axis-i fiber needs some x with x_j = a_j and x_i > a_i (or x_i at the
    top, whose ray provides the rest).
    """
    pts = small.points
    top = tuple(small.top)
    n = len(top)
    out = []
    if n == 2:
        fiber_max = [{}, {}]  # per axis: shared value -> max other coordinate
        for p in pts:
            for i in (0, 1):
                j = 1 - i
                cur = fiber_max[i].get(p[i])
                if cur is None or p[j] > cur:
                    fiber_max[i][p[i]] = p[j]
        for a in pts:
            for i in (0, 1):
                j = 1 - i
                if fiber_max[i][a[i]] <= a[j]:
                    continue  # a is the top of its fiber; nothing shares below it
                reach = fiber_max[j].get(a[j], -1)
                if reach > a[i] or reach == top[i]:
                    continue
                mate = min(
                    b for b in pts if b[i] == a[i] and b[j] > a[j]
                )
                out.append(
                    Violation(
                        "witness",
                        (a, mate),
                        i,
                        "members share coordinate %d but no member exceeds "
                        "them there above their meet" % (i,),
                    )
                )
                if stop_after_first:
                    return out
        return out
    point_list = list(pts)
    for ai, a in enumerate(point_list):
        for b in point_list[ai + 1 :]:
            for i in range(n):
                if a[i] != b[i]:
                    continue
                exact = []
                floor = []
                for j in range(n):
                    if j == i:
                        continue
                    mj = min(a[j], b[j])
                    if a[j] != b[j]:
                        exact.append((j, mj))
                    else:
                        floor.append((j, mj))
                if not _witness_search(point_list, top, exact, floor, i, a[i]):
                    out.append(
                        Violation(
                            "witness",
                            (a, b),
                            i,
                            "members share coordinate %d but no member exceeds "
                            "them there above their meet" % (i,),
                        )
                    )
                    if stop_after_first:
                        return out
    return out


def validate_small_set(small: SmallSet) -> ValidationReport:
    """Check the good semigroup axioms on a candidate small set.

    Reports at most one witness per violated axiom: presence of 0, meet
    closure, closure under (truncated) addition, the shared coordinate
    witness property, and minimality of the conductor.
    """
    pts = small.points
    pset = small.point_set
    top = tuple(small.top)
    n = len(top)
    violations = []

    if (0,) * n not in pset:
        violations.append(Violation("zero", (), None, "0 is not a member"))

    done = False
    for a in pts:
        for b in pts:
            m = tuple(map(min, a, b))
            if m not in pset:
                violations.append(
                    Violation("meet", (a, b), None, "componentwise minimum is missing")
                )
                done = True
                break
        if done:
            break

    done = False
    for a in pts:
        for b in pts:
            s = tuple(min(x + y, t) for x, y, t in zip(a, b, top))
            if s not in pset:
                violations.append(
                    Violation("sum", (a, b), None, "truncated sum is missing")
                )
                done = True
                break
        if done:
            break

    violations.extend(_coordinate_witness_violations(small))

    for i in range(n):
        if top[i] == 0:
            continue
        lower = tuple(t - 1 if j == i else t for j, t in enumerate(top))
        if lower in pset:
            violations.append(
                Violation(
                    "conductor",
                    (Point(lower),),
                    i,
                    "conductor is not minimal: it can be lowered on this axis",
                )
            )

    return ValidationReport(not violations, tuple(violations))


def good_semigroup(small: SmallSet) -> GoodSemigroup:
    """Validate a small set and wrap it; raises NotGoodSemigroup on failure."""
    report = validate_small_set(small)
    if not report.ok:
        raise NotGoodSemigroup(report, small)
    return GoodSemigroup(small)


def gs_from_generators(gens, conductor) -> GoodSemigroup:
    """Least good semigroup containing the generators, truncated at conductor.

    The closure is computed, the conductor lowered to its minimal usable
    value, and the result validated.  The only axiom the closure can still
    violate is the coordinate witness property; the raised NotGoodSemigroup
    carries the offending truncated closure for inspection.
    """
    closed = normalize_conductor(closure_small(gens, conductor))
    return good_semigroup(closed)


def gs_contains(s: GoodSemigroup, p) -> bool:
    """Membership of an integer point in the semigroup."""
    return s.small.contains(Point(p))


def gs_subset(s: GoodSemigroup, t: GoodSemigroup) -> bool:
    """Whether s is contained in t.

    Both semigroups agree with their periodic continuation past the join of
    the conductors, so containment is decided on the box reaching one step
    beyond it.
    """
    if s.dim != t.dim:
        raise DimensionMismatch("dimension %d vs %d" % (s.dim, t.dim))
    bound = tuple(
        max(a, b) + 1 for a, b in zip(s.small.top, t.small.top)
    )
    ssmall = s.small
    tsmall = t.small
    for p in itertools.product(*(range(b + 1) for b in bound)):
        if ssmall.contains(p) and not tsmall.contains(p):
            return False
    return True


def gs_equal(s: GoodSemigroup, t: GoodSemigroup) -> bool:
    return s.small == t.small


def border_axes(small: SmallSet, p) -> frozenset:
    """Axes on which p touches the top."""
    return frozenset(i for i, (x, t) in enumerate(zip(p, small.top)) if x == t)


def borders(s: GoodSemigroup, axes) -> tuple:
    """Small elements whose coordinates on the given axes equal the conductor's."""
    axes = frozenset(axes)
    top = s.small.top
    for i in axes:
        if not 0 <= i < s.dim:
            raise IndexError("axis %d out of range" % (i,))
    return tuple(
        p for p in s.small.points if all(p[i] == top[i] for i in axes)
    )


def is_local(s: GoodSemigroup) -> bool:
    """True when 0 is the only member with a zero coordinate."""
    if s.dim == 1:
        return True
    if all(t == 0 for t in s.small.top):
        return False  # the whole lattice: every axis point is a member
    for p in s.small.points:
        if any(p) and min(p) == 0:
            return False
    return True


def _require_dim2(s: GoodSemigroup, op: str):
    if s.dim != 2:
        raise UnsupportedDimension("%s is implemented for n = 2 only" % (op,))


def delta_fiber_nonempty(s: GoodSemigroup, x, i: int) -> bool:
    """Does some member share coordinate i with x and strictly dominate it
    on the other axis?  x may be any integer point."""
    _require_dim2(s, "delta_fiber_nonempty")
    if i not in (0, 1):
        raise IndexError("axis %d out of range" % (i,))
    x = tuple(x)
    # strict domination on the other axis means reaching w + 1 there
    return fiber_reaches(s, i, x[i], x[1 - i] + 1)


def maximal_elements(s: GoodSemigroup) -> tuple:
    """Small elements not dominated inside the semigroup along any single axis."""
    _require_dim2(s, "maximal_elements")
    return tuple(
        p
        for p in s.small.points
        if not delta_fiber_nonempty(s, p, 0) and not delta_fiber_nonempty(s, p, 1)
    )


def projection(s: GoodSemigroup, i: int) -> NumericalSemigroup:
    """Coordinate image of the semigroup, a numerical semigroup."""
    _require_dim2(s, "projection")
    if i not in (0, 1):
        raise IndexError("axis %d out of range" % (i,))
    ci = s.small.top[i]
    values = set(p[i] for p in s.small.points)
    # members below top[i] are exactly the coordinates of small elements;
    # everything from top[i] on is a member via the conductor cone
    conductor = ci
    while conductor > 0 and conductor - 1 in values:
        conductor -= 1
    small = sorted(v for v in values if v <= conductor)
    return ns_from_small(small, conductor)
