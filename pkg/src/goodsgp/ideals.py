"""Good relative ideals of a good semigroup.

A good relative ideal E of a good semigroup S is a nonempty subset of N^n
with E + S contained in E that satisfies the meet closure and shared
coordinate axioms and has a conductor.  Like semigroups, ideals are stored
through their small elements: the members below the ideal conductor, plus
the reconstruction rays and cone implied by that data.

Generating means generating the small data.  For a set H of points, [H] is
the smallest meet closed, ambient absorbing superset of H, and a set G
generates the ideal E exactly when the clamp of [G] into [0, C(E)]
reproduces Small(E).  The clamp level matters: the same generators can
clamp to valid data at more than one level, so each constructor states
which level it uses.  gi_from_generators clamps at the natural corner
min(H) + C(S), the conductor bound every [H] satisfies, and then lowers it
while the box data stays exact; the canonical ideal clamps at the ambient
conductor, the level its construction pins in advance.  Either way the
reconstruction from the data is authoritative: it can be a strict superset
of [H], because a clamped point sitting on the border of the box emits a
ray whether or not the fiber of [H] through it climbs forever.  The
canonical ideal relies on this: its conductor equals the ambient one even
though interior columns of the generated set may stop.

Clamped membership below the corner min(H) + C(S) has a direct
characterization: p belongs exactly when, for every axis i with p_i below
the corner, some generator h admits a member x of S with x_i = p_i - h_i
and x_j >= p_j - h_j elsewhere.  Sufficiency: such witnesses dominate p,
agree with it on their axis, and meet to p inside the cone of the corner.
Necessity: members are meets of points of H + S, and a meet realizes each
coordinate through one of its arguments.  On the border the floor test
absorbs the clamp.  Finalization lowers the corner to the minimal
conductor of the data and validates the ideal axioms; failures raise
NotGoodIdeal with a witness report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce

from .errors import (
    DimensionMismatch,
    GoodSgpError,
    NonLocalError,
    NotGoodIdeal,
    UnsupportedDimension,
)
from .lattice import Point, geq, join, meet, ones
from .semigroup import (
    GoodSemigroup,
    SmallSet,
    ValidationReport,
    Violation,
    _coordinate_witness_violations,
    _require_dim2,
    fiber_reaches,
    is_local,
    maximal_elements,
    normalize_conductor,
    projection,
)

__all__ = [
    "GoodRelativeIdeal",
    "validate_ideal_small_set",
    "good_ideal",
    "gi_contains",
    "gi_from_generators",
    "tail_ideal",
    "is_stable",
    "canonical_generators",
    "canonical_ideal",
    "is_symmetric",
    "sum_ideals",
]


@dataclass(frozen=True)
class GoodRelativeIdeal:
    """A validated good relative ideal, stored by its small elements."""

    ambient: GoodSemigroup
    small: SmallSet

    @property
    def conductor(self) -> Point:
        return self.small.top

    @property
    def dim(self) -> int:
        return self.small.dim

    @cached_property
    def min_element(self) -> Point:
        return reduce(meet, self.small.points)

    def __contains__(self, p):
        return gi_contains(self, p)


def validate_ideal_small_set(ambient: GoodSemigroup, small: SmallSet) -> ValidationReport:
    """Check the good ideal axioms on a candidate small set.

    Reports at most one witness per violated axiom: meet closure, the shared
    coordinate witness property, absorption of ambient members, and
    minimality of the conductor.  There is no zero or sum closure axiom for
    ideals.
    """
    if ambient.dim != small.dim:
        raise DimensionMismatch(
            "ideal data %r does not match an ambient of dimension %d"
            % (small.top, ambient.dim)
        )
    pts = small.points
    pset = small.point_set
    top = tuple(small.top)
    n = len(top)
    violations = []

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

    violations.extend(_coordinate_witness_violations(small))

    # absorption: adding any ambient member must stay inside.  Ambient
    # representatives are scanned up to the join of both conductors; beyond
    # it every sum clamps to one already checked.
    bound = join(small.top, ambient.small.top)
    done = False
    for q in itertools.product(*(range(b + 1) for b in bound)):
        if not ambient.small.contains(q):
            continue
        for e in pts:
            t = tuple(min(x + y, c) for x, y, c in zip(e, q, top))
            if t not in pset:
                violations.append(
                    Violation(
                        "absorption",
                        (e, Point(q)),
                        None,
                        "translate by an ambient member leaves the ideal",
                    )
                )
                done = True
                break
        if done:
            break

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


def good_ideal(ambient: GoodSemigroup, small: SmallSet) -> GoodRelativeIdeal:
    """Validate ideal data and wrap it; raises NotGoodIdeal on failure."""
    report = validate_ideal_small_set(ambient, small)
    if not report.ok:
        raise NotGoodIdeal(report, small)
    return GoodRelativeIdeal(ambient, small)


def gi_contains(e: GoodRelativeIdeal, p) -> bool:
    """Membership of an integer point in the ideal."""
    return e.small.contains(tuple(p))


def _finalize_ideal(s: GoodSemigroup, pts_set, corner: Point) -> GoodRelativeIdeal:
    """Wrap exact clamped data: normalize the conductor, then validate.

    pts_set must be exactly the clamp into [0, corner] of a meet closed,
    ambient absorbing set whose conductor is at most corner.  The corner is
    lowered to the minimal conductor of the data and the result validated;
    bad data raises NotGoodIdeal.
    """
    data = tuple(sorted(Point(p) for p in pts_set))
    small = normalize_conductor(SmallSet(data, corner))
    return good_ideal(s, small)


def _clamped_closure_points(s: GoodSemigroup, gens, corner: Point) -> set:
    """Points of the box [0, corner] lying in the clamp of [gens] there.

    [gens] is the meet closure of gens + S.  A box point p belongs to the
    clamp exactly when, for every axis i with p_i below the corner, some
    generator h admits an ambient member x with x_i = p_i - h_i and
    x_j >= p_j - h_j on the other axis: such witnesses agree with p on
    their axis and dominate it elsewhere, and a meet of closure elements
    realizes each coordinate through one of them.  Axes pinned at the
    corner need no witness, which is what absorbs the clamp.  Generators
    past corner + 1 on an axis act exactly like their clamp there, so they
    are deduplicated after clamping.
    """
    cap = corner + ones(2)
    cands = sorted(set(meet(h, cap) for h in gens))

    def member(p):
        for i in (0, 1):
            if p[i] == corner[i]:
                continue
            j = 1 - i
            if not any(
                fiber_reaches(s, i, p[i] - h[i], p[j] - h[j]) for h in cands
            ):
                return False
        return True

    return {
        p
        for p in itertools.product(range(corner[0] + 1), range(corner[1] + 1))
        if member(p)
    }


def _check_ideal_generators(s: GoodSemigroup, hgens) -> list:
    if s.dim != 2:
        raise UnsupportedDimension("ideal generation is implemented for n = 2 only")
    gens = [Point(h) for h in hgens]
    if not gens:
        raise ValueError("at least one generator is required")
    for h in gens:
        if h.dim != 2:
            raise DimensionMismatch("generator %r vs ambient dimension 2" % (h,))
        if any(x < 0 for x in h):
            raise ValueError("generator %r has a negative coordinate" % (h,))
    return gens


def gi_from_generators(s: GoodSemigroup, hgens) -> GoodRelativeIdeal:
    """The good ideal the generators describe, by their clamped closure.

    The small data is the clamp, into the corner box min(H) + C(S), of the
    smallest set containing every generator plus an ambient member and
    closed under componentwise minima; the corner is then lowered while the
    data between it and the old corner stays complete, and the result
    validated.  The corner is the natural conductor bound of the closure,
    and for a principal generator, for generators containing zero, and for
    the canonical families it is the exact conductor.  The clamp can fail
    the ideal axioms (most often the shared coordinate witness, when a
    fiber of the closure stops below the corner), in which case
    NotGoodIdeal carries the report.
    """
    gens = _check_ideal_generators(s, hgens)
    corner = reduce(meet, gens) + s.small.top
    pts_set = _clamped_closure_points(s, gens, corner)
    return _finalize_ideal(s, pts_set, corner)


def tail_ideal(s: GoodSemigroup, a) -> GoodRelativeIdeal:
    """The good relative ideal of all members of s lying above a."""
    a = Point(a)
    if a.dim != s.dim:
        raise DimensionMismatch("point %r vs ambient dimension %d" % (a, s.dim))
    top = join(a, s.small.top)
    pts = tuple(
        Point(p)
        for p in itertools.product(*(range(t + 1) for t in top))
        if geq(p, a) and s.small.contains(p)
    )
    return good_ideal(s, SmallSet(pts, top))


def _tail_small_points(s: GoodSemigroup, m) -> list:
    # small elements of the tail at a small element m; its conductor is the
    # ambient one, so no rescan of the box is needed
    return [p for p in s.small.points if geq(p, m)]


def _stable_from_data(pts, m, contains) -> bool:
    # e1 + e2 - m over small pairs decides stability: any larger pair clamps
    # to a small pair with the same membership outcome
    for idx, a in enumerate(pts):
        for b in pts[idx:]:
            q = tuple(x + y - z for x, y, z in zip(a, b, m))
            if not contains(q):
                return False
    return True


def is_stable(e: GoodRelativeIdeal) -> bool:
    """Is E + E = min(E) + E?"""
    return _stable_from_data(e.small.points, e.min_element, e.small.contains)


def canonical_generators(s: GoodSemigroup) -> tuple:
    """Generators of the canonical ideal read off the gaps and maximals.

    One family per axis built from the gaps of the coordinate projections,
    placed on the opposite border, plus the reflections of the maximal
    elements through conductor - 1.
    """
    _require_dim2(s, "canonical_generators")
    if not is_local(s):
        raise NonLocalError("the canonical ideal requires a local semigroup")
    top = s.small.top
    gamma = top - ones(2)
    fam = set()
    s1 = projection(s, 0)
    s2 = projection(s, 1)
    for x in range(1, s1.conductor):
        if x not in s1:
            fam.add(Point((gamma[0] - x, top[1])))
    for y in range(1, s2.conductor):
        if y not in s2:
            fam.add(Point((top[0], gamma[1] - y)))
    for alpha in maximal_elements(s):
        fam.add(gamma - alpha)
    return tuple(sorted(fam))


def canonical_ideal(s: GoodSemigroup) -> GoodRelativeIdeal:
    """The canonical ideal: points whose reflection through conductor - 1
    admits no member sharing a coordinate and dominating elsewhere.

    Built by clamping the closure of canonical_generators at the ambient
    conductor, which the construction guarantees is the ideal's own, then
    cross checked against the definitional scan; a disagreement raises
    instead of returning wrong data.
    """
    gens = _check_ideal_generators(s, canonical_generators(s))
    top = s.small.top
    pts = _clamped_closure_points(s, gens, top)
    small = SmallSet(tuple(sorted(Point(p) for p in pts)), top)
    from .oracle import brute_canonical

    ref = brute_canonical(s)
    if small.points != ref.points or tuple(small.top) != tuple(ref.top):
        raise GoodSgpError(
            "canonical ideal generators disagree with the definitional scan"
        )
    return good_ideal(s, small)


def is_symmetric(s: GoodSemigroup) -> bool:
    """Does the canonical ideal coincide with the semigroup itself?"""
    return canonical_ideal(s).small.points == s.small.points


def sum_ideals(e: GoodRelativeIdeal, f: GoodRelativeIdeal) -> GoodRelativeIdeal:
    """The sum ideal: the good ideal generated by pairwise sums of members.

    Full members matter, not just small elements: rays of a factor
    contribute sums its small elements cannot reach.  Inside the corner box
    C(E) + C(F) the sum set is exactly the clamped sums of in box members,
    and a meet realizes each coordinate through one pair, so closing the
    clamped sums under meets is exact there.
    """
    if e.ambient != f.ambient:
        raise ValueError("ideal sum requires a common ambient semigroup")
    s = e.ambient
    if s.dim != 2:
        raise UnsupportedDimension("ideal sums are implemented for n = 2 only")
    corner = e.small.top + f.small.top
    emem = [
        p
        for p in itertools.product(range(corner[0] + 1), range(corner[1] + 1))
        if e.small.contains(p)
    ]
    fmem = [
        q
        for q in itertools.product(range(corner[0] + 1), range(corner[1] + 1))
        if f.small.contains(q)
    ]
    pts = set()
    for p in emem:
        for q in fmem:
            pts.add((min(p[0] + q[0], corner[0]), min(p[1] + q[1], corner[1])))
    work = list(pts)
    while work:
        a = work.pop()
        fresh = []
        for b in pts:
            mpt = (min(a[0], b[0]), min(a[1], b[1]))
            if mpt not in pts:
                fresh.append(mpt)
        for mpt in fresh:
            pts.add(mpt)
            work.append(mpt)

    return _finalize_ideal(s, pts, corner)
