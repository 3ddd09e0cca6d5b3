"""Numerical semigroups (cofinite submonoids of N) and their relative ideals.

Everything here is finite data: a semigroup is stored as its conductor plus
the members below it, an ideal likewise.  These are the one dimensional
building blocks for the product constructions and the Arf closure chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "NumericalSemigroup",
    "NumericalIdeal",
    "ns_from_generators",
    "ns_from_small",
    "ns_contains",
    "ns_element_at",
    "ns_multiplicity",
    "ns_is_arf",
    "ns_arf_closure",
    "ns_tail",
    "ideal_from_generators",
    "ideal_contains",
    "ideal_preimage_scale",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of N.

    generators: the unique minimal generating set.
    small_elements: the members v with v <= conductor, sorted.
    conductor: least c with c + N contained in the semigroup.
    """

    generators: tuple
    small_elements: tuple
    conductor: int

    @cached_property
    def _members(self):
        return frozenset(self.small_elements)

    def __contains__(self, x):
        return ns_contains(self, x)


@dataclass(frozen=True)
class NumericalIdeal:
    """A relative ideal E of a numerical semigroup with E contained in N.

    Satisfies E + S subset of E.  Stored the same way as a semigroup: members
    up to the conductor, plus the minimal generators (over the ambient).
    """

    ambient: NumericalSemigroup
    generators: tuple
    small_elements: tuple
    conductor: int

    @cached_property
    def _members(self):
        return frozenset(self.small_elements)

    def __contains__(self, x):
        return ideal_contains(self, x)


def ns_contains(s: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        return False
    return x >= s.conductor or x in s._members


def ideal_contains(e: NumericalIdeal, x: int) -> bool:
    return x >= e.conductor or x in e._members


def _minimal_generators(member, conductor, multiplicity):
    # Every minimal generator is below conductor + multiplicity: anything
    # larger splits off one copy of the multiplicity.
    gens = []
    for v in range(1, conductor + multiplicity + 1):
        if not member(v):
            continue
        if any(member(w) and member(v - w) for w in range(1, v)):
            continue
        gens.append(v)
    return tuple(gens)


def ns_from_small(small, conductor) -> NumericalSemigroup:
    """Build a semigroup from its members below the conductor.

    The data must describe an actual numerical semigroup: 0 present, closed
    under addition (checked up to the conductor), conductor minimal.
    """
    small = tuple(sorted(set(int(v) for v in small)))
    conductor = int(conductor)
    if conductor < 0:
        raise ValueError("conductor must be nonnegative")
    if not small or small[0] != 0:
        raise ValueError("0 must be a member")
    if small[-1] != conductor or any(v > conductor for v in small):
        raise ValueError("small elements must end exactly at the conductor")
    members = set(small)

    def member(v):
        return v >= conductor or v in members

    for a in small:
        for b in small:
            if a <= b and not member(a + b):
                raise ValueError("not closed under addition: %d + %d" % (a, b))
    if conductor > 0 and member(conductor - 1):
        raise ValueError("conductor %d is not minimal" % (conductor,))
    mult = small[1] if len(small) > 1 else conductor + 1
    gens = _minimal_generators(member, conductor, mult)
    return NumericalSemigroup(gens, small, conductor)


def ns_from_generators(gens) -> NumericalSemigroup:
    """The numerical semigroup generated by gens (positive, gcd 1)."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise ValueError("generators must have gcd 1")
    # Frobenius number is below (min-1)(max-1), so this bound sees the tail.
    bound = (gens[0] - 1) * (gens[-1] - 1) + 1
    reach = bytearray(bound + 1)
    reach[0] = 1
    for v in range(1, bound + 1):
        for g in gens:
            if g > v:
                break
            if reach[v - g]:
                reach[v] = 1
                break
    conductor = 0
    for v in range(bound, -1, -1):
        if not reach[v]:
            conductor = v + 1
            break
    small = tuple(v for v in range(conductor + 1) if reach[v])
    return ns_from_small(small, conductor)


def ns_element_at(s: NumericalSemigroup, i: int) -> int:
    """The i-th member in increasing order, starting at index 0 (which is 0)."""
    if i < 0:
        raise IndexError("negative index")
    small = s.small_elements
    if i < len(small):
        return small[i]
    return s.conductor + (i - len(small) + 1)


def ns_multiplicity(s: NumericalSemigroup) -> int:
    """Least nonzero member."""
    return ns_element_at(s, 1)


def ns_is_arf(s: NumericalSemigroup) -> bool:
    """Whether b + c - a is a member for all members a <= b, a <= c.

    Triples with b or c past the conductor are automatic, so only small
    elements are scanned.
    """
    small = s.small_elements
    for ai, a in enumerate(small):
        for bi in range(ai, len(small)):
            b = small[bi]
            for ci in range(bi, len(small)):
                if not ns_contains(s, b + small[ci] - a):
                    return False
    return True


def ns_arf_closure(s: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest Arf semigroup containing s.

    Saturates b + c - a inside [0, conductor]: since b + c - a >= max(b, c),
    results outside the window only come from triples outside it, so the
    windowed fixpoint is exact.  The conductor can only shrink.
    """
    cap = s.conductor
    members = set(s.small_elements)
    changed = True
    while changed:
        changed = False
        snapshot = sorted(members)
        for ai, a in enumerate(snapshot):
            for bi in range(ai, len(snapshot)):
                b = snapshot[bi]
                for ci in range(bi, len(snapshot)):
                    v = b + snapshot[ci] - a
                    if v <= cap and v not in members:
                        members.add(v)
                        changed = True
    conductor = 0
    for v in range(cap, -1, -1):
        if v not in members:
            conductor = v + 1
            break
    small = tuple(v for v in sorted(members) if v <= conductor)
    return ns_from_small(small, conductor)


def _ideal_minimal_generators(member, conductor, mult, ambient):
    gens = []
    for v in range(0, conductor + mult + 1):
        if not member(v):
            continue
        decomposable = False
        for w in range(0, v):
            if member(w) and ns_contains(ambient, v - w):
                decomposable = True
                break
        if not decomposable:
            gens.append(v)
    return tuple(gens)


def ns_tail(s: NumericalSemigroup, a: int) -> NumericalIdeal:
    """The ideal of members >= a."""
    if a < 0:
        a = 0
    bound = max(a, s.conductor)
    members = [v for v in range(bound + 1) if v >= a and ns_contains(s, v)]
    conductor = 0
    for v in range(bound, -1, -1):
        if v < a or not ns_contains(s, v):
            conductor = v + 1
            break
    small = tuple(v for v in members if v <= conductor)
    small_set = set(small)

    def member(v):
        return v >= conductor or v in small_set

    gens = _ideal_minimal_generators(member, conductor, ns_multiplicity(s), s)
    return NumericalIdeal(s, gens, small, conductor)


def ideal_from_generators(s: NumericalSemigroup, gens) -> NumericalIdeal:
    """The ideal gens + s (generators must be nonnegative)."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] < 0:
        raise ValueError("ideal generators must be nonnegative integers")
    # Everything from min(gens) + conductor(s) onward is a member.
    bound = gens[0] + s.conductor
    members = set()
    for v in range(bound + 1):
        if any(g <= v and ns_contains(s, v - g) for g in gens):
            members.add(v)
    conductor = 0
    for v in range(bound, -1, -1):
        if v not in members:
            conductor = v + 1
            break
    small = tuple(v for v in sorted(members) if v <= conductor)

    def member(v):
        return v >= conductor or v in members

    mingens = _ideal_minimal_generators(member, conductor, ns_multiplicity(s), s)
    return NumericalIdeal(s, mingens, small, conductor)


def ideal_preimage_scale(e: NumericalIdeal, k: int, s: NumericalSemigroup) -> NumericalIdeal:
    """The ideal {x in s : k * x in e} of s.

    Requires k >= 1 and that k * s lands in e's ambient semigroup; under that
    hypothesis the preimage is a nonempty relative ideal of s.
    """
    if k < 1:
        raise ValueError("scale factor must be >= 1")
    bound = max(s.conductor, -(-e.conductor // k))
    members = [v for v in range(bound + 1) if ns_contains(s, v) and ideal_contains(e, k * v)]
    if not members:
        raise ValueError("empty preimage: not an ideal")
    conductor = 0
    for v in range(bound, -1, -1):
        if not (ns_contains(s, v) and ideal_contains(e, k * v)):
            conductor = v + 1
            break
    small = tuple(v for v in members if v <= conductor)
    small_set = set(small)

    def member(v):
        return v >= conductor or v in small_set

    mingens = _ideal_minimal_generators(member, conductor, ns_multiplicity(s), s)
    return NumericalIdeal(s, mingens, small, conductor)
