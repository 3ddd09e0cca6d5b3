"""The Arf property, Arf closures, chain levels, and the saturation gap."""

from __future__ import annotations

import itertools

import pytest

from goodsgp import (
    arf_closure,
    arf_saturation,
    brute_arf_check,
    build_chain_level,
    good_semigroup,
    gs_contains,
    gs_equal,
    gs_subset,
    is_arf,
    is_arf_via_stability,
    ns_arf_closure,
    ns_from_generators,
    ns_from_small,
    projection,
    saturation_infima_closure,
    small_set,
)

import _data as data
from _corpus import corpus


def _closure_small(s):
    t = arf_closure(s)
    return data.points(t.small.points), tuple(t.small.top)


def test_arf_predicate_on_the_worked_examples(dup_example, arfex1, arfex2, arfex3):
    assert not is_arf(dup_example)
    assert not is_arf(arfex1)
    assert not is_arf(arfex2)
    assert not is_arf(arfex3)
    mini = good_semigroup(small_set([(0, 0), (1, 1)], (1, 1)))
    assert is_arf(mini)
    closed = good_semigroup(small_set(*data.ARFEX3_CLOSURE))
    assert is_arf(closed)


def test_both_arf_characterizations_agree_on_the_examples(
    dup_example, amalgam_example, arfex1, arfex2, arfex3
):
    for s in (dup_example, amalgam_example, arfex1, arfex2, arfex3):
        assert is_arf(s) == is_arf_via_stability(s)


def test_arf_closures_of_the_three_examples(arfex1, arfex2, arfex3):
    assert _closure_small(arfex1) == (
        data.points(data.ARFEX1_CLOSURE[0]),
        tuple(data.ARFEX1_CLOSURE[1]),
    )
    assert _closure_small(arfex2) == (
        data.points(data.ARFEX2_CLOSURE[0]),
        tuple(data.ARFEX2_CLOSURE[1]),
    )
    assert _closure_small(arfex3) == (
        data.points(data.ARFEX3_CLOSURE[0]),
        tuple(data.ARFEX3_CLOSURE[1]),
    )


def test_closure_contains_the_input_and_is_arf(arfex1, arfex2, arfex3, dup_example):
    for s in (arfex1, arfex2, arfex3, dup_example):
        t = arf_closure(s)
        assert gs_subset(s, t)
        assert is_arf(t)
        assert gs_equal(arf_closure(t), t)


def test_chain_levels():
    t34 = ns_arf_closure(ns_from_generators([3, 4]))
    lvl = build_chain_level(t34, t34, 1)
    assert data.points(lvl.small.points) == data.points([(0, 0), (3, 3)])
    t1 = ns_from_small((0, 3, 5), 5)
    lvl2 = build_chain_level(t1, t34, 1)
    assert data.points(lvl2.small.points) == data.points(data.ARFEX2_CLOSURE[0])
    deep = build_chain_level(t34, t34, 4)
    assert data.points(deep.small.points) == data.points(data.ARFEX3_CLOSURE[0])
    with pytest.raises(ValueError):
        build_chain_level(t34, t34, 0)
    with pytest.raises(ValueError):
        build_chain_level(ns_from_generators([3, 4]), t34, 1)  # factor not Arf


def test_non_local_closure_warns_and_uses_the_projections(product_nonlocal):
    with pytest.warns(UserWarning):
        t = arf_closure(product_nonlocal)
    # both projections happen to be Arf already, so nothing grows
    assert gs_equal(t, product_nonlocal)


def test_saturation_gap_golden(saturation_example):
    t = arf_closure(saturation_example)
    assert data.points(t.small.points) == data.points(data.SATURATION_CLOSURE[0])
    assert tuple(t.small.top) == tuple(data.SATURATION_CLOSURE[1])
    box = data.SATURATION_BOX
    u = arf_saturation(saturation_example, box)
    t_box = [
        p
        for p in itertools.product(range(box[0] + 1), range(box[1] + 1))
        if gs_contains(t, p)
    ]
    gap = sorted(set(t_box) - set(map(tuple, u)))
    assert gap == [tuple(p) for p in data.SATURATION_GAP]
    # the saturation is not meet closed here; its infima closure fills the gap
    closed = saturation_infima_closure(saturation_example, box)
    assert sorted(map(tuple, closed)) == sorted(t_box)


def test_saturation_contains_the_semigroup_box(saturation_example):
    box = data.SATURATION_BOX
    u = set(map(tuple, arf_saturation(saturation_example, box)))
    for p in itertools.product(range(box[0] + 1), range(box[1] + 1)):
        if gs_contains(saturation_example, p):
            assert p in u


def test_arf_characterizations_agree_on_random_instances():
    box_pad = 2
    for s in corpus(517, 40, cap=10):
        a = is_arf(s)
        assert a == is_arf_via_stability(s)
        top = s.small.top
        box = (top[0] + box_pad, top[1] + box_pad)
        assert a == brute_arf_check(s, box)


def test_closure_projections_are_the_numerical_closures():
    for s in corpus(518, 30, cap=10):
        t = arf_closure(s)
        for i in (0, 1):
            want = ns_arf_closure(projection(s, i))
            got = projection(t, i)
            assert got.small_elements == want.small_elements
            assert got.conductor == want.conductor


def test_closure_levels_shrink_and_stop_at_the_input(arfex3):
    # the chain levels are nested, and the closure is the deepest one that
    # still contains the input
    t34 = ns_arf_closure(ns_from_generators([3, 4]))
    levels = [build_chain_level(t34, t34, i) for i in range(1, 6)]
    for shallow, deep in zip(levels, levels[1:]):
        assert gs_subset(deep, shallow)
    closure = arf_closure(arfex3)
    assert gs_equal(closure, levels[3])
    assert gs_subset(arfex3, levels[3])
    assert not gs_subset(arfex3, levels[4])
