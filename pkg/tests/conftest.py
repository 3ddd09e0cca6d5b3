"""Session fixtures: the worked examples every test module leans on."""

from __future__ import annotations

import pytest

from goodsgp import (
    cartesian,
    duplication,
    amalgamation,
    from_maximal_elements,
    good_semigroup,
    gs_from_generators,
    ideal_from_generators,
    ns_from_generators,
    small_set,
)

import _data as data


@pytest.fixture(scope="session")
def ns23():
    return ns_from_generators([2, 3])


@pytest.fixture(scope="session")
def dup_example(ns23):
    return duplication(ns23, ideal_from_generators(ns23, [6]))


@pytest.fixture(scope="session")
def amalgam_example(ns23):
    t = ns_from_generators([3, 4])
    return amalgamation(ns23, t, ideal_from_generators(t, [3]), 2)


@pytest.fixture(scope="session")
def conductor_example():
    return gs_from_generators(data.CONDUCTOR_GENS, data.CONDUCTOR_CONDUCTOR)


@pytest.fixture(scope="session")
def maximal_example():
    left = ns_from_generators(data.MAXIMAL_LEFT)
    right = ns_from_generators(data.MAXIMAL_RIGHT)
    return from_maximal_elements(left, right, data.MAXIMAL_POINTS)


@pytest.fixture(scope="session")
def dup35():
    ns35 = ns_from_generators([3, 5])
    return duplication(ns35, ideal_from_generators(ns35, [3]))


@pytest.fixture(scope="session")
def product_nonlocal():
    return cartesian(ns_from_generators([3, 5, 7]), ns_from_generators([2, 5]))


@pytest.fixture(scope="session")
def arfex1():
    return good_semigroup(small_set(data.ARFEX1_SMALL, data.ARFEX_CONDUCTOR))


@pytest.fixture(scope="session")
def arfex2():
    return good_semigroup(small_set(data.ARFEX2_SMALL, data.ARFEX_CONDUCTOR))


@pytest.fixture(scope="session")
def arfex3():
    return good_semigroup(small_set(data.ARFEX3_SMALL, data.ARFEX_CONDUCTOR))


@pytest.fixture(scope="session")
def saturation_example():
    return good_semigroup(small_set(data.SATURATION_SMALL, data.SATURATION_CONDUCTOR))
