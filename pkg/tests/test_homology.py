import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import all_ideals
from stanleydec.homology import (
    SimplicialComplex,
    depth_oracle,
    depth_quotient,
    euler_characteristic,
    integer_rank,
    is_cohen_macaulay,
    reduced_homology_ranks,
    stanley_reisner,
)
from stanleydec.ideal import SqfIdeal, members, varset

EXAMPLE = SqfIdeal.from_supports([[1, 2], [1, 3], [1, 4], [2, 3]], 4)


def complex_of(*faces):
    return SimplicialComplex.from_faces([varset(f) for f in faces] + [0])


HOLLOW_TRIANGLE = complex_of([1, 2], [1, 3], [2, 3], [1], [2], [3])
TWO_POINTS = complex_of([1], [2])
FULL_TRIANGLE = complex_of([1, 2, 3], [1, 2], [1, 3], [2, 3], [1], [2], [3])
EDGE_AND_POINT = complex_of([1, 2], [1], [2], [3])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_integer_rank_matches_sympy(rows, cols, data):
    mat = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols),
                             min_size=rows, max_size=rows))
    assert integer_rank(mat) == sympy.Matrix(mat).rank()


def test_integer_rank_edge_cases():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 4], [1, 2]]) == 1
    assert integer_rank([[0, 1], [1, 0]]) == 2


def test_stanley_reisner_examples():
    assert [members(f) for f in stanley_reisner(SqfIdeal.from_supports([[1, 2, 3]], 3)).facets] == [
        (1, 2), (1, 3), (2, 3)]
    assert stanley_reisner(SqfIdeal.prime([1, 2, 3], 3)).facets == (0,)
    assert sorted(members(f) for f in stanley_reisner(EXAMPLE).facets) == [(1,), (2, 4), (3, 4)]
    with pytest.raises(ValueError):
        stanley_reisner(SqfIdeal.zero(3))


def test_reduced_homology_examples():
    assert reduced_homology_ranks(HOLLOW_TRIANGLE) == [0, 0, 1]
    assert reduced_homology_ranks(TWO_POINTS) == [0, 1]
    assert reduced_homology_ranks(FULL_TRIANGLE) == [0, 0, 0, 0]
    assert reduced_homology_ranks(SimplicialComplex((0,), 0)) == [1]


def test_cohen_macaulay_examples():
    assert is_cohen_macaulay(HOLLOW_TRIANGLE)
    assert is_cohen_macaulay(TWO_POINTS)
    assert not is_cohen_macaulay(EDGE_AND_POINT)


def test_depth_oracle_examples():
    assert depth_quotient(EXAMPLE) == 1 and depth_oracle(EXAMPLE) == 2
    for n in range(1, 6):
        assert depth_oracle(SqfIdeal.prime(range(1, n + 1), n)) == 1
    assert depth_oracle(SqfIdeal.from_supports([[1, 2], [2, 3], [1, 3]], 3)) == 2


def test_principal_ideal_has_full_depth():
    for n in range(1, 7):
        assert depth_oracle(SqfIdeal.from_supports([range(1, n + 1)], n)) == n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_euler_characteristic(n):
    for gens in all_ideals(n):
        delta = stanley_reisner(SqfIdeal(gens, n))
        ranks = reduced_homology_ranks(delta)
        assert sum((-1) ** (d - 1) * r for d, r in enumerate(ranks)) == euler_characteristic(delta)


def test_euler_characteristic_random_complexes():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 6)
        facets = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 5))]
        delta = SimplicialComplex.from_faces(facets)
        ranks = reduced_homology_ranks(delta)
        assert all(r >= 0 for r in ranks)
        assert sum((-1) ** (d - 1) * r for d, r in enumerate(ranks)) == euler_characteristic(delta)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_depth_bounded_by_dimension(n):
    """depth(S/I) <= dim(S/I) = dim(Delta) + 1, with equality for CM complexes."""
    for gens in all_ideals(n):
        I = SqfIdeal(gens, n)
        delta = stanley_reisner(I)
        d = depth_quotient(I)
        assert 0 <= d <= delta.dim + 1
        assert (d == delta.dim + 1) == is_cohen_macaulay(delta)
