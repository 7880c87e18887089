import itertools

import pytest
from hypothesis import given, strategies as st

from stanleydec.ideal import (
    ContextMismatch,
    SqfIdeal,
    height_sum,
    intersect,
    membership,
    monomial,
    restrict,
    size,
    varset,
)

EXAMPLE = SqfIdeal.from_supports([[1, 2], [1, 3], [1, 4], [2, 3]], 4)


def ideals(max_n=6):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        gens = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=5))
        return SqfIdeal(tuple(gens), n)
    return build()


def test_membership_examples():
    assert membership(monomial(4, [1, 2]), EXAMPLE)
    assert not membership((0, 0, 0, 0), EXAMPLE)
    assert not membership(monomial(4, [2, 4]), EXAMPLE)
    assert membership((3, 0, 0, 5), EXAMPLE)


def test_membership_context_mismatch():
    with pytest.raises(ContextMismatch):
        membership((1, 1, 0), EXAMPLE)


def test_intersect_three_primes():
    P1 = SqfIdeal.prime([1, 2], 4)
    P2 = SqfIdeal.prime([2, 3, 4], 4)
    P3 = SqfIdeal.prime([1, 3], 4)
    assert intersect(intersect(P1, P2), P3) == EXAMPLE


def test_intersect_disjoint_primes():
    I = intersect(SqfIdeal.prime([1, 2], 4), SqfIdeal.prime([3, 4], 4))
    assert I.supports() == [[1, 3], [1, 4], [2, 3], [2, 4]]


def test_intersect_context_mismatch():
    with pytest.raises(ContextMismatch):
        intersect(SqfIdeal.prime([1], 2), SqfIdeal.prime([1], 3))


def test_restrict_examples():
    assert restrict(EXAMPLE, varset([1, 2])).supports() == [[1, 2]]
    assert restrict(SqfIdeal.from_supports([[1, 2, 3]], 3), varset([1, 2])).is_zero
    assert restrict(SqfIdeal.prime([2, 3, 4], 4), varset([2])).supports() == [[2]]


def test_height_sum_examples():
    assert height_sum(varset([1, 2]), varset([2, 3, 4])) == 4
    assert height_sum(0, 0) == 0
    assert height_sum(varset([1, 2]), varset([1, 3])) == 3


def test_canonical_generator_order():
    I = SqfIdeal.from_supports([[2, 3], [1, 4], [1, 3, 4], [1, 2], [1, 3]], 4)
    assert I.supports() == [[1, 2], [1, 3], [1, 4], [2, 3]]


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        SqfIdeal((0,), 2)


def test_zero_ideal_is_distinguishable():
    Z = SqfIdeal.zero(3)
    assert Z.is_zero and str(Z) == "0"
    assert not SqfIdeal.prime([1], 3).is_zero


def test_supports_n_eight():
    I = SqfIdeal.prime(range(1, 9), 8)
    assert membership(monomial(8, [8]), I)


@given(ideals(), st.data())
def test_intersection_membership_exhaustive(I, data):
    gens = data.draw(st.lists(st.integers(1, (1 << I.n) - 1), min_size=1, max_size=4))
    J = SqfIdeal(tuple(gens), I.n)
    K = intersect(I, J)
    for sigma in range(1 << I.n):
        assert K.contains_support(sigma) == (I.contains_support(sigma) and J.contains_support(sigma))


@given(ideals())
def test_generators_form_antichain(I):
    for g, h in itertools.permutations(I.gens, 2):
        assert g & h != g


@given(ideals(), st.data())
def test_restrict_membership(I, data):
    V = data.draw(st.integers(0, (1 << I.n) - 1))
    R = restrict(I, V)
    for g, h in itertools.permutations(R.gens, 2):
        assert g & h != g
    for sigma in range(1 << I.n):
        if sigma & ~V == 0:
            assert R.contains_support(sigma) == I.contains_support(sigma)


@given(st.integers(0, 255), st.integers(0, 255))
def test_height_sum_dominates(P, Q):
    h = height_sum(P, Q)
    assert h >= max(size(P), size(Q))
    assert (h == max(size(P), size(Q))) == (P & Q in (P, Q))
