import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_cayley.group_core import (
    CapExceededError,
    GDElement,
    GroupError,
    GroupSpec,
    InvalidElementError,
    abelian_invariant_factors,
    element,
    element_index,
    enumerate_elements,
    generalised_dihedral_specs,
    index_element,
    inverse,
    is_involution,
    multiply,
)
from oracles import affine_compose_matches

Z6 = GroupSpec((6,))


def e6(h, s):
    return GDElement((h,), s)


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (e6(0, 1), e6(4, -1), e6(4, -1)),
        (e6(2, -1), e6(3, 1), e6(5, -1)),
        (e6(2, -1), e6(2, -1), e6(0, 1)),
    ],
)
def test_multiply_examples(x, y, expected):
    assert multiply(Z6, x, y) == expected


@pytest.mark.parametrize(
    "x, expected",
    [(e6(0, 1), e6(0, 1)), (e6(2, -1), e6(2, -1)), (e6(2, 1), e6(4, 1))],
)
def test_inverse_examples(x, expected):
    assert inverse(Z6, x) == expected
    assert multiply(Z6, x, inverse(Z6, x)) == Z6.identity


def test_is_involution_examples():
    assert is_involution(Z6, e6(3, 1))
    assert not is_involution(Z6, e6(1, 1))
    assert not is_involution(Z6, e6(0, 1))
    assert all(is_involution(Z6, e6(h, -1)) for h in range(6))


def test_invalid_element():
    with pytest.raises(InvalidElementError):
        multiply(Z6, e6(6, 1), e6(0, 1))
    with pytest.raises(InvalidElementError):
        inverse(Z6, GDElement((1, 2), 1))
    with pytest.raises(InvalidElementError):
        multiply(Z6, GDElement((1,), 0), e6(0, 1))


def test_bad_spec():
    with pytest.raises(GroupError):
        GroupSpec((1,))


@pytest.mark.parametrize("orders, count", [((2,), 4), ((3,), 6), ((2, 2), 8), ((), 2)])
def test_enumerate_counts(orders, count):
    spec = GroupSpec(orders)
    elems = enumerate_elements(spec)
    assert len(elems) == count == spec.order
    assert len(set(elems)) == count


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_elements(GroupSpec((1 << 12, 1 << 12)))


def test_index_round_trip_d12():
    spec = GroupSpec((6,))
    assert element_index(spec, spec.identity) == 0
    for i in range(spec.order):
        assert element_index(spec, index_element(spec, i)) == i
    for x in enumerate_elements(spec):
        assert index_element(spec, element_index(spec, x)) == x


def test_index_covers_range_z3():
    spec = GroupSpec((3,))
    assert sorted(element_index(spec, x) for x in enumerate_elements(spec)) == list(range(6))


def test_canonical_order_sign_most_significant():
    spec = GroupSpec((2, 3))
    elems = enumerate_elements(spec)
    assert all(x.sign == 1 for x in elems[:6]) and all(x.sign == -1 for x in elems[6:])
    assert [x.h for x in elems[:6]] == list(itertools.product(range(2), range(3)))


def test_index_out_of_range():
    with pytest.raises(InvalidElementError):
        index_element(Z6, 12)


def test_text_round_trip():
    x = GDElement((3, 0, 1), -1)
    assert x.to_text() == "3,0,1;-1"
    assert GDElement.from_text("3,0,1;-1") == x
    assert GDElement.from_text(";+1") == GDElement((), 1)
    with pytest.raises(InvalidElementError):
        GDElement.from_text("3,1")


SMALL_SPECS = [GroupSpec(o) for o in [(), (2,), (3,), (4,), (2, 2), (6,), (2, 4), (3, 3), (2, 2, 2), (5, 4)]]


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_multiply_is_composition_of_affine_maps(spec):
    elems = enumerate_elements(spec)
    for x in elems:
        for y in elems:
            z = multiply(spec, x, y)
            assert affine_compose_matches(spec.factor_orders, (x.h, x.sign), (y.h, y.sign), (z.h, z.sign))


@pytest.mark.parametrize("spec", [GroupSpec(o) for o in [(12,), (2, 6), (2, 2, 5), (7, 6), (4, 4, 3)]], ids=str)
def test_group_axioms(spec):
    rng = random.Random(1234)
    elems = enumerate_elements(spec)
    members = set(elems)
    e = spec.identity
    for _ in range(10_000):
        x, y, z = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert multiply(spec, multiply(spec, x, y), z) == multiply(spec, x, multiply(spec, y, z))
    for x in elems:
        assert multiply(spec, e, x) == x == multiply(spec, x, e)
        assert multiply(spec, x, inverse(spec, x)) == e
        assert multiply(spec, x, rng.choice(elems)) in members
    rotations = [x for x in elems if x.sign == 1]
    assert len(rotations) * 2 == spec.order
    assert all(multiply(spec, a, b).sign == 1 for a in rotations for b in rotations[:20])
    assert all(is_involution(spec, x) for x in elems if x.sign == -1)


@settings(max_examples=200, deadline=None)
@given(
    orders=st.lists(st.integers(2, 9), min_size=0, max_size=3),
    data=st.data(),
)
def test_products_canonical(orders, data):
    spec = GroupSpec(orders)
    i = data.draw(st.integers(0, spec.order - 1))
    j = data.draw(st.integers(0, spec.order - 1))
    z = multiply(spec, index_element(spec, i), index_element(spec, j))
    assert all(0 <= r < m for r, m in zip(z.h, spec.factor_orders))
    assert index_element(spec, element_index(spec, z)) == z


def test_element_helper_reduces():
    assert element(Z6, 7, -1) == e6(1, -1)
    assert element(GroupSpec((2, 3)), (3, -1)) == GDElement((1, 2), 1)


@pytest.mark.parametrize(
    "n, expected",
    [(1, [()]), (4, [(4,), (2, 2)]), (8, [(8,), (2, 4), (2, 2, 2)]), (12, [(12,), (2, 6)]),
     (16, [(16,), (2, 8), (4, 4), (2, 2, 4), (2, 2, 2, 2)])],
)
def test_abelian_groups(n, expected):
    assert abelian_invariant_factors(n) == expected


def test_generalised_specs_orders():
    for n in range(1, 25):
        for spec in generalised_dihedral_specs(n):
            assert spec.order == 2 * n
