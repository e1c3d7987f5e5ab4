import math
import random

import pytest

from dihedral_cayley import field_construction as fc
from dihedral_cayley.diameter_checker import (
    NOT_CONNECTED,
    InvalidGeneratingSetError,
    cayley_check,
    diameter,
    is_diameter_two,
    split_counts,
    validate_generating_set,
)
from dihedral_cayley.group_core import (
    GDElement,
    GroupSpec,
    enumerate_elements,
    inverse,
    multiply,
)
from oracles import all_pairs_diameter, products_up_to_two

D6 = GroupSpec((3,))
D8 = GroupSpec((4,))


def r(h, s=1):
    return GDElement((h,), s)


def test_validate_examples():
    assert validate_generating_set(D6, [r(0, -1), r(1, -1), r(2, -1)]) == []
    problems = validate_generating_set(D6, [r(1)])
    assert problems == ["inverse 2;+1 of 1;+1 missing"]
    assert any("identity" in msg for msg in validate_generating_set(D6, [r(0), r(1, -1)]))
    assert validate_generating_set(D6, [r(5)])[0].startswith("invalid element")


def test_diameter_examples():
    assert diameter(D6, [r(1), r(2), r(0, -1)]) == 2
    assert diameter(D6, [x for x in enumerate_elements(D6)][1:]) == 1
    assert diameter(D8, [r(1), r(3)]) == NOT_CONNECTED


def test_diameter_rejects_invalid():
    with pytest.raises(InvalidGeneratingSetError):
        diameter(D6, [r(1)])


def test_is_diameter_two_examples():
    S = fc.build_generating_set(5)
    ok, gaps = is_diameter_two(S.spec, fc.transported_set(S))
    assert ok and gaps == []
    assert is_diameter_two(D8, [r(0, -1), r(1, -1), r(2)]) == (True, [])
    ok, gaps = is_diameter_two(D8, [r(0, -1), r(1, -1), r(2, -1)])
    assert not ok and gaps == [r(3, -1)]


def test_split_examples():
    S = fc.build_generating_set(5)
    m1, m2 = split_counts(S.spec, fc.transported_set(S))
    assert (m1, m2) == (7, 5)
    assert m2 * (m1 + 1) >= 20
    assert split_counts(D8, [r(0, -1), r(1, -1), r(2)]) == (1, 2)
    assert split_counts(D6, [r(0, -1), r(1, -1), r(2, -1)]) == (0, 3)


def _random_inverse_closed(spec, rng, k):
    elems = enumerate_elements(spec)[1:]
    S = set()
    for x in rng.sample(elems, k):
        S.add(x)
        S.add(inverse(spec, x))
    return sorted(S)


REFERENCE_SPECS = [GroupSpec(o) for o in [(3,), (4,), (2, 2), (5,), (6,), (2, 4), (3, 3), (10,), (2, 2, 3), (7, 6)]]


@pytest.mark.parametrize("spec", REFERENCE_SPECS, ids=str)
def test_bfs_matches_all_pairs_reference(spec):
    rng = random.Random(spec.order)
    elems = enumerate_elements(spec)

    def mul(a, b):
        return multiply(spec, a, b)

    def inv(a):
        return inverse(spec, a)

    for trial in range(6):
        k = rng.randint(1, max(1, min(8, spec.order // 3)))
        S = _random_inverse_closed(spec, rng, k)
        ref = all_pairs_diameter(elems, mul, inv, S)
        got = diameter(spec, S)
        assert got == ref
        covered = products_up_to_two(spec.identity, mul, S)
        two, gaps = is_diameter_two(spec, S)
        assert two == (len(covered) == spec.order)
        assert set(gaps) == set(elems) - covered
        # the two certifiers agree on the <= 2 predicate
        assert two == (got != NOT_CONNECTED and got <= 2)
        if two:
            m1, m2 = split_counts(spec, S)
            assert m2 * (m1 + 1) >= spec.n
            assert m1 + m2 >= 2 * math.sqrt(spec.n) - 1


def test_witness_words():
    S = [r(1), r(2), r(0, -1)]
    check = cayley_check(D6, S, with_witnesses=True)
    assert check.diameter == 2 and check.degree == 3
    assert len(check.witnesses) == D6.order
    for x, word in check.witnesses.items():
        acc = D6.identity
        for s in word:
            acc = multiply(D6, acc, s)
        assert acc == x and len(word) <= 2
    assert cayley_check(D6, S).witnesses is None


def test_trivial_group():
    spec = GroupSpec(())
    assert diameter(spec, [GDElement((), -1)]) == 1
    assert is_diameter_two(spec, [GDElement((), -1)])[0]
