import random

import pytest

from fixtures import GENS_19_29, LEAVES_15_20_27_35
from pfsemi import (
    an_irreducible_with_frobenius,
    enumerate_via_irreducibles,
    frobenius_number,
    irreducibles_containing,
    irreducibles_with_frobenius,
    is_irreducible,
    minimal_generators,
)


def gens(result):
    return {minimal_generators(s) for s in result}


def test_frobenius_13():
    found = irreducibles_with_frobenius(13)
    assert len(found) == 8
    assert all(is_irreducible(s) and frobenius_number(s) == 13 for s in found)


def test_containing():
    found = irreducibles_containing(13, [0, 7, 8, 11, 12, 14])
    assert gens(found) == {(4, 7, 10), (7, 8, 9, 10, 11, 12)}
    assert irreducibles_containing(13, [13]) == []


def test_small_frobenius():
    assert gens(irreducibles_with_frobenius(1)) == {(2, 3)}
    assert gens(irreducibles_with_frobenius(2)) == {(3, 4, 5)}
    assert gens(irreducibles_with_frobenius(4)) == {(3, 5, 7)}
    with pytest.raises(ValueError):
        irreducibles_with_frobenius(0)


def test_random_irreducible():
    s = an_irreducible_with_frobenius(21, random.Random(5))
    assert is_irreducible(s) and frobenius_number(s) == 21
    assert s == an_irreducible_with_frobenius(21, random.Random(5))


@pytest.mark.parametrize(
    "pf, expected",
    [
        ((10, 13), {(4, 7, 17), (7, 8, 9, 11, 12)}),
        ((19, 29), set(GENS_19_29)),
        ((15, 20, 27, 35), set(LEAVES_15_20_27_35)),
        ((16, 29), {(3, 19, 32)}),
    ],
)
def test_descent(pf, expected):
    res = enumerate_via_irreducibles(pf)
    assert gens(res) == expected
    assert res.method == "irreducible"


def test_descent_empty():
    assert enumerate_via_irreducibles((4, 9)).count == 0
    assert enumerate_via_irreducibles((22, 23, 24, 25, 26)).count == 0
