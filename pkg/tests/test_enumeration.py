import pytest

from fixtures import GENS_19_29, LEAVES_15_20_27_35, MISLABELED_LEAF, ENUMERATION_COUNTS
from pfsemi import (
    TimeBudgetExceeded,
    ending_condition,
    explore,
    forced_integers,
    from_generators,
    minimal_generators,
    pseudo_frobenius,
    semigroups_with_pseudo_frobenius,
)


def gens(result):
    return {minimal_generators(s) for s in result}


def test_nineteen_twentynine():
    res = semigroups_with_pseudo_frobenius((19, 29))
    assert res.count == 13
    assert gens(res) == set(GENS_19_29)
    assert res.complete and res.method == "tree"


def test_single_semigroup():
    assert gens(semigroups_with_pseudo_frobenius((16, 29))) == {(3, 19, 32)}


def test_tree_leaves():
    res = semigroups_with_pseudo_frobenius((15, 20, 27, 35))
    assert gens(res) == set(LEAVES_15_20_27_35)


def test_mislabeled_leaf_has_wrong_pf():
    assert pseudo_frobenius(from_generators(MISLABELED_LEAF)) == (15, 20, 27, 28, 35)


def test_ten_thirteen():
    res = semigroups_with_pseudo_frobenius((10, 13))
    assert gens(res) == {(4, 7, 17), (7, 8, 9, 11, 12)}


def test_irreducible_shortcut():
    res = semigroups_with_pseudo_frobenius((7,))
    assert gens(res) == {(2, 9), (3, 5), (4, 5, 6)}
    assert semigroups_with_pseudo_frobenius((8,)).count == 0
    pseudo = semigroups_with_pseudo_frobenius((4, 8))
    assert pseudo.count > 0
    assert all(pseudo_frobenius(s) == (4, 8) for s in pseudo)
    # the shortcut and the tree agree
    assert semigroups_with_pseudo_frobenius((4, 8), use_shortcut=False).semigroups == pseudo.semigroups
    assert set(semigroups_with_pseudo_frobenius((9,), use_shortcut=False)) == set(
        semigroups_with_pseudo_frobenius((9,))
    )


def test_naive_condition_gives_empty():
    assert semigroups_with_pseudo_frobenius((4, 9)).count == 0


@pytest.mark.parametrize("pf, free, count", ENUMERATION_COUNTS[:4])
def test_small_enumeration_counts(pf, free, count):
    assert len(forced_integers(pf).free) == free
    assert semigroups_with_pseudo_frobenius(pf).count == count


def test_explore_from_node():
    pf = (10, 13)
    root = forced_integers(pf)
    found = []
    stats = explore(root.gaps, root.elements, pf, found.append)
    assert gens(found) == {(4, 7, 17), (7, 8, 9, 11, 12)}
    assert stats.nodes >= 1


def test_ending_condition():
    pf = (10, 13)
    found = []
    # 4 decided as gap, 9 left free
    ending_condition([1, 2, 3, 4, 5, 6, 10, 13], [0, 7, 8, 11, 12, 14], pf, found.append)
    assert gens(found) == {(7, 8, 9, 11, 12)}
    with pytest.raises(ValueError):
        ending_condition([1, 2, 3, 5, 6, 10, 13], [0, 7, 8, 11, 12, 14], (10, 13), found.append)


def test_parallel_matches_sequential():
    pf = (43, 50, 52, 65)
    seq = semigroups_with_pseudo_frobenius(pf)
    par = semigroups_with_pseudo_frobenius(pf, workers=4)
    assert par == seq
    assert par.semigroups == seq.semigroups


def test_time_budget():
    with pytest.raises(TimeBudgetExceeded) as info:
        semigroups_with_pseudo_frobenius((43, 50, 52, 65), time_budget=0.0)
    partial = info.value.partial
    assert partial is not None and not partial.complete
    assert partial.count < 213


def test_result_to_dict():
    d = semigroups_with_pseudo_frobenius((10, 13)).to_dict()
    assert d["pf"] == [10, 13] and d["count"] == 2
    assert {tuple(s["min_generators"]) for s in d["semigroups"]} == {(4, 7, 17), (7, 8, 9, 11, 12)}
    assert set(d["stats"]) >= {"nodes", "fail_prunes", "leaves", "wall_time"}
