import pytest

from weldbraid.presentations import (
    Family,
    GroupFamily,
    expand_xi,
    forbidden_relator,
    mirror_relator,
    permutation_of,
    relators,
    twin_iso_relator,
    twin_relator,
    twin_to_welded,
    xi_auto,
    xi_word,
)
from weldbraid.words import format_word, parse_word, word_to_auto


def labels(fam, n):
    return [r.label for r in relators(fam, n)]


def test_virtual_rank_3_catalog():
    assert labels(Family.VIRTUAL, 3) == ["V1[1]", "V3[1]", "V3[2]", "V4[1]", "V7[1]"]


def test_welded_adds_forbidden():
    assert labels(Family.WELDED, 3) == labels(Family.VIRTUAL, 3) + ["Forbidden[1]"]


def test_symmetric_rank_2():
    (rel,) = relators(Family.SYMMETRIC, 2)
    assert (format_word(rel.lhs), format_word(rel.rhs)) == ("t1 t1", "")


def test_braid_rank_4():
    assert labels(Family.BRAID, 4) == ["V1[1]", "V1[2]", "V2[1,3]"]


def test_labels_unique_and_order_stable():
    for fam in Family:
        ls = labels(fam, 5)
        assert len(ls) == len(set(ls))
        assert ls == labels(fam, 5)


def test_accepts_group_family_and_string():
    assert relators(GroupFamily(Family.VIRTUAL, 3)) == relators("vb", 3)
    with pytest.raises(ValueError):
        GroupFamily(Family.VIRTUAL, 1)


def test_mccool_count():
    # 1/2 * n(n-1)(n-2)(n-3) disjoint pairs, n*C(n-1,2) shared-target pairs, n(n-1)(n-2) triangles
    assert len(relators(Family.PURE_WELDED, 4)) == 12 + 12 + 24
    assert len(relators(Family.PURE_WELDED, 5)) == 60 + 30 + 60


def test_mirror_relator():
    rel = mirror_relator(1, 3)
    assert (format_word(rel.lhs), format_word(rel.rhs)) == ("t1 t2 s1", "s2 t1 t2")
    assert word_to_auto(rel.lhs, 3) == word_to_auto(rel.rhs, 3)
    with pytest.raises(ValueError):
        mirror_relator(2, 3)


def test_forbidden_and_twin_shapes():
    f = forbidden_relator(1, 3)
    assert (format_word(f.lhs), format_word(f.rhs)) == ("t1 s2 s1", "s2 s1 t2")
    t = twin_relator(2, 4)
    assert (format_word(t.lhs), format_word(t.rhs)) == ("t3 s2 s3", "t2 s3 s2")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_xi_words_act_as_basis_conjugations(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert word_to_auto(xi_word(i, j, n), n) == xi_auto(i, j, n), (i, j)


def test_xi_word_small_cases():
    assert format_word(xi_word(1, 2, 2)) == "s1 t1"
    assert format_word(xi_word(1, 3, 3)) == "t1 s2 t2 t1"
    assert format_word(xi_word(2, 1, 2)) == "t1 s1"
    assert format_word(xi_word(3, 1, 3)) == "t2 t1 s1 t2"


def test_xi_word_invalid():
    for args in [(1, 1, 3), (0, 2, 3), (1, 4, 3)]:
        with pytest.raises(ValueError):
            xi_word(*args)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_mccool_relators_hold_under_artin(n):
    for rel in relators(Family.PURE_WELDED, n):
        lhs = word_to_auto(expand_xi(rel.lhs, n), n)
        rhs = word_to_auto(expand_xi(rel.rhs, n), n)
        assert lhs == rhs, rel.label


def test_twin_to_welded_examples():
    assert format_word(twin_to_welded(parse_word("s1 t2"))) == "S1 t2"
    assert twin_to_welded(()) == ()
    with pytest.raises(ValueError):
        twin_to_welded(parse_word("q1.2"))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_corrected_twin_relation_maps_to_welded(n):
    for i in range(1, n - 1):
        rel = twin_iso_relator(i, n)
        lhs, rhs = twin_to_welded(rel.lhs), twin_to_welded(rel.rhs)
        assert word_to_auto(lhs, n) == word_to_auto(rhs, n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_defining_twin_relators_under_the_isomorphism(n):
    # every virtual relator survives the isomorphism; the printed twin relation does not
    for rel in relators(Family.TWIN_WELDED, n):
        same = word_to_auto(twin_to_welded(rel.lhs), n) == word_to_auto(twin_to_welded(rel.rhs), n)
        assert same == (not rel.label.startswith("Twin[")), rel.label


def test_permutation_projection():
    assert permutation_of(parse_word("s1"), 3).images == (2, 1, 3)
    assert permutation_of(parse_word("S1"), 3).images == (2, 1, 3)
    # letters act left to right: 1 -> 2 under t1, then 2 -> 3 under t2
    assert permutation_of(parse_word("t1 t2"), 3).images == (3, 1, 2)
    assert permutation_of(parse_word("t1 t2"), 3).cycles() == [(1, 3, 2)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_xi_words_are_pure(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert permutation_of(xi_word(i, j, n), n).is_identity()
