import pytest

from sgtree import (
    NATURALS,
    EmptyGeneratorSet,
    NonCoprimeGenerators,
    NotASemigroup,
    RootHasNoParent,
    from_gap_set,
    from_generators,
    max_type_check,
    minimal_generators,
    parent,
    pseudo_frobenius,
    type_of,
)


def brute_generators(gaps):
    s = from_gap_set(gaps)
    top = s.frobenius + s.multiplicity
    members = [x for x in range(1, top + 1) if x in s]
    return tuple(x for x in members if not any(y in s and x - y in s for y in members if y <= x // 2))


def test_from_generators_basic():
    s = from_generators([3, 7, 8])
    assert s.gaps == (1, 2, 4, 5)
    assert (s.frobenius, s.genus, s.multiplicity) == (5, 4, 3)


def test_root():
    s = from_generators([1])
    assert s == NATURALS
    assert s.gaps == ()
    assert (s.frobenius, s.genus, s.multiplicity, s.type) == (-1, 0, 1, 1)
    assert s.minimal_generators == (1,)
    assert s.pseudo_frobenius.elements == (-1,)


def test_nonleaf_example_gap_set():
    s = from_generators([6, 7, 8, 9, 11])
    assert s.gaps == (1, 2, 3, 4, 5, 10)
    assert s.genus == 6


@pytest.mark.parametrize("bad, exc", [
    ([], EmptyGeneratorSet),
    ([4, 6], NonCoprimeGenerators),
    ([0, 1], ValueError),
    ([-3, 2], ValueError),
])
def test_from_generators_errors(bad, exc):
    with pytest.raises(exc):
        from_generators(bad)


def test_from_gap_set():
    assert from_gap_set({1, 2, 4, 5}) == from_generators([3, 7, 8])
    assert from_gap_set({1, 2, 3}).minimal_generators == (4, 5, 6, 7)
    assert from_gap_set(()) == NATURALS


def test_from_gap_set_rejects_unclosed():
    # 3 is not a gap but 3 + 3 = 6 is
    with pytest.raises(NotASemigroup) as info:
        from_gap_set({1, 2, 4, 6})
    assert info.value.witness == (3, 3)


def test_from_gap_set_rejects_nonpositive():
    with pytest.raises(ValueError):
        from_gap_set({0, 1})


def test_minimal_generators():
    assert minimal_generators(from_generators([3, 7, 8])) == (3, 7, 8)
    assert minimal_generators(NATURALS) == (1,)
    assert minimal_generators(from_gap_set({1, 2, 3, 5, 6})) == (4, 7, 9, 10)
    assert brute_generators({1, 2, 3, 5, 6}) == (4, 7, 9, 10)


def test_redundant_generators_are_dropped():
    assert from_generators([3, 6, 7, 8, 9]).minimal_generators == (3, 7, 8)


@pytest.mark.parametrize("gens, pf", [
    ([6, 7, 8, 9, 11], (5, 10)),
    ([3, 7, 8], (4, 5)),
    ([4, 7, 9, 10], (3, 5, 6)),
])
def test_pseudo_frobenius(gens, pf):
    s = from_generators(gens)
    assert pseudo_frobenius(s).elements == pf
    assert type_of(s) == len(pf)


def test_type_examples():
    s = from_generators([7, 9, 10, 12, 13, 15])
    assert (s.type, s.genus, s.frobenius) == (5, 8, 11)
    assert type_of(from_gap_set(range(1, 6))) == 5
    assert type_of(from_generators([2, 7])) == 1


def test_parent():
    assert parent(from_generators([3, 7, 11])) == from_generators([3, 7, 8])
    assert parent(from_generators([3, 8, 10])) == from_generators([3, 7, 8])
    assert parent(from_generators([2, 3])) == NATURALS
    with pytest.raises(RootHasNoParent):
        parent(NATURALS)


def test_max_type_check():
    assert max_type_check(from_generators([4, 5, 6, 7])) == (True,) * 4
    assert max_type_check(from_generators([2, 3])) == (True,) * 4
    assert max_type_check(from_generators([3, 7, 8])) == (False,) * 4
    s = from_generators([4, 5, 6, 7])
    assert s.genus == s.type == s.frobenius == 3


def test_without_requires_minimal_generator():
    s = from_generators([3, 7, 8])
    assert s.without(8) == from_generators([3, 7, 11])
    with pytest.raises(ValueError):
        s.without(6)


def test_text_forms():
    s = from_generators([3, 7, 8])
    assert repr(s) == "<3, 7, 8>"
    assert str(s) == "gens=[3,7,8] gaps=[1,2,4,5] F=5 g=4 t=2 m=3"
    assert s.to_dict()["gaps"] == [1, 2, 4, 5]


def test_equality_and_hash_by_gap_set():
    a = from_generators([3, 7, 8])
    b = from_gap_set([5, 4, 2, 1])
    assert a == b and hash(a) == hash(b)
    assert 6 in a and 5 not in a and -1 not in a
