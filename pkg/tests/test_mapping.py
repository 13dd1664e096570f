import pytest
from hypothesis import given, settings, strategies as st

from mcgfactor.catalog import build_catalog
from mcgfactor.engine import Status, equal
from mcgfactor.mapping import (MappingClassWord, Twist, conjugate, find_subsequence, invert, power,
                               pull_forward, word)

NAMES = ["c1", "c2", "c3", "c4", "c5", "d", "e"]
twists = st.builds(Twist, st.sampled_from(NAMES), st.sampled_from([1, -1]))
short_words = st.lists(twists, min_size=1, max_size=6).map(MappingClassWord)


def test_parse_and_format():
    w = MappingClassWord.parse("c1 d^-1 c2")
    assert [t.curve for t in w] == ["c1", "d", "c2"]
    assert [t.sign for t in w] == [1, -1, 1]
    assert str(w) == "t[c1] t[d]^-1 t[c2]"
    assert str(MappingClassWord()) == "1"


def test_twist_validation():
    with pytest.raises(ValueError):
        Twist("c1", 2)
    assert Twist("c1").positive and not Twist("c1", -1).positive


def test_power_and_invert():
    assert power("c1", 3) == word("c1 c1 c1")
    assert power("c1", -2) == word("c1^-1 c1^-1")
    assert invert(word("c1 c2^-1")) == word("c2 c1^-1")
    assert word("c1 c2") ** -1 == word("c2^-1 c1^-1")
    assert len(word("c1 c2") ** 3) == 6


def test_slicing():
    w = word("c1 c2 c3")
    assert isinstance(w[1:], MappingClassWord)
    assert w[0] == Twist("c1")


def test_conjugate_keeps_signs():
    w = conjugate(word("c1 c2^-1"), word("d"))
    assert [t.sign for t in w] == [1, -1]
    assert all(t.conjugator == word("d") for t in w)


def test_json_round_trip():
    w = word(Twist("c1", 1, word("d^-1 e")), "c2^-1")
    assert MappingClassWord.from_json(w.to_json()) == w
    with pytest.raises(ValueError):
        Twist.from_json({"curve": "c1", "sign": True, "conjugator": []})
    with pytest.raises(ValueError):
        Twist.from_json({"curve": "c1", "sign": 1})
    with pytest.raises(ValueError):
        MappingClassWord.from_json("c1")


def test_find_subsequence():
    w = word("c1 c2 c1 c3 c2")
    assert find_subsequence(w, word("c1 c3")) == [0, 3]
    assert find_subsequence(w, word("c2 c2")) == [1, 4]
    with pytest.raises(ValueError):
        find_subsequence(w, word("d"))


def test_pull_forward_shape():
    w = word("c1 c2 c3 c4")
    front, rest = pull_forward(w, [2])
    assert front == word("c3")
    assert rest[0] == Twist("c1", 1, word("c3^-1"))
    assert rest[2] == Twist("c4")
    with pytest.raises(IndexError):
        pull_forward(w, [9])


@settings(max_examples=25, deadline=None)
@given(short_words, st.data())
def test_pull_forward_preserves_product(w, data):
    cat = build_catalog(2, 2)
    pos = data.draw(st.lists(st.integers(0, len(w) - 1), unique=True))
    front, rest = pull_forward(w, pos)
    assert len(front) + len(rest) == len(w)
    assert equal(front * rest, w, cat, "pi1").status is Status.VERIFIED


@settings(max_examples=25, deadline=None)
@given(short_words, short_words)
def test_conjugate_is_conjugation(w, u):
    cat = build_catalog(2, 2)
    assert equal(conjugate(w, u), u * w * invert(u), cat, "pi1").status is Status.VERIFIED
