import pytest
from hypothesis import given, strategies as st

from mcgfactor.words import (Alphabet, BudgetExceeded, FreeAutomorphism, WordError, apply, compose,
                             cyclic_canonical, cyclic_reduce, first_difference, inverse, multiply,
                             reduce)
from oracles import naive_apply, naive_cyclic_canonical, naive_reduce, words_up_to

letters = st.integers(min_value=-3, max_value=3).filter(bool)
words = st.lists(letters, max_size=24).map(tuple)


def test_reduce_examples():
    assert reduce((1, -1)) == ()
    assert reduce((1, 2, -2, -1, 3)) == (3,)
    assert reduce((1, 2, -1)) == (1, 2, -1)
    assert reduce(()) == ()


def test_cyclic_reduce_examples():
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((-2, 1, 3, 2)) == (1, 3)


def test_cyclic_canonical_frozen():
    assert cyclic_canonical((2, 1)) == (-2, -1)
    assert cyclic_canonical((-1, -2)) == (-2, -1)
    assert cyclic_canonical((3, -1, 2)) == (-3, -2, 1)
    assert cyclic_canonical((1, 2, -1, -2)) == (-2, -1, 2, 1)


def test_exhaustive_against_oracle():
    for w in words_up_to(2, 5):
        assert reduce(w) == naive_reduce(w)
        assert cyclic_canonical(w) == naive_cyclic_canonical(w)


@given(words)
def test_reduce_matches_oracle(w):
    assert reduce(w) == naive_reduce(w)


@given(words, words)
def test_multiply_inverse(u, v):
    assert multiply(u, inverse(u)) == ()
    assert multiply(u, v) == reduce(u + v)
    assert inverse(multiply(u, v)) == multiply(inverse(v), inverse(u))


@given(words, words)
def test_cyclic_canonical_conjugation_invariant(w, u):
    conj = multiply(u, w, inverse(u))
    assert cyclic_canonical(conj) == cyclic_canonical(w)
    assert cyclic_canonical(inverse(w)) == cyclic_canonical(w)


@given(words)
def test_cyclic_canonical_is_cyclically_reduced(w):
    c = cyclic_canonical(w)
    assert reduce(c) == c
    if len(c) > 1:
        assert c[0] != -c[-1]


def test_alphabet():
    A = Alphabet(("a", "b"))
    assert A.parse("a b^-1 b a'") == ()
    assert A.parse("a b' b b'") == (1, -2)
    assert A.format((1, -2)) == "a b^-1"
    assert A.format(()) == "1"
    with pytest.raises(WordError):
        A.parse("c")
    with pytest.raises(WordError):
        Alphabet(("a", "a"))
    with pytest.raises(WordError):
        A.check((3,))


def test_apply_and_compose():
    f = FreeAutomorphism([(1, 2), (2,)])
    g = FreeAutomorphism([(1,), (2, 1)])
    assert apply(f, (1, -2)) == (1,)
    fg = compose(f, g)
    for w in [(1,), (2,), (1, 2, -1)]:
        assert apply(fg, w) == apply(f, apply(g, w))
    assert first_difference(fg, fg) is None
    assert first_difference(f, g) == 0


@given(words)
def test_apply_matches_oracle(w):
    f = FreeAutomorphism([(1, 2), (2, -3), (3, 1)])
    assert apply(f, w) == naive_apply(f.images, w)


def test_budget():
    f = FreeAutomorphism([(1, 1, 1), (2,)])
    with pytest.raises(BudgetExceeded) as info:
        apply(f, (1,) * 10, budget=20)
    assert info.value.budget == 20


def test_identity():
    e = FreeAutomorphism.identity(3)
    assert e.is_identity()
    assert hash(e) == hash(FreeAutomorphism.identity(3))
