from hypothesis import assume, given, settings, strategies as st

from mcgfactor.catalog import build_catalog
from mcgfactor.certificate import parse, serialize
from mcgfactor.engine import Status, abelianization, act_on_curve, equal, evaluate_homology, evaluate_pi1
from mcgfactor.families import generate
from mcgfactor.mapping import MappingClassWord, Twist, conjugate, invert, word

CAT = build_catalog(2, 2)
NAMES = [n for n in CAT if not CAT[n].abstract]
twist = st.builds(Twist, st.sampled_from(NAMES), st.sampled_from([1, -1]))
mc_words = st.lists(twist, max_size=10).map(MappingClassWord)

slow = settings(max_examples=40, deadline=None)


@slow
@given(mc_words)
def test_word_times_inverse_is_identity(w):
    assert equal(w * invert(w), word(), CAT, "pi1").status is Status.VERIFIED


@slow
@given(mc_words)
def test_naturality(w):
    assert (abelianization(evaluate_pi1(w, CAT), CAT) == evaluate_homology(w, CAT)).all()


@slow
@given(mc_words, mc_words)
def test_verified_implies_homology_agrees(u, v):
    verdict = equal(u, v, CAT, "pi1")
    if verdict.status is Status.VERIFIED:
        assert (evaluate_homology(u, CAT) == evaluate_homology(v, CAT)).all()


@slow
@given(mc_words, st.sampled_from(["c1", "c3", "d", "e"]))
def test_twist_about_image_curve(w, name):
    # t_{w(c)} fixes w(c)
    t = Twist(name, 1, w)
    image = act_on_curve(w, name, CAT)
    assert act_on_curve(word(t) * w, name, CAT) == image


@slow
@given(mc_words, st.integers(1, 4))
def test_conjugated_braid(w, i):
    a, b = CAT.chain_names(i + 1)[i - 1:]
    lhs = conjugate(word(a, b, a), w)
    rhs = conjugate(word(b, a, b), w)
    assert equal(lhs, rhs, CAT, "pi1").status is Status.VERIFIED


@slow
@given(mc_words)
def test_boundary_twists_central(w):
    for d in ("delta1", "delta2"):
        assert equal(word(d) * w, w * word(d), CAT, "pi1").status is Status.VERIFIED


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["main-i", "main-ii", "cor1", "six-boundary", "four-boundary", "prop-tm"]),
       st.integers(3, 5), st.integers(1, 6))
def test_certificate_round_trip(family, g, m):
    f = generate(family, g, m)
    text = serialize(f)
    back, ok = parse(text)
    assert ok and back == f and serialize(back) == text
    assert f.twists.is_positive() and f.length == f.claimed_length


@settings(max_examples=30, deadline=None)
@given(mc_words, mc_words)
def test_homology_falsification_is_sound(u, v):
    verdict = equal(u, v, CAT, "homology")
    assume(verdict.status is Status.FALSIFIED)
    assert equal(u, v, CAT, "pi1").status is Status.FALSIFIED
