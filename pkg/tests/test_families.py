import dataclasses

import pytest

from mcgfactor.catalog import build_catalog
from mcgfactor.engine import Status, act_on_curve, equal, evaluate_homology
from mcgfactor.families import (FAMILIES, FamilyError, TRANSPORT_C4_TO_C1, Factorization,
                                cor1_genus2_squared, d9_identity, d9_word, expected_length,
                                four_boundary, four_boundary_decomposition, generate, k_word, main_i,
                                main_ii, main_ii_head_target, multitwist_power, phi_word, prop_tm,
                                six_boundary, six_boundary_decomposition, squared_rotation,
                                structural_violations, verify_factorization)
from mcgfactor.mapping import MappingClassWord, Twist, word
from mcgfactor.relations import chain_relation
from oracles import LENGTHS


def test_phi_word():
    cat = build_catalog(2, 2)
    phi = phi_word(cat)
    assert len(phi) == 12 and phi.is_positive()
    assert act_on_curve(phi, "c3", cat) == cat.canonical("e")
    assert act_on_curve(phi, "d", cat) == cat.canonical("c3")


def test_phi_with_beta36():
    cat = build_catalog(2, 4)
    phi = phi_word(cat, "beta36")
    assert phi[8] == cat.named("beta36") == phi[11]


def test_d9():
    cat = build_catalog(2, 2)
    d9 = d9_word(cat)
    assert len(d9) == 9
    assert d9[0] == Twist("c5", 1, word("c3^-1 d^-1 c4^-1"))
    lhs, rhs = d9_identity(cat)
    assert equal(lhs, rhs, cat, "pi1").status is Status.VERIFIED


@pytest.mark.parametrize("m", [1, 2])
def test_prop_tm(m):
    f = prop_tm(m)
    assert f.length == 12 + 10 * m
    assert verify_factorization(f, "pi1").status is Status.VERIFIED


def test_transport_word():
    cat = build_catalog(3, 2)
    assert act_on_curve(MappingClassWord.parse(TRANSPORT_C4_TO_C1), "c4", cat) == cat.canonical("c1")


def test_main_i_with_transport():
    w = MappingClassWord.parse("c2 c1 c3 c2 c4 c3")
    f = main_i(1, transport=w)
    assert f.target[2] == Twist("c4", 1, w)
    assert verify_factorization(f, "pi1").status is Status.VERIFIED


def test_main_ii_head_is_sound():
    f = main_ii(3, 1)
    head = f.twists[:31]
    assert equal(head, main_ii_head_target(), f.catalog(), "pi1").status is Status.VERIFIED
    assert f.block("K") == k_word(3)
    assert len(k_word(3)) == 2 * 4 * 7 - 31


def test_main_ii_homology_identity():
    f = main_ii(3, 1)
    m = evaluate_homology(f.twists, f.catalog())
    assert (m == evaluate_homology(f.target, f.catalog())).all()
    assert m.tolist() == [[int(i == j) for j in range(7)] for i in range(7)]


@pytest.mark.parametrize("g", [3, 4])
def test_main_ii_verifies(g):
    assert verify_factorization(main_ii(g, 1)).status is Status.VERIFIED


def test_cor1():
    phi, d2 = squared_rotation()
    assert phi == phi_word() and len(d2) == 28
    f = cor1_genus2_squared(1)
    assert f.length == 50
    assert verify_factorization(f, "pi1").status is Status.VERIFIED


def test_four_boundary():
    r, phi, d = four_boundary_decomposition()
    assert len(r) == 20 and len(d) == 9
    cat = build_catalog(2, 4)
    lhs = word("delta1", "delta4", "delta5", "delta6")
    assert equal(lhs, r, cat, "pi1").status is Status.VERIFIED
    f = four_boundary(1)
    assert f.length == 31 and f.all_nonseparating
    assert verify_factorization(f, "pi1").status is Status.VERIFIED


def test_six_boundary_decomposition_sigma_free_steps():
    parts = six_boundary_decomposition(3)
    cat = parts["catalog"]
    assert len(parts["D'"]) == 17 and len(parts["D10"]) == 10
    assert parts["t434"] == word("c4 c3 c4")
    # the chain part: alpha5 alpha7 = delta7 delta8 A B
    rhs = word("delta7", "delta8") * parts["A"] * parts["B"]
    assert equal(parts["lead"], rhs, cat, "pi1").status is Status.VERIFIED


def test_six_boundary_rotated_core_conjugation():
    # t_Q(d) differs from t_d, hence the global conjugation by Q^-1
    parts = six_boundary_decomposition(3)
    cat = parts["catalog"]
    assert act_on_curve(parts["Q"], "d", cat) != cat.canonical("d")


def test_six_boundary_is_inconclusive_not_falsified():
    f = six_boundary(3, 1)
    assert f.length == 39
    v = verify_factorization(f)
    assert v.status is Status.INCONCLUSIVE
    assert "sigma" in v.note


def test_multitwist_power():
    assert multitwist_power(3, 2, 1).length == 112
    assert multitwist_power(2, 2, 1).length == 50
    f = multitwist_power(2, 3, 1)
    assert f.target.base_curves() == ["delta1"] * 3 + ["delta2"] * 3
    assert verify_factorization(f).status is Status.VERIFIED
    with pytest.raises(FamilyError):
        multitwist_power(2, 1, 1)
    assert len(chain_relation(build_catalog(3, 2), 3).lhs) == 56


@pytest.mark.parametrize("family", ["main-i", "cor1", "four-boundary", "prop-tm"])
def test_lengths_genus_free(family):
    for m in range(1, 11):
        f = generate(family, None, m)
        assert f.length == f.claimed_length == LENGTHS[family](None, m) == expected_length(family, None, m)


@pytest.mark.parametrize("family", ["main-ii", "six-boundary"])
@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_lengths_by_genus(family, g):
    prev = None
    for m in range(1, 11):
        f = generate(family, g, m)
        assert f.length == LENGTHS[family](g, m) == expected_length(family, g, m)
        if prev is not None:
            assert f.length - prev == 10
        prev = f.length


def test_length_examples():
    assert main_ii(4, 2).length == 100
    assert six_boundary(5, 2).length == 65
    assert four_boundary(4).length == 61
    assert main_i(5).length == 71
    assert prop_tm(3).length == 42


@pytest.mark.parametrize("bad", [0, -1])
def test_bad_m(bad):
    for fam in FAMILIES:
        with pytest.raises(FamilyError):
            generate(fam, 3, bad)


def test_bad_genus():
    with pytest.raises(FamilyError):
        main_ii(2, 1)
    with pytest.raises(FamilyError):
        six_boundary(2, 1)
    with pytest.raises(FamilyError):
        generate("nope", 3, 1)


def test_tampered_sign_is_falsified():
    f = main_i(1)
    twists = list(f.twists)
    twists[5] = twists[5].inverse()
    bad = dataclasses.replace(f, twists=MappingClassWord(twists))
    assert structural_violations(bad)
    v = verify_factorization(bad)
    assert v.status is Status.FALSIFIED and v.witness["structural"]


def test_tampered_curve_is_falsified():
    f = main_i(1)
    twists = list(f.twists)
    twists[-1] = Twist("c1")
    bad = dataclasses.replace(f, twists=MappingClassWord(twists))
    assert not structural_violations(bad)
    v = verify_factorization(bad)
    assert v.status is Status.FALSIFIED


def test_unknown_curve_is_structural():
    f = main_i(1)
    bad = dataclasses.replace(f, twists=MappingClassWord([Twist("nope")] + list(f.twists[1:])))
    assert verify_factorization(bad).status is Status.FALSIFIED


def test_blocks_cover_word():
    f = main_ii(3, 2)
    assert sum(n for _, _, n in f.blocks) == f.length
    assert [lbl for lbl, _, _ in f.blocks] == ["D9", "phi-conjugate", "T^m", "K"]
    assert isinstance(f, Factorization)
