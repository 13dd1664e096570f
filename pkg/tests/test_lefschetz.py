import pytest

from mcgfactor.catalog import build_catalog
from mcgfactor.families import (Factorization, cor1_genus2_squared, four_boundary, main_i, main_ii,
                                multitwist_power, six_boundary)
from mcgfactor.lefschetz import (ShapeError, chi_series, format_table, h1_total_rank, lefschetz_data,
                                 section_data)
from mcgfactor.mapping import MappingClassWord, word
from oracles import chi


def test_section_data_examples():
    cat = build_catalog(2, 2)
    assert section_data(word("delta1 delta2"), cat) == (2, 1, None)
    assert section_data(word("delta1 delta1 delta2 delta2"), cat) == (2, 2, None)
    n, k, extra = section_data(word("delta1 delta2 c4"), cat)
    assert (n, k, extra.curve) == (2, 1, "c4")


def test_section_data_without_catalog():
    assert section_data(word("delta1 delta2"))[:2] == (2, 1)


@pytest.mark.parametrize("text", ["delta1 delta1 delta2", "delta1 c1 c2", "c1", "delta1^-1"])
def test_section_data_rejects(text):
    with pytest.raises(ShapeError):
        section_data(word(text), build_catalog(2, 2))


def test_main_ii_data():
    d = lefschetz_data(main_ii(3, 1))
    assert (d.r, d.chi, d.n_sections, d.section_self_intersection) == (56, 48, 2, -1)
    assert d.chi == chi(3, 56)
    assert d.h1_total_rank == 0
    assert len(d.vanishing_classes) == 56


def test_cor1_data():
    d = lefschetz_data(cor1_genus2_squared(1))
    assert (d.chi, d.section_self_intersection) == (46, -2)


def test_extra_twist_flagged():
    d = lefschetz_data(main_i(1))
    assert d.extra_twist.curve == "c4" and "extra" in d.note
    d = lefschetz_data(four_boundary(1))
    assert d.n_sections == 4 and d.extra_twist.curve == "beta"


def test_abstract_classes_reported():
    d = lefschetz_data(six_boundary(3, 1))
    assert d.vanishing_classes is None and d.h1_total_rank is None
    assert d.chi == chi(3, 39)
    assert d.to_json()["vanishing_classes"] is None


def test_empty_factorization():
    f = Factorization((2, 2), MappingClassWord(), MappingClassWord(), "empty", 0, 0, True)
    d = lefschetz_data(f)
    assert (d.r, d.chi, d.h1_total_rank) == (0, -4, 4)
    assert "not recognized" in d.note


def test_chi_minus_r_constant():
    for f in [main_ii(3, 1), main_ii(3, 4), multitwist_power(3, 2, 1), six_boundary(3, 2)]:
        d = lefschetz_data(f)
        assert d.chi - d.r == 4 - 4 * 3


def test_chi_series():
    assert [c for _, c in chi_series("main-ii", 3, range(1, 4))] == [48, 58, 68]
    assert [c for _, c in chi_series("cor1", None, range(1, 4))] == [46, 56, 66]
    six = [c for _, c in chi_series("six-boundary", 3, range(1, 6))]
    assert all(b - a == 10 for a, b in zip(six, six[1:]))


def test_h1_rank():
    assert h1_total_rank([], 2) == 4
    assert h1_total_rank([(1, 0, 0, 0, 5), (2, 0, 0, 0, 0)], 2) == 3
    assert h1_total_rank([(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 1)], 2) == 1


def test_format_table():
    text = format_table([(1, 46), (2, 56)], ["m", "chi"])
    assert text.splitlines()[0].split() == ["m", "chi"]
    assert len(text.splitlines()) == 4
