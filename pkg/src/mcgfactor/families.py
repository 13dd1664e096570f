"""Explicit positive factorizations with an unbounded number of twists.

Each constructor returns a :class:`Factorization`: a target word (boundary
twists, possibly times one extra twist) and a sequence of positive twists
claimed to multiply to it.  Lengths grow by exactly 10 per step of ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .catalog import CurveCatalog, build_catalog
from .engine import Status, Verdict, equal
from .mapping import (MappingClassWord, Twist, conjugate, find_subsequence, invert, power,
                      pull_forward, word)
from .relations import T_word, chain_split, eight_holed_torus


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    surface: tuple  # (g, n)
    target: MappingClassWord
    twists: MappingClassWord
    family: str
    m: int
    claimed_length: int
    all_nonseparating: bool
    g: Optional[int] = None
    k: Optional[int] = None
    blocks: tuple = field(default=())  # (label, start, length)

    @property
    def length(self) -> int:
        return len(self.twists)

    def catalog(self) -> CurveCatalog:
        return build_catalog(*self.surface)

    def block(self, label: str) -> MappingClassWord:
        for name, start, n in self.blocks:
            if name == label:
                return self.twists[start:start + n]
        raise KeyError(label)


def _blocks(*parts) -> tuple:
    out, pos = [], 0
    for label, w in parts:
        out.append((label, pos, len(w)))
        pos += len(w)
    return tuple(out)


def _make(cat: CurveCatalog, target, parts, family: str, m: int, **kw) -> Factorization:
    twists = word(*[w for _, w in parts])
    return Factorization((cat.spec.g, cat.spec.n), word(target), twists, family, m, len(twists),
                         _nonseparating(twists, cat), blocks=_blocks(*parts), **kw)


def _nonseparating(w: MappingClassWord, cat: CurveCatalog) -> bool:
    return all(cat.is_nonseparating(t.curve) for t in w)


def _check_m(m: int):
    if not isinstance(m, int) or m < 1:
        raise FamilyError("m must be a positive integer")


def _x_twist(cat: CurveCatalog, x: Union[str, Twist]) -> Twist:
    return x if isinstance(x, Twist) else cat.named(x)


# -- building blocks -----------------------------------------------------------

def phi_word(cat: Optional[CurveCatalog] = None, x: Union[str, Twist] = "c4") -> MappingClassWord:
    """``t4 t3 t2 t1 t1 t2 t3 t4 t_x t_d t3 t_x``; ``x`` meets c3 and d once."""
    cat = cat or build_catalog(2, 2)
    c1, c2, c3, c4 = cat.chain_names(4)
    xt = _x_twist(cat, x)
    return word(c4, c3, c2, c1, c1, c2, c3, c4, xt, "d", c3, xt)


def prop_tm(m: int, cat: Optional[CurveCatalog] = None, x: Union[str, Twist] = "c4") -> Factorization:
    """phi as 12 conjugated twists followed by ``T^m``, ``12 + 10m`` in all."""
    _check_m(m)
    cat = cat or build_catalog(2, 2)
    phi = phi_word(cat, x)
    c3 = cat.chain_names(3)[2]
    u = word(power(c3, -m), power("e", m))
    parts = [("phi-conjugate", conjugate(phi, u)), ("T^m", T_word(cat) ** m)]
    return _make(cat, phi, parts, "prop-tm", m)


def d9_word(cat: Optional[CurveCatalog] = None) -> MappingClassWord:
    cat = cat or build_catalog(2, 2)
    c1, c2, c3, c4, c5 = cat.chain_names(5)
    f = invert(word(c4, "d", c3))
    h = invert(word(c3))
    return word(Twist(c5, 1, f), Twist(c1, 1, f), Twist(c2, 1, f), Twist(c3, 1, f),
                Twist("e", 1, h), Twist(c4, 1, h), c2, c1, c5)


def d9_identity(cat: Optional[CurveCatalog] = None) -> tuple:
    """Both sides of ``t_a t_b = D9 (t4 t3 t2 t1 t1 t2 t3 t4) t4 t_d t3`` for the five-chain boundary pair."""
    cat = cat or build_catalog(2, 2)
    c1, c2, c3, c4, c5 = cat.chain_names(5)
    a, b = cat.chain_bounds[2]
    rhs = d9_word(cat) * word(c4, c3, c2, c1, c1, c2, c3, c4, c4, "d", c3)
    return word(a, b), rhs


def _two_chain_block(m: int, cat: CurveCatalog) -> tuple:
    """Factorization parts of ``t_a t_b t4`` with a, b bounding the five-chain."""
    return [("D9", d9_word(cat))] + [(lbl, w) for lbl, w in _prop_parts(m, cat, "c4")]


def _prop_parts(m: int, cat: CurveCatalog, x) -> list:
    f = prop_tm(m, cat, x)
    return [(lbl, f.block(lbl)) for lbl, _, _ in f.blocks]


# -- the families ----------------------------------------------------------------

def main_i(m: int, transport: Optional[MappingClassWord] = None) -> Factorization:
    """``t_delta1 t_delta2 t_c4`` on the genus-2 surface as ``21 + 10m`` positive twists.

    ``transport`` (a word ``w``) conjugates everything, giving a factorization
    of ``t_delta1 t_delta2 t_w(c4)``.
    """
    _check_m(m)
    cat = build_catalog(2, 2)
    parts = _two_chain_block(m, cat)
    target = word("delta1", "delta2", "c4")
    if transport is not None:
        transport = word(transport)
        parts = [(lbl, conjugate(w, transport)) for lbl, w in parts]
        target = word("delta1", "delta2", Twist("c4", 1, transport))
    return _make(cat, target, parts, "main-i", m, g=2)


# w(c4) = c1 for this product of chain twists
TRANSPORT_C4_TO_C1 = "c2 c1 c3 c2 c4 c3"


def k_word(g: int) -> MappingClassWord:
    """Tail of the unfolded closed chain after ``(t1..t5)^6 t1``."""
    cat = build_catalog(g, 2)
    ch = cat.chain_names(2 * g + 1)
    tail = word(*[word(*reversed(ch[:n])) * word(*ch[:n]) for n in range(6, 2 * g + 2)])
    front, rest = pull_forward(tail, [tail.twists.index(Twist("c1"))])
    assert front == word("c1")
    return rest


def main_ii(g: int, m: int) -> Factorization:
    """``t_delta1 t_delta2`` on genus ``g >= 3`` as ``2(g+1)(2g+1) - 10 + 10m`` positive twists."""
    _check_m(m)
    if g < 3:
        raise FamilyError("main-ii needs g >= 3")
    cat = build_catalog(g, 2)
    w = MappingClassWord.parse(TRANSPORT_C4_TO_C1)
    parts = [(lbl, conjugate(x, w)) for lbl, x in _two_chain_block(m, cat)]
    parts.append(("K", k_word(g)))
    return _make(cat, word("delta1", "delta2"), parts, "main-ii", m, g=g)


def main_ii_head_target() -> MappingClassWord:
    """What the first ``21 + 10m`` twists of ``main_ii`` multiply to."""
    return word("b", "c", "c1")


PHI_PATTERN = "c4 c3 c2 c1 c1 c2 c3 c4 c4 d c3 c4"


def squared_rotation(cat: Optional[CurveCatalog] = None) -> tuple:
    """``(phi, D'')`` with ``t_delta1^2 t_delta2^2 = phi D''``.

    The square of the split five-chain word is rotated to start at its
    ``t4 t3 t2 t1 t1 t2 t3 t4`` block (allowed: the square is central), and
    the remaining phi twists are pulled forward.
    """
    cat = cat or build_catalog(2, 2)
    x = chain_split(cat).rhs
    start = find_subsequence(x, MappingClassWord.parse("c4 c3 c2 c1 c1 c2 c3 c4"))[0]
    y = x[start:] * x * x[:start]
    pos = find_subsequence(y, MappingClassWord.parse(PHI_PATTERN))
    return pull_forward(y, pos)


def cor1_genus2_squared(m: int) -> Factorization:
    """``t_delta1^2 t_delta2^2`` on the genus-2 surface as ``40 + 10m`` positive twists."""
    _check_m(m)
    cat = build_catalog(2, 2)
    phi, d2 = squared_rotation(cat)
    parts = _prop_parts(m, cat, "c4") + [("D''", d2)]
    return _make(cat, word("delta1", "delta1", "delta2", "delta2"), parts, "cor1", m, g=2, k=2)


def multitwist_power(g: int, k: int, m: int) -> Factorization:
    """``t_delta1^k t_delta2^k``: one growing block plus closed-chain blocks."""
    _check_m(m)
    if not ((g >= 3 and k >= 1) or (g == 2 and k >= 2)):
        raise FamilyError("needs g >= 3 and k >= 1, or g = 2 and k >= 2")
    if g == 2:
        head, extra = cor1_genus2_squared(m), k - 2
    else:
        head, extra = main_ii(g, m), k - 1
    cat = build_catalog(g, 2)
    chain = word(*cat.chain_names(2 * g + 1)) ** (2 * g + 2)
    parts = [(f"{head.family}:{lbl}", head.block(lbl)) for lbl, _, _ in head.blocks]
    parts += [(f"chain-{i + 1}", chain) for i in range(extra)]
    target = word(*(["delta1"] * k + ["delta2"] * k))
    return _make(cat, target, parts, "multitwist-power", m, g=g, k=k)


def six_boundary_decomposition(g: int) -> dict:
    """Intermediate words of the six-boundary construction on ``Sigma_{g,6}``."""
    if g < 3:
        raise FamilyError("six-boundary needs g >= 3")
    cat = build_catalog(g, 6)
    ch = cat.chain_names(2 * g - 1)
    r8 = eight_holed_torus(cat).rhs
    lead, d10 = pull_forward(r8, [r8.twists.index(Twist("alpha5")), r8.twists.index(Twist("alpha7"))])
    a = word(*reversed(ch[:2 * g - 2])) * word(*ch[:2 * g - 2])
    b = word(*reversed(ch)) * word(*ch)
    pre = word(*reversed(ch[4:2 * g - 2]))  # t_(2g-2) .. t5
    core = word(*reversed(ch[:4])) * word(*ch[:4])
    # a = pre core pre^-1 as words; rotate pre to the end (the multitwist is central)
    assert a == pre * core * word(*ch[4:2 * g - 2])
    rest = word(*ch[4:2 * g - 2]) * b * d10 * pre
    pos = find_subsequence(rest, MappingClassWord.parse("c4 c3 c4"))
    t434, d_prime = pull_forward(rest, pos)
    q = core * word("c4")
    return {"catalog": cat, "R8": r8, "lead": lead, "D10": d10, "A": a, "B": b,
            "core": core, "t434": t434, "D'": d_prime, "Q": q}


def six_boundary(g: int, m: int) -> Factorization:
    """``t_delta1 .. t_delta6 t_d`` on ``Sigma_{g,6}`` as ``8g + 5 + 10m`` positive twists.

    ``delta1..delta6 = Q t3 t4 D'`` with ``Q = t4 t3 t2 t1 t1 t2 t3 t4 t4``
    gives ``delta1..delta6 t_Q(d) = phi D'``; conjugating by ``Q^-1`` turns
    the extra twist back into ``t_d``.
    """
    _check_m(m)
    parts_d = six_boundary_decomposition(g)
    cat, q = parts_d["catalog"], parts_d["Q"]
    parts = _prop_parts(m, cat, "c4") + [("D'", parts_d["D'"])]
    qi = invert(q)
    parts = [(lbl, conjugate(w, qi)) for lbl, w in parts]
    target = word(*[f"delta{i}" for i in range(1, 7)], "d")
    return _make(cat, target, parts, "six-boundary", m, g=g)


FOUR_BOUNDARY_R = ("c2 c1 c4 c3 c2 c1 c2 c3 c1 c2 c3 c4 c3 sigma sigma' alpha5 beta36 d beta6 c3")


def four_boundary_decomposition() -> tuple:
    """``(R, phi, D)`` with ``t_delta1 t_delta4 t_delta5 t_delta6 = R`` and ``R t_beta36 = phi D``."""
    cat = build_catalog(2, 4)
    r = word(*[cat.named(n) for n in FOUR_BOUNDARY_R.split()])
    rb = r * cat.named("beta36")
    phi = phi_word(cat, "beta36")
    pos = find_subsequence(rb, phi)
    front, d = pull_forward(rb, pos)
    assert front == phi
    return r, phi, d


def four_boundary(m: int) -> Factorization:
    """``t_delta1 t_delta4 t_delta5 t_delta6 t_beta36`` on ``Sigma_{2,4}`` as ``21 + 10m`` positive twists."""
    _check_m(m)
    cat = build_catalog(2, 4)
    _, _, d = four_boundary_decomposition()
    parts = _prop_parts(m, cat, "beta36") + [("D", d)]
    target = word("delta1", "delta4", "delta5", "delta6", cat.named("beta36"))
    return _make(cat, target, parts, "four-boundary", m, g=2)


FAMILIES = {
    "main-i": lambda g, m, k=None: main_i(m),
    "main-ii": lambda g, m, k=None: main_ii(g, m),
    "cor1": lambda g, m, k=None: cor1_genus2_squared(m),
    "multitwist-power": lambda g, m, k=None: multitwist_power(g, k if k is not None else 1, m),
    "six-boundary": lambda g, m, k=None: six_boundary(g, m),
    "four-boundary": lambda g, m, k=None: four_boundary(m),
    "prop-tm": lambda g, m, k=None: prop_tm(m),
}


def generate(family: str, g: Optional[int], m: int, k: Optional[int] = None) -> Factorization:
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    return FAMILIES[family](g, m, k)


def expected_length(family: str, g: Optional[int], m: int, k: Optional[int] = None) -> int:
    """Closed-form twist count of each family."""
    if family == "main-i":
        return 21 + 10 * m
    if family == "main-ii":
        return 2 * (g + 1) * (2 * g + 1) - 10 + 10 * m
    if family == "cor1":
        return 40 + 10 * m
    if family == "six-boundary":
        return 8 * g + 5 + 10 * m
    if family == "four-boundary":
        return 21 + 10 * m
    if family == "prop-tm":
        return 12 + 10 * m
    if family == "multitwist-power":
        k = 1 if k is None else k
        if g == 2:
            return 40 + 10 * m + (k - 2) * 30
        return expected_length("main-ii", g, m) + (k - 1) * (2 * g + 1) * (2 * g + 2)
    raise FamilyError(f"unknown family {family!r}")


# -- verification ------------------------------------------------------------------

def structural_violations(f: Factorization) -> list:
    cat = f.catalog()
    out = []
    if len(f.twists) != f.claimed_length:
        out.append(f"length {len(f.twists)} differs from claimed {f.claimed_length}")
    for i, t in enumerate(f.twists):
        if t.sign != 1:
            out.append(f"twist {i} ({t.curve}) is negative")
        if t.curve not in cat:
            out.append(f"twist {i}: unknown curve {t.curve}")
        elif not cat.is_nonseparating(t.curve) and f.all_nonseparating:
            out.append(f"twist {i} ({t.curve}) is not about a nonseparating curve")
    return out


def verify_factorization(f: Factorization, backend: str = "both", budget: Optional[int] = None) -> Verdict:
    try:
        problems = structural_violations(f)
    except Exception as exc:  # unknown curve names and the like
        problems = [str(exc)]
    if problems:
        return Verdict(Status.FALSIFIED, backend, witness={"structural": problems[:5]},
                       note="structural check failed")
    return equal(f.twists, f.target, f.catalog(), backend, budget)
