"""Named curve configurations and their twist actions.

Every supported surface gets a catalog of curves given by based loop words
in the ribbon model.  A catalog is only handed out after a witness suite of
relations has been checked in the faithful backend.

Curves whose embedding is not known (the ``sigma3..sigma7`` of the
eight-holed torus) are *abstract*: they have a name and a nonseparating flag
but no word, no homology class and no action.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Optional

import numpy as np

from .mapping import MappingClassWord, Twist, word
from .surface import Surface, SurfaceError, SurfaceSpec, build_surface
from .words import FreeAutomorphism, Word, abelianize, compose, cyclic_canonical


class CatalogError(ValueError):
    """Unsupported surface or a failed witness relation."""


class IntegrityError(RuntimeError):
    """A curve flag contradicts its homology witness."""


class UnknownAction(LookupError):
    """The curve is abstract: no word, class or twist action is known."""


@dataclass(frozen=True, eq=False)
class Curve:
    name: str
    word: Optional[Word]
    hclass: Optional[tuple]
    nonseparating: bool
    role: str = "curve"
    twist_auto: Optional[FreeAutomorphism] = field(default=None, repr=False)
    twist_auto_inv: Optional[FreeAutomorphism] = field(default=None, repr=False)

    @property
    def abstract(self) -> bool:
        return self.word is None


@lru_cache(maxsize=None)
def surface_for(g: int, n: int) -> Surface:
    return Surface(build_surface(g, n))


class CurveCatalog:
    """Immutable name -> Curve map on one surface, plus named conjugate twists."""

    def __init__(self, spec: SurfaceSpec, curves: dict, chain: tuple,
                 named_twists: dict, boundary: dict, chain_bounds: dict, label: str):
        self.spec = spec
        self.surface = surface_for(spec.g, spec.n)
        self.curves = MappingProxyType(dict(curves))
        self.chain = tuple(chain)
        self.named_twists = MappingProxyType(dict(named_twists))
        self.boundary = MappingProxyType(dict(boundary))  # name -> model boundary index
        self.chain_bounds = MappingProxyType(dict(chain_bounds))  # h -> (name, name)
        self.label = label

    def __contains__(self, name):
        return name in self.curves

    def __getitem__(self, name) -> Curve:
        try:
            return self.curves[name]
        except KeyError:
            raise CatalogError(f"no curve named {name!r} on {self.label}") from None

    def __iter__(self):
        return iter(self.curves)

    def __repr__(self):
        return f"CurveCatalog({self.label}, {len(self.curves)} curves)"

    # -- twists --------------------------------------------------------------
    def twist_auto(self, name: str, sign: int = 1) -> FreeAutomorphism:
        c = self[name]
        if c.abstract:
            raise UnknownAction(f"{name} is an abstract curve without a known action")
        return c.twist_auto if sign == 1 else c.twist_auto_inv

    def named(self, name: str) -> Twist:
        """Positive twist called ``name``: a catalog curve or a named conjugate."""
        if name in self.named_twists:
            return self.named_twists[name]
        self[name]
        return Twist(name)

    def chain_names(self, k: int) -> list:
        if not 1 <= k <= len(self.chain):
            raise CatalogError(f"chain on {self.label} has {len(self.chain)} curves, asked for {k}")
        return list(self.chain[:k])

    # -- homology ------------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.surface.n_loops

    def hclass(self, name: str) -> np.ndarray:
        c = self[name]
        if c.hclass is None:
            raise UnknownAction(f"{name} has no known homology class")
        return np.array(c.hclass, dtype=object)

    def transvection(self, name: str) -> np.ndarray:
        return self.surface.transvection(self.hclass(name))

    def is_nonseparating(self, name: str) -> bool:
        c = self[name]
        if c.nonseparating and c.hclass is not None and self.surface.boundary_span_contains(c.hclass):
            raise IntegrityError(f"{name} is flagged nonseparating but its class lies in the boundary span")
        return c.nonseparating

    def witnessed(self, name: str) -> Optional[bool]:
        """True/False when the homology witness is available, None for abstract curves."""
        c = self[name]
        if c.hclass is None:
            return None
        return not self.surface.boundary_span_contains(c.hclass)

    def canonical(self, name: str) -> Word:
        c = self[name]
        if c.abstract:
            raise UnknownAction(f"{name} is abstract")
        return cyclic_canonical(c.word)

    def report(self) -> list:
        rows = []
        for name, c in self.curves.items():
            rows.append({
                "name": name,
                "role": c.role,
                "word": None if c.word is None else self.surface.alphabet.format(c.word),
                "hclass": None if c.hclass is None else [int(v) for v in c.hclass],
                "nonseparating": c.nonseparating,
            })
        return rows


# -- curve data ----------------------------------------------------------------

def _comm(i: int) -> str:
    return f"a{i} b{i} a{i}' b{i}'"


def _prefix(k: int) -> str:
    return " ".join(_comm(i) for i in range(1, k + 1))


def _holes(lo: int, hi: int) -> str:
    return " ".join(f"y{j}" for j in range(lo, hi + 1))


def _data_g2(g: int) -> dict:
    """Closed chain c1..c(2g+1) whose neighbourhood is all of the surface."""
    cur = {"c1": "a1", "c2": "b1", "c3": "y2' a2' a1'"}
    for i in range(2, g):
        cur[f"c{2 * i}"] = f"b{i}"
        cur[f"c{2 * i + 1}"] = f"a{i + 1}' b{i} a{i} b{i}'"
    cur[f"c{2 * g}"] = f"b{g}"
    cur[f"c{2 * g + 1}"] = f"a{g}"
    cur["d"] = "y2' a2'"
    cur["e"] = "y2' a2' b1 a1 b1' a1'"
    if g >= 3:
        cur["b"] = "a3' b2 a2 b2' a2' b1 a1 b1' a1' y2'"
        cur["c"] = "a3' b2 y2' b2'"
    return cur


def _open_chain(length: int) -> dict:
    """Chain without hole letters: c3 = a1 a2, c(2i+1) = a(i+1)^-1 b_i a_i b_i^-1."""
    cur = {"c1": "a1", "c2": "b1", "c3": "a1 a2"}
    i = 2
    while len(cur) < length:
        cur[f"c{2 * i}"] = f"b{i}"
        if len(cur) < length:
            cur[f"c{2 * i + 1}"] = f"a{i + 1}' b{i} a{i} b{i}'"
        i += 1
    return dict(list(cur.items())[:length])


def _torus_alphas(n: int, first: int) -> dict:
    """Parallel curves a1 y_first ... y_k on a torus with holes."""
    out = {}
    for k in range(1, n + 1):
        out[k] = "a1" + ("" if k == 1 else " " + _holes(first, first + k - 2))
    return out


def _spec_data(g: int, n: int) -> dict:
    """Raw curve description for a supported ``(g, n)``."""
    curves: dict = {}
    roles: dict = {}
    abstract: list = []
    named: tuple = ()
    chain: list = []
    chain_bounds: dict = {}
    boundary: dict = {}

    def put(name, text, role="curve"):
        curves[name] = text
        roles[name] = role

    if n == 2 and g >= 2:
        data = _data_g2(g)
        chain = [f"c{i}" for i in range(1, 2 * g + 2)]
        for k, v in data.items():
            put(k, v, "chain" if k in chain else "curve")
        boundary = {"delta1": 1, "delta2": 2}
        chain_bounds = {1: ("d", "e"), g: ("delta1", "delta2")}
        if g >= 3:
            chain_bounds[2] = ("b", "c")
    elif n == 1 and g >= 1:
        # capping the second boundary of the two-holed model removes the y letters
        chain = [f"c{i}" for i in range(1, 2 * g + 1)]
        if g == 1:
            data = {"c1": "a1", "c2": "b1"}
        else:
            data = _open_chain(2 * g)
            data["d"] = "a2"
            data["e"] = _comm(1) + " a2"
            chain_bounds = {1: ("d", "e")}
        for k, v in data.items():
            put(k, v, "chain" if k in chain else "curve")
        boundary = {"delta1": 1}
    elif (g, n) == (2, 4):
        c = "a1 b1 a1' b1'"
        data = {"c1": "a1", "c2": "b1", "c3": "a1 a2", "c4": "b2", "d": "a2", "e": f"{c} a2"}
        chain = ["c1", "c2", "c3", "c4"]
        for k, v in data.items():
            put(k, v, "chain" if k in chain else "curve")
        put("alpha1", "a2")
        put("alpha2", "a1 a2")
        put("alpha3", f"{c} a2")
        put("alpha4", f"{c} a2 y2")
        put("alpha5", f"{c} a2 y2 y3")
        put("alpha6", f"{c} a2 y2 y3 y4")
        put("beta", "b2")
        put("gamma", "y2 y3 y4")
        put("gamma'", "y3 y4")
        put("sigma", f"{c} a2 y3 y4")
        put("sigma'", f"{c} a2 y2 y4")
        boundary = {"delta1": 1, "delta4": 2, "delta5": 3, "delta6": 4}
        chain_bounds = {1: ("d", "e")}
        named = ("3", "6", "36")
    elif g == 1 and n in (5, 6):
        al = _torus_alphas(n, 2)
        for k, v in al.items():
            put(f"alpha{k}", v)
        put("beta", "b1")
        if n == 5:
            put("gamma", "y4 y5")
            put("sigma", "a1 y2 y3 y5")
        else:
            put("gamma", "y4 y5 y6")
            put("gamma'", "y5 y6")
            put("sigma", "a1 y2 y3 y5 y6")
            put("sigma'", "a1 y2 y3 y4 y6")
            named = ("3", "6", "36")
        boundary = {f"delta{j}": j for j in range(1, n + 1)}
    elif (g, n) == (1, 8):
        # alpha5, alpha6, ... , alpha4 run once around the torus; see _EIGHT_ORDER
        order = [5, 6, 7, 8, 1, 2, 3, 4]
        for pos, k in enumerate(order):
            put(f"alpha{k}", "a1" + ("" if pos == 0 else " " + _holes(2, pos + 1)))
        put("beta", "b1")
        holes = [7, 8, 1, 2, 3, 4, 5]
        boundary = {f"delta{d}": j for d, j in zip(holes, range(2, 9))}
        boundary["delta6"] = 1
        abstract = [f"sigma{i}" for i in range(3, 8)]
        named = ("1", "4", "6")
    elif n == 6 and g >= 3:
        data = _open_chain(2 * g - 1)
        chain = list(data)
        for k, v in data.items():
            put(k, v, "chain")
        put("d", "a2")
        put("e", _comm(1) + " a2")
        chain_bounds = {1: ("d", "e"), g - 1: ("alpha5", "alpha7")}
        pre = _prefix(g - 1)
        order = [5, 7, 8, 1, 2, 3, 4]
        put("alpha5", f"a{g}")
        put("alpha6", data[f"c{2 * g - 1}"])
        for pos, k in enumerate(order[1:]):
            put(f"alpha{k}", f"{pre} a{g}" + ("" if pos == 0 else " " + _holes(2, pos + 1)))
        put("beta", f"b{g}")
        # delta7, delta8 bound the neighbourhood of c1..c(2g-3)
        put("delta7", f"a{g - 1}")
        put("delta8", f"{_prefix(g - 2)} a{g - 1}")
        if g - 2 >= 1:
            chain_bounds[g - 2] = ("delta7", "delta8")
        boundary = {"delta1": 2, "delta2": 3, "delta3": 4, "delta4": 5, "delta5": 6, "delta6": 1}
        abstract = [f"sigma{i}" for i in range(3, 8)]
        named = ("1", "4", "6")
    else:
        raise CatalogError(f"no curve catalog for genus {g} with {n} boundary components")
    return dict(curves=curves, roles=roles, abstract=abstract, named=named, chain=chain,
                chain_bounds=chain_bounds, boundary=boundary)


# indexing of the conjugated beta curves
def _named_twists(g: int, n: int, which) -> dict:
    out = {}
    for w in which:
        if (g, n) in ((2, 4), (1, 6)):
            # beta_3 = t_alpha3^-1(beta), beta_6 = t_alpha6^-1(beta), beta_36 = t_alpha6^-1(beta_3)
            conj = {"3": "alpha3^-1", "6": "alpha6^-1", "36": "alpha6^-1 alpha3^-1"}[w]
        else:
            # beta_i = t_alpha_i(beta) in the eight-holed torus relation
            conj = f"alpha{w}"
        out[f"beta{w}"] = Twist("beta", 1, MappingClassWord.parse(conj))
    return out


# lantern curves around several holes
_SEPARATING = frozenset({"gamma", "gamma'"})


@lru_cache(maxsize=None)
def build_catalog(g: int, n: int, check: bool = True) -> CurveCatalog:
    """Catalog for ``Sigma_{g,n}``; raises ``CatalogError`` if unsupported or a witness fails."""
    try:
        spec = build_surface(g, n)
    except SurfaceError as exc:
        raise CatalogError(str(exc)) from None
    data = _spec_data(g, n)
    S = surface_for(g, n)
    curves = {}
    for name, text in data["curves"].items():
        w = S.parse(text)
        sep = name in _SEPARATING
        curves[name] = _make_curve(S, name, w, "separating" if sep else data["roles"][name],
                                   nonseparating=not sep)
    for name, j in data["boundary"].items():
        w = S.boundary_word(j)
        curves[name] = _make_curve(S, name, w, "boundary", nonseparating=False)
    for name in data["abstract"]:
        curves[name] = Curve(name, None, None, True, "abstract")
    named = _named_twists(g, n, data["named"])
    cat = CurveCatalog(spec, curves, tuple(data["chain"]), named, data["boundary"],
                       data["chain_bounds"], f"Sigma_{{{g},{n}}}")
    if check:
        run_witness_suite(cat)
    return cat


def _make_curve(S: Surface, name: str, w: Word, role: str, nonseparating: bool = True) -> Curve:
    if not S.is_simple(w):
        raise CatalogError(f"curve {name} is not simple in the model")
    h = tuple(int(v) for v in S.homology_class(w))
    return Curve(name, w, h, nonseparating, role, S.twist(w, 1), S.twist(w, -1))


# -- witnesses -------------------------------------------------------------------

def _product(cat: CurveCatalog, seq) -> FreeAutomorphism:
    r = FreeAutomorphism.identity(cat.surface.rank)
    for name, s in seq:
        r = compose(r, cat.twist_auto(name, s), 10 ** 6)
    return r


def witness_relations(cat: CurveCatalog) -> list:
    """``(label, lhs, rhs)`` with sides as lists of ``(curve, sign)``."""
    out = []
    ch = cat.chain
    for i in range(len(ch) - 1):
        a, b = ch[i], ch[i + 1]
        out.append((f"braid {a} {b}", [(a, 1), (b, 1), (a, 1)], [(b, 1), (a, 1), (b, 1)]))
    for i in range(len(ch)):
        for j in range(i + 2, len(ch)):
            a, b = ch[i], ch[j]
            out.append((f"commute {a} {b}", [(a, 1), (b, 1)], [(b, 1), (a, 1)]))
    for h, (x, y) in sorted(cat.chain_bounds.items()):
        if 2 * h + 1 > len(ch) or 2 * h + 1 > 5:
            continue  # longer chains are checked by the relation suite
        seq = [(c, 1) for c in ch[: 2 * h + 1]] * (2 * h + 2)
        out.append((f"chain h={h}", seq, [(x, 1), (y, 1)]))
    if cat.spec.n == 1 and len(ch) >= 2 and len(ch) <= 4:
        out.append((f"even chain {len(ch)}", [(c, 1) for c in ch] * (2 * len(ch) + 2), [("delta1", 1)]))
    if "sigma" in cat and not cat["sigma"].abstract:
        lhs = [("gamma", 1), ("sigma", 1), ("alpha4", 1)]
        if cat.spec.n == 5:
            rhs = [("delta4", 1), ("delta5", 1), ("alpha3", 1), ("alpha5", 1)]
        else:
            rhs = [("delta4", 1), ("gamma'", 1), ("alpha3", 1), ("alpha6", 1)]
        out.append(("lantern 1", lhs, rhs))
    if "sigma'" in cat:
        out.append(("lantern 2", [("gamma'", 1), ("sigma'", 1), ("alpha5", 1)],
                    [("delta5", 1), ("delta6", 1), ("alpha4", 1), ("alpha6", 1)]))
    return out


def run_witness_suite(cat: CurveCatalog) -> None:
    if not chirality_probe():
        raise CatalogError("twist handedness check failed: lantern relation does not hold")
    for label, lhs, rhs in witness_relations(cat):
        if _product(cat, lhs) != _product(cat, rhs):
            raise CatalogError(f"witness relation failed on {cat.label}: {label}")
        if _homology(cat, lhs).tolist() != _homology(cat, rhs).tolist():
            raise CatalogError(f"witness relation failed in homology on {cat.label}: {label}")
    for name, c in cat.curves.items():
        if c.nonseparating and c.hclass is not None:
            cat.is_nonseparating(name)


def _homology(cat: CurveCatalog, seq) -> np.ndarray:
    m = np.identity(cat.rank, dtype=object)
    for name, _ in seq:
        t = cat.transvection(name)
        m = m @ (t if _ == 1 else _inverse_transvection(cat, name))
    return m


def _inverse_transvection(cat: CurveCatalog, name: str) -> np.ndarray:
    c = cat.hclass(name).reshape(-1, 1)
    J = cat.surface.intersection_form
    return np.identity(cat.rank, dtype=object) - c @ (J @ c).T


@lru_cache(maxsize=None)
def chirality_probe(sign: int = 1) -> bool:
    """Whether positive twists satisfy the lantern relation with the standard factor order.

    Unlike the chain relations, the lantern relation is not preserved by
    replacing every twist with its inverse, so it pins the handedness.
    ``sign = -1`` runs the probe with the mirrored convention.
    """
    S = surface_for(1, 5)
    P = S.parse
    gam, sig, a3, a4, a5 = P("y4 y5"), P("a1 y2 y3 y5"), P("a1 y2 y3"), P("a1 y2 y3 y4"), P("a1 y2 y3 y4 y5")
    d4, d5 = P("y4"), P("y5")

    def prod(ws):
        r = FreeAutomorphism.identity(S.rank)
        for w in ws:
            r = compose(r, S.twist(w, sign))
        return r
    return prod([gam, sig, a4]) == prod([d4, d5, a3, a5])
