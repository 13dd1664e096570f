"""Named relations between twist words, and their verification.

The registry maps a stable string key to a constructor taking a catalog and
integer parameters.  ``verify`` delegates to the engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .catalog import CatalogError, CurveCatalog, build_catalog
from .engine import Verdict, equal
from .mapping import MappingClassWord, Twist, power, word


class RelationError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    name: str
    params: tuple
    lhs: MappingClassWord
    rhs: MappingClassWord
    verifiability: str = "pi1"  # or "homology-only"
    note: str = ""
    surface: tuple = field(default=(2, 2))

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.param_dict,
            "surface": {"g": self.surface[0], "n": self.surface[1]},
            "lhs_length": len(self.lhs),
            "rhs_length": len(self.rhs),
            "verifiability": self.verifiability,
            "note": self.note,
        }


def _chain(cat: CurveCatalog, k: int) -> list:
    try:
        return cat.chain_names(k)
    except CatalogError as exc:
        raise RelationError(str(exc)) from None


def _need(cat: CurveCatalog, *names):
    missing = [n for n in names if n not in cat and n not in cat.named_twists]
    if missing:
        raise RelationError(f"{cat.label} lacks curves: {', '.join(missing)}")


def _rel(cat, name, params, lhs, rhs, **kw) -> Relation:
    return Relation(name, tuple(sorted(params.items())), word(lhs), word(rhs),
                    surface=(cat.spec.g, cat.spec.n), **kw)


def braid_relation(cat: CurveCatalog, i: int) -> Relation:
    if i < 1:
        raise RelationError("i must be positive")
    ch = _chain(cat, i + 1)
    a, b = ch[i - 1], ch[i]
    return _rel(cat, "braid", {"i": i}, [a, b, a], [b, a, b])


def commute_relation(cat: CurveCatalog, i: int, j: int) -> Relation:
    if abs(i - j) <= 1 or min(i, j) < 1:
        raise RelationError("commutation needs |i - j| > 1")
    ch = _chain(cat, max(i, j))
    a, b = ch[i - 1], ch[j - 1]
    return _rel(cat, "commute", {"i": i, "j": j}, [a, b], [b, a])


def chain_relation(cat: CurveCatalog, h: int) -> Relation:
    if h < 1:
        raise RelationError("h must be positive")
    ch = _chain(cat, 2 * h + 1)
    if h not in cat.chain_bounds:
        raise RelationError(f"{cat.label} has no boundary pair for the chain of length {2 * h + 1}")
    a, b = cat.chain_bounds[h]
    return _rel(cat, "chain", {"h": h}, word(*ch) ** (2 * h + 2), [a, b])


def chain_unfold(cat: CurveCatalog, n: int) -> Relation:
    """``(t1..tn)^(n+1) = (t1..t(n-1))^n tn..t1 t1..tn``."""
    if n < 2:
        raise RelationError("n must be at least 2")
    ch = _chain(cat, n)
    lhs = word(*ch) ** (n + 1)
    rhs = word(*ch[:-1]) ** n * word(*reversed(ch)) * word(*ch)
    return _rel(cat, "chain-unfold", {"n": n}, lhs, rhs)


def T_word(cat: CurveCatalog) -> MappingClassWord:
    c1, c2, c3 = _chain(cat, 3)
    return word(c1, c2, c3) ** 2 * word(c2, c1, c3, c2)


def t_power_identity(cat: CurveCatalog, m: int) -> Relation:
    if m < 1:
        raise RelationError("m must be at least 1")
    _need(cat, "d", "e")
    c3 = _chain(cat, 3)[2]
    rhs = word(power("d", m), power(c3, -m), power("e", m), power(c3, -m))
    return _rel(cat, "t-power", {"m": m}, T_word(cat) ** m, rhs)


def chain_split(cat: CurveCatalog) -> Relation:
    """The five-chain relation with its three-chain part replaced by ``t_d t_e``."""
    _need(cat, "d", "e")
    c1, c2, c3, c4, c5 = _chain(cat, 5)
    lhs = word(c1, c2, c3, c4, c5) ** 6
    rhs = word(c1, c2, c3, c4, "d", "e", c4, c3, c2, c1, c5, c4, c3, c2, c1, c1, c2, c3, c4, c5)
    return _rel(cat, "chain-split", {}, lhs, rhs)


def lantern_relation(cat: CurveCatalog, variant: int) -> Relation:
    if variant == 1:
        _need(cat, "gamma", "sigma", "alpha3", "alpha4")
        lhs = ["gamma", "sigma", "alpha4"]
        if "delta5" in cat.boundary and "gamma'" not in cat:
            rhs = ["delta4", "delta5", "alpha3", "alpha5"]
            note = ""
        else:
            # inside the six-holed torus the five-holed picture sits with
            # gamma' in place of delta5 and alpha6 in place of alpha5
            rhs = ["delta4", "gamma'", "alpha3", "alpha6"]
            note = "embedded form: gamma' for delta5, alpha6 for alpha5"
    elif variant == 2:
        _need(cat, "gamma'", "sigma'", "alpha4", "alpha5", "alpha6", "delta5", "delta6")
        lhs = ["gamma'", "sigma'", "alpha5"]
        rhs = ["delta5", "delta6", "alpha4", "alpha6"]
        note = ""
    else:
        raise RelationError("lantern variant must be 1 or 2")
    return _rel(cat, "lantern", {"variant": variant}, lhs, rhs, note=note)


def four_holed_torus(cat: CurveCatalog) -> Relation:
    _need(cat, "delta1", "delta2", "delta3", "gamma", "beta", "alpha1", "alpha2", "alpha3", "alpha5")
    last, note = "alpha5", ""
    if "gamma'" in cat:
        # with more holes beyond gamma the outer alpha of the sub-torus is alpha6
        last, note = "alpha6", "embedded form: alpha6 for alpha5"
    rhs = word("beta", "alpha1", "alpha3", "beta", "alpha2", last) ** 2
    return _rel(cat, "four-holed-torus", {}, ["delta1", "delta2", "delta3", "gamma"], rhs, note=note)


def six_holed_torus(cat: CurveCatalog) -> Relation:
    """Boundary multitwist of the six-holed torus after both lantern substitutions."""
    _need(cat, "sigma", "sigma'", "beta36", "beta6")
    lhs = [f"delta{i}" for i in range(1, 7)]
    rhs = word("alpha1", "alpha3", "beta", "alpha2", "sigma", "sigma'", "alpha5",
               cat.named("beta36"), "alpha1", cat.named("beta6"), "alpha2", "beta")
    return _rel(cat, "six-holed-torus", {}, lhs, rhs)


def eight_holed_torus(cat: CurveCatalog) -> Relation:
    _need(cat, *[f"sigma{i}" for i in range(3, 8)], "beta1", "beta4", "beta6")
    n = cat.named
    rhs = word("alpha4", "alpha5", n("beta1"), "sigma3", "sigma6", "alpha2", n("beta6"),
               "sigma4", "sigma7", "alpha7", n("beta4"), "sigma5")
    return _rel(cat, "eight-holed-torus", {}, [f"delta{i}" for i in range(1, 9)], rhs,
                verifiability="homology-only",
                note="reindexed: delta_(i+1) here is the usual delta_i and delta1 the usual delta8; "
                     "sigma3..sigma7 are abstract")


@dataclass(frozen=True)
class Entry:
    build: Callable
    params: tuple  # parameter names
    default_surface: Callable  # params -> (g, n)
    defaults: dict


def _chain_surface(k: int) -> tuple:
    # smallest two-holed model whose closed chain has at least k curves
    return (max(2, k // 2), 2)


REGISTRY = {
    "braid": Entry(braid_relation, ("i",), lambda p: _chain_surface(p["i"] + 1), {"i": 1}),
    "commute": Entry(commute_relation, ("i", "j"), lambda p: _chain_surface(max(p["i"], p["j"])), {"i": 1, "j": 3}),
    "chain": Entry(chain_relation, ("h",), lambda p: (max(2, p["h"]), 2), {"h": 1}),
    "chain-unfold": Entry(chain_unfold, ("n",), lambda p: _chain_surface(p["n"]), {"n": 3}),
    "t-power": Entry(t_power_identity, ("m",), lambda p: (2, 2), {"m": 1}),
    "chain-split": Entry(chain_split, (), lambda p: (2, 2), {}),
    "lantern": Entry(lantern_relation, ("variant",), lambda p: (1, 5) if p["variant"] == 1 else (1, 6), {"variant": 1}),
    "four-holed-torus": Entry(four_holed_torus, (), lambda p: (1, 5), {}),
    "six-holed-torus": Entry(six_holed_torus, (), lambda p: (1, 6), {}),
    "eight-holed-torus": Entry(eight_holed_torus, (), lambda p: (1, 8), {}),
}


def get_relation(name: str, surface: Optional[tuple] = None, **params) -> tuple:
    """``(relation, catalog)`` for a registry key; missing parameters take defaults.

    ``surface`` is ``(g, n)``; by default the smallest catalog carrying the curves.
    """
    if name not in REGISTRY:
        raise RelationError(f"unknown relation {name!r}; known: {', '.join(sorted(REGISTRY))}")
    entry = REGISTRY[name]
    p = dict(entry.defaults)
    for k, v in params.items():
        if v is None:
            continue
        if k not in entry.params:
            raise RelationError(f"relation {name!r} takes no parameter {k!r}")
        p[k] = int(v)
    g, n = surface if surface is not None else entry.default_surface(p)
    try:
        cat = build_catalog(int(g), int(n))
    except CatalogError as exc:
        raise RelationError(str(exc)) from None
    return entry.build(cat, **p), cat


def verify(rel: Relation, catalog: CurveCatalog, backend: str = "pi1", budget: Optional[int] = None) -> Verdict:
    return equal(rel.lhs, rel.rhs, catalog, backend, budget)


def export_registry() -> list:
    """Registry dump with default parameters, suitable for ``relations.json``."""
    out = []
    for key in sorted(REGISTRY):
        rel, _ = get_relation(key)
        out.append(rel.to_json())
    return out
