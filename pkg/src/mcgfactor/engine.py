"""Evaluation of twist words and equality verdicts.

Two backends:

* ``pi1``: the action on the free fundamental groupoid of the ribbon model.
  Mapping classes fixing the boundary act faithfully, so equal images are
  conclusive.
* ``homology``: products of symplectic transvections.  Cheap, and only a
  necessary condition.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .catalog import CurveCatalog, UnknownAction
from .mapping import MappingClassWord, Twist, _as_word, invert
from .words import (DEFAULT_BUDGET, BudgetExceeded, FreeAutomorphism, Word, apply, compose,
                    cyclic_canonical, first_difference)


class Status(str, Enum):
    VERIFIED = "Verified"
    FALSIFIED = "Falsified"
    INCONCLUSIVE = "Inconclusive"


BACKENDS = ("homology", "pi1", "both")


@dataclass(frozen=True)
class Verdict:
    status: Status
    backend: str
    witness: Optional[dict] = None
    note: str = ""
    homology_passed: Optional[bool] = None

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    def to_json(self) -> dict:
        return {"status": self.status.value, "backend": self.backend, "witness": self.witness,
                "note": self.note, "homology_passed": self.homology_passed}

    def __str__(self):
        parts = [self.status.value, f"backend={self.backend}"]
        if self.note:
            parts.append(self.note)
        if self.witness:
            parts.append("witness=" + ", ".join(f"{k}={v}" for k, v in sorted(self.witness.items())))
        return " | ".join(parts)


def resolve_budget(budget: Optional[int] = None) -> int:
    """Explicit value, else ``TWIST_BUDGET`` from the environment, else the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("TWIST_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


# -- pi1 backend ---------------------------------------------------------------

class Evaluator:
    """Caches automorphisms of conjugated twists for one catalog and budget."""

    def __init__(self, catalog: CurveCatalog, budget: Optional[int] = None):
        self.catalog = catalog
        self.budget = resolve_budget(budget)
        self._twists: dict = {}
        self._words: dict = {}

    def twist(self, t: Twist) -> FreeAutomorphism:
        hit = self._twists.get(t)
        if hit is not None:
            return hit
        base = self.catalog.twist_auto(t.curve, t.sign)
        if t.conjugator:
            u = self.word(t.conjugator)
            u_inv = self.word(invert(t.conjugator))
            base = compose(u, compose(base, u_inv, self.budget), self.budget)
        self._twists[t] = base
        return base

    def word(self, w: MappingClassWord) -> FreeAutomorphism:
        w = _as_word(w)
        key = w.twists
        hit = self._words.get(key)
        if hit is not None:
            return hit
        acc = FreeAutomorphism.identity(self.catalog.surface.rank)
        # rightmost twist acts first: fold from the right, substituting into the images
        for t in reversed(w.twists):
            acc = compose(self.twist(t), acc, self.budget)
        if len(key) <= 64:
            self._words[key] = acc
        return acc


def evaluate_pi1(w: MappingClassWord, catalog: CurveCatalog, budget: Optional[int] = None) -> FreeAutomorphism:
    return Evaluator(catalog, budget).word(w)


def act_on_curve(w: MappingClassWord, curve: str, catalog: CurveCatalog,
                 budget: Optional[int] = None) -> Word:
    """Canonical cyclic word of the image of a catalog curve."""
    f = evaluate_pi1(w, catalog, budget)
    c = catalog[curve]
    if c.abstract:
        raise UnknownAction(f"{curve} is abstract")
    return cyclic_canonical(apply(f, c.word, resolve_budget(budget)))


# -- homology backend ----------------------------------------------------------

def twist_class(t: Twist, catalog: CurveCatalog) -> np.ndarray:
    """Homology class of the curve ``conjugator(curve)``."""
    c = catalog.hclass(t.curve)
    if t.conjugator:
        c = evaluate_homology(t.conjugator, catalog) @ c
    return c


def twist_matrix(t: Twist, catalog: CurveCatalog) -> np.ndarray:
    c = twist_class(t, catalog).reshape(-1, 1)
    J = catalog.surface.intersection_form
    return np.identity(catalog.rank, dtype=object) + t.sign * (c @ (J @ c).T)


def evaluate_homology(w: MappingClassWord, catalog: CurveCatalog) -> np.ndarray:
    m = np.identity(catalog.rank, dtype=object)
    for t in _as_word(w):
        m = m @ twist_matrix(t, catalog)
    return m


def abelianization(f: FreeAutomorphism, catalog: CurveCatalog) -> np.ndarray:
    return catalog.surface.abelianization(f)


# -- verdicts ------------------------------------------------------------------

def _abstract_curves(w: MappingClassWord, catalog: CurveCatalog) -> set:
    out = set()
    for t in w:
        if catalog[t.curve].abstract:
            out.add(t.curve)
        out |= _abstract_curves(t.conjugator, catalog)
    return out


def equal_homology(u, v, catalog: CurveCatalog) -> Verdict:
    u, v = _as_word(u), _as_word(v)
    missing = _abstract_curves(u, catalog) | _abstract_curves(v, catalog)
    if missing:
        return Verdict(Status.INCONCLUSIVE, "homology",
                       note="abstract curves without known classes: " + ", ".join(sorted(missing)))
    a, b = evaluate_homology(u, catalog), evaluate_homology(v, catalog)
    if (a == b).all():
        return Verdict(Status.INCONCLUSIVE, "homology", note="homology agrees (necessary condition only)",
                       homology_passed=True)
    i, j = map(int, np.argwhere(a != b)[0])
    return Verdict(Status.FALSIFIED, "homology", homology_passed=False,
                   witness={"entry": [i, j], "lhs": int(a[i, j]), "rhs": int(b[i, j])})


def equal_pi1(u, v, catalog: CurveCatalog, budget: Optional[int] = None) -> Verdict:
    u, v = _as_word(u), _as_word(v)
    missing = _abstract_curves(u, catalog) | _abstract_curves(v, catalog)
    if missing:
        return Verdict(Status.INCONCLUSIVE, "pi1",
                       note="abstract curves without known action: " + ", ".join(sorted(missing)))
    ev = Evaluator(catalog, budget)
    try:
        fu = ev.word(u)
        fv = ev.word(v)
    except BudgetExceeded as exc:
        return Verdict(Status.INCONCLUSIVE, "pi1", note=f"budget exceeded: {exc}",
                       witness={"length": exc.length, "budget": exc.budget})
    k = first_difference(fu, fv)
    if k is None:
        return Verdict(Status.VERIFIED, "pi1")
    fmt = catalog.surface.alphabet
    return Verdict(Status.FALSIFIED, "pi1", witness={
        "generator": fmt.names[k],
        "lhs_image": _clip(fmt.format(fu.images[k])),
        "rhs_image": _clip(fmt.format(fv.images[k])),
    })


def _clip(s: str, limit: int = 200) -> str:
    return s if len(s) <= limit else s[:limit] + " ..."


def equal(u, v, catalog: CurveCatalog, backend: str = "both", budget: Optional[int] = None) -> Verdict:
    """Equality verdict.  ``both`` runs homology first and stops on a falsification."""
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}")
    u, v = _as_word(u), _as_word(v)
    if u == v:
        return Verdict(Status.VERIFIED, backend, note="syntactically equal")
    if backend == "homology":
        return equal_homology(u, v, catalog)
    if backend == "pi1":
        return equal_pi1(u, v, catalog, budget)
    h = equal_homology(u, v, catalog)
    if h.status is Status.FALSIFIED:
        return Verdict(Status.FALSIFIED, "both", h.witness, "falsified in homology", False)
    p = equal_pi1(u, v, catalog, budget)
    return Verdict(p.status, "both", p.witness, p.note, h.homology_passed)
