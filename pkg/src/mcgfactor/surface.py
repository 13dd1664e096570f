"""Ribbon models of the surfaces of genus g with n boundary components.

The model is a disk with g handle pairs and n-1 interior holes.  At the
single vertex the half-edges are ordered so that the outer boundary reads
``[a1,b1]...[ag,bg] y2...yn`` from the base corner ``p1`` on it, and the
hole loop ``yj`` bounds the small face of the hole j.

Mapping classes fix the boundary pointwise, so they act on paths between
base corners on *every* boundary component, not only on loops at ``p1``.
Besides the ``2g+n-1`` loop generators the alphabet therefore carries one
arc letter ``zj`` per extra boundary component: the image of the empty arc
from ``p1`` to ``pj`` is a path ``u``, recorded as ``zj -> u zj``.  Without
those letters the twists about the holes would act trivially.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .ribbon import Ribbon
from .words import Alphabet, FreeAutomorphism, Word, abelianize, cyclic_reduce


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceSpec:
    g: int
    n: int

    def __post_init__(self):
        if self.g < 0 or self.n < 1:
            raise SurfaceError(f"need g >= 0 and n >= 1, got ({self.g}, {self.n})")

    @property
    def pi1_rank(self) -> int:
        return 2 * self.g + self.n - 1

    @property
    def h1_rank(self) -> int:
        return 2 * self.g + self.n - 1

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.g - self.n


def build_surface(g: int, n: int) -> SurfaceSpec:
    if (g, n) == (0, 1):
        raise SurfaceError("the disk carries no essential twists")
    return SurfaceSpec(g, n)


class Surface:
    """Ribbon model plus the twist machinery for one ``SurfaceSpec``."""

    def __init__(self, spec: SurfaceSpec):
        self.spec = spec
        g, n = spec.g, spec.n
        order = []
        for i in range(g):
            a, b = 2 * i, 2 * i + 1
            order += [(a, "s"), (b, "t"), (a, "t"), (b, "s")]
        for j in range(n - 1):
            e = 2 * g + j
            order += [(e, "s"), (e, "t")]
        self.ribbon = Ribbon(spec.pi1_rank, order)
        loops = [f"{ab}{i + 1}" for i in range(g) for ab in "ab"] + [f"y{j}" for j in range(2, n + 1)]
        arcs = [f"z{j}" for j in range(2, n + 1)]
        self.alphabet = Alphabet(tuple(loops + arcs))
        self.n_loops = len(loops)

        faces = self.ribbon.faces()
        self.hole_corner = {}
        outer = None
        for corners, word in faces:
            if len(word) == 1 and abs(word[0]) > 2 * g:
                self.hole_corner[abs(word[0]) - 2 * g + 1] = corners[0]
            else:
                outer = (corners, word)
        if outer is None or len(self.hole_corner) != n - 1 or len(faces) != n:
            raise SurfaceError("ribbon model has the wrong boundary")
        # base corner: the outer boundary word starts with a1 (or y2 when g = 0)
        first = 1
        corners, word = outer
        k = word.index(first)
        self.base_corner = corners[k]
        self.outer_word = word[k:] + word[:k]

    # -- generators --------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.alphabet.rank

    def loop_letter(self, name: str) -> int:
        return self.alphabet.letter(name)

    def arc_letter(self, j: int) -> int:
        return self.n_loops + j - 1

    def boundary_word(self, i: int) -> Word:
        """Cyclic word of the curve parallel to boundary component ``i``."""
        if i == 1:
            return self.outer_word
        if not 2 <= i <= self.spec.n:
            raise SurfaceError(f"no boundary component {i}")
        return (2 * self.spec.g + i - 1,)

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    # -- twists ------------------------------------------------------------
    def twist(self, curve_word: Word, sign: int = 1) -> FreeAutomorphism:
        return _twist_cached(self, cyclic_reduce(curve_word), sign)

    def _compute_twist(self, c: Word, sign: int) -> FreeAutomorphism:
        p1 = self.base_corner
        paths = [(p1, (k,), p1) for k in range(1, self.n_loops + 1)]
        paths += [(p1, (), self.hole_corner[j]) for j in range(2, self.spec.n + 1)]
        images = self.ribbon.twist_paths(c, sign, paths)
        out = list(images[: self.n_loops])
        for j, u in zip(range(2, self.spec.n + 1), images[self.n_loops:]):
            out.append(tuple(u) + (self.arc_letter(j),))
        return FreeAutomorphism(out)

    def is_simple(self, c: Word) -> bool:
        return self.ribbon.is_simple(c)

    def intersection_number(self, u: Word, w: Word) -> int:
        return self.ribbon.intersection_number(u, w)

    # -- homology ----------------------------------------------------------
    def homology_class(self, w: Word) -> np.ndarray:
        if any(abs(x) > self.n_loops for x in w):
            raise SurfaceError("homology classes are defined for loop words only")
        return np.array(abelianize(w, self.n_loops), dtype=object)

    @property
    def intersection_form(self) -> np.ndarray:
        m = self.n_loops
        J = np.zeros((m, m), dtype=object)
        for i in range(self.spec.g):
            J[2 * i, 2 * i + 1] = 1
            J[2 * i + 1, 2 * i] = -1
        return J

    def pairing(self, x, y) -> int:
        return int(np.asarray(x, dtype=object) @ self.intersection_form @ np.asarray(y, dtype=object))

    def transvection(self, cls) -> np.ndarray:
        """Matrix of ``x -> x + <x, c> c`` acting on coordinate columns."""
        c = np.asarray(cls, dtype=object).reshape(-1, 1)
        J = self.intersection_form
        # <x, c> = x^T J c, so the matrix is I + c (J c)^T
        return np.identity(self.n_loops, dtype=object) + c @ (J @ c).T

    def abelianization(self, f: FreeAutomorphism) -> np.ndarray:
        m = self.n_loops
        cols = [abelianize(f.images[k], self.rank)[:m] for k in range(m)]
        return np.array(cols, dtype=object).T

    def boundary_span_contains(self, cls) -> bool:
        """Whether ``cls`` lies in the span of the boundary classes."""
        return all(v == 0 for v in list(cls)[: 2 * self.spec.g])


@lru_cache(maxsize=None)
def _twist_cached(surface: Surface, c: Word, sign: int) -> FreeAutomorphism:
    return surface._compute_twist(c, sign)
