"""Reduced words and automorphisms of finitely generated free groups.

Letters use the Tietze convention: generator ``i`` (0-based) is the integer
``i + 1`` and its inverse is ``-(i + 1)``.  A word is a tuple of letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_BUDGET = 10_000_000

Word = tuple  # tuple[int, ...]


class WordError(ValueError):
    """Invalid letter or alphabet mismatch."""


class BudgetExceeded(RuntimeError):
    """An intermediate word grew past the configured letter budget."""

    def __init__(self, length: int, budget: int):
        super().__init__(f"intermediate word of length {length} exceeds budget {budget}")
        self.length = length
        self.budget = budget


@dataclass(frozen=True)
class Alphabet:
    names: tuple

    def __post_init__(self):
        if len(self.names) < 1:
            raise WordError("alphabet needs at least one generator")
        if len(set(self.names)) != len(self.names):
            raise WordError("duplicate generator names")

    @property
    def rank(self) -> int:
        return len(self.names)

    def letter(self, name: str) -> int:
        """Letter for ``name`` or ``name^-1`` (trailing ``'`` also means inverse)."""
        inv = name.endswith("^-1") or name.endswith("'")
        base = name[:-3] if name.endswith("^-1") else name.rstrip("'")
        try:
            i = self.names.index(base)
        except ValueError:
            raise WordError(f"unknown generator {base!r}") from None
        return -(i + 1) if inv else i + 1

    def parse(self, text: str) -> Word:
        return reduce(self.letter(tok) for tok in text.split()) if text.strip() else ()

    def format(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        return " ".join(self.names[abs(x) - 1] + ("^-1" if x < 0 else "") for x in w)

    def check(self, w: Iterable[int]) -> None:
        for x in w:
            if not isinstance(x, int) or x == 0 or abs(x) > self.rank:
                raise WordError(f"letter {x!r} outside alphabet of rank {self.rank}")


def reduce(raw: Iterable[int]) -> Word:
    """Freely reduce a letter sequence (stack discipline, linear time)."""
    out: list = []
    for x in raw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words: Sequence[int]) -> Word:
    out: list = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def _least_rotation(w: Word) -> Word:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def cyclic_canonical(w: Sequence[int]) -> Word:
    """Canonical representative of the conjugacy class of ``w`` up to inversion.

    Lexicographically least among all rotations of the cyclic reduction of
    ``w`` and of its inverse.
    """
    c = cyclic_reduce(w)
    return min(_least_rotation(c), _least_rotation(inverse(c)))


def abelianize(w: Sequence[int], rank: int) -> list:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


class FreeAutomorphism:
    """Endomorphism of a free group given by generator images.

    Every instance the engine builds is a composite of twist automorphisms,
    hence invertible; no invertibility test is performed.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[Sequence[int]]):
        self.images = tuple(reduce(im) for im in images)
        self._hash = None

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        return cls([(i + 1,) for i in range(rank)])

    @property
    def rank(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(im == (i + 1,) for i, im in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, FreeAutomorphism) and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return f"FreeAutomorphism({list(self.images)!r})"

    def __call__(self, w: Sequence[int], budget: int = DEFAULT_BUDGET) -> Word:
        return apply(self, w, budget)

    def max_image_length(self) -> int:
        return max((len(im) for im in self.images), default=0)


def apply(f: FreeAutomorphism, w: Sequence[int], budget: int = DEFAULT_BUDGET) -> Word:
    """Substitute generator images of ``f`` into ``w`` and reduce."""
    images = f.images
    out: list = []
    append, pop = out.append, out.pop
    for x in w:
        if x > 0:
            seg = images[x - 1]
        else:
            seg = [-y for y in reversed(images[-x - 1])]
        for y in seg:
            if out and out[-1] == -y:
                pop()
            else:
                append(y)
        if len(out) > budget:
            raise BudgetExceeded(len(out), budget)
    return tuple(out)


def compose(f: FreeAutomorphism, g: FreeAutomorphism, budget: int = DEFAULT_BUDGET) -> FreeAutomorphism:
    """Return f o g, i.e. ``x -> f(g(x))``.

    ``budget`` bounds the total number of letters over all images.
    """
    if f.rank != g.rank:
        raise WordError("rank mismatch")
    images, total = [], 0
    for im in g.images:
        try:
            w = apply(f, im, budget - total)
        except BudgetExceeded as exc:
            raise BudgetExceeded(total + exc.length, budget) from None
        total += len(w)
        images.append(w)
    if total > budget:
        raise BudgetExceeded(total, budget)
    return FreeAutomorphism(images)


def first_difference(f: FreeAutomorphism, g: FreeAutomorphism):
    """Index of the first generator whose images differ, or ``None``."""
    for i, (a, b) in enumerate(zip(f.images, g.images)):
        if a != b:
            return i
    return None
