"""Words in Dehn-twist generators.

Products are written in functional order: in ``MappingClassWord((x, y))`` the
twist ``y`` is applied first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union


@dataclass(frozen=True)
class Twist:
    """``conjugator o t_curve^sign o conjugator^-1``, i.e. the twist about ``conjugator(curve)``."""

    curve: str
    sign: int = 1
    conjugator: "MappingClassWord" = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign!r}")
        if self.conjugator is None:
            object.__setattr__(self, "conjugator", MappingClassWord(()))

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.sign, self.conjugator)

    def conjugated(self, by: "MappingClassWord") -> "Twist":
        return Twist(self.curve, self.sign, by * self.conjugator)

    def __str__(self):
        base = f"t[{self.curve}]" + ("" if self.sign == 1 else "^-1")
        if self.conjugator:
            return f"({self.conjugator}){base}({self.conjugator})^-1"
        return base

    def to_json(self):
        return {"curve": self.curve, "sign": self.sign,
                "conjugator": [t.to_json() for t in self.conjugator]}

    @classmethod
    def from_json(cls, data) -> "Twist":
        if not isinstance(data, dict) or set(data) != {"curve", "sign", "conjugator"}:
            raise ValueError("malformed twist record")
        if not isinstance(data["curve"], str) or data["sign"] not in (1, -1) or isinstance(data["sign"], bool):
            raise ValueError("malformed twist record")
        if not isinstance(data["conjugator"], list):
            raise ValueError("malformed twist record")
        return cls(data["curve"], data["sign"], MappingClassWord(cls.from_json(t) for t in data["conjugator"]))


TwistLike = Union[Twist, str]


@dataclass(frozen=True)
class MappingClassWord:
    twists: tuple = ()

    def __init__(self, twists: Iterable[TwistLike] = ()):
        object.__setattr__(self, "twists", tuple(_as_twist(t) for t in twists))

    @classmethod
    def parse(cls, text: str) -> "MappingClassWord":
        """``"c1 c2 d^-1"``: curve names separated by spaces, ``^-1`` for inverses."""
        out = []
        for tok in text.split():
            if tok.endswith("^-1"):
                out.append(Twist(tok[:-3], -1))
            else:
                out.append(Twist(tok, 1))
        return cls(out)

    def __len__(self):
        return len(self.twists)

    def __iter__(self) -> Iterator[Twist]:
        return iter(self.twists)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return MappingClassWord(self.twists[i])
        return self.twists[i]

    def __bool__(self):
        return bool(self.twists)

    def __mul__(self, other: "MappingClassWord") -> "MappingClassWord":
        return MappingClassWord(self.twists + _as_word(other).twists)

    def __pow__(self, k: int) -> "MappingClassWord":
        if k < 0:
            return invert(self) ** (-k)
        return MappingClassWord(self.twists * k)

    def __str__(self):
        return " ".join(str(t) for t in self.twists) if self.twists else "1"

    def is_positive(self) -> bool:
        return all(t.sign == 1 for t in self.twists)

    def base_curves(self) -> list:
        return [t.curve for t in self.twists]

    def to_json(self):
        return [t.to_json() for t in self.twists]

    @classmethod
    def from_json(cls, data) -> "MappingClassWord":
        if not isinstance(data, list):
            raise ValueError("twist list expected")
        return cls(Twist.from_json(t) for t in data)


def _as_twist(t: TwistLike) -> Twist:
    if isinstance(t, Twist):
        return t
    if isinstance(t, str):
        return Twist(t, 1)
    raise TypeError(f"cannot make a twist from {t!r}")


def _as_word(w) -> MappingClassWord:
    if isinstance(w, MappingClassWord):
        return w
    if isinstance(w, Twist):
        return MappingClassWord((w,))
    if isinstance(w, str):
        return MappingClassWord.parse(w)
    return MappingClassWord(w)


def word(*items) -> MappingClassWord:
    """Concatenate twists, names, parsed strings and words."""
    out: list = []
    for it in items:
        out.extend(_as_word(it).twists)
    return MappingClassWord(out)


def power(name_or_twist: TwistLike, k: int) -> MappingClassWord:
    t = _as_twist(name_or_twist)
    if k < 0:
        t, k = t.inverse(), -k
    return MappingClassWord((t,) * k)


def invert(w: MappingClassWord) -> MappingClassWord:
    return MappingClassWord(t.inverse() for t in reversed(_as_word(w).twists))


def conjugate(w: MappingClassWord, by: MappingClassWord) -> MappingClassWord:
    """``by w by^-1`` written twist by twist, so positivity is preserved."""
    by = _as_word(by)
    return MappingClassWord(t.conjugated(by) for t in _as_word(w).twists)


def pull_forward(w: MappingClassWord, positions: Iterable[int]) -> tuple:
    """Move the twists at ``positions`` to the front by Hurwitz moves.

    ``x y = y (y^-1 x y)``: a twist passing leftward conjugates what it
    passes.  Returns ``(front, rest)`` with ``front * rest`` equal to ``w``
    in the group; both keep the signs of ``w`` twist by twist.
    """
    w = _as_word(w)
    chosen = sorted(set(positions))
    if any(not 0 <= p < len(w) for p in chosen):
        raise IndexError("position out of range")
    chosen_set = set(chosen)
    front = [w[p] for p in chosen]
    rest = []
    for i, t in enumerate(w):
        if i in chosen_set:
            continue
        after = [w[p] for p in chosen if p > i]
        rest.append(t.conjugated(invert(MappingClassWord(after))) if after else t)
    return MappingClassWord(front), MappingClassWord(rest)


def find_subsequence(w: MappingClassWord, pattern: MappingClassWord, start: int = 0) -> list:
    """Leftmost greedy embedding of ``pattern`` in ``w``; raises if absent."""
    out, i = [], start
    for t in _as_word(pattern):
        while i < len(w) and w[i] != t:
            i += 1
        if i == len(w):
            raise ValueError(f"{t} not found as a subsequence")
        out.append(i)
        i += 1
    return out
