"""Lefschetz-fibration data read off a positive factorization."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .catalog import CurveCatalog, UnknownAction
from .engine import twist_class
from .families import Factorization, generate
from .mapping import MappingClassWord, Twist, _as_word


class ShapeError(ValueError):
    """Target is not a boundary multitwist power, possibly times one extra twist."""


@dataclass(frozen=True)
class LefschetzData:
    g: int
    n_sections: int
    section_self_intersection: int
    r: int
    chi: int
    vanishing_classes: Optional[tuple]  # None when some class is unknown
    h1_total_rank: Optional[int]
    extra_twist: Optional[Twist] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "n_sections": self.n_sections,
            "section_self_intersection": self.section_self_intersection,
            "r": self.r,
            "chi": self.chi,
            "vanishing_classes": None if self.vanishing_classes is None
            else [list(c) for c in self.vanishing_classes],
            "h1_total_rank": self.h1_total_rank,
            "extra_twist": None if self.extra_twist is None else self.extra_twist.to_json(),
            "note": self.note,
        }


def euler_characteristic(g: int, r: int) -> int:
    return 2 * (2 - 2 * g) + r


def _is_boundary(t: Twist, boundary: Iterable[str]) -> bool:
    return t.curve in boundary and t.sign == 1 and not t.conjugator


def section_data(target: MappingClassWord, catalog: Optional[CurveCatalog] = None) -> tuple:
    """``(n_sections, k, extra)`` for ``t_delta1^k .. t_deltan^k`` times at most one other twist."""
    target = _as_word(target)
    boundary = set(catalog.boundary) if catalog is not None else None
    counts: dict = {}
    extra = []
    for t in target:
        is_b = _is_boundary(t, boundary) if boundary is not None else (
            t.curve.startswith("delta") and t.sign == 1 and not t.conjugator)
        if is_b:
            counts[t.curve] = counts.get(t.curve, 0) + 1
        else:
            extra.append(t)
    if not counts:
        raise ShapeError("target has no boundary twists")
    if len(set(counts.values())) != 1:
        raise ShapeError(f"boundary twists appear with unequal powers: {counts}")
    if len(extra) > 1:
        raise ShapeError(f"more than one non-boundary twist: {', '.join(str(t) for t in extra)}")
    return len(counts), next(iter(counts.values())), (extra[0] if extra else None)


def _rank(rows: list) -> int:
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                q = m[i][col] / m[rank][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def h1_total_rank(classes: Iterable, g: int) -> int:
    """Free rank of ``Z^2g`` modulo the closed-surface projections of ``classes``."""
    rows = [list(c)[:2 * g] for c in classes]
    return 2 * g - _rank(rows) if rows else 2 * g


def lefschetz_data(f: Factorization) -> LefschetzData:
    cat = f.catalog()
    g = cat.spec.g
    notes = []
    try:
        n, k, extra = section_data(f.target, cat)
    except ShapeError as exc:
        n, k, extra = 0, 0, None
        notes.append(f"target shape not recognized: {exc}")
    if extra is not None:
        notes.append(f"extra twist {extra.curve} in the target")
    try:
        classes = tuple(tuple(int(v) for v in twist_class(t, cat)) for t in f.twists)
        h1 = h1_total_rank(classes, g)
    except UnknownAction as exc:
        classes, h1 = None, None
        notes.append(f"vanishing classes unavailable: {exc}")
    r = len(f.twists)
    return LefschetzData(g, n, -k, r, euler_characteristic(g, r), classes, h1, extra, "; ".join(notes))


def chi_series(family: str, g: Optional[int], m_range: Iterable[int], k: Optional[int] = None) -> list:
    out = []
    for m in m_range:
        f = generate(family, g, m, k)
        out.append((m, euler_characteristic(f.catalog().spec.g, f.length)))
    return out


def format_table(rows: list, headers: list) -> str:
    cells = [[str(h) for h in headers]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
