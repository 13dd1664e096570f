"""One-vertex ribbon graphs and the Dehn-twist surgery engine.

A compact surface with boundary deformation retracts onto a ribbon graph
with a single vertex.  Each edge is a free generator of the fundamental
group; the cyclic (counterclockwise) order of half-edges at the vertex fixes
the thickening.  A closed curve is a cyclically reduced word; drawn in the
thickened graph its strands run parallel through the edge bands and meet
the vertex disk in chords.

The twist about a simple curve ``c`` acts on a path by surgery: at every
transverse crossing the path turns right onto ``c``, runs once around it
and continues.  Paths here are always generators (one band, or an empty
arc between two boundary corners), so only the chords at the vertex matter.
"""
from __future__ import annotations

from functools import cmp_to_key
from typing import Iterator, Sequence

from .words import Word, inverse, reduce


class RibbonError(ValueError):
    pass


def _letter_band(x: int) -> int:
    return abs(x) - 1


class Ribbon:
    """Single-vertex ribbon graph.

    ``order`` lists half-edges counterclockwise as ``(edge_index, end)`` with
    ``end`` in ``{"s", "t"}``; traversing edge ``e`` positively leaves the
    vertex through ``(e, "s")`` and returns through ``(e, "t")``.

    Circle positions: half-edge ``order[k]`` sits at ``2k`` and the corner
    between ``order[k]`` and ``order[k+1]`` at ``2k + 1``.
    """

    def __init__(self, n_edges: int, order: Sequence[tuple]):
        if sorted(order) != sorted((e, end) for e in range(n_edges) for end in "st"):
            raise RibbonError("order must list every half-edge exactly once")
        self.n_edges = n_edges
        self.order = tuple(order)
        self.size = 2 * len(order)
        self._pos = {h: 2 * k for k, h in enumerate(order)}

    # -- slots -----------------------------------------------------------
    def leave(self, x: int) -> int:
        e = _letter_band(x)
        return self._pos[(e, "s" if x > 0 else "t")]

    def arrive(self, x: int) -> int:
        e = _letter_band(x)
        return self._pos[(e, "t" if x > 0 else "s")]

    def half_edge_at(self, pos: int) -> tuple:
        return self.order[pos // 2]

    def offset(self, pos: int, origin: int) -> int:
        return (pos - origin) % self.size

    # -- boundary --------------------------------------------------------
    def faces(self) -> list:
        """Boundary cycles as ``(corners, word)`` pairs.

        Walking from the corner after half-edge ``h`` the boundary leaves
        through the next half-edge counterclockwise and arrives at the
        corner after the opposite end of that edge.
        """
        m = len(self.order)
        seen = set()
        out = []
        for start in range(m):
            if start in seen:
                continue
            corners, word = [], []
            k = start
            while k not in seen:
                seen.add(k)
                corners.append(2 * k + 1)
                e, end = self.order[(k + 1) % m]
                word.append(e + 1 if end == "s" else -(e + 1))
                other = (e, "t" if end == "s" else "s")
                k = self._pos[other] // 2
            out.append((tuple(corners), tuple(word)))
        return out

    def face_of_corner(self, corner: int) -> tuple:
        for corners, word in self.faces():
            if corner in corners:
                i = corners.index(corner)
                return corners, word[i:] + word[:i]
        raise RibbonError(f"no corner at position {corner}")

    # -- rays and strand order --------------------------------------------
    def periodic_ray(self, word: Word, idx: int) -> Iterator[tuple]:
        """Successive ``(entry, exit)`` slots after traversing ``word[idx]``."""
        k = len(word)
        t = idx
        while True:
            yield self.arrive(word[t % k]), self.leave(word[(t + 1) % k])
            t += 1

    def right_of(self, p: Iterator[tuple], q: Iterator[tuple], limit: int) -> bool:
        """Whether strand ``p`` runs to the right of ``q`` in their common band.

        Both rays start by arriving through the same slot.  At the first
        vertex where they leave through different slots the one taking the
        smaller counterclockwise offset from the entry slot is on the right.
        """
        for _ in range(limit):
            a, hp = next(p)
            a2, hq = next(q)
            if a != a2:
                raise RibbonError("rays out of step")
            if hp != hq:
                return self.offset(hp, a) < self.offset(hq, a)
        raise RibbonError("rays never diverge (non-primitive or equal curves)")

    # -- intersection numbers --------------------------------------------
    def intersection_number(self, u: Word, w: Word) -> int:
        """Geometric intersection number of two primitive cyclic words."""
        u, w = _cyc(u), _cyc(w)
        if not u or not w:
            return 0
        same = u == w
        count = self._linked(u, w, same)
        return count // 2 if same else count

    def is_simple(self, c: Word) -> bool:
        c = _cyc(c)
        return bool(c) and is_primitive(c) and self.intersection_number(c, c) == 0

    def _linked(self, u: Word, w: Word, same: bool) -> int:
        ku, kw = len(u), len(w)
        limit = 2 * (ku + kw) + 4
        total = 0
        # transverse chords meeting at the vertex with four distinct slots
        for i in range(ku):
            a, b = self.arrive(u[i - 1]), self.leave(u[i])
            for j in range(kw):
                if same and i == j:
                    continue
                c, d = self.arrive(w[j - 1]), self.leave(w[j])
                if len({a, b, c, d}) == 4 and _interleaved(a, b, c, d):
                    total += 1
        # shared runs through bands
        for W in (w, inverse(w)):
            for i in range(ku):
                for j in range(kw):
                    if u[i] != W[j] or (same and W is w and i == j):
                        continue
                    if u[i - 1] == W[j - 1]:
                        continue  # not the first band of the run
                    fwd = self.right_of(self.periodic_ray(u, i), self.periodic_ray(W, j), limit)
                    ru, rW = inverse(u), inverse(W)
                    bwd = self.right_of(self.periodic_ray(ru, ku - 1 - i),
                                        self.periodic_ray(rW, len(W) - 1 - j), limit)
                    if fwd == bwd:
                        total += 1
        return total

    # -- twist surgery -----------------------------------------------------
    def twist_paths(self, c: Word, sign: int, paths: Sequence[tuple]) -> list:
        """Images of paths under the twist about the simple cyclic word ``c``.

        ``paths`` holds ``(start_corner, letters, end_corner)`` with at most
        one letter.  Returns the inserted words per path as
        ``(before, letters, after)`` already multiplied out.
        """
        c = _cyc(c)
        k = len(c)
        if k == 0:
            return [reduce(p[1]) for p in paths]
        limit = 4 * k + 8
        # strands of c in each band, ordered left to right in the +e frame
        bands: dict = {}
        for p in range(k):
            bands.setdefault(_letter_band(c[p]), []).append(p)
        frames = {}
        cinv = inverse(c)
        for p in range(k):
            frames[p] = (c, p) if c[p] > 0 else (cinv, k - 1 - p)

        def cmp(p, q):
            return 1 if self.right_of(self.periodic_ray(*frames[p]), self.periodic_ray(*frames[q]), limit) else -1

        left_to_right = {e: sorted(ps, key=cmp_to_key(cmp)) for e, ps in bands.items()}

        def c_key(p: int, slot: int, gamma_rank=None):
            e = _letter_band(c[p])
            seq = left_to_right[e]
            return self._sub_key(slot, e, seq.index(p), len(seq))

        results = []
        for start, letters, end in paths:
            chords = []  # (A_key, B_key, slot info) for each vertex passage
            if letters:
                (x,) = letters
                if x < 0:
                    raise RibbonError("generator paths traverse bands positively")
                e = _letter_band(x)
                g_rank = self._gamma_rank(c, frames, left_to_right.get(e, []), end, e, limit)
                n_e = len(left_to_right.get(e, []))
                s_key = self._sub_key(self.leave(x), e, g_rank, n_e, gamma=True)
                t_key = self._sub_key(self.arrive(x), e, g_rank, n_e, gamma=True)
                chords.append(((start, 0.0), s_key))
                chords.append((t_key, (end, 0.0)))
            else:
                chords.append(((start, 0.0), (end, 0.0)))
            inserts = []
            for A, B in chords:
                hits = []
                for j in range(k):
                    C = c_key(j - 1 if j else k - 1, self.arrive(c[j - 1]))
                    D = c_key(j, self.leave(c[j]))
                    if not _interleaved(A, B, C, D):
                        continue
                    c_right = _in_arc(A, B, C)
                    near = C if c_right else D
                    forward = not c_right
                    if sign < 0:
                        forward = not forward
                    rot = c[j:] + c[:j]
                    hits.append((_arc_dist(A, near, self.size), rot if forward else inverse(rot)))
                hits.sort(key=lambda h: h[0])
                seg: list = []
                for _, loop in hits:
                    seg.extend(loop)
                inserts.append(seg)
            if letters:
                results.append(reduce(inserts[0] + [letters[0]] + inserts[1]))
            else:
                results.append(reduce(inserts[0]))
        return results

    def _gamma_rank(self, c, frames, seq, end_corner, e, limit) -> float:
        # number of c strands to the left of the generator strand, minus 0.5
        entry = self._pos[(e, "t")]
        left = 0
        for p in seq:
            ray = self.periodic_ray(*frames[p])
            a, h = next(ray)
            if self.offset(end_corner, entry) < self.offset(h, entry):
                left += 1  # generator runs right of p
        # strands are sorted left to right; generator sits after `left` of them
        return left - 0.5

    def _sub_key(self, slot: int, e: int, rank: float, n: int, gamma: bool = False):
        # counterclockwise sub-position of a strand with left-to-right rank
        end = self.half_edge_at(slot)[1]
        frac = (rank + 1) / (n + 1)
        if end == "s":
            frac = 1.0 - frac
        return (slot, frac - 0.5)


def is_primitive(c: Sequence[int]) -> bool:
    """Whether a cyclically reduced word is not a proper power."""
    k = len(c)
    return all(tuple(c[i:]) + tuple(c[:i]) != tuple(c) for i in range(1, k) if k % i == 0)


def _cyc(w: Sequence[int]) -> Word:
    from .words import cyclic_reduce
    return cyclic_reduce(w)


def _in_arc(a, b, x) -> bool:
    """``x`` strictly inside the counterclockwise arc from ``a`` to ``b``."""
    if a < b:
        return a < x < b
    return x > a or x < b


def _interleaved(a, b, c, d) -> bool:
    return _in_arc(a, b, c) != _in_arc(a, b, d)


def _arc_dist(a, x, size: int):
    return ((x[0] - a[0]) % size, x[1] - a[1])
