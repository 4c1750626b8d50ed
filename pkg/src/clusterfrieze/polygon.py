"""Triangulations of a labeled convex N-gon.

Vertices are labeled 1..N clockwise and the labeling is part of the
data: two triangulations differing by rotation are different objects.
A Triangulation is always a full one, i.e. a maximal set of N-3
pairwise non-crossing diagonals.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidInput

Diagonal = tuple[int, int]


def normalize_diagonal(N: int, d: Sequence[int]) -> Diagonal:
    """Validate and return the diagonal as (a, b) with a < b."""
    if N < 3:
        raise InvalidInput("polygon needs at least 3 vertices")
    if len(d) != 2:
        raise InvalidInput(f"diagonal {d!r} must have two endpoints")
    a, b = d
    if not (isinstance(a, int) and isinstance(b, int)) or isinstance(a, bool) or isinstance(b, bool):
        raise InvalidInput(f"diagonal {d!r} must have integer endpoints")
    if not (1 <= a <= N and 1 <= b <= N):
        raise InvalidInput(f"diagonal {d!r} out of vertex range 1..{N}")
    if a > b:
        a, b = b, a
    if a == b or min(b - a, N - (b - a)) < 2:
        raise InvalidInput(f"{(a, b)} is not a diagonal: cyclic distance < 2")
    return (a, b)


def crossing(N: int, d1: Sequence[int], d2: Sequence[int]) -> bool:
    """Whether two diagonals of the N-gon cross in its interior.

    Sharing an endpoint does not count; the test is strict cyclic
    interleaving of the four endpoints.
    """
    a, b = normalize_diagonal(N, d1)
    c, d = normalize_diagonal(N, d2)
    return (a < c < b < d) or (c < a < d < b)


class Triangulation:
    __slots__ = ("N", "diagonals")

    def __init__(self, N: int, diagonals: Iterable[Sequence[int]]):
        ds = sorted({normalize_diagonal(N, d) for d in diagonals})
        if len(ds) != N - 3:
            raise InvalidInput(
                f"a triangulation of the {N}-gon needs exactly {N - 3} "
                f"distinct diagonals, got {len(ds)}"
            )
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if crossing(N, ds[i], ds[j]):
                    raise InvalidInput(f"diagonals {ds[i]} and {ds[j]} cross")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "diagonals", tuple(ds))

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.N == other.N and self.diagonals == other.diagonals

    def __hash__(self) -> int:
        return hash((self.N, self.diagonals))

    def __repr__(self) -> str:
        return f"Triangulation({self.N}, {list(self.diagonals)})"

    def to_json_obj(self) -> dict:
        return {"N": self.N, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json_obj(cls, obj) -> "Triangulation":
        if not isinstance(obj, dict) or "N" not in obj or "diagonals" not in obj:
            raise InvalidInput("triangulation JSON needs 'N' and 'diagonals'")
        N = obj["N"]
        if not isinstance(N, int) or isinstance(N, bool):
            raise InvalidInput("'N' must be an integer")
        if not isinstance(obj["diagonals"], list):
            raise InvalidInput("'diagonals' must be an array")
        return cls(N, obj["diagonals"])


def quiddity(t: Triangulation) -> tuple[int, ...]:
    """entries[i-1] = 1 + number of diagonals incident to vertex i."""
    counts = [1] * t.N
    for a, b in t.diagonals:
        counts[a - 1] += 1
        counts[b - 1] += 1
    return tuple(counts)


def _edge_set(t: Triangulation) -> set[Diagonal]:
    sides = {(i, i + 1) for i in range(1, t.N)} | {(1, t.N)}
    return sides | set(t.diagonals)


def flip(t: Triangulation, d: Sequence[int]) -> Triangulation:
    """Replace d by the other diagonal of its surrounding quadrilateral."""
    d = normalize_diagonal(t.N, d)
    if d not in t.diagonals:
        raise InvalidInput(f"{d} is not a diagonal of the triangulation")
    a, b = d
    edges = _edge_set(t)

    def apex(arc: range) -> int:
        # in a full triangulation each side of d supports exactly one
        # triangle over d, namely the c with both chords present
        for c in arc:
            v = 1 + (c - 1) % t.N
            lo, hi = min(a, v), max(a, v)
            lo2, hi2 = min(b, v), max(b, v)
            if (lo, hi) in edges and (lo2, hi2) in edges:
                return v
        raise AssertionError("full triangulation must provide an apex")

    c1 = apex(range(a + 1, b))
    c2 = apex(range(b + 1, a + t.N))
    new = normalize_diagonal(t.N, (c1, c2))
    return Triangulation(t.N, [x for x in t.diagonals if x != d] + [new])


def rotate(t: Triangulation, shift: int) -> Triangulation:
    """The triangulation with every vertex label advanced by shift mod N."""
    return Triangulation(
        t.N,
        [
            (1 + (a - 1 + shift) % t.N, 1 + (b - 1 + shift) % t.N)
            for a, b in t.diagonals
        ],
    )


def enumerate_triangulations(N: int) -> list[Triangulation]:
    """All triangulations of the labeled N-gon, deterministically ordered.

    Recursive ear decomposition: the triangle over the side (v0, v1) of
    each (sub-)polygon is chosen in all ways, so each triangulation is
    produced exactly once and the Catalan count needs no dedup.
    """
    if N < 3:
        raise InvalidInput("polygon needs at least 3 vertices")

    def adjacent(a: int, b: int) -> bool:
        return min(abs(a - b), N - abs(a - b)) == 1

    def tri(verts: tuple[int, ...]) -> list[frozenset[Diagonal]]:
        if len(verts) < 3:
            return [frozenset()]
        a, b = verts[0], verts[1]
        out = []
        for idx in range(2, len(verts)):
            c = verts[idx]
            chords = frozenset(
                (min(u, v), max(u, v))
                for u, v in ((a, c), (b, c))
                if not adjacent(u, v)
            )
            for left in tri(verts[1 : idx + 1]):
                for right in tri((verts[0],) + verts[idx:]):
                    out.append(chords | left | right)
        return out

    found = tri(tuple(range(1, N + 1)))
    ts = [Triangulation(N, sorted(ds)) for ds in found]
    ts.sort(key=lambda t: t.diagonals)
    return ts
