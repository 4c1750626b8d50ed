"""Combinatorial model of the derived and cluster categories of type A_n.

The translation quiver ZQ (for the linear orientation 1 -> 2 -> .. -> n)
has vertices (i, m) and arrows

    alpha_(i,m): (i, m) -> (i+1, m)        for i < n,
    beta_(i,m):  (i+1, m) -> (i, m+1)      for i < n,

and for every vertex V = (i, m) a mesh relation ending at (i, m+1): the
two compositions through (i+1, m) and (i-1, m+1) sum to zero, with the
missing route dropped at the boundary rows i = 1 and i = n (there the
single remaining composition is itself zero).

The bridge to friezes and polygons is the cell map

    (i, m)  <->  pair coordinate (a, b) = (m, m + i + 1),

under which the suspension acts by (a, b) |-> (b - 1, a + n + 2), the
translation tau by (a, b) |-> (a - 1, b - 1), and the orbit quotient by
the same glide identification friezes use. Indecomposables of the orbit
category are the diagonals of the (n+3)-gon.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidInput, WindowTooSmall
from .frieze import Frieze, LightningBolt, domain_rep, from_triangulation, symbolic_from_bolt
from .laurent import LaurentPoly
from .polygon import Triangulation, crossing, enumerate_triangulations, flip, normalize_diagonal


class ZQVertex(NamedTuple):
    i: int
    m: int


class CatObject(NamedTuple):
    N: int
    a: int
    b: int


def cat_object(N: int, d: Sequence[int]) -> CatObject:
    """A diagonal of the N-gon as an indecomposable object."""
    a, b = normalize_diagonal(N, d)
    return CatObject(N, a, b)


def vertex_to_cell(v: ZQVertex) -> tuple[int, int]:
    return (v.m, v.m + v.i + 1)


def cell_to_vertex(cell: Sequence[int]) -> ZQVertex:
    a, b = cell
    return ZQVertex(b - a - 1, a)


def tau(x):
    """AR translation: (i, m) -> (i, m-1) on ZQ, rotation by -1 on diagonals."""
    if isinstance(x, ZQVertex):
        return ZQVertex(x.i, x.m - 1)
    if isinstance(x, CatObject):
        N = x.N
        return cat_object(N, (1 + (x.a - 2) % N, 1 + (x.b - 2) % N))
    raise InvalidInput(f"tau is not defined on {type(x).__name__}")


def sigma(n: int, v: ZQVertex) -> ZQVertex:
    """Suspension on ZQ vertices (type A_n): (i, m) -> (n+1-i, m+i)."""
    _check_vertex(n, v)
    return ZQVertex(n + 1 - v.i, v.m + v.i)


def sigma_inv(n: int, v: ZQVertex) -> ZQVertex:
    _check_vertex(n, v)
    return ZQVertex(n + 1 - v.i, v.m - (n + 1 - v.i))


def glide(n: int, v: ZQVertex) -> ZQVertex:
    """The orbit-defining autoequivalence sigma^-1 tau on ZQ vertices."""
    return sigma_inv(n, tau(v))


def orbit_diagonal(n: int, v: ZQVertex) -> CatObject:
    """The diagonal of the (n+3)-gon representing v's orbit in the
    quotient: read the cell coordinates modulo the polygon size."""
    _check_vertex(n, v)
    N = n + 3
    a, b = vertex_to_cell(v)
    return cat_object(N, (1 + (a - 1) % N, 1 + (b - 1) % N))


def _check_vertex(n: int, v: ZQVertex):
    if not 1 <= v.i <= n:
        raise InvalidInput(f"vertex {v} outside rows 1..{n}")


@dataclass(frozen=True)
class MeshWindow:
    """The finite sub-quiver of ZQ on slices m0..m1 with its meshes."""

    n: int
    m0: int
    m1: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("window needs n >= 1")
        if self.m0 > self.m1:
            raise InvalidInput("window slice range is empty")

    def contains(self, v: ZQVertex) -> bool:
        return 1 <= v.i <= self.n and self.m0 <= v.m <= self.m1

    def vertices(self) -> list[ZQVertex]:
        return [
            ZQVertex(i, m)
            for m in range(self.m0, self.m1 + 1)
            for i in range(1, self.n + 1)
        ]

    def arrows_into(self, v: ZQVertex) -> list[tuple[ZQVertex, str]]:
        """(source, kind) pairs for window arrows ending at v; kind is
        'alpha' for (i-1,m)->(i,m) or 'beta' for (i+1,m-1)->(i,m)."""
        out = []
        if v.i >= 2:
            u = ZQVertex(v.i - 1, v.m)
            if self.contains(u):
                out.append((u, "alpha"))
        if v.i <= self.n - 1:
            u = ZQVertex(v.i + 1, v.m - 1)
            if self.contains(u):
                out.append((u, "beta"))
        return out


def hom_dim_mesh(w: MeshWindow, X: ZQVertex, Y: ZQVertex) -> int:
    """dim Hom(X, Y) in the path category of the window modulo meshes.

    Counts equivalence classes of paths X -> Y instead of materializing
    the path basis: every mesh relation is a two-term identification
    (or a one-term kill at the boundary rows), so the quotient dimension
    is the number of surviving classes; classes are propagated vertex by
    vertex in the grading h = 2m + i and merged by a signed union-find.
    This equals #paths - rank(relations) because relations supported on
    at most two basis vectors span a graphic matroid, whose rank over
    the rationals is computed exactly by component counting.
    """
    if not (w.contains(X) and w.contains(Y)):
        raise WindowTooSmall(f"window [{w.m0},{w.m1}] must contain {X} and {Y}")
    if X == Y:
        return 1

    parent: dict[int, int] = {}
    sgn: dict[int, int] = {}
    dead: dict[int, bool] = {}
    counter = itertools.count()

    def new_class(is_dead: bool) -> int:
        c = next(counter)
        parent[c] = c
        sgn[c] = 1
        dead[c] = is_dead
        return c

    def find(x: int) -> tuple[int, int]:
        s = 1
        while parent[x] != x:
            s *= sgn[x]
            x = parent[x]
        return x, s

    def union(x: int, y: int, rel_sign: int):
        # impose value(x) = rel_sign * value(y)
        rx, sx = find(x)
        ry, sy = find(y)
        if rx == ry:
            if sx != rel_sign * sy:
                dead[rx] = True
            return
        parent[rx] = ry
        sgn[rx] = sx * rel_sign * sy  # value(rx) = sgn * value(ry)
        dead[ry] = dead[ry] or dead[rx]

    def kill(x: int):
        r, _ = find(x)
        dead[r] = True

    # classes_at[v]: slot ids created at v; slot_of[(v, root_at_source, kind)]
    classes_at: dict[ZQVertex, list[int]] = {X: [new_class(False)]}
    slot_of: dict[tuple[ZQVertex, int, str], int] = {}

    def roots_at(v: ZQVertex) -> list[int]:
        seen = []
        for s in classes_at.get(v, ()):
            r, _ = find(s)
            if r not in seen:
                seen.append(r)
        return seen

    hX = 2 * X.m + X.i
    order = sorted(
        (v for v in w.vertices() if 2 * v.m + v.i > hX),
        key=lambda v: (2 * v.m + v.i, v.i),
    )
    for v in order:
        slots = []
        for u, kind in w.arrows_into(v):
            for root in roots_at(u):
                s = new_class(dead[root])
                slot_of[(v, root, kind)] = s
                slots.append(s)
        if slots:
            classes_at[v] = slots
        # mesh ending at v, starting at tau(v) = (i, m-1)
        start = ZQVertex(v.i, v.m - 1)
        if not w.contains(start):
            continue
        upper_mid = ZQVertex(v.i + 1, v.m - 1) if v.i + 1 <= w.n else None
        lower_mid = ZQVertex(v.i - 1, v.m) if v.i - 1 >= 1 else None
        for c in roots_at(start):
            route_u = route_l = None
            if upper_mid is not None:
                mid_slot = slot_of.get((upper_mid, c, "alpha"))
                if mid_slot is not None:
                    mid_root, s1 = find(mid_slot)
                    end_slot = slot_of.get((v, mid_root, "beta"))
                    if end_slot is not None:
                        route_u = (end_slot, s1)
            if lower_mid is not None:
                mid_slot = slot_of.get((lower_mid, c, "beta"))
                if mid_slot is not None:
                    mid_root, s2 = find(mid_slot)
                    end_slot = slot_of.get((v, mid_root, "alpha"))
                    if end_slot is not None:
                        route_l = (end_slot, s2)
            if route_u is not None and route_l is not None:
                # value(route_u) + value(route_l) = 0
                union(route_u[0], route_l[0], -route_u[1] * route_l[1])
            elif route_u is not None:
                kill(route_u[0])
            elif route_l is not None:
                kill(route_l[0])
    return sum(1 for r in roots_at(Y) if not dead[r])


def hom_dim_mesh_paths(w: MeshWindow, X: ZQVertex, Y: ZQVertex) -> int:
    """Literal oracle for hom_dim_mesh: materialize every path X -> Y,
    every relation vector p * mesh * q, and return #paths minus the rank
    of the relation span over exact rationals. Exponential; only for
    small windows."""
    if not (w.contains(X) and w.contains(Y)):
        raise WindowTooSmall(f"window [{w.m0},{w.m1}] must contain {X} and {Y}")

    def successors(v: ZQVertex) -> list[ZQVertex]:
        out = []
        if v.i + 1 <= w.n:
            u = ZQVertex(v.i + 1, v.m)
            if w.contains(u):
                out.append(u)
        if v.i - 1 >= 1:
            u = ZQVertex(v.i - 1, v.m + 1)
            if w.contains(u):
                out.append(u)
        return out

    def paths_between(s: ZQVertex, t: ZQVertex) -> list[tuple[ZQVertex, ...]]:
        if s == t:
            return [(s,)]
        if 2 * s.m + s.i >= 2 * t.m + t.i:
            return []
        out = []
        for u in successors(s):
            out.extend((s,) + rest for rest in paths_between(u, t))
        return out

    paths = paths_between(X, Y)
    if not paths:
        return 0
    index = {p: i for i, p in enumerate(paths)}
    rels: list[dict[int, Fraction]] = []
    for m in range(w.m0, w.m1 + 1):
        for i in range(1, w.n + 1):
            start, end = ZQVertex(i, m), ZQVertex(i, m + 1)
            if not (w.contains(start) and w.contains(end)):
                continue
            routes = []
            if i + 1 <= w.n:
                routes.append((ZQVertex(i + 1, m),))
            if i - 1 >= 1:
                routes.append((ZQVertex(i - 1, m + 1),))
            for p in paths_between(X, start):
                for q in paths_between(end, Y):
                    vec: dict[int, Fraction] = {}
                    for mid in routes:
                        full = p + mid + q
                        j = index[full]
                        vec[j] = vec.get(j, Fraction(0)) + 1
                    if vec:
                        rels.append(vec)
    # Gaussian elimination over the rationals, sparse rows
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for vec in rels:
        vec = dict(vec)
        while vec:
            j = min(vec)
            if vec[j] == 0:
                del vec[j]
                continue
            if j in pivots:
                coef = vec[j]
                for k, val in pivots[j].items():
                    vec[k] = vec.get(k, Fraction(0)) - coef * val
                vec = {k: v for k, v in vec.items() if v != 0}
            else:
                inv = 1 / vec[j]
                pivots[j] = {k: v * inv for k, v in vec.items()}
                rank += 1
                break
    return len(paths) - rank


def hom_dim_rectangle(n: int, X: ZQVertex, Y: ZQVertex) -> int:
    """Closed-form Hom dimension for type A_n: 1 exactly when Y's cell
    lies in the maximal rectangle spread from X's cell, else 0."""
    _check_vertex(n, X)
    _check_vertex(n, Y)
    a, b = vertex_to_cell(X)
    a2, b2 = vertex_to_cell(Y)
    return 1 if a <= a2 <= b - 2 and b <= b2 <= a + n + 1 else 0


def hom_c(n: int, X: ZQVertex, Y: ZQVertex) -> int:
    """Hom dimension in the orbit category: sum of the derived-category
    Hom from X to every glide translate of Y (finitely many nonzero)."""
    _check_vertex(n, X)
    _check_vertex(n, Y)
    total = 0
    # translate Y so its slice passes X's rectangle: glide moves slices
    # by at least 1, so a bounded scan suffices
    for k in range(-(2 * n + 6), 2 * n + 7):
        v = Y
        if k >= 0:
            for _ in range(k):
                v = glide(n, v)
        else:
            for _ in range(-k):
                s = sigma(n, v)
                v = ZQVertex(s.i, s.m + 1)
        total += hom_dim_rectangle(n, X, v)
    return total


def compatible(X: CatObject, Y: CatObject) -> bool:
    """Ext-orthogonality of two indecomposables, which in the polygon
    model is exactly non-crossing of their diagonals."""
    if X.N != Y.N:
        raise InvalidInput("objects live in different polygons")
    return not crossing(X.N, (X.a, X.b), (Y.a, Y.b))


def cluster_tilting_objects(n: int) -> list[frozenset[CatObject]]:
    """All maximal compatible collections: one per triangulation."""
    if n < 1:
        raise InvalidInput("rank must be >= 1")
    N = n + 3
    return [
        frozenset(CatObject(N, a, b) for a, b in t.diagonals)
        for t in enumerate_triangulations(N)
    ]


def _ct_to_triangulation(T: frozenset[CatObject]) -> Triangulation:
    Ns = {x.N for x in T}
    if len(Ns) != 1:
        raise InvalidInput("cluster-tilting object must live in one polygon")
    N = Ns.pop()
    return Triangulation(N, [(x.a, x.b) for x in T])


def mutate_ct(T: frozenset[CatObject], X: CatObject) -> frozenset[CatObject]:
    """Exchange the summand X for the unique other completion: a flip."""
    if X not in T:
        raise InvalidInput(f"{X} is not a summand")
    t = flip(_ct_to_triangulation(T), (X.a, X.b))
    return frozenset(CatObject(X.N, a, b) for a, b in t.diagonals)


def frieze_from_ct(T: frozenset[CatObject]) -> Frieze:
    """The unique frieze with value 1 on every summand of T."""
    return from_triangulation(_ct_to_triangulation(T))


def cluster_variable_of(X: CatObject, bolt: LightningBolt) -> LaurentPoly:
    """phi_X: the Laurent polynomial the symbolic frieze of the bolt
    assigns to X's cell; the bolt's own diagonals get the generators."""
    n = bolt.n
    if X.N != n + 3:
        raise InvalidInput(f"object polygon size {X.N} does not match bolt height {n}")
    return symbolic_from_bolt(bolt)[domain_rep(n, (X.a, X.b))]
