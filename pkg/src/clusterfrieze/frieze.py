"""Frieze patterns in pair coordinates.

A frieze of height n is a function m(a, b) on pairs with 0 <= b-a <= n+3,
periodic via m(a, b) = m(a+N, b+N) for N = n+3, with

    m(a, a) = 0,  m(a, a+1) = 1,  m(a, a+N-1) = 1,  m(a, a+N) = 0,

positive integers in between, and the unimodular diamond rule

    m(a, b) * m(a+1, b+1) = m(a+1, b) * m(a, b+1) + 1.

Storage is one period of the n nontrivial rows: row r (= b-a-1) holds
m(a, a+r+1) for a = 1..N. The glide identification m(a, b) = m(b, a+N)
is a consequence of the axioms; the constructor still verifies it, so a
Frieze object can never silently disagree with itself.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    DoesNotClose,
    InvalidInput,
    LaurentViolation,
    MalformedFrieze,
    NonInteger,
    NonPositive,
    NotDivisible,
)
from .laurent import LaurentPoly
from .polygon import Triangulation, quiddity as polygon_quiddity
from .quiver import Quiver

Cell = tuple[int, int]


def normalize_cell(n: int, cell: Sequence[int]) -> Cell:
    """Shift (a, b) by a multiple of the period so that a lands in 1..N."""
    N = n + 3
    a, b = cell
    shift = (a - 1) % N + 1 - a
    return (a + shift, b + shift)


def glide_partner(n: int, cell: Sequence[int]) -> Cell:
    """The cell identified with this one by the glide reflection."""
    a, b = cell
    return normalize_cell(n, (b, a + n + 3))


def domain_rep(n: int, cell: Sequence[int]) -> Cell:
    """Canonical representative of the cell's glide class: the
    lexicographically smaller of the cell and its partner, normalized."""
    c = normalize_cell(n, cell)
    return min(c, glide_partner(n, c))


def fundamental_domain(n: int) -> list[Cell]:
    """The n(n+3)/2 representative nontrivial cells, sorted."""
    N = n + 3
    reps = {
        domain_rep(n, (a, a + d)) for a in range(1, N + 1) for d in range(2, n + 2)
    }
    return sorted(reps)


class Frieze:
    __slots__ = ("n", "N", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        n = len(rows)
        if n < 1:
            raise MalformedFrieze("a frieze needs at least one nontrivial row")
        N = n + 3
        if any(len(row) != N for row in rows):
            raise MalformedFrieze(f"every row must have period {N}")
        grid = tuple(tuple(row) for row in rows)
        for r, row in enumerate(grid, start=1):
            for a, v in enumerate(row, start=1):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise MalformedFrieze(f"entry m({a},{a + r + 1}) is not an integer")
                if v <= 0:
                    raise MalformedFrieze(f"entry m({a},{a + r + 1}) = {v} is not positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "rows", grid)
        for a in range(1, N + 1):
            for d in range(1, n + 2):
                b = a + d
                if self.m(a, b) * self.m(a + 1, b + 1) != self.m(a + 1, b) * self.m(a, b + 1) + 1:
                    raise MalformedFrieze(f"diamond rule fails at ({a},{b})")
            for d in range(2, n + 2):
                if self.m(a, a + d) != self.m(a + d, a + N):
                    raise MalformedFrieze(f"glide identity fails at ({a},{a + d})")

    def __setattr__(self, name, value):
        raise AttributeError("Frieze is immutable")

    def m(self, a: int, b: int) -> int:
        """Entry at pair coordinate (a, b); requires 0 <= b-a <= n+3."""
        d = b - a
        if d == 0 or d == self.N:
            return 0
        if d == 1 or d == self.N - 1:
            return 1
        if not 2 <= d <= self.n + 1:
            raise InvalidInput(f"({a},{b}) is outside the frieze band")
        return self.rows[d - 2][(a - 1) % self.N]

    def row(self, r: int) -> tuple[int, ...]:
        """Nontrivial row r = 1..n as one period (a = 1..N)."""
        if not 1 <= r <= self.n:
            raise InvalidInput(f"row {r} out of range 1..{self.n}")
        return self.rows[r - 1]

    def quiddity(self) -> tuple[int, ...]:
        """q_i = m(i-1, i+1) for i = 1..N."""
        return tuple(self.rows[0][(i - 2) % self.N] for i in range(1, self.N + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Frieze):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Frieze(n={self.n}, quiddity={self.quiddity()})"

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "domain": [[a, b, self.m(a, b)] for a, b in fundamental_domain(self.n)],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Frieze":
        if not isinstance(obj, dict) or "n" not in obj or "domain" not in obj:
            raise InvalidInput("frieze JSON needs 'n' and 'domain'")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidInput("'n' must be a positive integer")
        dom = obj["domain"]
        if not isinstance(dom, list):
            raise InvalidInput("'domain' must be an array")
        N = n + 3
        rows = [[None] * N for _ in range(n)]

        def put(a, b, v):
            d = b - a
            if not (isinstance(a, int) and isinstance(b, int) and 2 <= d <= n + 1):
                raise InvalidInput(f"cell ({a},{b}) is not a nontrivial frieze cell")
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidInput(f"value at ({a},{b}) must be an integer")
            if rows[d - 2][(a - 1) % N] is not None:
                raise InvalidInput(f"cell ({a},{b}) assigned twice")
            rows[d - 2][(a - 1) % N] = v

        for item in dom:
            if not isinstance(item, list) or len(item) != 3:
                raise InvalidInput("domain entries must be [a, b, value]")
            a, b, v = item
            put(a, b, v)
            pa, pb = glide_partner(n, (a, b))
            if (pa, pb) != normalize_cell(n, (a, b)):
                put(pa, pb, v)
        if any(v is None for row in rows for v in row):
            raise InvalidInput("domain does not cover a full fundamental domain")
        return cls(rows)


def from_quiddity(q: Sequence[int]) -> Frieze:
    """Reconstruct the frieze whose first nontrivial row is given by q.

    Row 1 is m(a, a+2) = q[a+1] (cyclic, 1-based); each later row comes
    from the diamond rule. The sequence must produce positive integers
    throughout and close with a row of all 1s.
    """
    N = len(q)
    if N < 4:
        raise InvalidInput("quiddity sequence needs length >= 4")
    for v in q:
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise InvalidInput("quiddity entries must be positive integers")
    n = N - 3
    rows = [[q[a % N] for a in range(1, N + 1)]]
    prev = [1] * N  # row 0, the trivial row
    for r in range(1, n + 1):
        cur = rows[-1]
        nxt = []
        for a in range(1, N + 1):
            # m(a, b+1) = (m(a,b) m(a+1,b+1) - 1) / m(a+1,b), b = a+r+1
            num = cur[a - 1] * cur[a % N] - 1
            den = prev[a % N]
            val, rem = divmod(num, den)
            if rem != 0:
                raise NonInteger(f"entry m({a},{a + r + 2}) = {num}/{den} is not an integer")
            if val <= 0:
                raise NonPositive(f"entry m({a},{a + r + 2}) = {val} is not positive")
            if r == n:
                # row b-a = n+2 must close with 1s
                if val != 1:
                    raise DoesNotClose(f"entry m({a},{a + n + 2}) = {val} instead of 1")
            else:
                nxt.append(val)
        if r < n:
            prev = cur
            rows.append(nxt)
    return Frieze(rows)


def from_triangulation(t: Triangulation) -> Frieze:
    """The frieze of a triangulation; its entries are 1 on each diagonal."""
    if t.N < 4:
        raise InvalidInput("frieze needs a polygon with at least 4 vertices")
    f = from_quiddity(polygon_quiddity(t))
    for a, b in t.diagonals:
        assert f.m(a, b) == 1, f"triangulation diagonal ({a},{b}) has value {f.m(a, b)}"
    return f


def to_triangulation(f: Frieze) -> Triangulation:
    """Invert from_triangulation by ear-cutting the quiddity sequence.

    A quiddity entry 1 marks an ear; cutting it closes the diagonal
    between its neighbors and decrements their entries. N-3 cuts leave
    a triangle.
    """
    N = f.N
    labels = list(range(1, N + 1))
    q = list(f.quiddity())
    diagonals = []
    while len(labels) > 3:
        k = len(labels)
        ear = next((j for j in range(k) if q[j] == 1), None)
        if ear is None:
            raise MalformedFrieze("quiddity sequence has no ear to cut")
        u, w = labels[(ear - 1) % k], labels[(ear + 1) % k]
        diagonals.append((u, w))
        if q[(ear - 1) % k] <= 1 or q[(ear + 1) % k] <= 1:
            raise MalformedFrieze("ear cut would make a neighbor count nonpositive")
        q[(ear - 1) % k] -= 1
        q[(ear + 1) % k] -= 1
        del labels[ear], q[ear]
    return Triangulation(N, diagonals)


class LightningBolt:
    """One cell per nontrivial row, consecutive cells sharing a diamond.

    cells[r-1] is the row-r cell (a, b) with b - a = r + 1; the next
    cell is either (a-1, b) or (a, b+1).
    """

    __slots__ = ("n", "cells")

    def __init__(self, cells: Sequence[Sequence[int]]):
        n = len(cells)
        if n < 1:
            raise InvalidInput("a lightning bolt needs at least one cell")
        cs = []
        for r, cell in enumerate(cells, start=1):
            if len(cell) != 2:
                raise InvalidInput(f"cell {cell!r} must be a pair")
            a, b = cell
            if not isinstance(a, int) or not isinstance(b, int) or isinstance(a, bool) or isinstance(b, bool):
                raise InvalidInput(f"cell {cell!r} must have integer coordinates")
            if b - a != r + 1:
                raise InvalidInput(f"row-{r} cell must satisfy b - a = {r + 1}, got {cell!r}")
            cs.append((a, b))
        for r in range(1, n):
            a, b = cs[r - 1]
            if cs[r] not in ((a - 1, b), (a, b + 1)):
                raise InvalidInput(
                    f"cells {cs[r - 1]} and {cs[r]} do not share a diamond"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cells", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LightningBolt is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LightningBolt):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"LightningBolt({list(self.cells)})"

    def to_json_obj(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json_obj(cls, obj) -> "LightningBolt":
        if not isinstance(obj, dict) or "cells" not in obj or not isinstance(obj["cells"], list):
            raise InvalidInput("bolt JSON needs 'cells'")
        return cls(obj["cells"])


def enumerate_bolts(n: int) -> list[LightningBolt]:
    """All bolts of height n with the row-1 cell in one period: the
    (n+3) * 2^(n-1) shape/position combinations, deterministically ordered."""
    if n < 1:
        raise InvalidInput("height must be >= 1")
    out = []
    for a0 in range(1, n + 4):
        shapes = [[(a0, a0 + 2)]]
        for _ in range(n - 1):
            grown = []
            for cells in shapes:
                a, b = cells[-1]
                grown.append(cells + [(a - 1, b)])
                grown.append(cells + [(a, b + 1)])
            shapes = grown
        out.extend(LightningBolt(cells) for cells in shapes)
    return out


def _propagate(n: int, seeds: Mapping[Cell, object], one, mul, div_left, div_right):
    """Fill the n nontrivial rows (one period) from the seeded cells by
    the diamond rule. Generic over the value type: `one` is the
    multiplicative unit, `div_left(num_prod, minus, den, cell)` computes
    (num_prod - 1)/den and `div_right` computes (num_prod + 1)/den,
    both raising on failure at `cell`.
    """
    N = n + 3
    rows: list[list] = [[None] * N for _ in range(n)]

    def get(a: int, d: int):
        if d == 1 or d == n + 2:
            return one
        return rows[d - 2][(a - 1) % N]

    def put(a: int, d: int, v):
        rows[d - 2][(a - 1) % N] = v

    for (a, b), v in seeds.items():
        put(a, b - a, v)
    progress = True
    while progress:
        progress = False
        for d in range(2, n + 2):
            for a in range(1, N + 1):
                # diamond with corners P=(a,d), Q=(a+1,d), U=(a+1,d-1), L=(a,d+1)
                P, Q = get(a, d), get(a + 1, d)
                U, L = get(a + 1, d - 1), get(a, d + 1)
                known = [x is not None for x in (P, Q, U, L)]
                if sum(known) != 3:
                    continue
                if P is None:
                    put(a, d, div_right(mul(U, L), Q, (a, a + d)))
                elif Q is None:
                    put(a + 1, d, div_right(mul(U, L), P, (a + 1, a + 1 + d)))
                elif U is None:
                    put(a + 1, d - 1, div_left(mul(P, Q), L, (a + 1, a + d)))
                else:
                    put(a, d + 1, div_left(mul(P, Q), U, (a, a + d + 1)))
                progress = True
    assert all(v is not None for row in rows for v in row), "bolt did not determine the frieze"
    return rows


def from_bolt(bolt: LightningBolt, values: Sequence[int]) -> Frieze:
    """The unique frieze with the given positive values on the bolt cells."""
    n = bolt.n
    if len(values) != n:
        raise InvalidInput(f"need {n} values, one per bolt cell")
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise InvalidInput("bolt values must be positive integers")

    def div(num: int, den: int, cell: Cell) -> int:
        val, rem = divmod(num, den)
        if rem != 0:
            raise NonInteger(f"entry m{cell} = {num}/{den} is not an integer")
        if val <= 0:
            raise NonPositive(f"entry m{cell} = {val} is not positive")
        return val

    rows = _propagate(
        n,
        dict(zip(bolt.cells, values)),
        one=1,
        mul=lambda x, y: x * y,
        div_left=lambda p, den, cell: div(p - 1, den, cell),
        div_right=lambda p, den, cell: div(p + 1, den, cell),
    )
    return Frieze(rows)


def symbolic_from_bolt(bolt: LightningBolt) -> dict[Cell, LaurentPoly]:
    """Place the generator x_r on the row-r bolt cell and fill the strip
    symbolically; returns {cell: polynomial} over one fundamental domain."""
    n = bolt.n
    one = LaurentPoly.one(n)

    def div_left(p: LaurentPoly, den: LaurentPoly, cell: Cell) -> LaurentPoly:
        try:
            return (p - one).div_exact(den)
        except NotDivisible as exc:
            raise LaurentViolation(f"entry m{cell} is not a Laurent polynomial") from exc

    def div_right(p: LaurentPoly, den: LaurentPoly, cell: Cell) -> LaurentPoly:
        try:
            return (p + one).div_exact(den)
        except NotDivisible as exc:
            raise LaurentViolation(f"entry m{cell} is not a Laurent polynomial") from exc

    seeds = {
        cell: LaurentPoly.gen(n, r) for r, cell in enumerate(bolt.cells)
    }
    rows = _propagate(n, seeds, one=one, mul=lambda x, y: x * y,
                      div_left=div_left, div_right=div_right)
    N = n + 3
    out = {}
    for a, b in fundamental_domain(n):
        out[(a, b)] = rows[b - a - 2][(a - 1) % N]
    return out


def bolt_to_quiver(bolt: LightningBolt) -> Quiver:
    """The A_n orientation read off the bolt: vertex r is the row-r cell;
    the arrow between r and r+1 points from the cell that sits to the
    right (the (a, b+1) step) toward a left step, i.e. left step at row
    r+1 gives r+1 -> r, right step gives r -> r+1."""
    n = bolt.n
    arrows = []
    for r in range(1, n):
        a, b = bolt.cells[r - 1]
        if bolt.cells[r] == (a - 1, b):
            arrows.append((r + 1, r, 1))
        else:
            arrows.append((r, r + 1, 1))
    return Quiver.from_arrows(n, arrows)


def enumerate_friezes(n: int) -> list[Frieze]:
    """All friezes of height n, via the triangulation bijection."""
    if n < 1:
        raise InvalidInput("height must be >= 1")
    from .polygon import enumerate_triangulations

    return [from_triangulation(t) for t in enumerate_triangulations(n + 3)]


def render(f: Frieze, width: int | None = None) -> str:
    """Offset-strip text rendering: the entry m(a, b) of row d = b-a sits
    at horizontal position a + b, so successive rows interleave. Rows
    d = 1 and d = n+2 are the bounding rows of 1s; `width` counts the
    entries shown per row (default one period)."""
    if width is None:
        width = f.N
    if width < 1:
        raise InvalidInput("width must be >= 1")
    cw = max(
        len(str(f.m(a, a + d))) for d in range(1, f.n + 2) for a in range(1, f.N + 1)
    ) + 1
    lines = []
    for d in range(1, f.n + 3):
        chars = [" "] * ((2 * width + d + 2) * cw)
        for a in range(1, width + 1):
            s = str(f.m(a, a + d))
            pos = (2 * a + d) * cw - len(s)
            chars[pos : pos + len(s)] = s
        lines.append("".join(chars).rstrip())
    return "\n".join(lines)
