"""Cluster quivers: finite directed multigraphs without loops or 2-cycles.

A quiver on vertices 1..n is stored as its skew-symmetric exchange
matrix b, where b[i][j] > 0 means b[i][j] arrows i -> j. Loops and
2-cycles are unrepresentable in this encoding, which is exactly the
class of quivers mutation is defined on.

Mutation at k is implemented twice on purpose: the three-step arrow
procedure (add composites through k, reverse at k, cancel 2-cycles
maximally) and the closed-form matrix rule. They agree; tests insist.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput

DYNKIN_FAMILIES = ("A", "D", "E")


class Quiver:
    __slots__ = ("n", "b")

    def __init__(self, n: int, b: Sequence[Sequence[int]]):
        if n < 1:
            raise InvalidInput("quiver needs at least one vertex")
        if len(b) != n or any(len(row) != n for row in b):
            raise InvalidInput("exchange matrix has wrong shape")
        m = tuple(tuple(int(x) for x in row) for row in b)
        for i in range(n):
            if m[i][i] != 0:
                raise InvalidInput("loops are not allowed")
            for j in range(n):
                if m[i][j] != -m[j][i]:
                    raise InvalidInput("exchange matrix must be skew-symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b", m)

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[Sequence[int]]) -> "Quiver":
        """Build from (i, j, multiplicity) triples, 1-based vertices."""
        b = [[0] * n for _ in range(n)]
        for arrow in arrows:
            if len(arrow) == 2:
                i, j, mult = arrow[0], arrow[1], 1
            elif len(arrow) == 3:
                i, j, mult = arrow
            else:
                raise InvalidInput(f"arrow {arrow!r} must be [i, j] or [i, j, mult]")
            if not (isinstance(i, int) and isinstance(j, int) and isinstance(mult, int)):
                raise InvalidInput(f"arrow {arrow!r} must be integer-valued")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInput(f"arrow {arrow!r} out of vertex range 1..{n}")
            if i == j:
                raise InvalidInput("loops are not allowed")
            if mult < 1:
                raise InvalidInput("arrow multiplicity must be >= 1")
            if b[j - 1][i - 1] > 0:
                raise InvalidInput(f"arrows both ways between {j} and {i} (2-cycle)")
            if b[i - 1][j - 1] > 0:
                raise InvalidInput(f"duplicate arrow entry {i}->{j}")
            b[i - 1][j - 1] = mult
            b[j - 1][i - 1] = -mult
        return cls(n, b)

    # -- views ---------------------------------------------------------------

    def arrows(self) -> list[tuple[int, int, int]]:
        """Sorted (i, j, multiplicity) triples, 1-based."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if self.b[i][j] > 0:
                    out.append((i + 1, j + 1, self.b[i][j]))
        return out

    def sinks(self) -> list[int]:
        """Vertices with no outgoing arrows."""
        return [i + 1 for i in range(self.n) if all(x <= 0 for x in self.b[i])]

    def sources(self) -> list[int]:
        """Vertices with no incoming arrows."""
        return [i + 1 for i in range(self.n) if all(x >= 0 for x in self.b[i])]

    def max_multiplicity(self) -> int:
        return max((abs(x) for row in self.b for x in row), default=0)

    def is_acyclic(self) -> bool:
        color = [0] * self.n  # 0 unseen, 1 on stack, 2 done

        def visit(v: int) -> bool:
            color[v] = 1
            for w in range(self.n):
                if self.b[v][w] > 0:
                    if color[w] == 1 or (color[w] == 0 and not visit(w)):
                        return False
            color[v] = 2
            return True

        return all(color[v] == 2 or visit(v) for v in range(self.n))

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Undirected edge list (i < j, 1-based), ignoring multiplicity."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.b[i][j] != 0
        ]

    # -- mutation --------------------------------------------------------------

    def mutate(self, k: int) -> "Quiver":
        """Mutation at vertex k (1-based), by the three-step procedure."""
        self._check_vertex(k)
        n, v = self.n, k - 1
        a = [[max(x, 0) for x in row] for row in self.b]
        # (1) a path i -> k -> j contributes an arrow i -> j
        for i in range(n):
            if a[i][v]:
                for j in range(n):
                    if a[v][j]:
                        a[i][j] += a[i][v] * a[v][j]
        # (2) reverse every arrow at k
        for i in range(n):
            a[i][v], a[v][i] = a[v][i], a[i][v]
        # (3) cancel two-cycles maximally
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                b[i][j] = a[i][j] - a[j][i]
        return Quiver(n, b)

    def mutate_by_matrix_rule(self, k: int) -> "Quiver":
        """Mutation at k via the closed-form exchange-matrix rule."""
        self._check_vertex(k)
        n, v = self.n, k - 1
        b = self.b
        nb = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == v or j == v:
                    nb[i][j] = -b[i][j]
                else:
                    s = 1 if b[i][v] > 0 else (-1 if b[i][v] < 0 else 0)
                    nb[i][j] = b[i][j] + s * max(b[i][v] * b[v][j], 0)
        return Quiver(n, nb)

    def relabel(self, perm: Sequence[int]) -> "Quiver":
        """Apply vertex relabeling: perm[i-1] is the new label of vertex i."""
        n = self.n
        if sorted(perm) != list(range(1, n + 1)):
            raise InvalidInput("perm must be a permutation of 1..n")
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                b[perm[i] - 1][perm[j] - 1] = self.b[i][j]
        return Quiver(n, b)

    def canonical_form(self) -> tuple["Quiver", tuple[int, ...]]:
        """Canonical representative of the relabeling class, with witness.

        Searches for the relabeling maximizing the bordered signature of
        the arrow-multiplicity matrix (the entries a[u][v], a[v][u]
        revealed as each new vertex v is appended), depth-first with
        signature pruning. This is a total order on matrices, so the
        representative is unique; the witness perm satisfies
        q.relabel(perm) == canonical.
        """
        n = self.n
        a = [[max(x, 0) for x in row] for row in self.b]
        best_sigs: list[tuple[int, ...]] = []
        best_assign: tuple[int, ...] | None = None
        assigned: list[int] = []
        used = [False] * n

        def dfs():
            nonlocal best_assign
            p = len(assigned)
            if p == n:
                if best_assign is None:
                    best_assign = tuple(assigned)
                return
            for v in range(n):
                if used[v]:
                    continue
                sig = tuple(a[u][v] for u in assigned) + tuple(a[v][u] for u in assigned)
                if len(best_sigs) > p:
                    if sig < best_sigs[p]:
                        continue
                    if sig > best_sigs[p]:
                        del best_sigs[p:]
                        best_assign = None
                if len(best_sigs) == p:
                    best_sigs.append(sig)
                assigned.append(v)
                used[v] = True
                dfs()
                assigned.pop()
                used[v] = False

        dfs()
        assert best_assign is not None
        perm = [0] * n
        for pos, orig in enumerate(best_assign):
            perm[orig] = pos + 1
        return self.relabel(perm), tuple(perm)

    def _check_vertex(self, k: int):
        if not (isinstance(k, int) and 1 <= k <= self.n):
            raise InvalidInput(f"vertex {k!r} out of range 1..{self.n}")

    # -- identity ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.n == other.n and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.n, self.b))

    def __repr__(self) -> str:
        arrows = ", ".join(
            f"{i}->{j}" if m == 1 else f"{i}=({m})=>{j}" for i, j, m in self.arrows()
        )
        return f"Quiver({self.n}: {arrows or 'no arrows'})"

    # -- serialization --------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n": self.n, "arrows": [list(t) for t in self.arrows()]}

    @classmethod
    def from_json_obj(cls, obj) -> "Quiver":
        if not isinstance(obj, dict) or "n" not in obj or "arrows" not in obj:
            raise InvalidInput("quiver JSON needs 'n' and 'arrows'")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidInput("'n' must be a positive integer")
        arrows = obj["arrows"]
        if not isinstance(arrows, list):
            raise InvalidInput("'arrows' must be an array")
        return cls.from_arrows(n, arrows)


def dynkin(family: str, rank: int, orientation: Sequence[int] | None = None) -> Quiver:
    """An orientation of a simply-laced Dynkin diagram.

    Tree edges in fixed order: the A-chain 1-2-..-r; for D the chain
    1-..-(r-1) plus the edge r-2; for E the chain 1-..-(r-1) plus the
    edge r-3. orientation[e] = +1 orients edge (u, v) as u -> v, -1
    reverses it; omitted means all +1.
    """
    edges = dynkin_edges(family, rank)
    if orientation is None:
        orientation = [1] * len(edges)
    if len(orientation) != len(edges):
        raise InvalidInput(f"orientation needs {len(edges)} entries")
    arrows = []
    for (u, v), o in zip(edges, orientation):
        if o == 1:
            arrows.append((u, v, 1))
        elif o == -1:
            arrows.append((v, u, 1))
        else:
            raise InvalidInput("orientation entries must be +1 or -1")
    return Quiver.from_arrows(rank, arrows)


def dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise InvalidInput("type A needs rank >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise InvalidInput("type D needs rank >= 4")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank, 2)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise InvalidInput("type E needs rank 6, 7 or 8")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank, 3)]
    raise InvalidInput(f"unknown Dynkin family {family!r}")


def dynkin_union_type(q: Quiver) -> str | None:
    """If every component of q's underlying graph is a Dynkin tree,
    return the type string (e.g. 'A3', 'D4+A1'); else None."""
    n = q.n
    adj: list[set[int]] = [set() for _ in range(n)]
    edge_count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if q.b[i][j] != 0:
                if abs(q.b[i][j]) > 1:
                    return None
                adj[i].add(j)
                adj[j].add(i)
                edge_count += 1
    seen = [False] * n
    types = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        head = 0
        while head < len(comp):
            for w in adj[comp[head]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            head += 1
        edges = sum(len(adj[v] & set(comp)) for v in comp) // 2
        if edges != len(comp) - 1:
            return None  # component has a cycle
        t = _tree_type(comp, adj)
        if t is None:
            return None
        types.append(t)
    types.sort(key=lambda s: (-int(s[1:]), s))
    return "+".join(types)


def _tree_type(comp: list[int], adj: list[set[int]]) -> str | None:
    size = len(comp)
    degs = {v: len(adj[v]) for v in comp}
    branch = [v for v in comp if degs[v] >= 3]
    if any(degs[v] > 3 for v in comp):
        return None
    if not branch:
        return f"A{size}"
    if len(branch) > 1:
        return None
    c = branch[0]
    legs = []
    for nb in adj[c]:
        length = 1
        prev, cur = c, nb
        while degs[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return f"D{size}"
    if legs == [1, 2, 2]:
        return "E6"
    if legs == [1, 2, 3]:
        return "E7"
    if legs == [1, 2, 4]:
        return "E8"
    return None


@dataclass(frozen=True)
class FiniteTypeResult:
    finite: bool
    dynkin_type: str | None
    path: tuple[int, ...]
    witness: Quiver

    def to_json_obj(self) -> dict:
        return {
            "finite": self.finite,
            "type": self.dynkin_type,
            "path": list(self.path),
            "witness": self.witness.to_json_obj(),
        }


def is_finite_type(q: Quiver) -> FiniteTypeResult:
    """Decide finite type by breadth-first search of the mutation class.

    The search aborts with a negative answer as soon as any quiver in
    the class carries a double arrow (2-finiteness criterion); the
    certificate is a replayable mutation word on the input labeling.
    A positive answer reports the Dynkin type of a class member whose
    components are all Dynkin trees, again with the word reaching it.
    """
    if q.max_multiplicity() >= 2:
        return FiniteTypeResult(False, None, (), q)
    t = dynkin_union_type(q)
    if t is not None:
        return FiniteTypeResult(True, t, (), q)
    start_key = q.canonical_form()[0].b
    visited = {start_key}
    queue: list[tuple[Quiver, tuple[int, ...]]] = [(q, ())]
    head = 0
    while head < len(queue):
        cur, path = queue[head]
        head += 1
        for k in range(1, q.n + 1):
            nxt = cur.mutate(k)
            if nxt.max_multiplicity() >= 2:
                return FiniteTypeResult(False, None, path + (k,), nxt)
            key = nxt.canonical_form()[0].b
            if key in visited:
                continue
            visited.add(key)
            t = dynkin_union_type(nxt)
            if t is not None:
                return FiniteTypeResult(True, t, path + (k,), nxt)
            queue.append((nxt, path + (k,)))
    raise AssertionError("2-finite mutation class closed without a Dynkin member")
