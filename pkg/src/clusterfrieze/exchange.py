"""Exhaustive exploration of the seed mutation graph up to isomorphism.

Nodes are isomorphism classes of seeds reachable from the initial seed;
the stored representative is the first member a deterministic BFS
encounters, so fixture files are stable. Deduplication first buckets by
the multiset of cluster variables (cheap and exact) and only then runs
the backtracking isomorphism search within a bucket.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidInput, NotFiniteType
from .laurent import LaurentPoly, poly_sort_key
from .quiver import Quiver, is_finite_type
from .seed import Seed, initial_seed, mutate_seed, seeds_isomorphic


@dataclass(frozen=True)
class ExchangeGraph:
    nodes: tuple[Seed, ...]
    edges: tuple[tuple[int, int, int], ...]  # (node, vertex k, node)
    variables: tuple[LaurentPoly, ...]

    def node_index(self, seed: Seed) -> int | None:
        """Index of the node class containing the given seed, if any."""
        for i, rep in enumerate(self.nodes):
            if seeds_isomorphic(seed, rep) is not None:
                return i
        return None

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        return [(k, v) for u, k, v in self.edges if u == i]

    def to_json_obj(self) -> dict:
        return {
            "nodes": [s.to_json_obj() for s in self.nodes],
            "edges": [list(e) for e in self.edges],
            "variables": [v.to_json_obj() for v in self.variables],
        }

    def to_dot(self) -> str:
        """Undirected DOT rendering; edge labels are the mutated vertex
        as seen from the lower-indexed node."""
        lines = ["graph exchange {"]
        for i, s in enumerate(self.nodes):
            label = ", ".join(str(v) for v in s.vars)
            lines.append(f'  n{i} [label="{label}"];')
        seen = set()
        for u, k, v in self.edges:
            if (min(u, v), max(u, v)) in seen and u > v:
                continue
            if u <= v:
                seen.add((u, v))
                lines.append(f'  n{u} -- n{v} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines)


def _seed_sort_key(s: Seed) -> str:
    return json.dumps(s.to_json_obj(), sort_keys=True)


def _cluster_key(s: Seed) -> tuple:
    return tuple(sorted(json.dumps(v.to_json_obj()) for v in s.vars))


def enumerate_seeds(q: Quiver, budget: int | None = None) -> ExchangeGraph:
    """BFS closure of the initial seed under mutation, up to isomorphism.

    budget bounds the number of isomorphism classes; exceeding it raises
    BudgetExceeded whose .graph holds everything explored so far. With
    budget=None the search runs until closure, which for non-finite-type
    quivers never happens -- pass a budget unless finiteness is known.
    """
    if budget is not None and (not isinstance(budget, int) or budget < 1):
        raise InvalidInput("budget must be a positive integer or None")
    s0 = initial_seed(q)
    reps: list[Seed] = [s0]
    buckets: dict[tuple, list[int]] = {_cluster_key(s0): [0]}
    edges: list[tuple[int, int, int]] = []

    def locate(s: Seed) -> int | None:
        for i in buckets.get(_cluster_key(s), ()):
            if seeds_isomorphic(s, reps[i]) is not None:
                return i
        return None

    def partial() -> ExchangeGraph:
        return _finalize(reps, edges)

    head = 0
    while head < len(reps):
        cur = reps[head]
        for k in range(1, q.n + 1):
            nxt = mutate_seed(cur, k)
            j = locate(nxt)
            if j is None:
                if budget is not None and len(reps) >= budget:
                    raise BudgetExceeded(
                        f"exchange graph exceeds {budget} seed classes",
                        graph=partial(),
                    )
                reps.append(nxt)
                buckets.setdefault(_cluster_key(nxt), []).append(len(reps) - 1)
                j = len(reps) - 1
            edges.append((head, k, j))
        head += 1
    return _finalize(reps, edges)


def _finalize(reps: list[Seed], edges: list[tuple[int, int, int]]) -> ExchangeGraph:
    order = sorted(range(len(reps)), key=lambda i: _seed_sort_key(reps[i]))
    relabel = {old: new for new, old in enumerate(order)}
    nodes = tuple(reps[i] for i in order)
    new_edges = tuple(
        sorted((relabel[u], k, relabel[v]) for u, k, v in edges if u in relabel)
    )
    variables = tuple(
        sorted({v for s in nodes for v in s.vars}, key=poly_sort_key)
    )
    return ExchangeGraph(nodes, new_edges, variables)


@functools.lru_cache(maxsize=None)
def cluster_variables(q: Quiver) -> frozenset[LaurentPoly]:
    """All cluster variables of a finite-type quiver."""
    if not is_finite_type(q).finite:
        raise NotFiniteType("cluster variables are finite only for Dynkin-type quivers")
    return frozenset(enumerate_seeds(q).variables)
