"""Seeds: a quiver together with an attached cluster of Laurent polynomials.

All variables of a seed live in one ambient Laurent ring, the ring of
the initial cluster, so mutation can divide exactly and every variable
produced along a mutation path stays an honest Laurent polynomial.
"""
from __future__ import annotations

import warnings
from typing import Sequence

from .errors import InvalidInput, LaurentViolation, NotDivisible
from .laurent import LaurentPoly
from .quiver import Quiver


class Seed:
    __slots__ = ("quiver", "vars")

    def __init__(self, quiver: Quiver, vars: Sequence[LaurentPoly]):
        if len(vars) != quiver.n:
            raise InvalidInput("seed needs one variable per quiver vertex")
        vs = tuple(vars)
        for v in vs:
            if not isinstance(v, LaurentPoly):
                raise InvalidInput("seed variables must be Laurent polynomials")
            if v.nvars != vs[0].nvars:
                raise InvalidInput("seed variables must share one ambient ring")
            if v.is_zero():
                raise InvalidInput("seed variables must be nonzero")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "vars", vs)

    def __setattr__(self, name, value):
        raise AttributeError("Seed is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.quiver == other.quiver and self.vars == other.vars

    def __hash__(self) -> int:
        return hash((self.quiver, self.vars))

    def __repr__(self) -> str:
        return f"Seed({self.quiver!r}, vars=[{', '.join(str(v) for v in self.vars)}])"

    def to_json_obj(self) -> dict:
        return {
            "quiver": self.quiver.to_json_obj(),
            "vars": [v.to_json_obj() for v in self.vars],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Seed":
        if not isinstance(obj, dict) or "quiver" not in obj or "vars" not in obj:
            raise InvalidInput("seed JSON needs 'quiver' and 'vars'")
        q = Quiver.from_json_obj(obj["quiver"])
        if not isinstance(obj["vars"], list) or len(obj["vars"]) != q.n:
            raise InvalidInput("'vars' must list one variable per vertex")
        vs = [LaurentPoly.from_json_obj(v, nvars=q.n) for v in obj["vars"]]
        return cls(q, vs)


def initial_seed(q: Quiver) -> Seed:
    """The seed whose cluster is the n generators of the Laurent ring."""
    return Seed(q, [LaurentPoly.gen(q.n, i) for i in range(q.n)])


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate at vertex k: the new k-th variable is
    (product over arrows k->j of f_j + product over arrows l->k of f_l) / f_k,
    arrows counted with multiplicity. Division must be exact in the
    Laurent ring; if it is not, the seed was no valid cluster and
    LaurentViolation is raised.
    """
    q = seed.quiver
    if not (isinstance(k, int) and 1 <= k <= q.n):
        raise InvalidInput(f"vertex {k!r} out of range 1..{q.n}")
    nvars = seed.vars[0].nvars
    m_out = LaurentPoly.one(nvars)
    m_in = LaurentPoly.one(nvars)
    for j in range(q.n):
        e = q.b[k - 1][j]
        if e > 0:
            m_out = m_out * seed.vars[j] ** e
        elif e < 0:
            m_in = m_in * seed.vars[j] ** (-e)
    try:
        new_var = (m_out + m_in).div_exact(seed.vars[k - 1])
    except NotDivisible as exc:
        raise LaurentViolation(
            f"mutation at {k} does not stay in the Laurent ring: {exc.detail}"
        ) from exc
    if new_var.has_negative_coeff():
        warnings.warn(
            f"mutation at {k} produced a variable with negative coefficients",
            UserWarning,
            stacklevel=2,
        )
    new_vars = list(seed.vars)
    new_vars[k - 1] = new_var
    return Seed(q.mutate(k), new_vars)


def seeds_isomorphic(s: Seed, t: Seed) -> tuple[int, ...] | None:
    """Search for a relabeling perm with s.quiver.relabel(perm) == t.quiver
    and t.vars[perm[i]-1] == s.vars[i-1]; return it, or None.

    Backtracking over vertices, pruning each partial assignment against
    both the variable matching and the already-fixed matrix entries.
    """
    if s.quiver.n != t.quiver.n or sorted(map(hash, s.vars)) != sorted(map(hash, t.vars)):
        return None
    n = s.quiver.n
    cand = [
        [j for j in range(n) if t.vars[j] == s.vars[i]]
        for i in range(n)
    ]
    if any(not c for c in cand):
        return None
    assign = [-1] * n
    used = [False] * n
    bs, bt = s.quiver.b, t.quiver.b

    def dfs(i: int) -> bool:
        if i == n:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            if any(bs[i][p] != bt[j][assign[p]] for p in range(i)):
                continue
            assign[i] = j
            used[j] = True
            if dfs(i + 1):
                return True
            used[j] = False
        assign[i] = -1
        return False

    if not dfs(0):
        return None
    return tuple(a + 1 for a in assign)
