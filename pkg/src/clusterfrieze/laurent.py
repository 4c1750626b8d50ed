"""Exact multivariate Laurent polynomials over the integers.

A polynomial in x1..xn and their inverses is kept as a dict mapping a
dense exponent tuple (one int per variable, negatives allowed) to a
nonzero arbitrary-precision integer coefficient. The term map is always
canonical: no zero coefficients are stored, so equality and hashing are
structural. Instances are immutable.

Division is exact or refuses: div_exact(p, q) returns the unique r with
r*q == p when r exists in the Laurent ring, and raises NotDivisible
otherwise. There is no remainder and no floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, NotDivisible

Exps = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "_terms", "_key")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | None = None):
        if nvars < 0:
            raise InvalidInput("nvars must be >= 0")
        clean: dict[Exps, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise InvalidInput(f"exponent tuple {exps!r} has wrong length")
            if coeff:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def gen(cls, nvars: int, idx: int) -> "LaurentPoly":
        """The variable at 0-based position idx."""
        if not 0 <= idx < nvars:
            raise InvalidInput(f"variable index {idx} out of range")
        exps = [0] * nvars
        exps[idx] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = acc.get(exps, 0) + coeff
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        return LaurentPoly(self.nvars, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = acc.get(e, 0) + c1 * c2
                if c:
                    acc[e] = c
                else:
                    acc.pop(e, None)
        return LaurentPoly(self.nvars, acc)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise InvalidInput("negative powers: invert monomials explicitly")
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def div_exact(self, q: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/q in the Laurent ring, or NotDivisible.

        Both operands are shifted by their componentwise-minimal exponent
        vectors, turning the question into ordinary polynomial division;
        the shifted divisor has per-variable valuation 0, so Laurent
        divisibility and polynomial divisibility coincide. Reduction is
        leading-term against leading-term under lex order, with an
        integer divisibility check on coefficients at every step.
        """
        self._check_compatible(q)
        if q.is_zero():
            raise InvalidInput("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.nvars)
        sp = _min_exps(self._terms)
        sq = _min_exps(q._terms)
        rem = {_sub(e, sp): c for e, c in self._terms.items()}
        den = {_sub(e, sq): c for e, c in q._terms.items()}
        lead_q = max(den)
        cq = den[lead_q]
        quot: dict[Exps, int] = {}
        while rem:
            lead_r = max(rem)
            step = _sub(lead_r, lead_q)
            if any(s < 0 for s in step):
                raise NotDivisible(f"monomial {lead_r} not reducible by divisor lead {lead_q}")
            c, r = divmod(rem[lead_r], cq)
            if r:
                raise NotDivisible(f"coefficient {rem[lead_r]} not divisible by {cq}")
            quot[step] = c
            for e, ce in den.items():
                t = _add(e, step)
                v = rem.get(t, 0) - c * ce
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        shift = _sub(sp, sq)
        return LaurentPoly(self.nvars, {_add(e, shift): c for e, c in quot.items()})

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        """Exact value at a point of positive rationals."""
        if len(point) != self.nvars:
            raise InvalidInput("point has wrong number of coordinates")
        vals = [Fraction(v) for v in point]
        if any(v <= 0 for v in vals):
            raise InvalidInput("evaluation point must be strictly positive")
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = Fraction(coeff)
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- predicates / views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.nvars: 1}

    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def has_negative_coeff(self) -> bool:
        """Advisory diagnostic; cluster-variable coefficients stay >= 0."""
        return any(c < 0 for c in self._terms.values())

    def _canonical_key(self):
        key = self._key
        if key is None:
            key = (self.nvars, tuple(sorted(self._terms.items())))
            object.__setattr__(self, "_key", key)
        return key

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    def _check_compatible(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise InvalidInput("operands have different variable counts")

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [
            {"coeff": str(c), "exps": list(e)}
            for e, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj, nvars: int | None = None) -> "LaurentPoly":
        if not isinstance(obj, list):
            raise InvalidInput("polynomial JSON must be an array of terms")
        terms: dict[Exps, int] = {}
        width = nvars
        for item in obj:
            if not isinstance(item, dict) or set(item) != {"coeff", "exps"}:
                raise InvalidInput("each term needs exactly 'coeff' and 'exps'")
            exps = item["exps"]
            if not isinstance(exps, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in exps):
                raise InvalidInput("'exps' must be an array of integers")
            try:
                coeff = int(item["coeff"])
            except (TypeError, ValueError):
                raise InvalidInput(f"bad coefficient {item['coeff']!r}") from None
            e = tuple(exps)
            if width is None:
                width = len(e)
            if len(e) != width:
                raise InvalidInput("inconsistent exponent tuple lengths")
            if e in terms:
                raise InvalidInput(f"duplicate exponent tuple {e}")
            terms[e] = coeff
        if width is None:
            raise InvalidInput("cannot infer variable count from an empty polynomial")
        return cls(width, terms)

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            parts.append(_format_term(exps, coeff, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self._terms!r})"

    def pretty(self) -> str:
        """Numerator/denominator rendering, e.g. (1+x1+x2)/(x1*x2)."""
        if self.is_zero():
            return "0"
        shift = _min_exps(self._terms)
        den_exps = tuple(-min(s, 0) for s in shift)
        num = LaurentPoly(self.nvars, {_add(e, den_exps): c for e, c in self._terms.items()})
        num_s = str(num)
        if not any(den_exps):
            return num_s
        den_s = "*".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(den_exps)
            if e
        )
        if len(num._terms) > 1:
            num_s = f"({num_s})"
        if den_s.count("*") or "^" in den_s:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"


def _min_exps(terms: Mapping[Exps, int]) -> Exps:
    it = iter(terms)
    first = next(it)
    mins = list(first)
    for e in it:
        for i, v in enumerate(e):
            if v < mins[i]:
                mins[i] = v
    return tuple(mins)


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def _format_term(exps: Exps, coeff: int, first: bool) -> str:
    names = [
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
        for i, e in enumerate(exps)
        if e
    ]
    mag = "*".join(names)
    c = abs(coeff)
    if not mag:
        body = str(c)
    elif c == 1:
        body = mag
    else:
        body = f"{c}*{mag}"
    if first:
        return body if coeff > 0 else f"-{body}"
    return f" + {body}" if coeff > 0 else f" - {body}"


def poly_sort_key(p: LaurentPoly):
    """Total order on polynomials used for deterministic listings."""
    return tuple(sorted(p.terms().items()))
