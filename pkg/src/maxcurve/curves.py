"""Catalog of explicit maximal curves over F_{q^2}.

Families are addressed by ids of the form ``name:key=val,key=val``::

    hermitian:q=4        y^q + y = x^(q+1)
    as:q=11,m=4          y^q + y = x^m, m | q+1, m >= 2
    even-trace:q=8       y^(q/2) + ... + y^2 + y = x^(q+1), q even
    fermat-half:q=5      x^((q+1)/2) + y^((q+1)/2) + 1 = 0, q odd
    r32i:q=5             x^((q+1)/3) + x^(2(q+1)/3) + y^(q+1) = 0, q = 2 mod 3
    r32ii:q=7            y^q + y x^(2(q-1)/3) + x^((q-1)/3) = 0, q = 1 mod 3
    r32iii:q=9           y^q + y + (x^(q/p) + ... + x^p + x)^2 = 0, q = 3^t

Only point counts of the nonsingular models are needed, so no model is ever
desingularised.  The affine plane chart is counted directly and
``infinity_correction`` adds the places it misses (places at infinity plus
any extra branches through singular affine points).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .field_core import FieldCtx, FieldElement, make_field, prime_power
from .semigroups import semigroup_from_generators, semigroup_genus

FAMILY_KINDS = ("hermitian", "as", "even-trace", "fermat-half", "r32i", "r32ii", "r32iii")


@dataclass(frozen=True)
class CurveFamily:
    kind: str
    q: int
    m: Optional[int] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        pp = prime_power(self.q)
        q = self.q
        if self.kind == "as":
            if self.m is None or self.m < 2 or (q + 1) % self.m:
                raise ValueError(f"as family needs 2 <= m | q+1, got q={q}, m={self.m}")
        elif self.m is not None:
            raise ValueError(f"{self.kind} takes no m parameter")
        if self.kind == "even-trace" and q % 2:
            raise ValueError("even-trace needs q even")
        if self.kind == "fermat-half" and q % 2 == 0:
            raise ValueError("fermat-half needs q odd")
        if self.kind == "r32i" and q % 3 != 2:
            raise ValueError("r32i needs q = 2 mod 3")
        if self.kind == "r32ii" and q % 3 != 1:
            raise ValueError("r32ii needs q = 1 mod 3")
        if self.kind == "r32iii" and pp.p != 3:
            raise ValueError("r32iii needs q a power of 3")

    @property
    def p(self) -> int:
        return prime_power(self.q).p

    @property
    def id(self) -> str:
        if self.kind == "as":
            return f"as:q={self.q},m={self.m}"
        return f"{self.kind}:q={self.q}"

    def __str__(self):
        return self.id


def parse_family(spec: str) -> CurveFamily:
    """Parse ``name:key=val,...`` into a CurveFamily."""
    name, _, rest = spec.strip().partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"bad parameter {item!r} in {spec!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise ValueError(f"parameter {key!r} must be an integer in {spec!r}") from None
    unknown = set(params) - {"q", "m"}
    if unknown or "q" not in params:
        raise ValueError(f"family id {spec!r} needs q (and m for as), got {sorted(params)}")
    return CurveFamily(name.strip(), params["q"], params.get("m"))


def family_instances(q: int) -> list[CurveFamily]:
    """Every catalogued family valid at q."""
    out = [CurveFamily("hermitian", q)]
    out += [CurveFamily("as", q, m) for m in range(2, q + 2) if (q + 1) % m == 0]
    if q % 2 == 0:
        out.append(CurveFamily("even-trace", q))
    else:
        out.append(CurveFamily("fermat-half", q))
    kind = {2: "r32i", 1: "r32ii"}.get(q % 3) if q % 3 else "r32iii"
    out.append(CurveFamily(kind, q))
    return out


def family_genus(f: CurveFamily) -> int:
    q = f.q
    if f.kind == "hermitian":
        return q * (q - 1) // 2
    if f.kind == "as":
        return (q - 1) * (f.m - 1) // 2
    if f.kind == "even-trace":
        return q * (q - 2) // 4
    if f.kind == "fermat-half":
        return (q - 1) * (q - 3) // 8
    if f.kind == "r32i":
        return (q * q - q + 4) // 6
    return (q * q - q) // 6  # r32ii, r32iii


def family_dim_DX(f: CurveFamily) -> Optional[int]:
    """dim |(q+1)P0| where known; None where no value is pinned down."""
    if f.kind == "hermitian":
        return 2
    if f.kind == "as":
        return (f.q + 1) // f.m + 1
    if f.kind == "even-trace":
        return 3
    if f.kind == "fermat-half":
        return 5
    return None


def family_semigroup_gens(f: CurveFamily) -> Optional[tuple[int, ...]]:
    """Weierstrass semigroup generators at the point over x = infinity.

    x and y have pole orders q and m there, so the semigroup contains <m, q>;
    the generators are only returned once that semigroup has exactly the
    family genus, which forces equality.
    """
    if f.kind == "hermitian":
        gens = (f.q, f.q + 1)
    elif f.kind == "as":
        gens = tuple(sorted({f.m, f.q}))
    else:
        return None
    if semigroup_genus(semigroup_from_generators(gens)) != family_genus(f):
        raise ArithmeticError(f"semigroup <{gens}> does not have genus {family_genus(f)} for {f}")
    return gens


@dataclass(frozen=True)
class FamilyFacts:
    genus: int
    dim_DX: Optional[int]
    semigroup_gens: Optional[tuple[int, ...]]
    infinity_rule: str


_INFINITY_RULES = {
    "hermitian": "one smooth point (0:1:0)",
    "as": "one totally ramified place over x = infinity",
    "even-trace": "one totally ramified place over x = infinity",
    "fermat-half": "points (1:u:0) with u^((q+1)/2) = -1",
    "r32i": "n=(q+1)/3 branches at the origin and at (1:0:0), one per root of u^n = -1; "
    "the origin is already in the affine count",
    "r32ii": "places over (1:0:0): one per root of w^s = -1, s=(q-1)/3 (branches y^3 = w z), plus one",
    "r32iii": "one totally ramified place over x = infinity",
}


def family_facts(f: CurveFamily) -> FamilyFacts:
    return FamilyFacts(
        genus=family_genus(f),
        dim_DX=family_dim_DX(f),
        semigroup_gens=family_semigroup_gens(f),
        infinity_rule=_INFINITY_RULES[f.kind],
    )


# -- plane models ---------------------------------------------------------------


@dataclass(frozen=True)
class BivariatePoly:
    """Sparse polynomial in x, y: terms maps (i, j) to the coefficient of x^i y^j."""

    ctx: FieldCtx
    terms: tuple[tuple[tuple[int, int], FieldElement], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("zero polynomial has no curve")
        for (i, j), c in self.terms:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            self.ctx.check(c)
            if self.ctx.is_zero(c):
                raise ValueError(f"zero coefficient stored for x^{i} y^{j}")

    @classmethod
    def from_int_terms(cls, ctx: FieldCtx, terms: dict[tuple[int, int], int]) -> "BivariatePoly":
        """Build from integer (prime-field) coefficients, dropping those that vanish mod p."""
        kept = sorted((e, c % ctx.p) for e, c in terms.items() if c % ctx.p)
        return cls(ctx, tuple((e, ctx.element(c)) for e, c in kept))

    @property
    def degree_x(self) -> int:
        return max(i for (i, _), _ in self.terms)

    @property
    def degree_y(self) -> int:
        return max(j for (_, j), _ in self.terms)

    @property
    def total_degree(self) -> int:
        return max(i + j for (i, j), _ in self.terms)

    def coefficient(self, i: int, j: int) -> FieldElement:
        for e, c in self.terms:
            if e == (i, j):
                return c
        return self.ctx.zero

    def evaluate(self, x: FieldElement, y: FieldElement) -> FieldElement:
        F = self.ctx
        acc = F.zero
        for (i, j), c in self.terms:
            acc = F.add(acc, F.mul(c, F.mul(F.pow(x, i), F.pow(y, j))))
        return acc

    def __str__(self):
        parts = []
        for (i, j), c in sorted(self.terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][1])):
            mono = "*".join(
                s for s in (_mono("x", i), _mono("y", j)) if s
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


def _mono(var: str, e: int) -> str:
    return "" if e == 0 else (var if e == 1 else f"{var}^{e}")


def _int_terms(f: CurveFamily) -> dict[tuple[int, int], int]:
    """Integer coefficients of the affine equation F(x, y) = 0."""
    q, p = f.q, f.p
    t: dict[tuple[int, int], int] = {}

    def put(i, j, c):
        t[(i, j)] = t.get((i, j), 0) + c

    if f.kind == "hermitian":
        put(0, q, 1), put(0, 1, 1), put(q + 1, 0, -1)
    elif f.kind == "as":
        put(0, q, 1), put(0, 1, 1), put(f.m, 0, -1)
    elif f.kind == "even-trace":
        e = q // 2
        while e >= 1:
            put(0, e, 1)
            e //= 2
        put(q + 1, 0, -1)
    elif f.kind == "fermat-half":
        d = (q + 1) // 2
        put(d, 0, 1), put(0, d, 1), put(0, 0, 1)
    elif f.kind == "r32i":
        n = (q + 1) // 3
        put(n, 0, 1), put(2 * n, 0, 1), put(0, q + 1, 1)
    elif f.kind == "r32ii":
        s = (q - 1) // 3
        # middle sign +: with -, the model is not maximal once p is odd
        put(0, q, 1), put(2 * s, 1, 1), put(s, 0, 1)
    else:  # r32iii: (x^(q/p) + ... + x)^2 expanded
        put(0, q, 1), put(0, 1, 1)
        exps = []
        e = 1
        while e < q:
            exps.append(e)
            e *= p
        for a in exps:
            for b in exps:
                put(a + b, 0, 1)
    return t


def family_plane_model(f: CurveFamily, ctx: FieldCtx) -> BivariatePoly:
    """Affine defining polynomial of f with coefficients in ctx (an extension of F_{q^2})."""
    pp = prime_power(f.q)
    if ctx.p != pp.p or ctx.degree % (2 * pp.k):
        raise ValueError(f"{ctx!r} is not an extension of F_{{{f.q}^2}}")
    return BivariatePoly.from_int_terms(ctx, _int_terms(f))


def family_field(f: CurveFamily, k: int = 1) -> FieldCtx:
    """F_{q^{2k}} for the family's q."""
    if k < 1:
        raise ValueError("extension index k must be >= 1")
    pp = prime_power(f.q)
    return make_field(pp.p, 2 * pp.k * k)


def count_power_roots(ctx: FieldCtx, n: int, c: int) -> int:
    """Number of u in ctx with u^n equal to the prime-field constant c."""
    return int(np.count_nonzero(ctx.vpow(ctx.all_codes(), n) == ctx.const_code(c)))


def infinity_correction(f: CurveFamily, k: int = 1) -> int:
    """Places of the nonsingular model over F_{q^{2k}} not represented by affine chart points."""
    if k < 1:
        raise ValueError("extension index k must be >= 1")
    q = f.q
    if f.kind in ("hermitian", "as", "even-trace", "r32iii"):
        return 1
    ctx = family_field(f, k)
    if f.kind == "fermat-half":
        return count_power_roots(ctx, (q + 1) // 2, -1)
    if f.kind == "r32i":
        c = count_power_roots(ctx, (q + 1) // 3, -1)
        # c branches at the origin (one already counted) and c at (1:0:0)
        return 2 * c - 1
    # r32ii: branches y^3 = w z with w^s = -1, plus the one tangent to z = 0
    return count_power_roots(ctx, (q - 1) // 3, -1) + 1
