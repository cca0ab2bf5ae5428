"""Exhaustive point counting over F_{q^{2k}} and maximality checks.

Two counting paths:

* generic: for each x, specialise F(x, y) to a polynomial in y and evaluate it
  on the whole field at once (numpy over element codes); O(|F|^2).
* additive: when F(x, y) = A(y) - f(x) with A additive, the fibre over x has
  |ker A| points iff f(x) lies in A(F).  The image is tabulated once, making
  the count O(|F|).

Both respect a work budget (element operations) and fail fast when the
estimate exceeds it.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .curves import (
    BivariatePoly,
    CurveFamily,
    family_field,
    family_genus,
    family_plane_model,
    infinity_correction,
)
from .field_core import FieldCtx

DEFAULT_BUDGET = 10**9
DEFAULT_Q_CAP = 13
BUDGET_ENV = "MAXCURVE_BUDGET"
_INT63 = 2**63 - 1


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, budget: int, what: str = "count"):
        super().__init__(f"{what} needs ~{estimate:.3g} element operations, budget is {budget:.3g}")
        self.estimate = estimate
        self.budget = budget


def work_budget(budget: Optional[int] = None) -> int:
    """Explicit budget, else $MAXCURVE_BUDGET, else the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    return int(float(env)) if env else DEFAULT_BUDGET


def _charge(estimate: int, budget: Optional[int], what: str) -> None:
    limit = work_budget(budget)
    if estimate > limit:
        raise BudgetExceeded(estimate, limit, what)


@dataclass(frozen=True)
class PointCount:
    k: int
    affine: int
    at_infinity: int

    @property
    def total(self) -> int:
        return self.affine + self.at_infinity

    def to_dict(self) -> dict:
        return {"k": self.k, "affine": self.affine, "at_infinity": self.at_infinity, "total": self.total}


@dataclass(frozen=True)
class MaximalityVerdict:
    expected: int
    observed: int
    genus_used: int

    @property
    def is_maximal(self) -> bool:
        return self.expected == self.observed


# -- generic path ------------------------------------------------------------


def _scalar_poly_codes(ctx: FieldCtx, coeffs: dict[int, int], x: int) -> int:
    acc = 0
    for i, c in coeffs.items():
        acc = int(ctx.vadd(acc, ctx.vmul(c, ctx.vpow(x, i))))
    return acc


def _by_y_power(poly: BivariatePoly) -> dict[int, dict[int, int]]:
    """j -> {i: code of coefficient of x^i y^j}."""
    F = poly.ctx
    out: dict[int, dict[int, int]] = {}
    for (i, j), c in poly.terms:
        out.setdefault(j, {})[i] = F.code(c)
    return out


def _count_x_range(poly: BivariatePoly, xs: np.ndarray, y_powers: dict[int, np.ndarray]) -> int:
    F = poly.ctx
    grouped = _by_y_power(poly)
    total = 0
    for x in xs:
        x = int(x)
        vals = np.zeros(F.order, dtype=np.int64)
        for j, coeffs in grouped.items():
            c = _scalar_poly_codes(F, coeffs, x)
            if c:
                vals = F.vadd(vals, F.vmul(y_powers[j], c))
        total += int(np.count_nonzero(vals == 0))
    return total


def count_affine(poly: BivariatePoly, ctx: Optional[FieldCtx] = None, *,
                 budget: Optional[int] = None, workers: int = 1) -> int:
    """Number of (x, y) in ctx^2 with poly(x, y) = 0, by exhaustive evaluation."""
    F = poly.ctx if ctx is None else ctx
    if F != poly.ctx:
        raise ValueError("polynomial is defined over a different field")
    _charge(F.order * F.order * (len(poly.terms) + 1), budget, "affine count")
    ys = F.all_codes()
    y_powers = {j: F.vpow(ys, j) for j in {j for (_, j), _ in poly.terms}}
    chunks = np.array_split(F.all_codes(), max(1, workers))
    if workers <= 1:
        return _count_x_range(poly, chunks[0], y_powers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(lambda xs: _count_x_range(poly, xs, y_powers), chunks))


# -- additive path -----------------------------------------------------------


def split_additive(poly: BivariatePoly) -> Optional[tuple[dict[int, int], dict[int, int]]]:
    """Write poly as A(y) - f(x) with A additive (exponents powers of p, no constant).

    Returns ({e: coeff code of y^e in A}, {i: coeff code of x^i in f}) or None.
    """
    F = poly.ctx
    A: dict[int, int] = {}
    f: dict[int, int] = {}
    for (i, j), c in poly.terms:
        if j == 0:
            f[i] = int(F.vneg(F.code(c)))
        elif i == 0 and _is_power_of(j, F.p):
            A[j] = F.code(c)
        else:
            return None
    if not A:
        return None
    return A, f


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _eval_univariate(F: FieldCtx, coeffs: dict[int, int], xs: np.ndarray) -> np.ndarray:
    acc = np.zeros(xs.shape, dtype=np.int64)
    for e, c in coeffs.items():
        acc = F.vadd(acc, F.vmul(F.vpow(xs, e), c))
    return acc


def count_affine_additive(poly: BivariatePoly, *, budget: Optional[int] = None) -> int:
    split = split_additive(poly)
    if split is None:
        raise ValueError("polynomial is not of the form A(y) = f(x) with A additive")
    A, f = split
    F = poly.ctx
    _charge(F.order * (len(A) + len(f) + 2), budget, "additive count")
    codes = F.all_codes()
    a_vals = _eval_univariate(F, A, codes)
    kernel = int(np.count_nonzero(a_vals == 0))
    in_image = np.zeros(F.order, dtype=bool)
    in_image[a_vals] = True
    return kernel * int(np.count_nonzero(in_image[_eval_univariate(F, f, codes)]))


def count_artin_schreier_fast(q: int, m: int, k: int = 1, *, budget: Optional[int] = None) -> PointCount:
    """Points of the nonsingular model of y^q + y = x^m over F_{q^{2k}}."""
    f = CurveFamily("as", q, m)
    poly = family_plane_model(f, family_field(f, k))
    return PointCount(k, count_affine_additive(poly, budget=budget), infinity_correction(f, k))


# -- families ----------------------------------------------------------------


def count_curve(f: CurveFamily, k: int = 1, *, method: str = "auto", budget: Optional[int] = None,
                workers: int = 1, q_cap: int = DEFAULT_Q_CAP) -> PointCount:
    """Rational points of f's nonsingular model over F_{q^{2k}}.

    method: "auto" (additive path when the equation allows it), "generic" or "additive".
    """
    if f.q > q_cap:
        raise ValueError(f"q={f.q} exceeds the configured cap {q_cap}")
    if method not in ("auto", "generic", "additive"):
        raise ValueError(f"unknown method {method!r}")
    poly = family_plane_model(f, family_field(f, k))
    if method == "additive" or (method == "auto" and split_additive(poly) is not None):
        affine = count_affine_additive(poly, budget=budget)
    else:
        affine = count_affine(poly, budget=budget, workers=workers)
    return PointCount(k, affine, infinity_correction(f, k))


def predicted_extension_count(q: int, g: int, k: int) -> int:
    """#X(F_{q^{2k}}) = q^{2k} + 1 - 2g(-q)^k for an F_{q^2}-maximal curve of genus g."""
    if k < 1 or g < 0:
        raise ValueError("need k >= 1 and g >= 0")
    n = q ** (2 * k) + 1 - 2 * g * (-q) ** k
    if abs(n) > _INT63 or q ** (2 * k) > _INT63:
        raise OverflowError(f"count for q={q}, g={g}, k={k} exceeds 63 bits")
    return n


def maximal_count(q: int, g: int) -> int:
    return q * q + 1 + 2 * q * g


def is_maximal(f: CurveFamily, *, budget: Optional[int] = None, workers: int = 1,
               q_cap: int = DEFAULT_Q_CAP) -> MaximalityVerdict:
    g = family_genus(f)
    observed = count_curve(f, 1, budget=budget, workers=workers, q_cap=q_cap).total
    return MaximalityVerdict(expected=maximal_count(f.q, g), observed=observed, genus_used=g)


def genus_from_maximal_count(q: int, n1: int) -> int:
    """Invert #X(F_{q^2}) = q^2 + 1 + 2qg."""
    excess = n1 - q * q - 1
    if excess < 0 or excess % (2 * q):
        raise ValueError(f"{n1} points over F_{{{q}^2}} is inconsistent with maximality")
    return excess // (2 * q)


def projective_plane_count(poly: BivariatePoly, *, budget: Optional[int] = None) -> int:
    """Points of the projective closure of the plane model (singular points counted once)."""
    F = poly.ctx
    d = poly.total_degree
    top = {(i, j): F.code(c) for (i, j), c in poly.terms if i + j == d}
    codes = F.all_codes()
    # points (1:u:0): top form at x=1, y=u
    vals = np.zeros(F.order, dtype=np.int64)
    for (i, j), c in top.items():
        vals = F.vadd(vals, F.vmul(F.vpow(codes, j), c))
    at_infinity = int(np.count_nonzero(vals == 0))
    at_infinity += int((0, d) not in top)  # (0:1:0)
    return count_affine(poly, budget=budget) + at_infinity
