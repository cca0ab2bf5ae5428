"""Genus bounds for F_{q^2}-maximal curves.

Everything is exact: integers where the quantity is integral, Fraction
otherwise, and floors only where the bound itself is a floor.

The conjectural Halphen-type exclusion (c1(q+1, r) < g < c0(q+1, r)) is kept
apart from the proven trichotomy in every report.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .field_core import is_prime_power, prime_power

TRICHOTOMY_TAGS = ("below_third", "equals_second", "equals_hermitian", "excluded")
# Complete genus spectra of F_{q^2}-maximal curves for small q.
SMALL_SPECTRA = {2: frozenset({0, 1}), 3: frozenset({0, 1, 3}),
                 4: frozenset({0, 1, 2, 6}), 5: frozenset({0, 1, 2, 3, 4, 10})}
# The trichotomy is only a theorem from here on; below it the tables decide.
TRICHOTOMY_MIN_Q = 7


def _check_q(q: int) -> None:
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")


# -- Castelnuovo / Halphen -----------------------------------------------------


def castelnuovo_epsilon(d: int, r: int) -> int:
    if r < 2 or d < r:
        raise ValueError(f"need r >= 2 and d >= r, got d={d}, r={r}")
    return (d - 1) % (r - 1)


def castelnuovo_c0(d: int, r: int) -> int:
    """Castelnuovo's number: max genus of a non-degenerate degree-d curve in P^r."""
    eps = castelnuovo_epsilon(d, r)
    val = Fraction(d - 1 - eps, 2 * (r - 1)) * (d - r + eps)
    if val.denominator != 1:
        raise ArithmeticError(f"c0({d},{r}) = {val} is not an integer")
    return int(val)


def castelnuovo_upper(d: int, r: int) -> Fraction:
    """Closed-form upper bound for c0(d, r) without the epsilon casework."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    sq = (d - 1 - Fraction(r - 1, 2)) ** 2
    if r % 2 == 0:
        sq -= Fraction(1, 4)
    return sq / (2 * (r - 1))


def halphen_epsilon(d: int, r: int) -> int:
    if r < 3 or d < r:
        raise ValueError(f"need r >= 3 and d >= r, got d={d}, r={r}")
    return (d - 1) % r


def halphen_c1(d: int, r: int) -> int:
    """Halphen's number: above it a degree-d curve in P^r lies on a surface of degree <= r-1."""
    eps1 = halphen_epsilon(d, r)
    val = Fraction(d - 1 - eps1, 2 * r) * (d - r + eps1 + 1) + (1 if eps1 == r - 1 else 0)
    if val.denominator != 1:
        raise ArithmeticError(f"c1({d},{r}) = {val} is not an integer")
    if r == 3 and val != (d * d - 3 * d + 6) // 6:
        raise ArithmeticError(f"c1({d},3) = {val} disagrees with floor((d^2-3d+6)/6)")
    return int(val)


def halphen_degree_threshold(r: int) -> int:
    """Degree from which the general Halphen-type statement in P^r is known (metadata only)."""
    if r <= 6:
        return 36 * r
    if r == 7:
        return 288
    return 2 ** (r + 1)


def halphen_p3_applies(d: int, positive_char: bool = True) -> bool:
    """Degree hypothesis of Halphen's theorem in P^3 (metadata only)."""
    if d < 7:
        return False
    return d == 17 or d >= 25 if positive_char else True


# -- the three top genera ------------------------------------------------------


def ihara_bound(q: int) -> int:
    _check_q(q)
    return q * (q - 1) // 2


def ft1_bound(q: int) -> int:
    _check_q(q)
    return (q - 1) ** 2 // 4


def third_bound(q: int) -> int:
    _check_q(q)
    return (q * q - q + 4) // 6


def known_spectrum(q: int) -> frozenset[int]:
    if q not in SMALL_SPECTRA:
        raise ValueError(f"no tabulated spectrum for q={q}; tables cover {sorted(SMALL_SPECTRA)}")
    return SMALL_SPECTRA[q]


@dataclass(frozen=True)
class TrichotomyVerdict:
    tag: str
    ihara: int
    second: int
    third: int
    from_table: bool

    @property
    def excluded(self) -> bool:
        return self.tag == "excluded"


def trichotomy_classify(q: int, g: int) -> TrichotomyVerdict:
    """Place g relative to the top three possible genera of F_{q^2}-maximal curves.

    For q < 7 the trichotomy is not a theorem, so membership in the complete
    small-q spectrum decides instead, with the same tag vocabulary.
    """
    _check_q(q)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    top, second, third = ihara_bound(q), ft1_bound(q), third_bound(q)
    if q < TRICHOTOMY_MIN_Q:
        if g not in known_spectrum(q):
            tag = "excluded"
        elif g == top:
            tag = "equals_hermitian"
        elif g == second:
            tag = "equals_second"
        else:
            tag = "below_third"
        return TrichotomyVerdict(tag, top, second, third, from_table=True)
    if g <= third:
        tag = "below_third"
    elif g == second:
        tag = "equals_second"
    elif g == top:
        tag = "equals_hermitian"
    else:
        tag = "excluded"
    return TrichotomyVerdict(tag, top, second, third, from_table=False)


# -- the conjecture (never mixed with proven statements) -----------------------


def conjecture_gap(q: int, r: int) -> tuple[int, int]:
    """Open interval (c1(q+1, r), c0(q+1, r)) that the conjecture would exclude."""
    if r < 3 or q < r:
        raise ValueError(f"need r >= 3 and q >= r, got q={q}, r={r}")
    return halphen_c1(q + 1, r), castelnuovo_c0(q + 1, r)


def conjecture_excludes(q: int, g: int, r: int) -> bool:
    lo, hi = conjecture_gap(q, r)
    return lo < g < hi


def conjecture_interval_violations(qmax: int = 64, rs: Sequence[int] = (3, 4, 5, 6)) -> list[tuple[int, int, int, int]]:
    """(q, r, c1, c0) for every prime power q in [r+2, qmax] where c1 >= c0."""
    out = []
    for r in rs:
        for q in range(r + 2, qmax + 1):
            if is_prime_power(q):
                lo, hi = conjecture_gap(q, r)
                if lo >= hi:
                    out.append((q, r, lo, hi))
    return out


# -- Stohr-Voloch degree formulas ----------------------------------------------


def _check_orders(orders: Sequence[int], start: tuple[int, ...], what: str) -> tuple[int, ...]:
    orders = tuple(int(o) for o in orders)
    if orders[: len(start)] != start or any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError(f"{what} must be strictly increasing and start with {start}, got {orders}")
    return orders


def deg_ramification(epsilon_orders: Sequence[int], g: int, d: int) -> int:
    """Degree of the ramification divisor of a g^r_d with orders eps_0 < ... < eps_r."""
    eps = _check_orders(epsilon_orders, (0, 1), "ramification orders")
    if g < 0 or d < 1:
        raise ValueError(f"need g >= 0 and d >= 1, got g={g}, d={d}")
    r = len(eps) - 1
    return sum(eps) * (2 * g - 2) + (r + 1) * d


def deg_frobenius(nu_orders: Sequence[int], g: int, d: int, ell: int) -> int:
    """Degree of the F_ell-Frobenius divisor; nu has r entries nu_0 < ... < nu_{r-1}."""
    nu = _check_orders(nu_orders, (0,), "Frobenius orders")
    if g < 0 or d < 1:
        raise ValueError(f"need g >= 0 and d >= 1, got g={g}, d={d}")
    if not is_prime_power(ell):
        raise ValueError(f"ell={ell} is not a prime power")
    r = len(nu)
    return sum(nu) * (2 * g - 2) + (ell + r) * d


def ramification_genus_bound(epsilon_orders: Sequence[int], q: int) -> Fraction:
    """Least genus compatible with deg R >= #X(F_{q^2}) for D = g^r_{q+1} with these orders.

    Every rational point lies on R, so sum(eps)(2g-2) + (r+1)(q+1) >= q^2+1+2qg.
    """
    eps = _check_orders(epsilon_orders, (0, 1), "ramification orders")
    if eps[-1] != q:
        raise ValueError(f"last order must be q={q}, got {eps[-1]}")
    s, r = sum(eps), len(eps) - 1
    if s == q:
        raise ZeroDivisionError("sum of orders equals q; the inequality does not involve g")
    if s < q:
        raise ValueError("sum of orders below q turns the inequality into an upper bound")
    return Fraction(q * q + 1 + 2 * s - (r + 1) * (q + 1), 2 * (s - q))


def frobenius_genus_bound(nu_orders: Sequence[int], q: int, weight: int) -> Fraction:
    """Largest genus compatible with deg S >= weight * #X(F_{q^2}), D = g^r_{q+1}, ell = q^2.

    weight is a lower bound for v_P(S) at every rational point.
    """
    nu = _check_orders(nu_orders, (0,), "Frobenius orders")
    s, r = sum(nu), len(nu)
    slope = weight * q - s
    if slope <= 0:
        raise ValueError("weight too small for the inequality to bound g from above")
    # (wq - s)(2g-2) <= (q^2+r)(q+1) - w(q+1)^2
    rhs = (q * q + r) * (q + 1) - weight * (q + 1) ** 2
    return 1 + Fraction(rhs, 2 * slope)


def uniform_order_genus(N: int, q: int) -> Fraction:
    """Genus forced when every point has orders (0, 1, ..., N-1, q+1): (N-1)N(g-1) = (q+1)(q-N)."""
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    return 1 + Fraction((q + 1) * (q - N), (N - 1) * N)


def dimension_genus_bound(q: int, N: int) -> Fraction:
    """Castelnuovo bound for a maximal curve with dim |(q+1)P0| = N."""
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    return castelnuovo_upper(q + 1, N)


# -- known examples and classification labels ---------------------------------


@dataclass(frozen=True)
class KnownExample:
    genus: int
    label: str


def known_examples(q: int) -> list[KnownExample]:
    """Genera of known maximal curves near the top of the spectrum, with congruence conditions."""
    _check_q(q)
    out = [
        KnownExample(ihara_bound(q), "hermitian"),
        KnownExample(ft1_bound(q), "as:m=(q+1)/2" if q % 2 else "even-trace"),
        KnownExample(third_bound(q), "third largest genus (q = 0,1,2 mod 3)"),
    ]
    if q % 3 == 2:
        out.append(KnownExample((q * q - q - 2) // 6, "(q^2-q-2)/6, q = 2 mod 3"))
    if q % 3 in (0, 2):
        out.append(KnownExample((q - 1) * (q - 2) // 6, "floor((q-1)(q-2)/6), q = 0,2 mod 3"))
    if q % 4 in (0, 1, 3):
        out.append(KnownExample((q * q - 2 * q + 5) // 8, "floor((q^2-2q+5)/8), q = 0,1,3 mod 4"))
        out.append(KnownExample((q - 1) * (q - 3) // 8, "floor((q-1)(q-3)/8), q = 0,1,3 mod 4"))
    return out


def classification_notes(q: int, g: int) -> list[str]:
    """Classification results that pin down or rule out genus g, as labels."""
    _check_q(q)
    notes = []
    if g == ihara_bound(q):
        notes.append("unique curve: hermitian")
    if q >= TRICHOTOMY_MIN_Q and g == ft1_bound(q):
        notes.append(f"unique curve: AS(q,{(q + 1) // 2})" if q % 2 else "unique curve: even-trace")
    if q >= 11 and (q - 1) * (q - 2) % 6 == 0 and g == (q - 1) * (q - 2) // 6:
        if q % 3 == 1:
            notes.append("non-existent")
        elif q % 3 == 2:
            notes.append("unique curve: AS(q,(q+1)/3)")
    if q % 2 and g * 8 == (q - 1) * (q - 3) and prime_power(q).p >= 5:
        if q % 4 == 1 and q >= 17:
            notes.append("if dim |(q+1)P0| = 5: unique curve fermat-half")
        elif q % 4 == 3 and q >= 19:
            notes.append("if dim |(q+1)P0| = 5: fermat-half or AS(q,(q+1)/4)")
    return notes


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    q: int
    r: int
    g: Optional[int] = None
    d: int = field(init=False)
    c0: int = field(init=False)
    eps: int = field(init=False)
    c1: Optional[int] = field(init=False)
    eps1: Optional[int] = field(init=False)
    castelnuovo_upper: Fraction = field(init=False)
    ihara: int = field(init=False)
    ft1: int = field(init=False)
    third: int = field(init=False)
    halphen_degree_threshold: Optional[int] = field(init=False)
    trichotomy: Optional[str] = field(init=False)
    conjecture_excludes: Optional[bool] = field(init=False)

    def __post_init__(self):
        _check_q(self.q)
        d = self.q + 1
        put = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        put("d", d)
        put("c0", castelnuovo_c0(d, self.r))
        put("eps", castelnuovo_epsilon(d, self.r))
        has_c1 = self.r >= 3
        put("c1", halphen_c1(d, self.r) if has_c1 else None)
        put("eps1", halphen_epsilon(d, self.r) if has_c1 else None)
        put("castelnuovo_upper", castelnuovo_upper(d, self.r))
        put("ihara", ihara_bound(self.q))
        put("ft1", ft1_bound(self.q))
        put("third", third_bound(self.q))
        put("halphen_degree_threshold", halphen_degree_threshold(self.r) if has_c1 else None)
        if self.g is None:
            put("trichotomy", None)
            put("conjecture_excludes", None)
        else:
            put("trichotomy", trichotomy_classify(self.q, self.g).tag)
            put("conjecture_excludes", conjecture_excludes(self.q, self.g, self.r) if has_c1 else None)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["castelnuovo_upper"] = str(self.castelnuovo_upper)
        return out
