"""Exact arithmetic in GF(p^k).

A field is GF(p)[t]/(modulus) where modulus is the lexicographically smallest
monic irreducible of degree k (coefficients compared constant term first).
Elements are length-k residue tuples in the basis 1, t, ..., t^(k-1).

Every element also has an integer *code*: its position in the lexicographic
enumeration of coefficient tuples.  Contexts carry discrete log tables keyed
by code, and the ``v*`` methods operate on numpy arrays of codes.  The point
counters use those; everything else can stay with FieldElement.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

#: Largest supported field order.  Tables are O(|F|) so this is a memory cap,
#: not an arithmetic one; Python ints never overflow.
MAX_FIELD_ORDER = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"exponent must be >= 1, got {self.k}")

    @property
    def q(self) -> int:
        return self.p**self.k


def prime_power(q: int) -> PrimePower:
    """Decompose q = p^k, raising ValueError if q is not a prime power."""
    factors = prime_factors(q) if q >= 2 else []
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = factors[0]
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return PrimePower(p, k)


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


# -- polynomials over GF(p), coefficient lists constant term first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the nonzero polynomial m over GF(p)."""
    a = _trim([c % p for c in a])
    m = _trim([c % p for c in m])
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return poly_mod(prod, m, p)


def poly_powmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while n:
        if n & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        n >>= 1
    return poly_mod(result, m, p)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility over GF(p) by scanning every monic divisor of degree <= deg/2."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(f, list(low) + [1], p):
                return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, ordering (c0, ..., c_{k-1}) lexicographically."""
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {k} over GF({p})")  # unreachable


# -- elements and contexts ---------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(reversed(terms)) or "0"


class FieldCtx:
    """GF(p^k) with its canonical modulus.  Immutable once built; use make_field."""

    def __init__(self, p: int, k: int):
        pp = PrimePower(p, k)
        if pp.q > MAX_FIELD_ORDER:
            raise OverflowError(f"GF({p}^{k}) has order {pp.q} > {MAX_FIELD_ORDER}")
        self.p = p
        self.degree = k
        self.order = pp.q
        self.modulus = canonical_modulus(p, k)
        self._weights = np.array([p ** (k - 1 - i) for i in range(k)], dtype=np.int64)
        codes = np.arange(self.order, dtype=np.int64)
        self._digits = (codes[:, None] // self._weights[None, :]) % p
        self._digits.setflags(write=False)
        self.generator = self._find_generator()
        self._exp, self._log = self._build_log_tables()

    def __repr__(self):
        return f"FieldCtx(p={self.p}, degree={self.degree})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.degree) == (other.p, other.degree)

    def __hash__(self):
        return hash((FieldCtx, self.p, self.degree))

    # construction helpers

    def _find_generator(self) -> FieldElement:
        n = self.order - 1
        exps = [n // r for r in prime_factors(n)] if n > 1 else []
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            if not any(coeffs):
                continue
            if all(poly_powmod(coeffs, e, self.modulus, self.p) != [1] for e in exps):
                return FieldElement(tuple(coeffs))
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _build_log_tables(self):
        n = self.order - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        g = list(self.generator.coeffs)
        cur = [1]
        for i in range(n):
            c = self._code_of_list(cur)
            exp[i] = c
            log[c] = i
            cur = poly_mulmod(cur, g, self.modulus, self.p)
        exp.setflags(write=False)
        log.setflags(write=False)
        return exp, log

    def _code_of_list(self, poly: Sequence[int]) -> int:
        padded = list(poly) + [0] * (self.degree - len(poly))
        return sum(c * int(w) for c, w in zip(padded, self._weights))

    # conversions

    def element(self, value) -> FieldElement:
        """Build an element from an int (prime-field residue) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement((int(value) % self.p,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) for c in value)
        el = FieldElement(coeffs)
        self.check(el)
        return el

    def check(self, a: FieldElement) -> None:
        if len(a.coeffs) != self.degree or any(not 0 <= c < self.p for c in a.coeffs):
            raise ValueError(f"{a!r} is not an element of GF({self.p}^{self.degree})")

    def code(self, a: FieldElement) -> int:
        self.check(a)
        return self._code_of_list(a.coeffs)

    def from_code(self, code: int) -> FieldElement:
        return FieldElement(tuple(int(c) for c in self._digits[int(code)]))

    def const_code(self, c: int) -> int:
        """Code of the prime-field constant c."""
        return (c % self.p) * int(self._weights[0])

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.degree)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def elements(self) -> Iterator[FieldElement]:
        """All elements, lexicographic in the coefficient tuple."""
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield FieldElement(coeffs)

    def all_codes(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # scalar arithmetic

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        return FieldElement(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        self.check(a)
        return FieldElement(tuple(-x % self.p for x in a.coeffs))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        ca, cb = self.code(a), self.code(b)
        if ca == 0 or cb == 0:
            return self.zero
        return self.from_code(self._exp[(self._log[ca] + self._log[cb]) % (self.order - 1)])

    def inv(self, a: FieldElement) -> FieldElement:
        ca = self.code(a)
        if ca == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.from_code(self._exp[-self._log[ca] % (self.order - 1)])

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def pow(self, a: FieldElement, n: int) -> FieldElement:
        if n < 0:
            raise ValueError("negative exponent; use inv")
        ca = self.code(a)
        if n == 0:
            return self.one
        if ca == 0:
            return self.zero
        return self.from_code(self._exp[(int(self._log[ca]) * n) % (self.order - 1)])

    def frobenius(self, a: FieldElement, iterations: int = 1) -> FieldElement:
        """a -> a^(p^iterations)."""
        if iterations < 0:
            raise ValueError("iterations must be >= 0")
        # p^j only matters modulo the group order, and x^(p^k) = x
        return self.pow(a, self.p ** (iterations % self.degree))

    def is_zero(self, a: FieldElement) -> bool:
        return not any(a.coeffs)

    # vectorised arithmetic on code arrays

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.degree == 1:
            return (a + b) % self.p
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        return ((-self._digits[a]) % self.p) @ self._weights

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if n == 0:
            return np.full(a.shape, self.const_code(1), dtype=np.int64)
        out = self._exp[(self._log[a] * n) % (self.order - 1)]
        return np.where(a == 0, 0, out)


@functools.cache
def make_field(p: int, k: int) -> FieldCtx:
    """The canonical GF(p^k).  Cached, so equal arguments give the same object."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    if p**k > MAX_FIELD_ORDER:
        raise OverflowError(f"GF({p}^{k}) has order {p**k} > {MAX_FIELD_ORDER}")
    return FieldCtx(p, k)


# -- subfields ---------------------------------------------------------------


def _check_compatible(sub: FieldCtx, sup: FieldCtx) -> None:
    if sub.p != sup.p:
        raise ValueError(f"characteristics differ: {sub.p} vs {sup.p}")
    if sup.degree % sub.degree:
        raise ValueError(f"GF({sub.p}^{sub.degree}) does not embed in GF({sup.p}^{sup.degree})")


def horner_codes(ctx: FieldCtx, poly: Sequence[int], xs) -> np.ndarray:
    """Evaluate a GF(p)-polynomial (constant first) at every code in xs."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for c in reversed(poly):
        acc = ctx.vadd(ctx.vmul(acc, xs), ctx.const_code(c))
    return acc


@functools.cache
def embedding_table(sub: FieldCtx, sup: FieldCtx) -> np.ndarray:
    """sup-codes of the images of all sub-codes.

    The homomorphism sends t to the first root (in enumeration order) of
    sub's modulus inside sup.
    """
    _check_compatible(sub, sup)
    roots = np.flatnonzero(horner_codes(sup, sub.modulus, sup.all_codes()) == 0)
    root = int(roots[0])
    table = np.zeros(sub.order, dtype=np.int64)
    power = sup.const_code(1)
    for i in range(sub.degree):
        consts = sub._digits[:, i] * int(sup._weights[0])
        table = sup.vadd(table, sup.vmul(consts, power))
        power = int(sup.vmul(power, root))
    table.setflags(write=False)
    return table


def embed(sub: FieldCtx, sup: FieldCtx, a: FieldElement) -> FieldElement:
    return sup.from_code(embedding_table(sub, sup)[sub.code(a)])


def _pull_back(sub: FieldCtx, sup: FieldCtx, code: int) -> FieldElement:
    hits = np.flatnonzero(embedding_table(sub, sup) == code)
    if len(hits) != 1:
        raise ArithmeticError("value does not lie in the subfield image")
    return sub.from_code(int(hits[0]))


def relative_trace(big: FieldCtx, small: FieldCtx, a: FieldElement) -> FieldElement:
    """sum of a^(|small|^i), i < [big:small], returned as an element of small."""
    _check_compatible(small, big)
    acc = big.zero
    conj = a
    for _ in range(big.degree // small.degree):
        acc = big.add(acc, conj)
        conj = big.pow(conj, small.order)
    return _pull_back(small, big, big.code(acc))


def relative_norm(big: FieldCtx, small: FieldCtx, a: FieldElement) -> FieldElement:
    _check_compatible(small, big)
    acc = big.one
    conj = a
    for _ in range(big.degree // small.degree):
        acc = big.mul(acc, conj)
        conj = big.pow(conj, small.order)
    return _pull_back(small, big, big.code(acc))
