"""Exact arithmetic in Q(zeta_e) on the power basis modulo Phi_e.

Values are reduced modulo the e-th cyclotomic polynomial, so equality at a
fixed conductor is coefficient comparison.  Conductors that are 2 mod 4 are
rewritten (Q(zeta_2m) = Q(zeta_m) for odd m), and values whose non-constant
coordinates vanish collapse to conductor 1; full minimal-conductor reduction
happens in canonical(), which backs hashing and serialization.

Mixed-conductor arithmetic promotes both operands to the lcm first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InputError

Q0 = Fraction(0)
Q1 = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, low degree first."""
    if e == 1:
        return (-1, 1)
    # divide x^e - 1 by the product of Phi_d over proper divisors d
    num = [0] * (e + 1)
    num[0] = -1
    num[e] = 1
    for d in range(1, e):
        if e % d == 0:
            den = cyclotomic_polynomial(d)
            num = _polydiv_exact(num, den)
    return tuple(num)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c  # den is monic
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    if any(num):
        raise AssertionError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def _reduction_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_e for k = 0 .. max(e-1, 2*phi-2), as integer rows."""
    phi = euler_phi(e)
    top = max(e - 1, 2 * phi - 2)
    poly = cyclotomic_polynomial(e)
    rows: list[tuple[int, ...]] = []
    for k in range(phi):
        rows.append(tuple(1 if i == k else 0 for i in range(phi)))
    for k in range(phi, top + 1):
        prev = rows[k - 1]
        shifted = [0] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            for i in range(phi):
                shifted[i] -= lead * poly[i]
        rows.append(tuple(shifted))
    return tuple(rows)


def reduce_power_vector(e: int, fat):
    """Reduce a length-<=max-power coefficient vector over zeta_e powers."""
    rows = _reduction_rows(e)
    phi = euler_phi(e)
    out = [Q0] * phi
    for k, c in enumerate(fat):
        if c:
            row = rows[k]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


class Cyclotomic:
    """An element of Q(zeta_e), immutable."""

    __slots__ = ("e", "coeffs", "_canon")

    def __init__(self, e: int, reduced_coeffs):
        # internal: callers use zeta / rational / from_powers
        self.e = e
        self.coeffs = tuple(reduced_coeffs)
        self._canon = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyclotomic":
        return Cyclotomic(1, (Fraction(q),))

    @staticmethod
    def zeta(e: int, k: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_powers(e, {k % e: Q1})

    @staticmethod
    def from_powers(e: int, powers) -> "Cyclotomic":
        """Build sum_k c_k zeta_e^k from a dict {k: c} or a length-e list."""
        if e < 1:
            raise InputError("conductor must be positive")
        if isinstance(powers, dict):
            fat = [Q0] * e
            for k, c in powers.items():
                fat[k % e] += Fraction(c)
        else:
            fat = [Fraction(c) for c in powers]
            if len(fat) > e:
                folded = [Q0] * e
                for k, c in enumerate(fat):
                    folded[k % e] += c
                fat = folded
        while e % 4 == 2:
            m = e // 2
            y = ((1 - m) // 2) % m
            folded = [Q0] * m
            for k, c in enumerate(fat):
                if c:
                    sign = -1 if k % 2 else 1
                    folded[(k * y) % m] += sign * c
            e, fat = m, folded
        reduced = reduce_power_vector(e, fat)
        return Cyclotomic._normalize(e, reduced)

    @staticmethod
    def _normalize(e: int, reduced) -> "Cyclotomic":
        if e > 1 and all(c == 0 for c in reduced[1:]):
            return Cyclotomic(1, (reduced[0],))
        return Cyclotomic(e, reduced)

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return self.e == 1

    def as_rational(self) -> Fraction:
        if self.e != 1:
            raise InputError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integerlike(self) -> bool:
        return self.e == 1 and self.coeffs[0].denominator == 1

    def fat(self) -> list[Fraction]:
        """Length-e coefficient vector over all powers of zeta_e."""
        out = [Q0] * self.e
        for i, c in enumerate(self.coeffs):
            out[i] = c
        return out

    def promote(self, E: int) -> "Cyclotomic":
        """Rewrite at conductor E (a multiple of e); no normalization loss."""
        if E == self.e:
            return self
        if E % self.e != 0:
            raise InputError("can only promote to a multiple of the conductor")
        step = E // self.e
        fat = [Q0] * E
        for i, c in enumerate(self.coeffs):
            fat[i * step] = c
        return Cyclotomic(E, reduce_power_vector(E, fat))

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic"):
        if a.e == b.e:
            return a, b, a.e
        E = a.e * b.e // gcd(a.e, b.e)
        # stored conductors have 2-adic valuation 0 or >= 2, so E does too
        return a.promote(E), b.promote(E), E

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        a, b, e = Cyclotomic._common(self, other)
        return Cyclotomic._normalize(
            e, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.e, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + _coerce(other)

    def __mul__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other.e == 1:
            q = other.coeffs[0]
            return Cyclotomic._normalize(
                self.e, tuple(c * q for c in self.coeffs))
        if self.e == 1:
            q = self.coeffs[0]
            return Cyclotomic._normalize(
                other.e, tuple(c * q for c in other.coeffs))
        a, b, e = Cyclotomic._common(self, other)
        n = len(a.coeffs)
        conv = [Q0] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic._normalize(e, reduce_power_vector(e, conv))

    __rmul__ = __mul__

    def scale(self, q) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic._normalize(self.e, tuple(c * q for c in self.coeffs))

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta_e -> zeta_e^k; requires gcd(k, e) = 1."""
        e = self.e
        if gcd(k, e) != 1:
            raise InputError(f"galois({k}) needs gcd(k, {e}) = 1")
        if e == 1:
            return self
        fat = [Q0] * e
        for i, c in enumerate(self.coeffs):
            if c:
                fat[(i * k) % e] += c
        return Cyclotomic._normalize(e, reduce_power_vector(e, fat))

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.e - 1) if self.e > 1 else self

    def norm_squared(self) -> "Cyclotomic":
        return self * self.conjugate()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.e == other.e:
            return self.coeffs == other.coeffs
        a, b, _ = Cyclotomic._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        c = self.canonical()
        return hash((c.e, c.coeffs))

    # -- canonical form ----------------------------------------------------------

    def canonical(self) -> "Cyclotomic":
        """Equal value at the least conductor d | e; cached."""
        if self._canon is not None:
            return self._canon
        cur = self
        changed = True
        while changed and cur.e > 1:
            changed = False
            for p in _prime_divisors(cur.e):
                d = cur.e // p
                if d % 4 == 2:
                    d //= 2  # Q(zeta_2m) = Q(zeta_m) for odd m
                down = _try_demote(cur, d)
                if down is not None:
                    cur = down
                    changed = True
                    break
        self._canon = cur
        cur._canon = cur
        return cur

    def sort_key(self):
        c = self.canonical()
        return (c.e, c.coeffs)

    # -- numeric embedding -------------------------------------------------------

    def to_complex(self, precision: int = 20):
        """Rigorous complex enclosure of the zeta_e -> exp(2 pi i / e) image."""
        from .intervals import cyclotomic_enclosure
        return cyclotomic_enclosure(self, precision)

    # -- formatting ---------------------------------------------------------------

    def serialize(self) -> str:
        c = self.canonical()
        body = ", ".join(str(x) for x in c.coeffs)
        return f"cyclo({c.e}; {body})"

    @staticmethod
    def deserialize(text: str) -> "Cyclotomic":
        m = re.match(r"^\s*cyclo\((\d+);([^)]*)\)\s*$", text)
        if not m:
            raise InputError(f"bad cyclotomic literal {text!r}")
        e = int(m.group(1))
        coeffs = [Fraction(tok.strip()) for tok in m.group(2).split(",")]
        if len(coeffs) != euler_phi(e):
            raise InputError(f"expected {euler_phi(e)} coefficients in {text!r}")
        return Cyclotomic.from_powers(e, coeffs + [Q0] * (e - len(coeffs)))

    def __repr__(self) -> str:
        c = self.canonical()
        if c.e == 1:
            return str(c.coeffs[0])
        terms = []
        for i, x in enumerate(c.coeffs):
            if x == 0:
                continue
            if i == 0:
                terms.append(str(x))
            else:
                z = f"z{c.e}" + (f"^{i}" if i > 1 else "")
                terms.append(z if x == 1 else f"-{z}" if x == -1 else f"{x}*{z}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    raise InputError(f"cannot coerce {x!r} to a cyclotomic value")


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def _demotion_solver(e: int, d: int):
    """Row-reduced system expressing membership of Q(zeta_e) values in Q(zeta_d)."""
    from .linalg import solve_columns  # local import; no cycle at module load

    step = e // d
    cols = []
    for j in range(euler_phi(d)):
        fat = [Q0] * e
        fat[j * step] = Q1
        cols.append(reduce_power_vector(e, fat))
    return cols


def _try_demote(v: Cyclotomic, d: int) -> Cyclotomic | None:
    from .linalg import solve_columns

    cols = _demotion_solver(v.e, d)
    sol = solve_columns(cols, list(v.coeffs))
    if sol is None:
        return None
    return Cyclotomic._normalize(d, tuple(sol))


def cyclo_arith(a: Cyclotomic, b: Cyclotomic | None, op: str, k: int | None = None):
    """Dispatcher mirroring the operation table: add/sub/mul/conjugate/galois/eq."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "conjugate":
        return a.conjugate()
    if op == "galois":
        return a.galois(k)
    if op == "eq":
        return a == b
    raise InputError(f"unknown cyclotomic op {op!r}")
