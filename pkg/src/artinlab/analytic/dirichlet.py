"""Dirichlet characters with exact root-of-unity values.

A character mod q is stored as an exponent table: chi(a) = zeta_N^t[a] with
N the order of chi, and t[a] = None when gcd(a, q) > 1.  Characters are
built from the cyclic decomposition of (Z/q)*, enumerated in a fixed order
(lexicographic over the dual exponent tuples), so "the k-th character
mod q" is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np
from mpmath import iv

from ..cyclotomic import Cyclotomic, euler_phi
from ..errors import CapacityError, InputError
from ..intervals import Box, root_of_unity_box
from ..numth import factorize, prime_factors
from .primes import primes_up_to

_MAX_MODULUS = 100_000


@lru_cache(maxsize=None)
def _unit_components(q: int) -> tuple[tuple[int, int, int], ...]:
    """Cyclic components of (Z/q)* as (prime power piece, generator, order)."""
    comps = []
    for p, e in sorted(factorize(q).items()):
        piece = p ** e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                comps.append((piece, piece - 1, 2))
            else:
                comps.append((piece, piece - 1, 2))
                comps.append((piece, 5, piece // 4))
        else:
            comps.append((piece, _primitive_root_mod(piece), (p - 1) * piece // p))
    return tuple(comps)


def _primitive_root_mod(piece: int) -> int:
    phi = euler_phi(piece)
    factors = prime_factors(phi)
    for g in range(2, piece):
        if gcd(g, piece) != 1:
            continue
        if all(pow(g, phi // f, piece) != 1 for f in factors):
            return g
    raise AssertionError("no primitive root found")


@lru_cache(maxsize=None)
def _dlog_tables(q: int):
    """Per component: value-mod-piece -> discrete log dicts."""
    tables = []
    for piece, g, order in _unit_components(q):
        table = {}
        x = 1
        for k in range(order):
            table.setdefault(x, k)
            x = (x * g) % piece
        tables.append(table)
    return tables


def _logs_with_signs(q: int, n: int):
    """Component exponents of n (handling the <-1> factor of the 2-part)."""
    comps = _unit_components(q)
    tables = _dlog_tables(q)
    out = []
    for (piece, g, order), table in zip(comps, tables):
        r = n % piece
        if piece >= 8 and piece % 2 == 0:
            if g == piece - 1:           # the <-1> component
                five_table = None
                # sign component: determined by whether r or -r is a power of 5
                for (piece2, g2, order2), t2 in zip(comps, tables):
                    if piece2 == piece and g2 == 5:
                        five_table = t2
                out.append(0 if r in five_table else 1)
            else:                        # the <5> component
                out.append(table[r] if r in table else table[(-r) % piece])
        else:
            out.append(table[r])
    return out


class DirichletCharacter:
    """chi mod q with chi(a) = zeta_order ^ exponents[a]."""

    __slots__ = ("q", "order", "exponents", "dual")

    def __init__(self, q: int, order: int, exponents, dual):
        self.q = q
        self.order = order
        self.exponents = tuple(exponents)
        self.dual = tuple(dual)

    def exponent(self, n: int) -> int | None:
        return self.exponents[n % self.q]

    def value(self, n: int) -> Cyclotomic:
        t = self.exponents[n % self.q]
        if t is None:
            return Cyclotomic.rational(0)
        return Cyclotomic.zeta(self.order, t) if self.order > 1 else Cyclotomic.rational(1)

    def box(self, n: int) -> Box:
        t = self.exponents[n % self.q]
        if t is None:
            return Box(iv.mpf(0), iv.mpf(0))
        return root_of_unity_box(self.order, t)

    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def conductor(self) -> int:
        for f in sorted(_divisors(self.q)):
            if all(self.exponents[a] == 0 for a in range(self.q)
                   if a % f == 1 % f and self.exponents[a] is not None):
                return f
        return self.q

    def is_primitive(self) -> bool:
        return self.conductor == self.q

    def is_real(self) -> bool:
        return self.order <= 2

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter)
                and self.q == other.q and self.order == other.order
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.q, self.order, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter(mod {self.q}, order {self.order}, dual {self.dual})"


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


def all_characters(q: int) -> list[DirichletCharacter]:
    """Every character mod q, in dual-tuple lexicographic order."""
    from itertools import product

    if q < 1:
        raise InputError("modulus must be positive")
    if q > _MAX_MODULUS:
        raise CapacityError(f"modulus {q} beyond supported range")
    if q == 1:
        return [DirichletCharacter(1, 1, [0], ())]
    comps = _unit_components(q)
    orders = [s for _, _, s in comps]
    n_total = 1
    for s in orders:
        n_total = n_total * s // gcd(n_total, s)
    logs_cache = {}
    for n in range(q):
        if gcd(n, q) == 1:
            logs_cache[n] = _logs_with_signs(q, n)
    out = []
    for dual in product(*(range(s) for s in orders)):
        # order of this character
        nchi = 1
        for a, s in zip(dual, orders):
            pk = s // gcd(s, a)
            nchi = nchi * pk // gcd(nchi, pk)
        exponents: list[int | None] = [None] * q
        for n, logs in logs_cache.items():
            t = 0
            for a, x, s in zip(dual, logs, orders):
                t = (t + a * x * (n_total // s)) % n_total
            # rewrite at the character's own order
            assert t % (n_total // nchi) == 0
            exponents[n] = (t // (n_total // nchi)) % nchi
        out.append(DirichletCharacter(q, nchi, exponents, dual))
    return out


def primitive_characters(q: int) -> list[DirichletCharacter]:
    return [ch for ch in all_characters(q) if ch.is_primitive()]


@dataclass
class CharSum:
    chi: DirichletCharacter
    limit: int
    exact: Cyclotomic
    box: Box
    primes_used: int


def char_sum(chi: DirichletCharacter, limit: int,
             primes: np.ndarray | None = None) -> CharSum:
    """Exact sum of chi(p) over primes p <= limit; ramified primes give 0."""
    if limit < 2:
        raise InputError("limit must be at least 2")
    if primes is None:
        primes = primes_up_to(limit)
    else:
        primes = primes[primes <= limit]
    counts = np.bincount(primes % chi.q, minlength=chi.q)
    powers = [0] * chi.order
    for r in range(chi.q):
        t = chi.exponents[r]
        if t is not None and counts[r]:
            powers[t] += int(counts[r])
    exact = Cyclotomic.from_powers(chi.order, powers)
    from ..intervals import cyclotomic_enclosure
    return CharSum(chi, limit, exact, cyclotomic_enclosure(exact, 25),
                   int(len(primes)))


def pairing(chi1: DirichletCharacter, chi2: DirichletCharacter) -> Cyclotomic:
    """Galois-side inner product over the common period:
    (1/phi(L)) sum over units a mod L of chi1(a) conj(chi2(a)), exact."""
    from fractions import Fraction

    L = chi1.q * chi2.q // gcd(chi1.q, chi2.q)
    n12 = chi1.order * chi2.order // gcd(chi1.order, chi2.order)
    powers = [0] * n12
    units = 0
    for a in range(L):
        if gcd(a, L) != 1:
            continue
        units += 1
        t1 = chi1.exponents[a % chi1.q]
        t2 = chi2.exponents[a % chi2.q]
        t = (t1 * (n12 // chi1.order) - t2 * (n12 // chi2.order)) % n12
        powers[t] += 1
    return Cyclotomic.from_powers(n12, powers).scale(Fraction(1, units))
