"""Primes, Frobenius labels for abelian/Kronecker data, squarefull sums.

Base field is Q throughout: ideals are positive integers and the prime
counting function is the ordinary pi.  Squarefull partial sums are compared
against their stated envelopes with interval arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np
from mpmath import iv

from ..config import LIMITS
from ..errors import CapacityError, GateError, InputError
from ..intervals import certified_leq, ival
from ..numth import kronecker
from .bounds import c_epsilon_interval


def _sieve_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return mask


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    if limit > LIMITS.analytic_budget:
        raise CapacityError(f"sieve limit {limit} exceeds budget")
    return np.nonzero(_sieve_mask(int(limit)))[0].astype(np.int64)


def prime_count(limit: int) -> int:
    return int(len(primes_up_to(limit)))


def pi_count(primes: np.ndarray, x: float) -> int:
    """pi(x) from a precomputed ascending prime array."""
    return int(np.searchsorted(primes, x, side="right"))


def squarefree_mask(limit: int) -> np.ndarray:
    """Boolean mask over 0..limit marking squarefree integers (0 excluded)."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in range(2, isqrt(limit) + 1):
        mask[p * p::p * p] = False
    return mask


def squarefull_integers(limit: int) -> list[int]:
    """Squarefull integers <= limit (1 included: the empty factorization)."""
    if limit < 1:
        return []
    if limit > LIMITS.analytic_budget:
        raise CapacityError(f"squarefull enumeration beyond budget: {limit}")
    out = set()
    b = 1
    while b ** 3 <= limit:
        cube = b ** 3
        a = 1
        while a * a * cube <= limit:
            out.add(a * a * cube)
            a += 1
        b += 1
    return sorted(out)


@dataclass
class SquarefullReport:
    limit: int
    members: list[int]
    sum_invsqrt_upper: float       # certified upper bound of sum r^(-1/2)
    sum_inv_upper: float           # certified upper bound of sum r^(-1)
    invsqrt_bound_ok: bool         # partial sums vs (log e^3)^4 log H, H >= 100
    inv_bound_ok: bool             # partial sums vs zeta(2) zeta(3) <= 2


def squarefull_sum_check(limit: int) -> SquarefullReport:
    """Certify both squarefull-sum envelopes at n = 1, Delta_F = 1.

    The r^(-1/2) envelope 81 * log H only applies for H >= 100; the partial
    sum is a step function, so checking at each squarefull member >= 100
    covers every H in between.
    """
    members = squarefull_integers(limit)
    log3_4 = ival(3) ** 4
    partial = ival(0)
    invsqrt_ok = True
    for r in members:
        partial = partial + 1 / iv.sqrt(ival(r))
        if r >= 100 and not certified_leq(partial, log3_4 * iv.log(ival(r))):
            invsqrt_ok = False
    if members and members[-1] < 100 <= limit:
        invsqrt_ok = invsqrt_ok and certified_leq(
            partial, log3_4 * iv.log(ival(100)))
    inv_total = ival(0)
    for r in members:
        inv_total = inv_total + 1 / ival(r)
    inv_ok = certified_leq(inv_total, ival(2))
    return SquarefullReport(limit, members, float(partial.b),
                            float(inv_total.b), invsqrt_ok, inv_ok)


def frobenius_oracle(kind: str, param: int, p: int) -> int:
    """Frobenius label of an unramified prime; 0 marks ramification.

    kind "cyclotomic": label = p mod param (0 when p divides param);
    kind "kronecker": label = Kronecker symbol (param / p).
    """
    if p < 2:
        raise InputError("p must be a prime")
    if kind == "cyclotomic":
        if param < 1:
            raise InputError("cyclotomic modulus must be positive")
        return p % param if p % param and _coprime(p, param) else 0
    if kind == "kronecker":
        return kronecker(param, p)
    raise InputError(f"unknown Frobenius kind {kind!r}")


def _coprime(a: int, b: int) -> bool:
    from math import gcd
    return gcd(a, b) == 1


@dataclass
class ClassCountReport:
    kind: str
    param: int
    class_label: int
    limit: int
    count: int
    expected: Fraction             # (|C| / |G|) * pi(H)
    deviation: Fraction            # count - expected, signed
    bound_upper: float | None      # envelope value when parameters supplied
    gate_ok: bool | None
    within_bound: bool | None


def pi_C(kind: str, param: int, class_label: int, limit: int,
         eps: float | None = None, disc: float | None = None,
         deg_ratio: int | None = None) -> ClassCountReport:
    """Count unramified primes <= limit with the given Frobenius label.

    With (eps, disc, deg_ratio) supplied, also evaluates the deviation
    envelope (H / log H) exp(-c(eps) sqrt(log H)) and its admissibility gate
    H >= (log disc)^(2 + deg_ratio / (2 eps)).
    """
    if limit < 2:
        raise InputError("limit must be at least 2")
    primes = primes_up_to(limit)
    if kind == "cyclotomic":
        if param < 2 or not _coprime(class_label % param, param):
            raise InputError("class label must be a unit residue")
        group_order = _phi(param)
        count = int(np.sum(primes % param == class_label % param))
    elif kind == "kronecker":
        if class_label not in (1, -1):
            raise InputError("Kronecker classes are +1 and -1")
        group_order = 2
        syms = np.array([kronecker(param, int(p)) for p in primes])
        count = int(np.sum(syms == class_label))
    else:
        raise InputError(f"unknown Frobenius kind {kind!r}")
    total = len(primes)
    expected = Fraction(1, group_order) * total
    deviation = Fraction(count) - expected
    bound_upper = gate_ok = within = None
    if eps is not None and disc is not None and deg_ratio is not None:
        if eps <= 0:
            raise InputError("eps must be positive")
        gate = iv.log(ival(disc)) ** ival(2 + Fraction(deg_ratio) / (2 * Fraction(eps)))
        gate_ok = bool(certified_leq(gate, ival(limit)))
        c = c_epsilon_interval(eps, deg_ratio)
        lh = iv.log(ival(limit))
        env = ival(limit) / lh * iv.exp(-c * iv.sqrt(lh))
        bound_upper = float(env.b)
        within = bool(certified_leq(ival(abs(deviation)), env))
    return ClassCountReport(kind, param, class_label, limit, count, expected,
                            deviation, bound_upper, gate_ok, within)


def _phi(n: int) -> int:
    from ..cyclotomic import euler_phi
    return euler_phi(n)
