"""Certified inequality scans: character-sum envelopes, bilinear sums, and
smoothed multiplicative sums.

Every verdict compares a certified upper enclosure of the left side with a
certified lower enclosure of the right side.  Where floating point enters
(the smoothing weights in bulk enumerations), an explicit per-term error
envelope is added to the enclosure before any comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np
from mpmath import iv

from ..config import LIMITS
from ..cyclotomic import Cyclotomic
from ..errors import CapacityError, GateError, InputError
from ..intervals import (Box, certified_geq, certified_leq, certified_lt,
                         cyclotomic_enclosure, ival, root_of_unity_box)
from .bounds import BoundParams, c_epsilon_interval, rhs_bounds
from .dirichlet import DirichletCharacter, char_sum, pairing
from .primes import primes_up_to, squarefree_mask

# -- epsilon-bad scans ------------------------------------------------------------


@dataclass
class ScanRow:
    H: int
    abs_sum: object          # interval
    envelope: object         # interval
    ratio: float
    verdict: str             # "ok" | "flagged" | "indeterminate"


@dataclass
class ScanReport:
    rows: list[ScanRow]
    flagged: bool
    first_flag_H: int | None
    max_ratio: float
    gate_value: float


def _abs_enclosure(value):
    if isinstance(value, Cyclotomic):
        return cyclotomic_enclosure(value, 25).abs()
    if isinstance(value, Box):
        return value.abs()
    if isinstance(value, (int, Fraction)):
        return abs(ival(value))
    return abs(ival(value))


def eps_bad_scan(sum_source, disc, deg_kf: int, deg_kq: int, eps,
                 H_grid) -> ScanReport:
    """Compare |sum of chi over primes up to H| with the badness envelope
    (H / log H) exp(-c(eps) sqrt(log H)) across the grid.

    sum_source maps H to the exact sum (Cyclotomic, rational, or a Box).
    The definition only concerns nontrivial extensions, and every grid
    point must clear H >= (log disc)^(2 + [K:F] / (2 eps)).
    """
    if deg_kf < 2:
        raise InputError("the badness definition needs a nontrivial extension")
    if not eps > 0:
        raise InputError("eps must be positive")
    grid = sorted(int(h) for h in H_grid)
    if not grid:
        raise InputError("empty grid")
    gate = iv.log(ival(disc)) ** ival(2 + Fraction(deg_kf) / (2 * Fraction(eps)))
    for H in grid:
        if not certified_leq(gate, ival(H)):
            raise GateError(
                f"domain gate violated: H >= (log disc)^(2 + [K:F]/(2 eps)) at H={H}")
    c = c_epsilon_interval(eps, deg_kq)
    rows = []
    flagged = False
    first_flag = None
    max_ratio = 0.0
    for H in grid:
        s = _abs_enclosure(sum_source(H))
        lh = iv.log(ival(H))
        env = ival(H) / lh * iv.exp(-c * iv.sqrt(lh))
        if certified_geq(s, env):
            verdict = "flagged"
            flagged = True
            if first_flag is None:
                first_flag = H
        elif certified_lt(s, env):
            verdict = "ok"
        else:
            verdict = "indeterminate"
        ratio = float(s.b) / float(env.a)
        max_ratio = max(max_ratio, ratio)
        rows.append(ScanRow(H, s, env, ratio, verdict))
    return ScanReport(rows, flagged, first_flag, max_ratio, float(gate.b))


def dirichlet_sum_source(chi: DirichletCharacter, max_H: int):
    """Exact character-sum source over primes, sharing one sieve."""
    primes = primes_up_to(max_H)

    def source(H: int):
        return char_sum(chi, H, primes).exact

    return source


def counting_sum_source(max_H: int):
    """Synthetic no-cancellation oracle: returns pi(H) itself."""
    primes = primes_up_to(max_H)

    def source(H: int):
        return int(np.searchsorted(primes, H, side="right"))

    return source


# -- bilinear sums -----------------------------------------------------------------


@dataclass
class BilinearReport:
    H: int
    family_size: int
    lhs: object                 # interval (certified enclosure, real part)
    e_pairs: list[tuple[int, int]]
    r: int
    trivial_bound: object       # interval
    trivial_ok: bool
    thm52_gates: dict[str, bool]
    thm52_bound: object | None
    thm52_ok: bool | None


def _pair_sum_exact(chi1: DirichletCharacter, chi2: DirichletCharacter,
                    sqfree_values: np.ndarray) -> Cyclotomic:
    """sum over squarefree a <= H of chi1(a) * conj(chi2(a)), exactly."""
    L = chi1.q * chi2.q // gcd(chi1.q, chi2.q)
    n12 = chi1.order * chi2.order // gcd(chi1.order, chi2.order)
    counts = np.bincount(sqfree_values % L, minlength=L)
    powers = [0] * n12
    for rcls in range(L):
        cnt = int(counts[rcls])
        if not cnt:
            continue
        t1 = chi1.exponents[rcls % chi1.q]
        t2 = chi2.exponents[rcls % chi2.q]
        if t1 is None or t2 is None:
            continue
        t = (t1 * (n12 // chi1.order) - t2 * (n12 // chi2.order)) % n12
        powers[t] += cnt
    return Cyclotomic.from_powers(n12, powers)


def bilinear_check(family: list[DirichletCharacter], coeffs, H: int) -> BilinearReport:
    """LHS = sum over squarefree a <= H of |sum_i a_i chi_i(a)|^2, exactly,
    against the always-valid trivial bound and, when its gates hold, the
    large-sieve bound.

    Characters must be pairwise distinct and primitive; coefficients must
    be rational.
    """
    if H < 2:
        raise InputError("H must be at least 2")
    if H > LIMITS.analytic_budget:
        raise CapacityError(f"H={H} exceeds the brute-force budget")
    if len(coeffs) != len(family):
        raise InputError("one coefficient per character required")
    coeffs = [Fraction(c) for c in coeffs]
    for i, chi in enumerate(family):
        if not chi.is_primitive():
            raise InputError(f"character {i} (mod {chi.q}) is imprimitive")
        for j in range(i + 1, len(family)):
            if chi == family[j]:
                raise InputError("family characters must be pairwise distinct")
    mask = squarefree_mask(H)
    sqfree_values = np.nonzero(mask)[0].astype(np.int64)

    M = len(family)
    lhs = Cyclotomic.rational(0)
    for i in range(M):
        for j in range(i, M):
            if coeffs[i] == 0 or coeffs[j] == 0:
                continue
            p = _pair_sum_exact(family[i], family[j], sqfree_values)
            if i == j:
                lhs = lhs + p.scale(coeffs[i] * coeffs[i])
            else:
                lhs = lhs + (p + p.conjugate()).scale(coeffs[i] * coeffs[j])
    if lhs != lhs.conjugate():
        raise AssertionError("bilinear LHS must be real")
    lhs_box = cyclotomic_enclosure(lhs, 25)
    lhs_iv = lhs_box.re

    # pairing set E via exact orthogonality over the common period
    e_pairs = []
    r = 0
    for i in range(M):
        for j in range(M):
            val = pairing(family[i], family[j])
            if not val.is_zero():
                e_pairs.append((i, j))
                if val.is_rational():
                    r = max(r, int(val.as_rational()))
                else:
                    r = max(r, 1)
    a_sum = sum(abs(c) for c in coeffs)
    trivial = rhs_bounds("trivial_53", BoundParams(n=1, d=1, H=H, a_sum=a_sum))
    trivial_ok = certified_leq(lhs_iv, trivial)

    qmax = max((chi.conductor for chi in family), default=1)
    e_pair_sum = sum(abs(coeffs[i] * coeffs[j]) for i, j in e_pairs)
    gates = {
        "Q > 100": qmax > 100,
        "M > 100": M > 100,
        "H >= Q^d exp(16 n d^4)": certified_leq(
            ival(qmax) * iv.exp(ival(16)), ival(H)),
    }
    thm52_bound = None
    thm52_ok = None
    if all(gates.values()):
        thm52_bound = rhs_bounds("bilinear_52", BoundParams(
            n=1, d=1, r=max(r, 1), Q=qmax, H=H, M=M,
            e_pair_sum=e_pair_sum, a_sum=a_sum))
        thm52_ok = certified_leq(lhs_iv, thm52_bound)
    return BilinearReport(H, M, lhs_iv, e_pairs, r, trivial, bool(trivial_ok),
                          gates, thm52_bound, thm52_ok)


# -- smoothed multiplicative sums --------------------------------------------------


@dataclass
class AcceptableMultFn:
    """Squarefree-supported multiplicative function from a character.

    f(p) = chi(p) off the exception set (0 at ramified primes), overridden
    on the exception set by rational values of magnitude at most d.
    """
    chi: DirichletCharacter
    overrides: dict[int, Fraction] = field(default_factory=dict)
    d: int = 1

    def __post_init__(self):
        self.overrides = {int(p): Fraction(v) for p, v in self.overrides.items()}
        for p, v in self.overrides.items():
            if abs(v) > self.d:
                raise InputError(f"override at {p} exceeds degree bound {self.d}")

    @property
    def pole_order(self) -> int:
        return 1 if self.chi.is_trivial() else 0

    @property
    def q_chi(self) -> int:
        return self.chi.conductor


@dataclass
class SmoothedReport:
    mode: str                    # "enumerated" | "majorant" | "ungated"
    lhs_abs: object              # interval upper enclosure of |LHS|
    tail_bound: float
    cutoff_log: int | None
    kappa: int
    rhs: object | None
    verdict: bool | None


_ETA_TERM_SLACK = 1e-12  # absolute per-term slack covering erf/sum rounding


def _eta_weights(H, values: np.ndarray) -> np.ndarray:
    """eta_H(log a) for an int64 array, via the erf closed form."""
    from scipy.special import erf

    L = np.log(float(H))
    x = np.log(values.astype(np.float64))
    return float(np.e) * np.sqrt(np.pi) / 2 * (erf(x + L) - erf(x - L))


def _tail_bound_iv(H, B: int):
    """Certified bound for sum over a > H e^B of eta_H(log a), d = 1."""
    Hv = ival(H)
    b = ival(B)
    gauss = iv.exp(b - b * b) / (2 * b - 1)
    return iv.exp(ival(1)) * iv.sqrt(iv.pi) / 2 * (Hv * gauss + iv.exp(-b * b))


def smoothed_sum_check(f: AcceptableMultFn, H, params: BoundParams | None = None,
                       enforce_gates: bool = True,
                       rel_tail: float = 1e-6) -> SmoothedReport:
    """|sum over squarefree a of f(a) eta_H(log a)| against its envelope.

    Enumerates a <= H e^B with a certified Gaussian tail bound, extending B
    until the tail is below rel_tail of the partial sum.  When the gated
    parameters put the cutoff beyond the enumeration budget (d = 1), a
    certified integral majorant replaces enumeration.  With
    enforce_gates=False the envelope is not evaluated and no verdict is
    claimed ("ungated" exploration).
    """
    if f.d != 1:
        raise InputError("only degree-1 instantiations are supported")
    if params is None:
        params = BoundParams()
    Q = params.Q if params.Q is not None else max(
        f.q_chi, 2, int(np.ceil(np.exp(4.0))))
    if Q < f.q_chi:
        raise InputError("Q must dominate the conductor")
    kappa = 1 if f.pole_order >= 1 else 0
    rhs = None
    if enforce_gates:
        rhs = rhs_bounds("smoothed_47", BoundParams(
            n=params.n, d=1, r=f.pole_order, Q=Q, H=H,
            s_size=len(f.overrides)))

    # pick the enumeration cutoff
    B = 3
    while float(_tail_bound_iv(H, B).b) > rel_tail * max(float(H), 1.0) and B < 12:
        B += 1
    cutoff = int(float(H) * np.exp(B))
    if cutoff <= LIMITS.analytic_budget:
        lhs_abs, tailb = _enumerate_lhs(f, H, cutoff, B, rel_tail)
        mode = "enumerated"
    else:
        if enforce_gates is False:
            raise CapacityError("window exceeds the enumeration budget")
        maj = _majorant_abs(H)
        lhs_abs, tailb = maj, 0.0
        mode = "majorant"
    verdict = None
    if enforce_gates:
        verdict = bool(certified_leq(lhs_abs, rhs))
    return SmoothedReport(mode if enforce_gates else "ungated", lhs_abs,
                          tailb, B, kappa, rhs, verdict)


def _majorant_abs(H):
    """|LHS| <= eta(0) + integral of eta(v) e^v over R, certified."""
    L = iv.log(ival(H))
    sinh = (iv.exp(L) - iv.exp(-L)) / 2
    e = iv.exp(ival(1))
    return e * iv.sqrt(iv.pi) * (1 + 2 * sinh * iv.exp(ival(1) / 4))


def _enumerate_lhs(f: AcceptableMultFn, H, cutoff: int, B: int, rel_tail: float):
    chi = f.chi
    order = chi.order
    mask = squarefree_mask(cutoff)
    n_arr = np.arange(cutoff + 1, dtype=np.int64)
    expo = np.zeros(cutoff + 1, dtype=np.int64)
    alive = mask.copy()
    override_primes = sorted(f.overrides)
    primes = primes_up_to(cutoff)
    for p in primes:
        p = int(p)
        if p in f.overrides:
            continue
        t = chi.exponents[p % chi.q]
        if t is None:
            alive[p::p] = False
        elif t:
            expo[p::p] += t
    expo %= order
    # split off the override primes: a = s * b with s | product(S)
    weights = _eta_weights(H, n_arr[1:])
    weights = np.concatenate([[0.0], weights])
    total = Box(ival(0), ival(0))
    from itertools import combinations

    subsets = [()]
    for k in range(1, len(override_primes) + 1):
        subsets.extend(combinations(override_primes, k))
    for subset in subsets:
        s = 1
        coeff = Fraction(1)
        for p in subset:
            s *= p
            coeff *= f.overrides[p]
        if s > cutoff or coeff == 0:
            continue
        multiples = n_arr[s::s]
        vals = multiples // s
        ok = alive[multiples] & mask[multiples]
        # b must be coprime to every override prime
        for p in override_primes:
            ok &= (vals % p) != 0
        if not np.any(ok):
            continue
        sel = multiples[ok]
        selv = vals[ok]
        w = weights[sel]
        err = _ETA_TERM_SLACK * len(sel)
        for t in range(order):
            tsel = expo[selv] == t
            if not np.any(tsel):
                continue
            wsum = float(np.sum(w[tsel]))
            term = root_of_unity_box(order, t).scale(
                ival(coeff) * (ival(wsum) + iv.mpf([-err, err])))
            total = total + term
    tail = _tail_bound_iv(H, B)
    lhs_abs = total.abs() + tail
    return lhs_abs, float(tail.b)
