"""Explicit bound formulas, transcribed display by display.

Each evaluator checks its stated domain gate and raises GateError naming
the violated gate; nothing is clamped.  All values are computed with
interval arithmetic and returned as intervals, so callers can do certified
comparisons on either endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from mpmath import ceil as mpceil, iv, mpf

from ..config import LIMITS
from ..errors import CapacityError, GateError, InputError
from ..intervals import certified_lt, extra_precision, ival


def c_epsilon_interval(eps, deg_k_over_q: int):
    """min(sqrt(eps)/18, 1/(29 sqrt([K:Q]))) as an interval."""
    if not eps > 0:
        raise InputError("eps must be positive")
    if deg_k_over_q < 1:
        raise InputError("field degree must be at least 1")
    a = iv.sqrt(ival(eps)) / 18
    b = 1 / (29 * iv.sqrt(ival(deg_k_over_q)))
    # interval-safe min: (a + b - |a - b|) / 2
    return (a + b - abs(a - b)) / 2


def c_epsilon(eps, deg_k_over_q: int) -> float:
    """Float midpoint of the exact min-formula value."""
    v = c_epsilon_interval(eps, deg_k_over_q)
    return (float(v.a) + float(v.b)) / 2


@dataclass
class BoundParams:
    """Named quantities shared by the bound formulas; unused ones stay None."""
    n: int = 1                 # degree of the base field over Q
    d: int = 1                 # character degree (or degree bound)
    Q: object = None           # conductor-type quantity
    H: object = None           # summation cutoff
    M: object = None           # family size
    t: object = None           # Hoelder exponent, or imaginary part
    eps: object = None
    Delta: object = None       # discriminant-type quantity
    deg_ratio: object = None   # [K:F]
    delta: object = None       # strip offset
    sigma: object = None
    sigma0: object = None
    r: object = None           # pole order / max pairing
    s_size: object = None      # |S|, exceptional prime count
    e_size: object = None      # |E|, interacting pair count
    a_sum: object = None       # sum of |a_i|
    e_pair_sum: object = None  # sum of |a_i a_j| over E
    a0t: object = None         # A_0t value for the Hoelder bound


def _need(params: BoundParams, *names):
    vals = []
    for name in names:
        v = getattr(params, name)
        if v is None:
            raise InputError(f"bound formula needs parameter {name!r}")
        vals.append(v)
    return vals


def _gate(ok: bool | None, name: str):
    if ok is not True:
        raise GateError(f"domain gate violated: {name}")


def _q_of_t(Q, t, n: int, d: int):
    return ival(Q) * (1 + abs(ival(t))) ** (n * d)


def rhs_bounds(which: str, params: BoundParams):
    """Evaluate one of the named displays at the given parameters."""
    with extra_precision(60):
        return _RHS[which](params) if which in _RHS else _unknown(which)


def _unknown(which):
    raise InputError(f"unknown bound formula {which!r}")


def _convexity_42(p: BoundParams):
    n, d = p.n, p.d
    delta, sigma, t, Q, Delta = _need(p, "delta", "sigma", "t", "Q", "Delta")
    _gate(0 < delta < Fraction(1, 2), "0 < delta < 1/2")
    _gate(-delta <= sigma <= 1 + delta, "-delta <= sigma <= 1 + delta")
    qt = _q_of_t(Q, t, n, d)
    return (ival(3) ** (2 * d) * iv.exp(ival(n * d)) * ival(delta) ** (-d)
            * qt ** ((1 + ival(delta) - ival(sigma)) / 2)
            * (3 + iv.log(ival(Delta)) / (2 * n)) ** (n * d))


def _lfs_44(p: BoundParams):
    n, d = p.n, p.d
    sigma, sigma0, s_size = _need(p, "sigma", "sigma0", "s_size")
    _gate(Fraction(1, 2) < sigma0 < 1, "1/2 < sigma0 < 1")
    _gate(sigma >= sigma0, "sigma >= sigma0")
    first = 3 * n * ival(d) ** (4 - 4 * ival(sigma)) / (2 * ival(sigma) - 1)
    base = ival(2 * d * d + s_size)
    second = 2 * d * n * (base ** (1 - ival(sigma0)) - 1) / (1 - ival(sigma0))
    return first + second


def _line_45(p: BoundParams):
    n, d = p.n, p.d
    delta, t, Q, Delta, s_size = _need(p, "delta", "t", "Q", "Delta", "s_size")
    _gate(0 < delta <= Fraction(1, 4), "0 < delta <= 1/4")
    qt = _q_of_t(Q, t, n, d)
    e3 = iv.exp(ival(3))
    return (iv.log(e3 * qt) ** d * iv.log(e3 * ival(Delta)) ** (n * d)
            * qt ** ((1 - 2 * ival(delta)) / 4)
            * iv.exp(6 * n * d + 3 * n * d * d / ival(delta)
                     + 4 * d * n * iv.sqrt(ival(s_size))))


def _circle_45(p: BoundParams):
    n, d = p.n, p.d
    delta, r, Q, Delta, s_size = _need(p, "delta", "r", "Q", "Delta", "s_size")
    _gate(0 < delta <= Fraction(1, 4), "0 < delta <= 1/4")
    base = ival(2 * d * d + s_size)
    e3 = iv.exp(ival(3))
    return (ival(delta) ** (-d - r) * ival(Q) ** ival(delta)
            * iv.log(e3 * ival(Delta)) ** (n * d)
            * iv.exp(11 * n * d
                     + 2 * d * n * (base ** ival(delta) - 1) / ival(delta)))


def _smoothed_47(p: BoundParams):
    n, d = p.n, p.d
    r, Q, H, s_size = _need(p, "r", "Q", "H", "s_size")
    Qv, Hv = ival(Q), ival(H)
    _gate(bool(Qv.a >= mpf(2) ** n), "Q >= 2^n")
    _gate(bool(iv.log(Qv).a >= (4 * iv.sqrt(ival(d))).b), "Q >= exp(4 sqrt(d))")
    _gate(bool(iv.log(Qv).a >= (iv.sqrt(ival(d)) * s_size / 2).b),
          "Q >= exp(sqrt(d) |S| / 2)")
    _gate(bool((Hv ** 2).a >= Qv.b), "H >= Q^(1/2)")
    ratio_log = iv.log(Hv / iv.sqrt(Qv))
    _gate(bool(ratio_log.a >= 16 * n * d * d), "16 n d^2 <= log(Q^(-1/2) H)")
    lq = iv.log(Qv)
    main = ival(0)
    if r >= 1:
        main = Hv * iv.log(Hv) ** (r - 1) * lq ** (50 * n * d)
    tail = (Hv * (Hv / iv.sqrt(Qv)) ** ival(-0.5) * lq ** (26 * n * d)
            * iv.exp(4 * iv.sqrt(ival(n)) * d * iv.sqrt(ratio_log)
                     + 4 * iv.sqrt(ival(2)) * n * ival(d) ** ival(0.75)
                     * iv.sqrt(lq)))
    return main + tail


def _bilinear_52(p: BoundParams):
    n, d = p.n, p.d
    r, Q, H, e_pair, a_sum = _need(p, "r", "Q", "H", "e_pair_sum", "a_sum")
    Qv, Hv = ival(Q), ival(H)
    _gate(bool(Qv.a > 100), "Q > 100")
    if p.M is not None:
        _gate(p.M > 100, "M > 100")
    gate_rhs = Qv ** d * iv.exp(ival(16 * n * d ** 4))
    _gate(bool(Hv.a >= gate_rhs.b), "H >= Q^d exp(16 n d^4)")
    lq2 = 2 * d * iv.log(Qv)
    first = ival(0)
    if ival(e_pair).b > 0:
        _gate(r >= 1, "r >= 1 when E is nonempty")
        first = Hv * iv.log(Hv) ** (r - 1) * lq2 ** (50 * d * d * n) * ival(e_pair)
    A = (lq2 ** (26 * d * d * n)
         * iv.exp(4 * iv.sqrt(ival(n)) * d * d * iv.sqrt(iv.log(Hv / Qv ** d))
                  + 8 * n * d * d * iv.sqrt(iv.log(Qv))))
    second = A * Hv * (Hv / Qv ** d) ** ival(-0.5) * ival(a_sum) ** 2
    return first + second


def _trivial_53(p: BoundParams):
    n, d = p.n, p.d
    H, a_sum = _need(p, "H", "a_sum")
    Hv = ival(H)
    _gate(bool(Hv.a >= 1), "H >= 1")
    return (iv.log(iv.exp(ival(4)) * Hv) ** (n * d * d + 1)
            * Hv * ival(a_sum) ** 2)


def _holder_54(p: BoundParams):
    n, d = p.n, p.d
    r, Q, H, M, t, e_size, a0t = _need(
        p, "r", "Q", "H", "M", "t", "e_size", "a0t")
    if not (isinstance(t, int) and t >= 1):
        raise InputError("t must be a positive integer")
    Qv, Hv = ival(Q), ival(H)
    _gate(bool(Hv.a >= 100), "H >= 100")
    gate_rhs = Qv ** d * iv.exp(ival(16 * n * d ** 4))
    _gate(bool((Hv ** t).a >= gate_rhs.b), "H^t >= Q^d exp(16 n d^4)")
    lht = iv.log(Hv ** t)
    lq2 = 2 * d * iv.log(Qv)
    A = iv.exp(4 * iv.sqrt(ival(n)) * d * d * iv.sqrt(iv.log(Hv ** t / Qv ** d))
               + 8 * n * d * d * iv.sqrt(iv.log(Qv)))
    expo = Fraction(max(r - 1, 1), 2 * t)
    return (ival(a0t) * lht ** ival(expo) * lq2 ** ival(Fraction(26 * d * d * n, t))
            * Hv * M
            * ((ival(e_size) / ival(M) ** 2) ** ival(Fraction(1, 2 * t))
               + Hv ** ival(-0.25) * A ** ival(Fraction(1, 2 * t))
               * Qv ** ival(Fraction(d, 4 * t))))


def _thm62_c(p: BoundParams):
    n, d = p.n, p.d
    Q, M, H = _need(p, "Q", "M", "H")
    Qv, Mv, Hv = ival(Q), ival(M), ival(H)
    _gate(bool(Qv.a >= 100) and bool(Hv.a >= 100), "Q, H >= 100")
    _gate(isinstance(M, int) and M >= 100, "M >= 100 integer")
    num = (-iv.log(Mv) + 15 * n * d * d * iv.log(iv.log(Qv ** d * Mv * Hv))) * iv.log(Hv)
    den = (d * iv.log(Qv) + 4 * iv.log(Mv) + 2 * iv.log(Hv)
           + 13 * n * d ** 4 * iv.sqrt(iv.log(Qv * Mv)))
    return (10 * n * ival(d) ** ival(Fraction(3 * (d + 2), 2))
            * iv.sqrt(iv.log(Qv * Mv * Hv)) * iv.exp(num / den))


def _thm62_cH(p: BoundParams):
    n, d = p.n, p.d
    Q, M, H = _need(p, "Q", "M", "H")
    Qv, Mv, Hv = ival(Q), ival(M), ival(H)
    _gate(bool(Qv.a >= 100) and bool(Hv.a >= 100), "Q, H >= 100")
    _gate(isinstance(M, int) and M >= 100, "M >= 100 integer")
    lh = iv.log(Hv)
    inner = Mv * iv.log(Qv ** d * Mv * Hv) ** (-27 * n * d * d)
    num = -iv.log(inner) * lh * (1 - lh / iv.log(Qv ** d * Mv ** 4 * Hv ** 3))
    den = (d * iv.log(Qv) + 4 * iv.log(Mv) + 2 * lh
           + 13 * n * d ** 4 * iv.sqrt(iv.log(Qv * Mv)))
    return (11 * n * ival(d) ** ival(Fraction(3 * (d + 2), 2))
            * iv.sqrt(iv.log(Qv * Mv * Hv)) * iv.exp(num / den))


def _sparse_16(p: BoundParams):
    n, d = p.n, p.d
    eps, Delta = _need(p, "eps", "Delta")
    _gate(d >= 2, "d >= 2")
    _gate(0 < eps < 1, "0 < eps < 1")
    Dv = ival(Delta)
    _gate(bool(Dv.a >= 3), "Delta >= 3")
    C = 400 * d * d * n
    delta = C / iv.sqrt(iv.log(iv.log(Dv)))
    return Dv ** (ival(eps) * (1 + delta)) * iv.log(Dv) ** C


_RHS = {
    "convexity_42": _convexity_42,
    "lfs_44": _lfs_44,
    "line_45": _line_45,
    "circle_45": _circle_45,
    "smoothed_47": _smoothed_47,
    "bilinear_52": _bilinear_52,
    "trivial_53": _trivial_53,
    "holder_54": _holder_54,
    "thm62_c": _thm62_c,
    "thm62_cH": _thm62_cH,
    "sparse_16": _sparse_16,
}

BOUND_NAMES = tuple(_RHS)


@dataclass
class HolderParameters:
    t: int
    m0: object          # interval
    bound: object       # interval, the displayed estimate at these parameters


def holder_params(params: BoundParams) -> HolderParameters:
    """The near-optimal exponent t, the mass ratio M0, and the bound value.

    t = ceil((log(Q^d M^2) + 100 n d^4 sqrt(log(QM))) / log H);
    M0 = M^2 / (#E (log(H M Q^(2d)))^(60 n d^2)); requires M0 > 1.
    """
    n, d = params.n, params.d
    Q, H, M, e_size = _need(params, "Q", "H", "M", "e_size")
    with extra_precision(80):
        Qv, Hv, Mv = ival(Q), ival(H), ival(M)
        expr = (iv.log(Qv ** d * Mv ** 2)
                + 100 * n * d ** 4 * iv.sqrt(iv.log(Qv * Mv))) / iv.log(Hv)
        lo, hi = int(mpceil(float(expr.a))), int(mpceil(float(expr.b)))
        if lo != hi:
            raise InputError("t sits on a knife edge; supply exact inputs")
        t = int(hi)
        m0 = Mv ** 2 / (ival(e_size)
                        * iv.log(Hv * Mv * Qv ** (2 * d)) ** (60 * n * d * d))
        if not certified_lt(ival(1), m0):
            raise GateError("domain gate violated: M0 > 1")
        a0t = params.a0t if params.a0t is not None else 1
        den = (2 * d * iv.log(Qv) + 4 * iv.log(Mv)
               + 200 * n * d ** 4 * iv.sqrt(iv.log(Qv * Mv)) + 2 * iv.log(Hv))
        bound = (2 * ival(a0t) * Hv * Mv
                 * iv.exp(-iv.log(m0) * iv.log(Hv) / den))
    return HolderParameters(t, m0, bound)


# -- A_0t -----------------------------------------------------------------------


@dataclass
class A0tData:
    """Coefficient table b_a on squarefree a <= H, plus the exponent t."""
    coeffs: dict[int, Fraction | int]
    t: int
    H: int
    d: int = 1
    n: int = 1


def _is_squarefree(a: int) -> bool:
    b = 2
    while b * b <= a:
        if a % (b * b) == 0:
            return False
        b += 1
    return True


def _split_squarefull(m: int) -> tuple[int, int]:
    """m = b * r with b squarefree, r squarefull, coprime; returns (b, r, Omega(r))."""
    b = r = 1
    omega_r = 0
    d = 2
    mm = m
    while d * d <= mm:
        if mm % d == 0:
            e = 0
            while mm % d == 0:
                mm //= d
                e += 1
            if e == 1:
                b *= d
            else:
                r *= d ** e
                omega_r += e
        d += 1
    if mm > 1:
        b *= mm
    return b, r, omega_r


def a0t_eval(data: A0tData, mode: str):
    """A_0t exactly by t-fold enumeration, or by the prime-support bound.

    exact mode: A_0t = (H^-t sum G(r, b)^2)^(1/(2t)) where
    G = f(r) * sum over ordered factorizations of |b_{a_1} ... b_{a_t}|,
    f totally multiplicative with f(p) = d and f(1) = 1.
    bound mode: 3 d sqrt(t) sqrt(n) / sqrt(log H), for prime-supported
    coefficients bounded by 1 and H >= 100.
    """
    t, H, d, n = data.t, data.H, data.d, data.n
    if t < 1:
        raise InputError("t must be a positive integer")
    if mode == "prime_support_bound":
        if not all(_is_prime_int(a) for a in data.coeffs):
            raise GateError("bound mode needs prime-supported coefficients")
        if not all(abs(Fraction(v)) <= 1 for v in data.coeffs.values()):
            raise GateError("bound mode needs |b_p| <= 1")
        if H < 100:
            raise GateError("bound mode needs H >= 100")
        return 3 * d * iv.sqrt(ival(t)) * iv.sqrt(ival(n)) / iv.sqrt(iv.log(ival(H)))
    if mode != "exact_bruteforce":
        raise InputError(f"unknown A_0t mode {mode!r}")
    support = sorted(a for a, v in data.coeffs.items() if v)
    for a in support:
        if a > H or not _is_squarefree(a):
            raise InputError("coefficients must sit on squarefree a <= H")
        if not isinstance(data.coeffs[a], (int, Fraction)):
            raise InputError("exact mode needs rational coefficients")
    if len(support) ** t > LIMITS.analytic_budget:
        raise CapacityError("t-fold enumeration exceeds the analytic budget")
    from itertools import product as iproduct

    gsum: dict[int, Fraction] = {}
    for tup in iproduct(support, repeat=t):
        m = 1
        weight = Fraction(1)
        for a in tup:
            m *= a
            weight *= abs(Fraction(data.coeffs[a]))
        gsum[m] = gsum.get(m, Fraction(0)) + weight
    total = Fraction(0)
    for m, s in gsum.items():
        _, _, omega_r = _split_squarefull(m)
        g = Fraction(d) ** omega_r * s
        total += g * g
    with extra_precision(60):
        val = (ival(total) / ival(H) ** t) ** ival(Fraction(1, 2 * t))
    return val


def _is_prime_int(a: int) -> bool:
    from ..numth import is_prime
    return is_prime(a)
