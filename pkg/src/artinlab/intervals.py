"""Certified numerics: outward-rounded intervals over mpmath.iv.

Every inequality verdict in the analytic lab goes through this module: a
"pass" means upper(LHS) <= lower(RHS) with directed rounding, never a bare
float comparison.  Complex enclosures are axis-aligned boxes.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv

iv.dps = 40


@contextmanager
def extra_precision(dps: int):
    old = iv.dps
    iv.dps = max(old, dps)
    try:
        yield
    finally:
        iv.dps = old


def ival(x) -> "iv.mpf":
    """Exact-or-enclosing interval from int, Fraction, float, or str."""
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    if isinstance(x, (int, float)):
        return iv.mpf(x)
    if isinstance(x, str):
        return iv.mpf(x)
    return x  # already an interval


def lower(x) -> float:
    return float(x.a)


def upper(x) -> float:
    return float(x.b)


def width(x) -> float:
    return float(x.delta.b)


def certified_leq(lhs, rhs) -> bool:
    """True iff lhs <= rhs holds for every point of both enclosures.

    Endpoint objects are compared directly (exact); no rounding conversion.
    """
    return bool(lhs.b <= rhs.a)


def certified_lt(lhs, rhs) -> bool:
    return bool(lhs.b < rhs.a)


def certified_geq(lhs, rhs) -> bool:
    return bool(lhs.a >= rhs.b)


def enclosure_str(x, digits: int = 12) -> str:
    mid = (float(x.a) + float(x.b)) / 2
    rad = max(mid - float(x.a), float(x.b) - mid)
    return f"{mid:.{digits}g} ± {rad:.3g}"


class Box:
    """Axis-aligned complex interval."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "Box") -> "Box":
        return Box(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    def scale(self, s) -> "Box":
        s = ival(s)
        return Box(self.re * s, self.im * s)

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)

    def abs(self):
        return iv.sqrt(self.re ** 2 + self.im ** 2)

    def abs_squared(self):
        return self.re ** 2 + self.im ** 2

    def width(self) -> float:
        return max(width(self.re), width(self.im))

    def midpoint(self) -> complex:
        return complex((lower(self.re) + upper(self.re)) / 2,
                       (lower(self.im) + upper(self.im)) / 2)

    def contains(self, z: complex) -> bool:
        return bool(self.re.a <= z.real <= self.re.b
                    and self.im.a <= z.imag <= self.im.b)

    def __repr__(self):
        return f"Box({enclosure_str(self.re)}, {enclosure_str(self.im)}i)"


def root_of_unity_box(e: int, k: int) -> Box:
    """Enclosure of exp(2 pi i k / e) at the current working precision."""
    angle = iv.pi * (2 * (k % e)) / e
    return Box(iv.cos(angle), iv.sin(angle))


def cyclotomic_enclosure(value, precision: int = 20) -> Box:
    """Box around a Cyclotomic with width <= 10^-precision on both axes."""
    target = 10.0 ** (-precision)
    dps = precision + 15
    while True:
        with extra_precision(dps):
            box = Box(ival(0), ival(0))
            for i, c in enumerate(value.coeffs):
                if c:
                    box = box + root_of_unity_box(value.e, i).scale(c)
            if box.width() <= target:
                return box
        dps *= 2
        if dps > 40 * (precision + 15):
            raise AssertionError("enclosure failed to converge")
