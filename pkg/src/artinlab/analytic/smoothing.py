"""The Gaussian-window smoothing kernel and its Fourier transform.

eta_H is the convolution of the indicator of [-log H, log H] with
exp(1 - x^2); its transform has the closed form
2 e sqrt(pi) sin(s log H) / s * exp(-s^2 / 4).  Single-point values of
eta_H come from adaptive quadrature at high working precision (error well
under 1e-12); the certified lower bound used by the >= 1 checks is an
interval Riemann sum that needs no special-function enclosures.
"""

from __future__ import annotations

import mpmath
from mpmath import iv

from ..errors import InputError
from ..intervals import ival


def _check_h(H) -> None:
    # mathematical domain: the window [-log H, log H] must be nonempty.
    # The >= 1 lower bound additionally needs H >= e; its check carries that.
    if not H > 1:
        raise InputError("smoothing cutoff needs H > 1")


def eta(H, x, dps: int = 30) -> float:
    """eta_H(x) by adaptive quadrature; absolute error far below 1e-12."""
    _check_h(H)
    with mpmath.workdps(dps):
        L = mpmath.log(H)
        pts = [-L, x, L] if -L < x < L else [-L, L]
        return float(mpmath.quad(lambda t: mpmath.exp(1 - (x - t) ** 2), pts))


def eta_hat(H, s) -> complex:
    """Closed form of the Fourier transform; entire in s (sinc limit at 0)."""
    _check_h(H)
    with mpmath.workdps(40):
        L = mpmath.log(H)
        s = mpmath.mpmathify(s)
        front = 2 * mpmath.e * mpmath.sqrt(mpmath.pi)
        if s == 0:
            core = L
        else:
            core = mpmath.sin(s * L) / s
        val = front * core * mpmath.exp(-s ** 2 / 4)
        return complex(val)


def eta_hat_quadrature(H, s, dps: int = 30) -> complex:
    """Direct quadrature of the defining integral; the independent oracle."""
    _check_h(H)
    with mpmath.workdps(dps):
        L = mpmath.log(H)
        cutoff = L + 9  # the integrand is Gaussian-small beyond the window

        def integrand(x):
            window = (mpmath.erf(x + L) - mpmath.erf(x - L)) / 2
            return mpmath.e * mpmath.sqrt(mpmath.pi) * window * mpmath.exp(-1j * s * x)

        val = mpmath.quad(integrand, [-cutoff, 0, cutoff])
        return complex(val)


def eta_lower_certificate(H, x, pieces: int = 320):
    """Certified lower bound of eta_H(x) via an interval Riemann lower sum.

    The integrand exp(1 - (x - t)^2) is unimodal in t with peak at t = x,
    so on each subinterval its minimum sits at an endpoint.
    """
    _check_h(H)
    L = iv.log(ival(H))
    xv = ival(x)
    step = (2 * L) / pieces
    total = iv.mpf(0)
    prev = iv.exp(1 - (xv + L) ** 2)
    for k in range(1, pieces + 1):
        b = -L + step * k
        cur = iv.exp(1 - (xv - b) ** 2)
        total = total + _lo_iv(prev, cur) * step
        prev = cur
    return total


def _lo_iv(a, b):
    """Interval enclosure of min(a, b)."""
    return (a + b - abs(a - b)) / 2
