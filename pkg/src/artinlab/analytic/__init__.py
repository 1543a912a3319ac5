"""Desk-scale analytic lab over Q: primes, Dirichlet characters, smoothing
kernels, explicit bound formulas, and certified inequality scans."""

from .primes import (frobenius_oracle, pi_C, pi_count, prime_count,
                     primes_up_to, squarefull_integers, squarefull_sum_check)
from .dirichlet import (DirichletCharacter, all_characters, char_sum,
                        pairing, primitive_characters)
from .smoothing import eta, eta_hat, eta_lower_certificate
from .bounds import (A0tData, BoundParams, a0t_eval, c_epsilon, holder_params,
                     rhs_bounds)
from .scans import (AcceptableMultFn, bilinear_check, eps_bad_scan,
                    smoothed_sum_check)

__all__ = [
    "frobenius_oracle", "pi_count", "prime_count", "primes_up_to",
    "squarefull_integers", "squarefull_sum_check",
    "DirichletCharacter", "all_characters", "char_sum", "pairing", "pi_C",
    "primitive_characters",
    "eta", "eta_hat", "eta_lower_certificate",
    "A0tData", "BoundParams", "a0t_eval", "c_epsilon", "holder_params",
    "rhs_bounds",
    "AcceptableMultFn", "bilinear_check", "eps_bad_scan", "smoothed_sum_check",
]
