"""Enumeration budgets.

Every brute-force path checks one of these limits and raises CapacityError
beyond it.  The defaults cover the whole acceptance catalog; callers may
override them for larger experiments.
"""

from dataclasses import dataclass


@dataclass
class Limits:
    element_bound: int = 10_000        # full element enumeration
    subgroup_bound: int = 2_000        # full subgroup-lattice enumeration
    analytic_budget: int = 10_000_000  # brute-force integer/ideal enumeration


LIMITS = Limits()
