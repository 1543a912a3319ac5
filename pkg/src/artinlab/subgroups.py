"""Subgroup lattice up to conjugacy, plus the subgroup-family filters.

Enumeration is bottom-up: starting from the trivial subgroup, every class
representative U is extended by <U, g> where g runs over representatives of
the N_G(U)-conjugation orbits outside U.  Each subgroup of G is reachable
through a maximal chain, so the walk is exhaustive; conjugates are folded
into classes through a registry of element sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import perm as pm
from .config import LIMITS
from .errors import CapacityError, InputError
from .group import (PermGroup, abelianization, derived_subgroup, is_normal,
                    normal_closure, sylow_subgroup)
from .group import _prime_factors


@dataclass(frozen=True)
class Subgroup:
    """A subgroup together with the ambient group it lives in."""
    parent: PermGroup
    group: PermGroup

    @property
    def order(self) -> int:
        return self.group.order


class SubgroupLattice:
    def __init__(self, G: PermGroup):
        if G.order > LIMITS.subgroup_bound:
            raise CapacityError(
                f"group order {G.order} exceeds subgroup enumeration bound "
                f"{LIMITS.subgroup_bound}")
        self.G = G
        self.class_reps: list[PermGroup] = []
        self._registry: dict[frozenset, int] = {}
        self._class_sizes: list[int] = []
        self._build()

    def _register(self, H: PermGroup) -> bool:
        """Fold H into its conjugacy class; True if the class is new."""
        key = H.element_set()
        if key in self._registry:
            return False
        G = self.G
        orbit = {key}
        for g in G.elements():
            gi = pm.inverse(g)
            conj = frozenset(pm.mult(gi, pm.mult(h, g)) for h in key)
            orbit.add(conj)
        rep_set = min(orbit, key=lambda s: sorted(s))
        if rep_set == key:
            rep = H
        else:
            rep = PermGroup(G.degree, sorted(rep_set))
        idx = len(self.class_reps)
        self.class_reps.append(rep)
        self._class_sizes.append(len(orbit))
        for s in orbit:
            self._registry[s] = idx
        return True

    def _build(self) -> None:
        G = self.G
        degree = G.degree
        trivial = PermGroup(degree, [])
        self._register(trivial)
        queue = [trivial]
        gelems = G.elements()
        while queue:
            U = queue.pop(0)
            uset = U.element_set()
            ugens = list(U.generators)
            # N_G(U)
            norm = [g for g in gelems
                    if all(pm.conjugate(h, g) in uset for h in ugens)]
            # orbit representatives of N_G(U) acting on G \ U by conjugation
            outside_seen: set = set()
            for x in gelems:
                if x in uset or x in outside_seen:
                    continue
                orbit = {pm.conjugate(x, n) for n in norm}
                outside_seen |= orbit
                T = PermGroup(degree, ugens + [x])
                if self._register(T):
                    queue.append(self.class_reps[self._registry[T.element_set()]])
        order = sorted(range(len(self.class_reps)),
                       key=lambda i: (self.class_reps[i].order,
                                      sorted(self.class_reps[i].element_set())))
        remap = {old: new for new, old in enumerate(order)}
        self.class_reps = [self.class_reps[i] for i in order]
        self._class_sizes = [self._class_sizes[i] for i in order]
        self._registry = {k: remap[v] for k, v in self._registry.items()}

    def total_subgroups(self) -> int:
        return sum(self._class_sizes)

    def class_index_of(self, H: PermGroup) -> int:
        try:
            return self._registry[H.element_set()]
        except KeyError:
            raise InputError("not a subgroup of the parent group") from None


def subgroup_lattice(G: PermGroup) -> SubgroupLattice:
    if "subgroup_lattice" not in G._cache:
        G._cache["subgroup_lattice"] = SubgroupLattice(G)
    return G._cache["subgroup_lattice"]


# -- predicates on finite groups ----------------------------------------------


def is_cyclic_group(H: PermGroup) -> bool:
    if H.is_trivial():
        return True
    return max(pm.order(rep) for rep, _ in H.conjugacy_classes()) == H.order


def is_nilpotent(H: PermGroup) -> bool:
    """Direct-product-of-Sylows test: every Sylow subgroup normal."""
    if "is_nilpotent" not in H._cache:
        H._cache["is_nilpotent"] = all(
            is_normal(H, sylow_subgroup(H, p)) for p in _prime_factors(H.order))
    return H._cache["is_nilpotent"]


def is_nilpotent_lcs(H: PermGroup) -> bool:
    """Independent test via the lower central series reaching 1."""
    current = H
    while True:
        comms = [pm.mult(pm.mult(pm.inverse(a), pm.inverse(b)), pm.mult(a, b))
                 for a in H.generators for b in current.generators]
        nxt = normal_closure(H, comms)
        if nxt.order == current.order:
            return nxt.is_trivial()
        if nxt.is_trivial():
            return True
        current = nxt


def nilpotent_rank(H: PermGroup) -> int:
    """Minimal generator count of a nilpotent group (max of Sylow ranks)."""
    if H.is_trivial():
        return 0
    r = 1
    for p in _prime_factors(H.order):
        P = sylow_subgroup(H, p)
        r = max(r, len(abelianization(P).factors))
    return r


def is_elementary(H: PermGroup) -> bool:
    """p-group times a cyclic group of coprime order."""
    if not is_nilpotent(H):
        return False
    noncyclic = sum(1 for p in _prime_factors(H.order)
                    if not is_cyclic_group(sylow_subgroup(H, p)))
    return noncyclic <= 1


FAMILY_FILTERS = {
    "all": lambda H: True,
    "cyclic": is_cyclic_group,
    "nilpotent": is_nilpotent,
    "elementary": is_elementary,
    "elementary_rank_le_2": lambda H: is_elementary(H) and nilpotent_rank(H) <= 2,
}


def subgroups_up_to_conjugacy(G: PermGroup, family: str = "all") -> list[Subgroup]:
    """One representative per conjugacy class of subgroups passing the filter."""
    try:
        filt = FAMILY_FILTERS[family]
    except KeyError:
        raise InputError(f"unknown subgroup family {family!r}") from None
    lat = subgroup_lattice(G)
    return [Subgroup(G, H) for H in lat.class_reps if filt(H)]
