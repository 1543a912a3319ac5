"""Finite permutation groups with a stabilizer chain and exact structure queries.

PermGroup keeps a base / strong generating set for order and membership,
and (inside the configured element bound) a sorted element list that feeds
the brute-force machinery: conjugacy classes, centralizers, normal
closures, Sylow subgroups, quotients, abelian invariants.

All objects are immutable after construction; caches only ever fill in
values that are functions of the group itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import perm as pm
from .config import LIMITS
from .errors import CapacityError, InputError
from .perm import Perm


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: pm.identity(degree)}


class PermGroup:
    """Group generated by permutations of {0..degree-1}."""

    def __init__(self, degree: int, generators, *, name: str | None = None):
        if degree < 0:
            raise InputError("degree must be >= 0")
        self.degree = degree
        ident = pm.identity(degree)
        gens = []
        for g in generators:
            g = pm.check_perm(g, degree)
            if g != ident and g not in gens:
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self._levels: list[_Level] | None = None
        self._order: int | None = None
        self._elements: tuple[Perm, ...] | None = None
        self._element_set: frozenset[Perm] | None = None
        self._classes: list[tuple[Perm, int]] | None = None
        self._class_of: dict[Perm, int] | None = None
        self._cache: dict = {}

    # -- stabilizer chain ------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._schreier_sims()
        return self._levels

    def _schreier_sims(self) -> list[_Level]:
        degree = self.degree
        ident = pm.identity(degree)
        base: list[int] = []
        strong: list[Perm] = []
        levels: list[_Level] = []

        def rebuild() -> None:
            levels.clear()
            for l, pt in enumerate(base):
                lev = _Level(pt, degree)
                lev.gens = [s for s in strong
                            if all(s[base[m]] == base[m] for m in range(l))]
                queue = [pt]
                while queue:
                    x = queue.pop()
                    ux = lev.transversal[x]
                    for s in lev.gens:
                        y = s[x]
                        if y not in lev.transversal:
                            lev.transversal[y] = pm.mult(ux, s)
                            queue.append(y)
                levels.append(lev)

        def sift_from(g: Perm, start: int) -> tuple[Perm, int]:
            for i in range(start, len(levels)):
                lev = levels[i]
                u = lev.transversal.get(g[lev.point])
                if u is None:
                    return g, i
                g = pm.mult(g, pm.inverse(u))
            return g, len(levels)

        def add_strong(h: Perm) -> None:
            strong.append(h)
            if all(h[pt] == pt for pt in base):
                base.append(min(x for x in range(degree) if h[x] != x))
            rebuild()

        for g in self.generators:
            h, _ = sift_from(g, 0)
            if h != ident:
                add_strong(h)

        # verify the chain bottom-up: every Schreier generator must sift to
        # the identity through the deeper levels
        i = len(levels) - 1
        while i >= 0:
            lev = levels[i]
            dirty = False
            for x, ux in list(lev.transversal.items()):
                for s in lev.gens:
                    y = s[x]
                    sg = pm.mult(pm.mult(ux, s), pm.inverse(lev.transversal[y]))
                    h, j = sift_from(sg, i + 1)
                    if h != ident:
                        add_strong(h)
                        i = min(j, len(levels) - 1)
                        dirty = True
                        break
                if dirty:
                    break
            if not dirty:
                i -= 1
        return levels

    @property
    def order(self) -> int:
        if self._order is None:
            n = 1
            for lev in self._chain():
                n *= len(lev.transversal)
            self._order = n
        return self._order

    def __contains__(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        if self._element_set is not None:
            return g in self._element_set
        for lev in self._chain():
            x = g[lev.point]
            u = lev.transversal.get(x)
            if u is None:
                return False
            g = pm.mult(g, pm.inverse(u))
        return g == pm.identity(self.degree)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"PermGroup({label}, order {self.order})"

    # -- element enumeration ----------------------------------------------

    def elements(self) -> tuple[Perm, ...]:
        """All elements sorted lexicographically by image tuple."""
        if self._elements is None:
            if self.order > LIMITS.element_bound:
                raise CapacityError(
                    f"group order {self.order} exceeds element bound "
                    f"{LIMITS.element_bound}")
            part = [pm.identity(self.degree)]
            for lev in reversed(self._chain()):
                part = [pm.mult(h, u) for h in part for u in lev.transversal.values()]
            part.sort()
            self._elements = tuple(part)
            self._element_set = frozenset(part)
            if len(part) != self.order:
                raise AssertionError("stabilizer chain order mismatch")
        return self._elements

    def element_set(self) -> frozenset[Perm]:
        if self._element_set is None:
            self.elements()
        return self._element_set

    def subgroup(self, generators, *, name: str | None = None) -> "PermGroup":
        """Subgroup of self on the same points; generators are checked."""
        sub = PermGroup(self.degree, generators, name=name)
        for g in sub.generators:
            if g not in self:
                raise InputError("generator lies outside the parent group")
        return sub

    def random_elements(self, count: int, rng) -> list[Perm]:
        elems = self.elements()
        return [elems[rng.randrange(len(elems))] for _ in range(count)]

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> list[tuple[Perm, int]]:
        """(representative, size) pairs; canonical order.

        Representatives are the lexicographic minimum of each class; classes
        are sorted by (size, representative), which puts the identity first.
        """
        if self._classes is None:
            elems = self.elements()
            class_of: dict[Perm, int] = {}
            classes: list[tuple[Perm, int]] = []
            raw: list[list[Perm]] = []
            for x in elems:
                if x in class_of:
                    continue
                orbit = {x}
                queue = [x]
                while queue:
                    y = queue.pop()
                    for g in self.generators:
                        z = pm.conjugate(y, g)
                        if z not in orbit:
                            orbit.add(z)
                            queue.append(z)
                for y in orbit:
                    class_of[y] = -1
                raw.append(sorted(orbit))
            raw.sort(key=lambda orb: (len(orb), orb[0]))
            for idx, orb in enumerate(raw):
                classes.append((orb[0], len(orb)))
                for y in orb:
                    class_of[y] = idx
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, g: Perm) -> int:
        self.conjugacy_classes()
        try:
            return self._class_of[tuple(g)]
        except KeyError:
            raise InputError("element outside the group") from None

    def num_classes(self) -> int:
        return len(self.conjugacy_classes())

    def class_reps(self) -> list[Perm]:
        return [rep for rep, _ in self.conjugacy_classes()]

    def class_sizes(self) -> list[int]:
        return [size for _, size in self.conjugacy_classes()]

    def power_map(self) -> list[list[int]]:
        """power_map()[k][s] = class index of rep_k ** s, s < order(rep_k)."""
        if "power_map" not in self._cache:
            table = []
            for rep, _ in self.conjugacy_classes():
                o = pm.order(rep)
                row = []
                x = pm.identity(self.degree)
                for _ in range(o):
                    row.append(self.class_of(x))
                    x = pm.mult(x, rep)
                table.append(row)
            self._cache["power_map"] = table
        return self._cache["power_map"]

    def inverse_class_map(self) -> list[int]:
        """Class index of the inverse of each class representative."""
        if "inv_class" not in self._cache:
            self._cache["inv_class"] = [
                self.class_of(pm.inverse(rep)) for rep in self.class_reps()]
        return self._cache["inv_class"]

    def exponent(self) -> int:
        if "exponent" not in self._cache:
            e = 1
            for rep, _ in self.conjugacy_classes():
                o = pm.order(rep)
                e = e * o // gcd(e, o)
            self._cache["exponent"] = e
        return self._cache["exponent"]

    # -- predicates ---------------------------------------------------------

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(pm.mult(a, b) == pm.mult(b, a) for i, a in enumerate(gs)
                   for b in gs[i + 1:])

    def is_subset_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree and self.order == other.order
                and self.is_subset_of(other))


def centralizer(G: PermGroup, x: Perm) -> PermGroup:
    x = tuple(x)
    elems = [g for g in G.elements() if pm.mult(g, x) == pm.mult(x, g)]
    return PermGroup(G.degree, elems, name="centralizer")


def center(G: PermGroup) -> PermGroup:
    gens = G.generators
    elems = [g for g in G.elements()
             if all(pm.mult(g, h) == pm.mult(h, g) for h in gens)]
    return PermGroup(G.degree, elems, name="center")


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    hset = H.element_set()
    out = []
    for g in G.elements():
        gi = pm.inverse(g)
        if all(pm.mult(gi, pm.mult(h, g)) in hset for h in H.generators):
            out.append(g)
    return PermGroup(G.degree, out, name="normalizer")


def normal_closure(G: PermGroup, seed: list[Perm]) -> PermGroup:
    """Smallest normal subgroup of G containing the seed elements."""
    gens = [tuple(s) for s in seed if tuple(s) != pm.identity(G.degree)]
    N = PermGroup(G.degree, gens)
    while True:
        new = []
        nset = N.element_set()
        for h in N.generators:
            for g in G.generators:
                c = pm.conjugate(h, g)
                if c not in nset:
                    new.append(c)
        if not new:
            return N
        N = PermGroup(G.degree, list(N.generators) + new)


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = []
    gs = G.generators
    for a in gs:
        for b in gs:
            c = pm.mult(pm.mult(pm.inverse(a), pm.inverse(b)), pm.mult(a, b))
            comms.append(c)
    D = normal_closure(G, comms)
    D.name = "derived"
    return D


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    if G.order % p != 0:
        raise InputError(f"{p} does not divide the group order {G.order}")
    target = _p_part(G.order, p)
    P = PermGroup(G.degree, [])
    while P.order < target:
        N = normalizer(G, P) if P.order > 1 else G
        pset = P.element_set()
        grew = False
        for x in N.elements():
            o = pm.order(x)
            k = _p_part(o, p)
            if k == 1:
                continue
            y = pm.power(x, o // k)
            if y not in pset:
                P = PermGroup(G.degree, list(P.generators) + [y], name=f"sylow{p}")
                grew = True
                break
        if not grew:
            raise AssertionError("sylow construction stalled")
    return P


def core(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest normal subgroup of G contained in H (meet of all conjugates)."""
    hset = H.element_set()
    kset = set(hset)
    for g in G.elements():
        gi = pm.inverse(g)
        kset &= {pm.mult(gi, pm.mult(h, g)) for h in hset}
        if len(kset) == 1:
            break
    return PermGroup(G.degree, sorted(kset), name="core")


def p_core(G: PermGroup, p: int) -> PermGroup:
    return core(G, sylow_subgroup(G, p))


def fitting_subgroup(G: PermGroup) -> PermGroup:
    """Product of the p-cores, the largest nilpotent normal subgroup."""
    gens: list[Perm] = []
    for p in _prime_factors(G.order):
        gens.extend(p_core(G, p).generators)
    return PermGroup(G.degree, gens, name="fitting")


def minimal_normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """Minimal nontrivial normal subgroups, via closures of class reps."""
    closures: list[PermGroup] = []
    seen: set[frozenset] = set()
    for rep, _ in G.conjugacy_classes():
        if rep == pm.identity(G.degree):
            continue
        N = normal_closure(G, [rep])
        key = N.element_set()
        if key not in seen:
            seen.add(key)
            closures.append(N)
    minimal = []
    for N in closures:
        nset = N.element_set()
        if not any(M.element_set() < nset for M in closures):
            minimal.append(N)
    minimal.sort(key=lambda N: (N.order, sorted(N.element_set())))
    return minimal


def socle(G: PermGroup) -> PermGroup:
    gens: list[Perm] = []
    for N in minimal_normal_subgroups(G):
        gens.extend(N.generators)
    return PermGroup(G.degree, gens, name="socle")


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups, as joins of class-generated normal closures."""
    atoms = []
    seen: set[frozenset] = set()
    for rep, _ in G.conjugacy_classes():
        N = normal_closure(G, [rep])
        key = N.element_set()
        if key not in seen:
            seen.add(key)
            atoms.append(N)
    found: dict[frozenset, PermGroup] = {
        frozenset([pm.identity(G.degree)]): PermGroup(G.degree, [])}
    for N in atoms:
        found.setdefault(N.element_set(), N)
    while True:
        new = []
        items = list(found.values())
        for i, A in enumerate(items):
            for B in items[i + 1:]:
                if A.element_set() >= B.element_set() or A.element_set() <= B.element_set():
                    continue
                J = PermGroup(G.degree, list(A.generators) + list(B.generators))
                if J.element_set() not in found:
                    new.append(J)
        if not new:
            break
        for J in new:
            found.setdefault(J.element_set(), J)
    out = list(found.values())
    out.sort(key=lambda N: (N.order, sorted(N.element_set())))
    return out


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    hset = H.element_set()
    return all(pm.conjugate(h, g) in hset
               for h in H.generators for g in G.generators)


def quotient_group(G: PermGroup, N: PermGroup):
    """G/N as a faithful permutation group on the right cosets of N.

    Returns (quotient, project) where project maps an element of G to the
    permutation it induces on cosets.  Cosets are indexed by their minimal
    element, in sorted order, so the construction is canonical.
    """
    if not is_normal(G, N):
        raise InputError("subgroup is not normal")
    nset = N.element_set()
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in G.elements():
        if g in coset_of:
            continue
        coset = sorted(pm.mult(n, g) for n in nset)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_of[y] = idx
    # sort coset labels by representative for a canonical numbering
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    relabel = {old: new for new, old in enumerate(order)}
    coset_of = {g: relabel[i] for g, i in coset_of.items()}
    reps = [reps[i] for i in order]

    def project(x: Perm) -> Perm:
        x = tuple(x)
        if x not in coset_of:
            raise InputError("element outside the group")
        return tuple(coset_of[pm.mult(r, x)] for r in reps)

    Q = PermGroup(len(reps), [project(g) for g in G.generators],
                  name=f"{G.name}/N" if G.name else "quotient")
    return Q, project


class AbelianInvariants:
    """Invariant factors d1 | d2 | ... of H/[H,H] plus the projection map."""

    def __init__(self, factors: list[int], project):
        self.factors = factors
        self.project = project  # Perm -> tuple of exponents mod factors

    def __repr__(self):
        return f"AbelianInvariants({self.factors})"


def _smith_diagonalize(rows: list[list[int]], k: int):
    """Smith form of the lattice spanned by rows inside Z^k.

    Returns (diag, V) with V unimodular such that the lattice equals
    {y @ diag_matrix : y in Z^r} expressed in coordinates x -> x @ V.
    """
    from .linalg import lattice_row_basis, smith_normal_form

    rows = lattice_row_basis(rows)
    if not rows:
        rows = [[0] * k]
    D, _, V = smith_normal_form(rows)
    diag = [D[i][i] if i < len(D) and i < len(D[0]) else 0 for i in range(k)]
    return diag, V


def abelianization(H: PermGroup) -> AbelianInvariants:
    """Invariant factors of H/[H,H] in divisibility order, with projection."""
    D = derived_subgroup(H)
    Q, project_to_Q = quotient_group(H, D)
    gens = list(Q.generators)
    if not gens:
        return AbelianInvariants([], lambda x: ())
    k = len(gens)
    ident = pm.identity(Q.degree)
    # BFS over the abelian quotient, collecting fundamental-cycle relations
    label: dict[Perm, tuple[int, ...]] = {ident: (0,) * k}
    queue = [ident]
    relations: list[list[int]] = []
    while queue:
        x = queue.pop()
        vx = label[x]
        for i, g in enumerate(gens):
            y = pm.mult(x, g)
            vy = list(vx)
            vy[i] += 1
            if y in label:
                rel = [a - b for a, b in zip(vy, label[y])]
                if any(rel):
                    relations.append(rel)
            else:
                label[y] = tuple(vy)
                queue.append(y)
    diag, V = _smith_diagonalize(relations, k)
    factors = [d for d in diag if d != 1]
    if any(d == 0 for d in factors):
        raise AssertionError("infinite invariant factor in a finite group")
    keep = [i for i, d in enumerate(diag) if d != 1]

    def project(x: Perm) -> tuple[int, ...]:
        v = label[project_to_Q(tuple(x))]
        w = [sum(v[i] * V[i][j] for i in range(k)) for j in range(len(diag))]
        return tuple(w[j] % diag[j] for j in keep)

    return AbelianInvariants(factors, project)
