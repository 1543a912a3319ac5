"""Rational certificates expressing characters through induced linear characters.

This is the heart of the library: monomial catalogs per subgroup family,
span comparisons between the constrained class-function space R and the
induced span I, exact certificate solving with pointwise re-verification,
integral certificate probes, bounded-coefficient certificates for the
faithful span, Mackey product decompositions, and class-indicator
decompositions with a certified l1 bound.

Solving happens in irreducible-multiplicity coordinates: every spanning
vector is a character, so its coordinate vector is integral and ranks over
Q agree with ranks over C.  Emitted certificates are re-verified pointwise
with exact cyclotomic arithmetic, independent of the solver path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import perm as pm
from .bulk import multiplicity_vector
from .chartab import (ClassFunction, character_table, decompose,
                      inner_product, kernel_class_indices, _class_elements,
                      _conj_profiles)
from .cyclotomic import Cyclotomic
from .errors import FalsificationError, InputError
from .group import PermGroup, abelianization, minimal_normal_subgroups
from .intervals import certified_leq, cyclotomic_enclosure, ival
from .linalg import integer_rank, invert_integer_matrix, solve_columns, solve_integer
from .subgroups import Subgroup, subgroups_up_to_conjugacy

FAMILIES = ("all", "cyclic", "nilpotent", "elementary", "elementary_rank_le_2")


@dataclass(frozen=True)
class MonomialCharacter:
    """Ind_H^G psi for a linear character psi of H, with cached data."""
    subgroup: Subgroup
    psi: ClassFunction
    induced: ClassFunction
    multiplicities: tuple[Fraction, ...]
    psi_kernel: frozenset
    faithful: bool
    label: str

    @property
    def degree(self) -> int:
        return int(self.induced.degree().as_rational())

    def kernel_condition(self, n_set: frozenset) -> bool:
        """True iff (N meet H) is NOT inside ker psi."""
        hset = self.subgroup.group.element_set()
        return not ((n_set & hset) <= self.psi_kernel)


@dataclass
class InductionCertificate:
    target: ClassFunction
    terms: list[tuple[MonomialCharacter, Fraction]]
    family: str
    normals: list[PermGroup]
    verified: bool = False

    def combination(self) -> ClassFunction:
        G = self.target.group
        acc = ClassFunction(G, [0] * G.num_classes())
        for mono, coeff in self.terms:
            acc = acc + mono.induced.scale(coeff)
        return acc

    def verify_pointwise(self) -> bool:
        """Exact re-check of the linear identity, independent of the solver."""
        ok = self.combination() == self.target
        self.verified = ok
        return ok

    def max_abs_coefficient(self) -> Fraction:
        return max((abs(c) for _, c in self.terms), default=Fraction(0))


@dataclass
class SpaceBasis:
    group: PermGroup
    normals: list[PermGroup]
    family: str
    r_indices: list[int]
    generators: list[MonomialCharacter]
    i_rank: int
    equal: bool
    pushforward_ok: bool


# -- linear character exponent tables ------------------------------------------


def _linear_exponent_data(H: PermGroup):
    """(lam, dual tuples, element -> exponent dicts), canonical order.

    Mirrors linear_characters(H): psi(x) = zeta_lam ^ expo[x].
    """
    if "linear_expo" in H._cache:
        return H._cache["linear_expo"]
    inv = abelianization(H)
    factors = inv.factors
    lam = factors[-1] if factors else 1
    elems = H.elements()
    proj = {x: inv.project(x) for x in elems}
    duals = list(product(*(range(d) for d in factors)))
    tables = []
    for dual in duals:
        expo = {x: sum(c * v * (lam // d)
                       for c, v, d in zip(dual, proj[x], factors)) % lam
                for x in elems}
        tables.append(expo)
    H._cache["linear_expo"] = (lam, duals, tables)
    return H._cache["linear_expo"]


def _induce_linear(G: PermGroup, H: PermGroup, expo: dict, lam: int) -> ClassFunction:
    """Frobenius induction of zeta_lam^expo from H, by exponent counting."""
    scale = Fraction(1, H.order)
    vals = []
    for prof in _conj_profiles(G):
        counts = [0] * lam
        for y in prof:
            ex = expo.get(y)
            if ex is not None:
                counts[ex] += 1
        vals.append(Cyclotomic.from_powers(lam, counts).scale(scale))
    return ClassFunction(G, vals)


# -- monomial catalogs ------------------------------------------------------------


def _faithful_irreducible_indices(G: PermGroup) -> list[int]:
    if "faithful_irr" not in G._cache:
        table = character_table(G)
        mins = minimal_normal_subgroups(G)
        out = []
        for i, chi in enumerate(table.irreducibles):
            ker = _kernel_set(G, chi)
            if all(not (N.element_set() <= ker) for N in mins):
                out.append(i)
        G._cache["faithful_irr"] = out
    return G._cache["faithful_irr"]


def _kernel_set(G: PermGroup, chi: ClassFunction) -> frozenset:
    elems = []
    buckets = _class_elements(G)
    for k in kernel_class_indices(chi):
        elems.extend(buckets[k])
    return frozenset(elems)


def _irreducible_kernel_sets(G: PermGroup) -> list[frozenset]:
    if "irr_kernels" not in G._cache:
        table = character_table(G)
        G._cache["irr_kernels"] = [_kernel_set(G, chi) for chi in table.irreducibles]
    return G._cache["irr_kernels"]


def monomial_catalog(G: PermGroup, family: str) -> list[MonomialCharacter]:
    """All Ind_H^G psi over the family's subgroup classes, canonical order."""
    key = ("monomials", family)
    if key in G._cache:
        return G._cache[key]
    if family not in FAMILIES:
        raise InputError(f"unknown subgroup family {family!r}")
    table = character_table(G)
    mins = minimal_normal_subgroups(G)
    min_sets = [N.element_set() for N in mins]
    irr_kernels = _irreducible_kernel_sets(G)
    out = []
    for sub in subgroups_up_to_conjugacy(G, family):
        H = sub.group
        lam, duals, tables = _linear_exponent_data(H)
        for dual, expo in zip(duals, tables):
            ind = _induce_linear(G, H, expo, lam)
            mults = tuple(multiplicity_vector(G, ind.values, H.order))
            psi_vals = [Cyclotomic.zeta(lam, expo[rep]) if lam > 1 else
                        Cyclotomic.rational(1) for rep in H.class_reps()]
            psi = ClassFunction(H, psi_vals)
            ker = frozenset(x for x, ex in expo.items() if ex == 0)
            # faithfulness filter: quantify over minimal normals only
            hset = H.element_set()
            faithful = all(not ((ns & hset) <= ker) for ns in min_sets)
            label = f"H=<{', '.join(pm.cycle_str(g) for g in H.generators) or 'e'}>; psi#{'.'.join(map(str, dual)) or '0'}"
            out.append(MonomialCharacter(sub, psi, ind, mults, ker, faithful, label))
    G._cache[key] = out
    return out


def faithful_monomials(G: PermGroup) -> list[MonomialCharacter]:
    """Faithful nilpotent-induced monomials, one per distinct induced character.

    A monomial qualifies iff its induced character has only faithful
    irreducible constituents, equivalently iff H meets every minimal normal
    subgroup outside ker psi; both tests are applied and must agree.
    """
    key = "faithful_monomials"
    if key in G._cache:
        return G._cache[key]
    faithful_idx = set(_faithful_irreducible_indices(G))
    seen = set()
    out = []
    for mono in monomial_catalog(G, "nilpotent"):
        support_faithful = all(
            i in faithful_idx for i, c in enumerate(mono.multiplicities) if c)
        if support_faithful != mono.faithful:
            raise FalsificationError(
                "kernel-condition filter disagrees with constituent filter",
                {"group": G.name, "monomial": mono.label})
        if not mono.faithful:
            continue
        if mono.multiplicities in seen:
            continue
        seen.add(mono.multiplicities)
        out.append(mono)
    G._cache[key] = out
    return out


# -- spaces R and I ------------------------------------------------------------------


def r_space_indices(G: PermGroup, normals: list[PermGroup]) -> list[int]:
    """Irreducibles whose kernel contains none of the given normal subgroups."""
    kernels = _irreducible_kernel_sets(G)
    out = []
    for i, ker in enumerate(kernels):
        if all(not (N.element_set() <= ker) for N in normals):
            out.append(i)
    return out


def qualifying_monomials(G: PermGroup, family: str,
                         normals: list[PermGroup]) -> list[MonomialCharacter]:
    nsets = [N.element_set() for N in normals]
    return [mono for mono in monomial_catalog(G, family)
            if all(mono.kernel_condition(ns) for ns in nsets)]


def _pushforward_vanishes(G: PermGroup, chi: ClassFunction, N: PermGroup) -> bool:
    """Direct check: the sum of chi over every coset of N is zero."""
    nset = N.element_set()
    seen: set = set()
    for g in G.elements():
        if g in seen:
            continue
        coset = {pm.mult(n, g) for n in nset}
        seen |= coset
        acc = Cyclotomic.rational(0)
        for y in coset:
            acc = acc + chi.values[G.class_of(y)]
        if not acc.is_zero():
            return False
    return True


def verify_spaces(G: PermGroup, normals: list[PermGroup],
                  family: str = "nilpotent") -> SpaceBasis:
    """Compare dim R(G; normals) with the rank of the qualifying induced span.

    Also cross-checks membership I <= R and, for each R-basis element, that
    its pushforward to each G/N vanishes coset by coset.
    """
    r_idx = r_space_indices(G, normals)
    gens = qualifying_monomials(G, family, normals)
    r_set = set(r_idx)
    for mono in gens:
        support = {i for i, c in enumerate(mono.multiplicities) if c}
        if not support <= r_set:
            raise FalsificationError(
                "qualifying induced character leaves the constrained space",
                {"group": G.name, "monomial": mono.label,
                 "support": sorted(support), "r_indices": r_idx})
    rows = [[int(c) for c in mono.multiplicities] for mono in gens]
    rank = integer_rank(rows) if rows else 0
    table = character_table(G)
    push_ok = all(_pushforward_vanishes(G, table.irreducibles[i], N)
                  for i in r_idx for N in normals)
    return SpaceBasis(G, normals, family, r_idx, gens, rank,
                      rank == len(r_idx), push_ok)


# -- certificates ---------------------------------------------------------------------


def _rational_multiplicities(G: PermGroup, chi: ClassFunction) -> list[Fraction]:
    table = character_table(G)
    out = []
    for i, irr in enumerate(table.irreducibles):
        mi = inner_product(chi, irr)
        if not mi.is_rational():
            raise InputError("target has irrational multiplicities; "
                             "no rational certificate can exist")
        out.append(mi.as_rational())
    return out


def certificate_solve(G: PermGroup, chi: ClassFunction, family: str = "nilpotent",
                      normals: list[PermGroup] | None = None) -> InductionCertificate:
    """Express chi exactly over the qualifying monomials of the family.

    Raises InputError when chi is outside R(G; normals), and
    FalsificationError when chi is in R but outside the induced span; the
    latter would falsify the theorem backing the family and is never
    swallowed.  The returned certificate has been re-verified pointwise.
    """
    if normals is None:
        normals = minimal_normal_subgroups(G)
    mults = _rational_multiplicities(G, chi)
    r_idx = r_space_indices(G, normals)
    outside = [i for i, c in enumerate(mults) if c and i not in r_idx]
    if outside:
        raise InputError(
            f"target lies outside R(G; normals): support hits {outside}")
    gens = qualifying_monomials(G, family, normals)
    columns = [[int(c) for c in mono.multiplicities] for mono in gens]
    # greedy sparse preference: fewest constituents, then least total
    # multiplicity, then canonical monomial order
    order = sorted(range(len(gens)),
                   key=lambda j: (sum(1 for c in columns[j] if c),
                                  sum(abs(c) for c in columns[j]), j))
    sol = solve_columns(columns, mults, order) if gens else None
    if sol is None:
        raise FalsificationError(
            "no rational certificate over the qualifying monomials",
            {"group": G.name, "family": family,
             "normals": [N.order for N in normals],
             "rank": integer_rank(columns) if columns else 0,
             "dim_R": len(r_idx)})
    terms = [(gens[j], sol[j]) for j in range(len(gens)) if sol[j]]
    cert = InductionCertificate(chi, terms, family, list(normals))
    if not cert.verify_pointwise():
        raise FalsificationError(
            "certificate failed exact pointwise re-verification",
            {"group": G.name, "family": family})
    return cert


def z_certificate_search(G: PermGroup, chi: ClassFunction,
                         height_bound: int = 10 ** 6):
    """Integral certificate over the faithful monomials, or a definite verdict.

    Smith-form elimination decides solvability exactly; the height bound
    only gates what is reported as found.  Returns (certificate | None,
    verdict string).
    """
    table = character_table(G)
    faithful_idx = _faithful_irreducible_indices(G)
    mults = _rational_multiplicities(G, chi)
    if any(c.denominator != 1 for c in mults):
        raise InputError("integral search needs an integral character")
    support = [i for i, c in enumerate(mults) if c]
    if not support or any(i not in faithful_idx for i in support):
        raise InputError("target must be a faithful character")
    gens = faithful_monomials(G)
    columns = [[int(c) for c in mono.multiplicities] for mono in gens]
    target = [int(c) for c in mults]
    sol = solve_integer(columns, target)
    if sol is None:
        return None, "no integral solution over faithful nilpotent monomials"
    if any(abs(x) > height_bound for x in sol):
        return None, f"integral solution exceeds height bound {height_bound}"
    terms = [(gens[j], Fraction(sol[j])) for j in range(len(gens)) if sol[j]]
    cert = InductionCertificate(chi, terms, "nilpotent",
                                minimal_normal_subgroups(G))
    if not cert.verify_pointwise():
        raise FalsificationError("integral certificate failed re-verification",
                                 {"group": G.name})
    return cert, "integral certificate found"


@dataclass
class BoundedCertificateReport:
    group: PermGroup
    d: int
    m: int
    selection: list[MonomialCharacter]
    matrix: list[list[int]]
    certificates: list[InductionCertificate]
    entry_bound_ok: bool      # |<phi_i, chi_j>| <= sqrt(d)
    coeff_bound_ok: bool      # |a_i| <= d^(3(d-1)/2)
    degree_bound_ok: bool     # deg phi_i <= d/2
    count_bound_ok: bool      # m <= d


def lemma61_certificate(G: PermGroup) -> BoundedCertificateReport:
    """Bounded certificates for every faithful irreducible, via an exact
    inverse of a spanning integer matrix of faithful monomials.

    Selection is greedy in canonical order; coefficients are exact and the
    stated magnitude bounds are checked by exact rational comparison.
    """
    if G.is_trivial():
        raise InputError("group must be nontrivial")
    d = G.order
    table = character_table(G)
    faithful_idx = _faithful_irreducible_indices(G)
    m = len(faithful_idx)
    if m == 0:
        raise InputError("no faithful irreducible characters")
    gens = faithful_monomials(G)
    # greedy spanning selection over the faithful coordinates, preferring
    # monomials with few constituents and small total multiplicity
    ranked = sorted(
        gens, key=lambda mono: (sum(1 for c in mono.multiplicities if c),
                                sum(abs(c) for c in mono.multiplicities),
                                gens.index(mono)))
    chosen: list[MonomialCharacter] = []
    rows: list[list[int]] = []
    for mono in ranked:
        row = [int(mono.multiplicities[i]) for i in faithful_idx]
        if integer_rank(rows + [row]) > len(rows):
            chosen.append(mono)
            rows.append(row)
        if len(rows) == m:
            break
    if len(rows) < m:
        raise FalsificationError(
            "faithful monomials fail to span the faithful character space",
            {"group": G.name, "rank": len(rows), "needed": m})
    entry_ok = all(a * a <= d for row in rows for a in row)
    inv = invert_integer_matrix(rows)
    certs = []
    coeff_ok = True
    bound_sq = Fraction(d) ** (3 * (d - 1))
    for j, irr_index in enumerate(faithful_idx):
        chi = table.irreducibles[irr_index]
        coeffs = [inv[j][i] for i in range(m)]
        terms = [(chosen[i], coeffs[i]) for i in range(m) if coeffs[i]]
        cert = InductionCertificate(chi, terms, "nilpotent",
                                    minimal_normal_subgroups(G))
        if not cert.verify_pointwise():
            raise FalsificationError("bounded certificate failed re-verification",
                                     {"group": G.name, "chi": irr_index})
        if any(c * c > bound_sq for c in coeffs):
            coeff_ok = False
        certs.append(cert)
    degree_ok = all(2 * mono.degree <= d for mono in chosen)
    return BoundedCertificateReport(G, d, m, chosen, rows, certs, entry_ok,
                                    coeff_ok, degree_ok, m <= d)


# -- Mackey decomposition ----------------------------------------------------------


def _double_cosets(G: PermGroup, A: PermGroup, B: PermGroup) -> list:
    """Representatives (lex-min) of the double cosets A tau B."""
    seen: set = set()
    reps = []
    for x in G.elements():
        if x in seen:
            continue
        coset = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for a in A.generators:
                z = pm.mult(a, y)
                if z not in coset:
                    coset.add(z)
                    frontier.append(z)
            for b in B.generators:
                z = pm.mult(y, b)
                if z not in coset:
                    coset.add(z)
                    frontier.append(z)
        seen |= coset
        reps.append(min(coset))
    return reps


def mackey_decompose(phi1: MonomialCharacter, phi2: MonomialCharacter,
                     G: PermGroup) -> list[tuple[Subgroup, ClassFunction]]:
    """Decompose the product of two monomial characters as a sum of inductions.

    Terms are Ind over H_tau = H1 meet tau^-1 H2 tau of res(psi1) * res(psi2^tau),
    tau over H2 \\ G / H1 double cosets.  The sum equals phi1 * phi2 pointwise.
    """
    H1 = phi1.subgroup.group
    H2 = phi2.subgroup.group
    terms = []
    for tau in _double_cosets(G, H2, H1):
        taui = pm.inverse(tau)
        h1set = H1.element_set()
        inter = [x for x in H2.element_set()
                 if pm.mult(taui, pm.mult(x, tau)) in h1set]
        # H_tau = H1 meet tau^-1 H2 tau, realized inside G
        hterm = PermGroup(G.degree,
                          sorted(pm.mult(taui, pm.mult(x, tau)) for x in inter))
        vals = []
        for rep, _ in hterm.conjugacy_classes():
            v1 = phi1.psi.value_at(rep)
            v2 = phi2.psi.value_at(pm.mult(tau, pm.mult(rep, taui)))
            vals.append(v1 * v2)
        terms.append((Subgroup(G, hterm), ClassFunction(hterm, vals)))
    return terms


def mackey_verify(phi1: MonomialCharacter, phi2: MonomialCharacter,
                  G: PermGroup) -> bool:
    """Pointwise product identity plus degree additivity, all exact."""
    from .chartab import induce

    terms = mackey_decompose(phi1, phi2, G)
    total = ClassFunction(G, [0] * G.num_classes())
    deg_sum = 0
    for sub, psi in terms:
        total = total + induce(sub.group, psi, G)
        deg_sum += G.order // sub.group.order
    product_char = phi1.induced * phi2.induced
    if deg_sum != phi1.degree * phi2.degree:
        return False
    return total == product_char


# -- class-indicator decomposition ----------------------------------------------------


@dataclass
class IndicatorDecomposition:
    group: PermGroup
    class_index: int
    coefficients: list[Cyclotomic]
    l1_upper: float
    certified: bool


def class_indicator_decomposition(G: PermGroup, class_index: int,
                                  tolerance: float = 1e-12) -> IndicatorDecomposition:
    """Indicator of a class over the irreducibles: a_i = (|C|/|G|) conj(chi_i(c)).

    The l1 mass of the coefficients is certified to be at most 1 + tolerance
    with interval arithmetic (the exact arithmetic supplies the a_i).
    """
    table = character_table(G)
    m = G.num_classes()
    if not 0 <= class_index < m:
        raise InputError("bad class index")
    sizes = G.class_sizes()
    w = Fraction(sizes[class_index], G.order)
    coeffs = [chi.values[class_index].conjugate().scale(w)
              for chi in table.irreducibles]
    # exact identity check: sum a_i chi_i equals the indicator function
    from .chartab import indicator_of_class
    acc_vals = []
    for k in range(m):
        s = Cyclotomic.rational(0)
        for a, chi in zip(coeffs, table.irreducibles):
            s = s + a * chi.values[k]
        acc_vals.append(s)
    if ClassFunction(G, acc_vals) != indicator_of_class(G, class_index):
        raise FalsificationError("indicator decomposition identity failed",
                                 {"group": G.name, "class": class_index})
    total = ival(0)
    for a in coeffs:
        total = total + cyclotomic_enclosure(a, 20).abs()
    bound = ival(1) + ival(tolerance)
    return IndicatorDecomposition(G, class_index, coeffs,
                                  float(total.b), certified_leq(total, bound))
