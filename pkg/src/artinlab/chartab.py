"""Exact irreducible character tables and the class-function calculus.

Tables come out of the classical modular method: eigenvectors of the class
multiplication matrices over F_p for a prime p = 1 (mod exp(G)) with
p > 2 sqrt(|G|), lifted to Q(zeta) by discrete logarithms against a fixed
primitive root.  Splitting walks the class matrices in canonical order,
which is already guaranteed to separate all characters; a seeded random
combination is kept as a fallback for defensive purposes.

Class functions are tuples of exact cyclotomic values in canonical class
order.  Inner products, induction, restriction, products, kernels and
decompositions are all exact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import perm as pm
from .cyclotomic import Cyclotomic, Q0, Q1
from .errors import InputError
from .group import PermGroup
from .numth import dixon_prime, primitive_root
from .subgroups import Subgroup

_DIXON_SEED = 0x5EED


# -- class functions ----------------------------------------------------------


class ClassFunction:
    """A cyclotomic-valued class function, values in canonical class order."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values):
        vals = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)
                     for v in values)
        if len(vals) != group.num_classes():
            raise InputError("value count does not match the class count")
        self.group = group
        self.values = vals

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group is other.group and self.values == other.values)

    def __hash__(self):
        return hash((id(self.group), tuple(v.sort_key() for v in self.values)))

    def __repr__(self):
        return f"ClassFunction({self.group.name}, {list(self.values)!r})"

    def degree(self) -> Cyclotomic:
        return self.values[0]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group,
                             [a * b for a, b in zip(self.values, other.values)])

    def scale(self, q) -> "ClassFunction":
        return ClassFunction(self.group, [v.scale(q) for v in self.values])

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def value_at(self, g) -> Cyclotomic:
        return self.values[self.group.class_of(g)]

    def _check(self, other):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise InputError("class functions live on different groups")

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)


def trivial_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [Q1] * G.num_classes())


def regular_character(G: PermGroup) -> ClassFunction:
    vals = [Q0] * G.num_classes()
    vals[0] = Fraction(G.order)
    return ClassFunction(G, vals)


def indicator_of_class(G: PermGroup, k: int) -> ClassFunction:
    vals = [Q0] * G.num_classes()
    vals[k] = Q1
    return ClassFunction(G, vals)


def inner_product(f1: ClassFunction, f2: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over G of f1 * conj(f2), exactly."""
    f1._check(f2)
    G = f1.group
    acc = Cyclotomic.rational(0)
    for (_, size), a, b in zip(G.conjugacy_classes(), f1.values, f2.values):
        acc = acc + (a * b.conjugate()).scale(size)
    return acc.scale(Fraction(1, G.order))


def restrict(f: ClassFunction, H: PermGroup) -> ClassFunction:
    """Restriction to a subgroup on the same points."""
    G = f.group
    vals = [f.values[G.class_of(rep)] for rep, _ in H.conjugacy_classes()]
    return ClassFunction(H, vals)


def _conj_profiles(G: PermGroup) -> list[list]:
    """For each class rep g: the multiset [y^-1 g y for y in G]."""
    if "conj_profiles" not in G._cache:
        elems = G.elements()
        G._cache["conj_profiles"] = [
            [pm.conjugate(rep, y) for y in elems] for rep in G.class_reps()]
    return G._cache["conj_profiles"]


def induce(H: PermGroup, psi: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induced class function: Ind(g) = (1/|H|) sum over {x : x g x^-1 in H}."""
    if psi.group is not H:
        raise InputError("psi must live on H")
    if not H.is_subset_of(G) or H.degree != G.degree:
        raise InputError("H is not a subgroup of G")
    hset = H.element_set()
    scale = Fraction(1, H.order)
    vals = []
    for prof in _conj_profiles(G):
        counts: dict[int, int] = {}
        for y in prof:
            if y in hset:
                c = H.class_of(y)
                counts[c] = counts.get(c, 0) + 1
        acc = Cyclotomic.rational(0)
        for c, n in counts.items():
            acc = acc + psi.values[c].scale(n)
        vals.append(acc.scale(scale))
    return ClassFunction(G, vals)


def calculus(f: ClassFunction, g: ClassFunction | None, op: str,
             H: PermGroup | None = None, q=None) -> ClassFunction:
    """Dispatcher: restrict_to(H), product, conjugate, add, scale(q)."""
    if op == "restrict_to":
        return restrict(f, H)
    if op == "product":
        return f * g
    if op == "conjugate":
        return f.conjugate()
    if op == "add":
        return f + g
    if op == "scale":
        return f.scale(q)
    raise InputError(f"unknown calculus op {op!r}")


# -- linear characters via abelian duality -------------------------------------


def linear_characters(H: PermGroup) -> list[ClassFunction]:
    """All degree-1 characters, through the dual of H/[H,H].

    Deterministic order: lexicographic in the dual exponent tuples, so the
    trivial character always comes first.
    """
    from itertools import product

    from .group import abelianization

    if "linear_characters" not in H._cache:
        inv = abelianization(H)
        factors = inv.factors
        lam = factors[-1] if factors else 1
        reps = H.class_reps()
        proj = [inv.project(rep) for rep in reps]
        chars = []
        for duals in product(*(range(d) for d in factors)):
            vals = []
            for pvec in proj:
                expo = sum(c * x * (lam // d)
                           for c, x, d in zip(duals, pvec, factors)) % lam
                vals.append(Cyclotomic.zeta(lam, expo) if lam > 1 else Q1)
            chars.append(ClassFunction(H, vals))
        H._cache["linear_characters"] = chars
    return H._cache["linear_characters"]


# -- the character table --------------------------------------------------------


class CharacterTable:
    def __init__(self, group: PermGroup, irreducibles: list[ClassFunction]):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = [int(ch.degree().as_rational()) for ch in irreducibles]

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i):
        return self.irreducibles[i]


def _rref_mod(rows: list[list[int]], p: int):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _charpoly_mod(T: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial over F_p via the Hessenberg recurrence."""
    n = len(T)
    H = [[x % p for x in row] for row in T]
    # reduce to upper Hessenberg with row/column operations
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if H[r][c] % p), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[c + 1], H[piv] = H[piv], H[c + 1]
            for r in range(n):
                H[r][c + 1], H[r][piv] = H[r][piv], H[r][c + 1]
        inv = pow(H[c + 1][c], p - 2, p)
        for r in range(c + 2, n):
            f = (H[r][c] * inv) % p
            if f:
                H[r] = [(x - f * y) % p for x, y in zip(H[r], H[c + 1])]
                for i in range(n):
                    H[i][c + 1] = (H[i][c + 1] + f * H[i][r]) % p
    # charpoly recurrence on the Hessenberg form
    polys = [[1]]  # charpoly of the top-left 0x0 block
    for k in range(1, n + 1):
        poly = [0] + polys[k - 1]  # x * p_{k-1}
        diag = H[k - 1][k - 1]
        poly = [(a - diag * b) % p for a, b in zip(poly, polys[k - 1] + [0])]
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * H[i][i - 1]) % p
            coeff = (prod * H[i - 1][k - 1]) % p
            if coeff:
                poly = [(a - coeff * b) % p
                        for a, b in zip(poly, polys[i - 1] + [0] * (k - i + 1))]
        polys.append(poly)
    return polys[n]


def _poly_roots_mod(poly: list[int], p: int) -> list[int]:
    return [x for x in range(p)
            if sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0]


def _nullspace_mod(M: list[list[int]], p: int) -> list[list[int]]:
    n = len(M)
    rows, pivots = _rref_mod(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, c in zip(range(len(rows)), pivots):
            v[c] = (-rows[r][fc]) % p
        basis.append(v)
    return basis


class _Space:
    """An invariant subspace of F_p^m with an echelonized basis."""

    __slots__ = ("basis", "pivots")

    def __init__(self, basis, pivots):
        self.basis = basis
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.basis)


def _split_space(space: _Space, mat, p: int) -> list[_Space]:
    """Refine an invariant subspace into eigenspaces of mat (acting on it)."""
    r = space.dim
    images = []
    for b in space.basis:
        img = [sum(mat[j][k] * b[k] for k in range(len(b))) % p
               for j in range(len(b))]
        images.append(img)
    # coordinates of each image in the echelon basis via pivot columns
    T = [[img[c] % p for c in space.pivots] for img in images]
    poly = _charpoly_mod(T, p)
    spaces = []
    for lam in _poly_roots_mod(poly, p):
        TT = [[(T[j][i] - (lam if i == j else 0)) % p for j in range(r)]
              for i in range(r)]
        chunk = []
        for y in _nullspace_mod(TT, p):
            vec = [0] * len(space.basis[0])
            for a, ya in enumerate(y):
                if ya:
                    for k, bk in enumerate(space.basis[a]):
                        vec[k] = (vec[k] + ya * bk) % p
            chunk.append(vec)
        basis, pivots = _rref_mod(chunk, p)
        spaces.append(_Space(basis, pivots))
    return spaces


def _class_matrices(G: PermGroup) -> list[list[list[int]]]:
    m = G.num_classes()
    reps = G.class_reps()
    elems = G.elements()
    by_class: list[list] = [[] for _ in range(m)]
    for x in elems:
        by_class[G.class_of(x)].append(x)
    mats = []
    for i in range(m):
        a = [[0] * m for _ in range(m)]
        for x in by_class[i]:
            xi = pm.inverse(x)
            for k, rep in enumerate(reps):
                j = G.class_of(pm.mult(xi, rep))
                a[j][k] += 1
        mats.append(a)
    return mats


def character_table(G: PermGroup) -> CharacterTable:
    """All irreducible characters with exact cyclotomic values."""
    if "character_table" in G._cache:
        return G._cache["character_table"]
    m = G.num_classes()
    e = G.exponent()
    p = dixon_prime(e, G.order)
    mats = _class_matrices(G)

    # split F_p^m into the joint eigenspaces of the class matrices
    full = _Space(*_rref_mod([[1 if i == j else 0 for j in range(m)]
                              for i in range(m)], p))
    spaces = [full]
    for mat in mats[1:]:
        nxt = []
        for sp in spaces:
            nxt.extend(_split_space(sp, mat, p) if sp.dim > 1 else [sp])
        spaces = nxt
        if all(sp.dim == 1 for sp in spaces):
            break
    if not all(sp.dim == 1 for sp in spaces):
        rng = random.Random(_DIXON_SEED)
        for _ in range(64):
            coeffs = [rng.randrange(p) for _ in range(m)]
            combo = [[sum(c * mat[i][j] for c, mat in zip(coeffs, mats)) % p
                      for j in range(m)] for i in range(m)]
            nxt = []
            for sp in spaces:
                nxt.extend(_split_space(sp, combo, p) if sp.dim > 1 else [sp])
            spaces = nxt
            if all(sp.dim == 1 for sp in spaces):
                break
    if len(spaces) != m or not all(sp.dim == 1 for sp in spaces):
        raise AssertionError("class algebra failed to split")

    sizes = G.class_sizes()
    inv_class = G.inverse_class_map()
    pw = G.power_map()
    reps = G.class_reps()
    z = pow(primitive_root(p), (p - 1) // e, p) if e > 1 else 1

    chars = []
    for sp in spaces:
        w = sp.basis[0]
        w0inv = pow(w[0], p - 2, p)
        omega = [(x * w0inv) % p for x in w]
        s = sum(omega[j] * omega[inv_class[j]] * pow(sizes[j], p - 2, p)
                for j in range(m)) % p
        d2 = (G.order * pow(s, p - 2, p)) % p
        d = next(dd for dd in range(1, G.order + 1) if (dd * dd - d2) % p == 0)
        chi_mod = [(d * omega[j] * pow(sizes[j], p - 2, p)) % p for j in range(m)]
        values = []
        for j in range(m):
            ej = pm.order(reps[j])
            if ej == 1:
                values.append(Cyclotomic.rational(d))
                continue
            zj = pow(z, e // ej, p)
            ej_inv = pow(ej, p - 2, p)
            powers = {}
            for t in range(ej):
                mt = 0
                for s_ in range(ej):
                    mt += chi_mod[pw[j][s_]] * pow(zj, (-t * s_) % ej, p)
                mt = (mt * ej_inv) % p
                if mt:
                    if mt > d:
                        raise AssertionError("bad root-of-unity multiplicity")
                    powers[t] = mt
            values.append(Cyclotomic.from_powers(ej, powers))
        chars.append(ClassFunction(G, values))

    triv = trivial_character(G)
    rest = [c for c in chars if c != triv]
    rest.sort(key=lambda c: (int(c.degree().as_rational()), c.sort_key()))
    table = CharacterTable(G, [triv] + rest)
    if sum(dd * dd for dd in table.degrees) != G.order:
        raise AssertionError("degree check failed")
    G._cache["character_table"] = table
    return table


# -- decomposition and kernels ---------------------------------------------------


def decompose(f: ClassFunction, table: CharacterTable) -> list[tuple[int, Cyclotomic]]:
    """Exact multiplicities m_i = <f, chi_i>; f = sum m_i chi_i."""
    if f.group is not table.group:
        raise InputError("class function and table live on different groups")
    out = []
    for i, chi in enumerate(table.irreducibles):
        mi = inner_product(f, chi)
        if not mi.is_zero():
            out.append((i, mi))
    return out


def is_character(f: ClassFunction, table: CharacterTable) -> bool:
    """Nonzero with nonnegative integer multiplicities on irreducibles."""
    if f.is_zero():
        return False
    for _, mi in decompose(f, table):
        if not mi.is_integerlike() or mi.as_rational() < 0:
            return False
    return True


def kernel_and_faithful(chi: ClassFunction) -> tuple[Subgroup, bool]:
    """Kernel as a subgroup (union of classes where chi = chi(1)); faithfulness."""
    G = chi.group
    table = character_table(G)
    if not is_character(chi, table):
        raise InputError("not a character")
    deg = chi.degree()
    members: list = []
    for k, (rep, _) in enumerate(G.conjugacy_classes()):
        if chi.values[k] == deg:
            members.extend(_class_elements(G)[k])
    K = PermGroup(G.degree, members, name="kernel")
    return Subgroup(G, K), K.order == 1


def _class_elements(G: PermGroup) -> list[list]:
    if "class_elements" not in G._cache:
        buckets: list[list] = [[] for _ in range(G.num_classes())]
        for x in G.elements():
            buckets[G.class_of(x)].append(x)
        G._cache["class_elements"] = buckets
    return G._cache["class_elements"]


def kernel_class_indices(chi: ClassFunction) -> list[int]:
    deg = chi.degree()
    return [k for k, v in enumerate(chi.values) if v == deg]
