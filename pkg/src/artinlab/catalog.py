"""Named group constructors, the group-spec mini-language, and the catalog.

Spec strings look like "Sym(5)", "Dih(10)", "Q8xCyc(3)": a named family,
optionally joined by "x" for direct products acting on disjoint points.
Generators may also be given directly in cycle notation, separated by
semicolons, e.g. "(1 2 3); (1 2)".
"""

from __future__ import annotations

import re

from . import perm as pm
from .errors import InputError
from .group import PermGroup


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InputError("Cyc(n) needs n >= 1")
    gens = [] if n == 1 else [tuple(list(range(1, n)) + [0])]
    return PermGroup(n, gens, name=f"Cyc({n})")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise InputError("Sym(n) needs n >= 1")
    gens = []
    if n >= 2:
        gens.append(pm.parse_perm("(1 2)", n))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, name=f"Sym({n})")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise InputError("Alt(n) needs n >= 1")
    gens = []
    if n >= 3:
        gens.append(pm.parse_perm("(1 2 3)", n))
    if n >= 4:
        if n % 2 == 1:
            gens.append(tuple(list(range(1, n)) + [0]))
        else:
            cyc = "(" + " ".join(str(i) for i in range(2, n + 1)) + ")"
            gens.append(pm.parse_perm(cyc, n))
    return PermGroup(n, gens, name=f"Alt({n})")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n. Dih(1) = C2 and Dih(2) = C2 x C2."""
    if n < 1:
        raise InputError("Dih(n) needs n >= 1")
    if n == 1:
        return PermGroup(2, [(1, 0)], name="Dih(1)")
    if n == 2:
        return PermGroup(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="Dih(2)")
    rot = tuple(list(range(1, n)) + [0])
    refl = tuple((n - i) % n for i in range(n))
    return PermGroup(n, [rot, refl], name=f"Dih({n})")


def dicyclic(n: int) -> PermGroup:
    """Dicyclic group of order 4n in its regular representation.

    Presentation <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>; n = 2
    gives the quaternion group Q8, n = 4 gives Q16.
    """
    if n < 1:
        raise InputError("dicyclic(n) needs n >= 1")
    m = 2 * n
    # elements: a^i (index i) and a^i b (index m + i)
    def right_by_a(idx):
        if idx < m:
            return (idx + 1) % m
        return m + (idx - m - 1) % m      # (a^i b) a = a^(i-1) b
    def right_by_b(idx):
        if idx < m:
            return m + idx                # a^i b
        return (idx - m + n) % m          # (a^i b) b = a^(i+n)
    a = tuple(right_by_a(i) for i in range(2 * m))
    b = tuple(right_by_b(i) for i in range(2 * m))
    name = {2: "Q8", 4: "Q16"}.get(n, f"Dic({n})")
    return PermGroup(2 * m, [a, b], name=name)


def quaternion8() -> PermGroup:
    return dicyclic(2)


def quaternion16() -> PermGroup:
    return dicyclic(4)


def sl23() -> PermGroup:
    """SL(2,3) of order 24 acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}
    def act(mat):
        return tuple(idx[((mat[0][0] * v[0] + mat[0][1] * v[1]) % 3,
                          (mat[1][0] * v[0] + mat[1][1] * v[1]) % 3)]
                     for v in vecs)
    g1 = act(((1, 1), (0, 1)))
    g2 = act(((0, 2), (1, 0)))
    return PermGroup(8, [g1, g2], name="SL23")


def frobenius21() -> PermGroup:
    """C7 : C3 of order 21 on 7 points, x -> x+1 and x -> 2x mod 7."""
    t = tuple((i + 1) % 7 for i in range(7))
    s = tuple((2 * i) % 7 for i in range(7))
    return PermGroup(7, [t, s], name="F21")


def direct_product(G: PermGroup, H: PermGroup, name: str | None = None) -> PermGroup:
    n, m = G.degree, H.degree
    gens = [tuple(list(g) + [n + i for i in range(m)]) for g in G.generators]
    gens += [tuple(list(range(n)) + [n + h[i] for i in range(m)]) for h in H.generators]
    return PermGroup(n + m, gens, name=name or f"{G.name}x{H.name}")


_FAMILY_RE = re.compile(r"^(sym|alt|cyc|dih|dic)\((\d+)\)$")
_PLAIN = {
    "q8": quaternion8,
    "q16": quaternion16,
    "sl23": sl23,
    "f21": frobenius21,
}


def _parse_atom(token: str) -> PermGroup:
    t = token.strip().lower()
    if t in _PLAIN:
        return _PLAIN[t]()
    m = _FAMILY_RE.match(t)
    if m:
        fam, n = m.group(1), int(m.group(2))
        return {"sym": symmetric, "alt": alternating, "cyc": cyclic,
                "dih": dihedral, "dic": dicyclic}[fam](n)
    raise InputError(f"unknown group spec {token!r}")


def parse_group_spec(spec: str) -> PermGroup:
    """Parse "Sym(3)", "Q8xCyc(3)", or raw cycle generators "(1 2 3); (1 2)"."""
    s = spec.strip()
    if s.startswith("("):
        parts = [p for p in s.split(";") if p.strip()]
        perms = [pm.parse_perm(p) for p in parts]
        degree = max((len(p) for p in perms), default=1)
        perms = [tuple(list(p) + list(range(len(p), degree))) for p in perms]
        return PermGroup(degree, perms, name=spec)
    atoms = [a for a in re.split(r"x(?![^(]*\))", s, flags=re.IGNORECASE) if a.strip()]
    if not atoms:
        raise InputError(f"empty group spec {spec!r}")
    grp = _parse_atom(atoms[0])
    for a in atoms[1:]:
        grp = direct_product(grp, _parse_atom(a))
    return grp


def acceptance_catalog() -> list[tuple[str, PermGroup]]:
    """The named groups every acceptance criterion quantifies over."""
    cat: list[tuple[str, PermGroup]] = []
    for n in range(1, 31):
        cat.append((f"Cyc({n})", cyclic(n)))
    for n in range(1, 21):
        cat.append((f"Dih({n})", dihedral(n)))
    for n in range(2, 6):
        cat.append((f"Sym({n})", symmetric(n)))
    for n in range(3, 6):
        cat.append((f"Alt({n})", alternating(n)))
    cat.append(("Q8", quaternion8()))
    cat.append(("Q16", quaternion16()))
    cat.append(("SL23", sl23()))
    cat.append(("F21", frobenius21()))
    cat.append(("Cyc(3)xSym(3)", direct_product(cyclic(3), symmetric(3))))
    cat.append(("Q8xCyc(3)", direct_product(quaternion8(), cyclic(3))))
    return cat
