"""Independent brute-force oracles used to freeze expected test values.

Nothing here touches the library's stabilizer-chain or solver paths: closure
is plain breadth-first multiplication, so these stay valid as cross-checks.
"""

from __future__ import annotations

from itertools import product


def mult(p, q):
    return tuple(q[i] for i in p)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def closure(degree, gens):
    """All elements of <gens> by breadth-first multiplication."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mult(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def conjugacy_classes(degree, gens):
    """Class partition via full-orbit conjugation over all elements."""
    elems = sorted(closure(degree, gens))
    seen = set()
    classes = []
    for x in elems:
        if x in seen:
            continue
        orbit = {mult(mult(inverse(g), x), g) for g in elems}
        seen |= orbit
        classes.append(sorted(orbit))
    classes.sort(key=lambda orb: (len(orb), orb[0]))
    return classes


def all_subgroup_sets(degree, gens):
    """Every subgroup (as a frozenset), by closing all generated subsets.

    Exponential; only for very small groups in tests.
    """
    elems = sorted(closure(degree, gens))
    ident = tuple(range(degree))
    found = {frozenset([ident])}
    frontier = [frozenset([ident])]
    while frontier:
        nxt = []
        for sub in frontier:
            for g in elems:
                if g in sub:
                    continue
                new = frozenset(closure(degree, list(sub) + [g]))
                if new not in found:
                    found.add(new)
                    nxt.append(new)
        frontier = nxt
    return found


def is_normal_set(elems, sub):
    return all(mult(mult(inverse(g), x), g) in sub for x in sub for g in elems)


def segmented_sieve_pi(limit: int, segment: int = 1 << 16) -> int:
    """pi(limit) via a segmented sieve, independent of numpy paths."""
    if limit < 2:
        return 0
    import math

    root = int(math.isqrt(limit))
    base = [True] * (root + 1)
    base[0:2] = [False, False]
    for i in range(2, int(math.isqrt(root)) + 1):
        if base[i]:
            base[i * i::i] = [False] * len(base[i * i::i])
    small_primes = [i for i, b in enumerate(base) if b]
    count = len(small_primes)
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment - 1, limit)
        mark = [True] * (hi - lo + 1)
        for p in small_primes:
            start = max(p * p, ((lo + p - 1) // p) * p)
            for j in range(start, hi + 1, p):
                mark[j - lo] = False
        count += sum(mark)
        lo = hi + 1
    return count
