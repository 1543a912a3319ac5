"""Permutations on {0, ..., n-1} stored as image tuples.

A permutation p maps i -> p[i].  Products compose left-to-right:
(p * q)(i) = q(p(i)), written here as mult(p, q).  The external cycle
notation is 1-based, e.g. "(1 2 3)(4 5)".
"""

from __future__ import annotations

import re
from math import gcd

from .errors import InputError

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(images, degree: int) -> bool:
    return len(images) == degree and sorted(images) == list(range(degree))


def check_perm(images, degree: int) -> Perm:
    p = tuple(images)
    if not is_perm(p, degree):
        raise InputError(f"not a permutation of degree {degree}: {images!r}")
    return p


def mult(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(p: Perm, q: Perm) -> Perm:
    """q^-1 p q, the conjugate of p by q."""
    qi = inverse(q)
    return mult(qi, mult(p, q))


def power(p: Perm, k: int) -> Perm:
    n = len(p)
    if k < 0:
        return power(inverse(p), -k)
    r = identity(n)
    b = p
    while k:
        if k & 1:
            r = mult(r, b)
        b = mult(b, b)
        k >>= 1
    return r


def order(p: Perm) -> int:
    """Order as the lcm of cycle lengths."""
    n = len(p)
    seen = [False] * n
    m = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        m = m * length // gcd(m, length)
    return m


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, 0-based, each starting at its least point."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_str(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse 1-based cycle notation, e.g. "(1 2 3)(4 5)" or "()".

    Points may be separated by spaces or commas.  If degree is omitted the
    largest point mentioned sets it.
    """
    stripped = text.strip()
    if not stripped:
        raise InputError("empty permutation string")
    body = stripped.replace(",", " ")
    consumed = _CYCLE_RE.sub("", body).strip()
    if consumed:
        raise InputError(f"could not parse permutation {text!r}")
    cycles_1based = []
    maxpt = 0
    for m in _CYCLE_RE.finditer(body):
        pts = [int(tok) for tok in m.group(1).split()]
        if any(x < 1 for x in pts):
            raise InputError(f"points must be >= 1 in {text!r}")
        if len(set(pts)) != len(pts):
            raise InputError(f"repeated point inside a cycle in {text!r}")
        maxpt = max(maxpt, *pts) if pts else maxpt
        if len(pts) >= 2:
            cycles_1based.append(pts)
    n = degree if degree is not None else maxpt
    if maxpt > n:
        raise InputError(f"point {maxpt} exceeds degree {n}")
    images = list(range(n))
    for pts in cycles_1based:
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if images[a - 1] != a - 1:
                raise InputError(f"point {a} occurs in two cycles in {text!r}")
            images[a - 1] = b - 1
    return tuple(images)
