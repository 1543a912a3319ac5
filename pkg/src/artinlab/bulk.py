"""Exact bulk arithmetic on character values via integer power vectors.

Character values are algebraic integers, so their power-basis coordinates
are plain ints.  Working in Z[x]/(x^e - 1) ("fat" length-e vectors, no
reduction) turns products into cyclic convolutions on int64 numpy arrays;
one reduction modulo Phi_e at the very end lands back in canonical form.
Everything stays exact: entries are far below 2^63.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import Cyclotomic, euler_phi, reduce_power_vector
from .group import PermGroup


def ambient_conductor(G: PermGroup) -> int:
    e = G.exponent()
    return e // 2 if e % 4 == 2 else e


def fat_int(value: Cyclotomic, e: int) -> np.ndarray:
    """Length-e int64 power vector of an algebraic-integer value."""
    out = np.zeros(e, dtype=np.int64)
    step = e // value.e
    for i, c in enumerate(value.coeffs):
        if c:
            if c.denominator != 1:
                raise ValueError("value is not an algebraic integer")
            out[i * step] += int(c)
    return out


def fat_table(G: PermGroup) -> tuple[int, np.ndarray]:
    """(e, T) with T[i, k, :] the fat vector of chi_i at class k; cached."""
    from .chartab import character_table

    if "fat_table" not in G._cache:
        e = ambient_conductor(G)
        table = character_table(G)
        m = G.num_classes()
        T = np.zeros((len(table.irreducibles), m, e), dtype=np.int64)
        for i, chi in enumerate(table.irreducibles):
            for k, v in enumerate(chi.values):
                T[i, k] = fat_int(v, e)
        G._cache["fat_table"] = (e, T)
    return G._cache["fat_table"]


def _conj_fat(A: np.ndarray) -> np.ndarray:
    """Complex conjugation: index reversal modulo e on the last axis."""
    return np.concatenate([A[..., :1], A[..., :0:-1]], axis=-1)


def _cyclic_fold(C: np.ndarray) -> np.ndarray:
    """Given C[a, b], return S[t] = sum over a+b = t (mod e) of C[a, b]."""
    e = C.shape[0]
    S = np.zeros(e, dtype=np.int64)
    for a in range(e):
        S[(a + np.arange(e)) % e] += C[a]
    return S


def _reduce_to_cyclo(e: int, fat: np.ndarray) -> Cyclotomic:
    return Cyclotomic.from_powers(e, [int(x) for x in fat])


def row_orthogonality_defects(G: PermGroup) -> list[tuple[int, int]]:
    """Pairs (i, j) violating <chi_i, chi_j> = delta_ij; empty means pass."""
    e, T = fat_table(G)
    sizes = np.array(G.class_sizes(), dtype=np.int64)
    Tc = _conj_fat(T)
    n = T.shape[0]
    bad = []
    for i in range(n):
        for j in range(i, n):
            # C[a, b] = sum_k h_k T[i,k,a] * conj(T)[j,k,b]
            C = np.einsum("ka,kb->ab", T[i] * sizes[:, None], Tc[j])
            val = _reduce_to_cyclo(e, _cyclic_fold(C))
            expect = Cyclotomic.rational(G.order if i == j else 0)
            if val != expect:
                bad.append((i, j))
    return bad


def column_orthogonality_defects(G: PermGroup) -> list[tuple[int, int]]:
    """Class pairs (j, k) violating column orthogonality; empty means pass."""
    e, T = fat_table(G)
    sizes = G.class_sizes()
    Tc = _conj_fat(T)
    m = T.shape[1]
    bad = []
    for j in range(m):
        for k in range(j, m):
            C = np.einsum("ia,ib->ab", T[:, j], Tc[:, k])
            val = _reduce_to_cyclo(e, _cyclic_fold(C))
            expect = Cyclotomic.rational(G.order // sizes[j] if j == k else 0)
            if val != expect:
                bad.append((j, k))
    return bad


def multiplicity_vector(G: PermGroup, values, denom: int = 1) -> list:
    """Exact <f, chi_i> for f given by per-class values (algebraic integers
    after scaling by denom).  Returns Fractions (integers for characters).
    """
    from fractions import Fraction

    e, T = fat_table(G)
    sizes = np.array(G.class_sizes(), dtype=np.int64)
    V = np.stack([fat_int(v.scale(denom), e) for v in values])
    Tc = _conj_fat(T)
    out = []
    for i in range(T.shape[0]):
        C = np.einsum("ka,kb->ab", V * sizes[:, None], Tc[i])
        red = reduce_power_vector(e, [int(x) for x in _cyclic_fold(C)])
        if any(red[1:]):
            raise ValueError("inner product with a character must be rational")
        out.append(Fraction(red[0], denom * G.order))
    return out
