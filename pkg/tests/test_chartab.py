from fractions import Fraction

import pytest

from artinlab import catalog as cat
from artinlab.chartab import (ClassFunction, character_table, decompose,
                              indicator_of_class, induce, inner_product,
                              is_character, kernel_and_faithful,
                              linear_characters, regular_character, restrict,
                              trivial_character)
from artinlab.cyclotomic import Cyclotomic
from artinlab.errors import InputError
from artinlab.perm import parse_perm

Z = Cyclotomic.zeta
Q = Cyclotomic.rational


def test_c3_table_is_cyclic_dual():
    g = cat.cyclic(3)
    t = character_table(g)
    assert t.degrees == [1, 1, 1]
    rows = {tuple(v.sort_key() for v in ch.values) for ch in t}
    expected = {
        tuple(v.sort_key() for v in [Q(1), Q(1), Q(1)]),
        tuple(v.sort_key() for v in [Q(1), Z(3), Z(3, 2)]),
        tuple(v.sort_key() for v in [Q(1), Z(3, 2), Z(3)]),
    }
    assert rows == expected


def test_s3_degrees_and_orthogonality():
    g = cat.symmetric(3)
    t = character_table(g)
    assert sorted(t.degrees) == [1, 1, 2]
    for i, a in enumerate(t):
        for j, b in enumerate(t):
            ip = inner_product(a, b)
            assert ip == Q(1 if i == j else 0)


def test_q8_degrees():
    t = character_table(cat.quaternion8())
    assert sorted(t.degrees) == [1, 1, 1, 1, 2]


def test_sum_of_degree_squares_across_sample():
    for g in [cat.symmetric(4), cat.symmetric(5), cat.alternating(5),
              cat.sl23(), cat.frobenius21(), cat.dihedral(10),
              cat.cyclic(12), cat.quaternion16()]:
        t = character_table(g)
        assert sum(d * d for d in t.degrees) == g.order
        assert t.irreducibles[0] == trivial_character(g)


def test_a5_has_known_degrees():
    t = character_table(cat.alternating(5))
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]


def test_inner_products_trivial_regular():
    g = cat.symmetric(3)
    t = character_table(g)
    triv = trivial_character(g)
    assert inner_product(triv, triv) == Q(1)
    reg = regular_character(g)
    for chi, d in zip(t, t.degrees):
        assert inner_product(reg, chi) == Q(d)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    assert inner_product(chi2, chi2) == Q(1)


def test_induction_from_a3_gives_2dim():
    s3 = cat.symmetric(3)
    a3 = s3.subgroup([parse_perm("(1 2 3)", 3)])
    psi = next(ch for ch in linear_characters(a3)
               if ch != trivial_character(a3))
    ind = induce(a3, psi, s3)
    t = character_table(s3)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    assert ind == chi2
    # degree multiplies by the index
    assert ind.degree() == Q(2)


def test_identity_and_regular_induction():
    g = cat.symmetric(3)
    t = character_table(g)
    for chi in t:
        assert induce(g, chi, g) == chi
    triv_sub = g.subgroup([])
    ind = induce(triv_sub, trivial_character(triv_sub), g)
    assert ind == regular_character(g)


def test_frobenius_reciprocity():
    s4 = cat.symmetric(4)
    h = s4.subgroup([parse_perm("(1 2 3)", 4),
                     parse_perm("(1 2)", 4)])
    assert h.order == 6
    th = character_table(h)
    tg = character_table(s4)
    for psi in th:
        ind = induce(h, psi, s4)
        for chi in tg:
            lhs = inner_product(ind, chi)
            rhs = inner_product(psi, restrict(chi, h))
            assert lhs == rhs


def test_restriction_of_2dim_to_a3():
    s3 = cat.symmetric(3)
    a3 = s3.subgroup([parse_perm("(1 2 3)", 3)])
    t = character_table(s3)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    res = restrict(chi2, a3)
    lins = linear_characters(a3)
    nontriv = [ch for ch in lins if ch != trivial_character(a3)]
    assert res == nontriv[0] + nontriv[1]


def test_product_decomposition_on_s3():
    s3 = cat.symmetric(3)
    t = character_table(s3)
    sgn = next(ch for ch in t if ch.degree() == Q(1) and ch != trivial_character(s3))
    assert sgn * sgn == trivial_character(s3)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    prod = chi2 * chi2
    dec = decompose(prod, t)
    assert dec == [(0, Q(1)), (1, Q(1)), (2, Q(1))]


def test_kernel_and_faithful():
    s3 = cat.symmetric(3)
    t = character_table(s3)
    sgn = next(ch for ch in t if ch.degree() == Q(1) and ch != t.irreducibles[0])
    ker, faithful = kernel_and_faithful(sgn)
    assert ker.group.order == 3 and not faithful
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    ker2, faithful2 = kernel_and_faithful(chi2)
    assert ker2.group.order == 1 and faithful2
    kert, faitht = kernel_and_faithful(t.irreducibles[0])
    assert kert.group.order == 6 and not faitht
    with pytest.raises(InputError):
        kernel_and_faithful(indicator_of_class(s3, 1))


def test_linear_characters_counts():
    assert len(linear_characters(cat.cyclic(4))) == 4
    q8 = cat.quaternion8()
    lins = linear_characters(q8)
    assert len(lins) == 4
    s4 = cat.symmetric(4)
    assert len(linear_characters(s4)) == 2
    # values of C4 characters lie in <zeta_4>
    for ch in linear_characters(cat.cyclic(4)):
        for v in ch.values:
            assert v.norm_squared() == Q(1)


def test_decompose_regular_and_zero():
    g = cat.symmetric(3)
    t = character_table(g)
    reg = regular_character(g)
    assert decompose(reg, t) == [(i, Q(d)) for i, d in enumerate(t.degrees)]
    zero = ClassFunction(g, [Q(0)] * g.num_classes())
    assert decompose(zero, t) == []
    assert not is_character(zero, t)


def test_induced_decomposition_c2_to_s3():
    s3 = cat.symmetric(3)
    c2 = s3.subgroup([parse_perm("(1 2)", 3)])
    ind = induce(c2, trivial_character(c2), s3)
    t = character_table(s3)
    dec = dict(decompose(ind, t))
    # trivial + the 2-dim: multiplicities (1, 0, 1)
    chi2_idx = next(i for i, ch in enumerate(t) if ch.degree() == Q(2))
    assert dec == {0: Q(1), chi2_idx: Q(1)}


def test_column_orthogonality_s4():
    g = cat.symmetric(4)
    t = character_table(g)
    sizes = g.class_sizes()
    m = g.num_classes()
    for j in range(m):
        for k in range(m):
            s = Cyclotomic.rational(0)
            for chi in t:
                s = s + chi.values[j] * chi.values[k].conjugate()
            expect = Fraction(g.order, sizes[j]) if j == k else 0
            assert s == Q(expect)
