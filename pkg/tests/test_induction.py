import random
from fractions import Fraction

import pytest

from artinlab import catalog as cat
from artinlab.chartab import character_table, induce, trivial_character
from artinlab.cyclotomic import Cyclotomic
from artinlab.errors import FalsificationError, InputError
from artinlab.group import minimal_normal_subgroups, normal_subgroups
from artinlab.induction import (certificate_solve, class_indicator_decomposition,
                                faithful_monomials, lemma61_certificate,
                                mackey_verify, monomial_catalog,
                                qualifying_monomials, verify_spaces,
                                z_certificate_search)

Q = Cyclotomic.rational


def faithful_irreducibles(G):
    from artinlab.induction import _faithful_irreducible_indices
    t = character_table(G)
    return [t.irreducibles[i] for i in _faithful_irreducible_indices(G)]


def test_faithful_monomials_q8():
    q8 = cat.quaternion8()
    monos = faithful_monomials(q8)
    t = character_table(q8)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    # includes Ind from a C4 with an order-4 character, equal to chi2 itself
    direct = [m for m in monos if m.induced == chi2]
    assert len(direct) == 1 and direct[0].subgroup.order == 4
    # the only other distinct faithful induced character is 2*chi2 (from the
    # center), so every entry here is supported on the faithful irreducible
    for m in monos:
        assert [i for i, c in enumerate(m.multiplicities) if c] == \
            [len(t.irreducibles) - 1]


def test_faithful_monomials_s3():
    s3 = cat.symmetric(3)
    monos = faithful_monomials(s3)
    t = character_table(s3)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    assert [m.induced for m in monos] == [chi2]
    # inductions of trivial characters are excluded by the kernel filter
    for m in monos:
        assert m.psi != trivial_character(m.subgroup.group)


def test_faithful_monomials_c2():
    c2 = cat.cyclic(2)
    monos = faithful_monomials(c2)
    assert len(monos) == 1
    assert monos[0].subgroup.order == 2
    assert monos[0].induced.values[1] == Q(-1)


def test_certificate_s3():
    s3 = cat.symmetric(3)
    t = character_table(s3)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    cert = certificate_solve(s3, chi2, "nilpotent")
    assert cert.verified
    assert len(cert.terms) == 1
    mono, coeff = cert.terms[0]
    assert coeff == 1 and mono.subgroup.order == 3


def test_certificate_q8():
    q8 = cat.quaternion8()
    t = character_table(q8)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    cert = certificate_solve(q8, chi2, "nilpotent")
    assert cert.verified
    assert cert.terms[0][1] == 1
    assert cert.terms[0][0].subgroup.order == 4


def test_certificate_a5_4dim():
    a5 = cat.alternating(5)
    t = character_table(a5)
    chi4 = next(ch for ch in t if ch.degree() == Q(4))
    cert = certificate_solve(a5, chi4, "nilpotent")
    assert cert.verify_pointwise()


def test_certificate_rejects_target_outside_r():
    s3 = cat.symmetric(3)
    with pytest.raises(InputError):
        certificate_solve(s3, trivial_character(s3), "nilpotent")


def test_verify_spaces_s3():
    s3 = cat.symmetric(3)
    sp = verify_spaces(s3, minimal_normal_subgroups(s3), "nilpotent")
    assert sp.equal and sp.pushforward_ok
    assert len(sp.r_indices) == 1 and sp.i_rank == 1


def test_verify_spaces_artin_cyclic():
    for g in [cat.symmetric(3), cat.symmetric(4), cat.quaternion8(),
              cat.frobenius21(), cat.alternating(5)]:
        sp = verify_spaces(g, [], "cyclic")
        assert sp.i_rank == g.num_classes() == len(sp.r_indices), g.name
        assert sp.equal


def test_verify_spaces_c2c2_single_factor():
    v4 = cat.dihedral(2)
    first = v4.subgroup([(1, 0, 2, 3)])
    sp = verify_spaces(v4, [first], "nilpotent")
    assert len(sp.r_indices) == 2
    assert sp.equal and sp.pushforward_ok


def test_tgn_all_dominates_nilpotent():
    g = cat.symmetric(4)
    for n in normal_subgroups(g):
        if n.is_trivial():
            continue
        nil = qualifying_monomials(g, "nilpotent", [n])
        al = qualifying_monomials(g, "all", [n])
        keys = {m.multiplicities for m in al}
        assert {m.multiplicities for m in nil} <= keys


def test_z_certificates():
    q8 = cat.quaternion8()
    t = character_table(q8)
    chi2 = next(ch for ch in t if ch.degree() == Q(2))
    cert, verdict = z_certificate_search(q8, chi2)
    assert cert is not None and "found" in verdict
    assert all(c.denominator == 1 for _, c in cert.terms)

    s3 = cat.symmetric(3)
    chi = next(ch for ch in character_table(s3) if ch.degree() == Q(2))
    cert, _ = z_certificate_search(s3, chi)
    assert cert is not None and cert.terms[0][1] == 1

    c6 = cat.cyclic(6)
    for chi in faithful_irreducibles(c6):
        cert, verdict = z_certificate_search(c6, chi)
        assert cert is not None


def test_lemma61_reports():
    s3 = cat.symmetric(3)
    rep = lemma61_certificate(s3)
    assert rep.m == 1 and rep.count_bound_ok and rep.entry_bound_ok
    assert rep.coeff_bound_ok and rep.degree_bound_ok
    assert rep.certificates[0].max_abs_coefficient() == 1

    q8 = cat.quaternion8()
    rep = lemma61_certificate(q8)
    assert rep.m == 1 and rep.certificates[0].max_abs_coefficient() == 1

    a5 = cat.alternating(5)
    rep = lemma61_certificate(a5)
    assert rep.m == 4
    assert rep.coeff_bound_ok and rep.entry_bound_ok and rep.degree_bound_ok

    with pytest.raises(InputError):
        lemma61_certificate(cat.dihedral(2))  # V4 has no faithful irreducible
    with pytest.raises(InputError):
        lemma61_certificate(cat.cyclic(1))


def test_mackey_s3_square():
    s3 = cat.symmetric(3)
    monos = monomial_catalog(s3, "nilpotent")
    phi = next(m for m in monos if m.subgroup.order == 3 and m.faithful)
    assert mackey_verify(phi, phi, s3)


def test_mackey_with_whole_group_term():
    s3 = cat.symmetric(3)
    monos = monomial_catalog(s3, "all")
    phi1 = next(m for m in monos if m.subgroup.order == 3 and m.faithful)
    triv = next(m for m in monos if m.subgroup.order == 6
                and m.induced == trivial_character(s3))
    assert mackey_verify(phi1, triv, s3)
    assert (phi1.induced * triv.induced) == phi1.induced


def test_mackey_random_pairs_q8_s4():
    rng = random.Random(123)
    for g in [cat.quaternion8(), cat.symmetric(4), cat.dihedral(6)]:
        monos = monomial_catalog(g, "nilpotent")
        for _ in range(8):
            a, b = rng.choice(monos), rng.choice(monos)
            assert mackey_verify(a, b, g)


def test_indicator_decomposition_s3():
    s3 = cat.symmetric(3)
    # class of transpositions: size 3; identify by class size
    sizes = s3.class_sizes()
    k = sizes.index(3)
    dec = class_indicator_decomposition(s3, k)
    assert dec.certified
    coeff_set = sorted(c.canonical().as_rational() for c in dec.coefficients)
    assert coeff_set == [Fraction(-1, 2), Fraction(0), Fraction(1, 2)]
    # 3-cycles: coefficients (1/3, 1/3, -1/3)
    k3 = sizes.index(2)
    dec3 = class_indicator_decomposition(s3, k3)
    assert sorted(c.canonical().as_rational() for c in dec3.coefficients) == \
        [Fraction(-1, 3), Fraction(1, 3), Fraction(1, 3)]
    assert dec3.certified


def test_indicator_identity_class():
    for g in [cat.symmetric(4), cat.quaternion8(), cat.frobenius21()]:
        dec = class_indicator_decomposition(g, 0)
        assert dec.certified
        t = character_table(g)
        assert [c.as_rational() for c in dec.coefficients] == \
            [Fraction(d, g.order) for d in t.degrees]
