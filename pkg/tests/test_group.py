import pytest

from artinlab import group as gp
from artinlab import perm as pm
from artinlab.errors import CapacityError, InputError
from artinlab.group import PermGroup

from oracles import closure, conjugacy_classes as oracle_classes


def sym(n):
    gens = []
    if n >= 2:
        gens.append(pm.parse_perm("(1 2)", n))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, name=f"S{n}")


def quaternion8():
    # regular representation of the dicyclic group of order 8
    from artinlab.catalog import dicyclic
    return dicyclic(2)


def test_build_group_orders():
    assert sym(3).order == 6            # S3 by definition
    assert PermGroup(1, []).order == 1  # trivial group
    g = sym(5)
    assert g.order == 120
    assert g.order == len(closure(5, g.generators))


def test_q8_regular_rep_order_matches_enumeration_oracle():
    q8 = quaternion8()
    assert q8.degree == 8
    assert q8.order == 8
    assert len(closure(8, q8.generators)) == 8


def test_malformed_generator_rejected():
    with pytest.raises(InputError):
        PermGroup(3, [(0, 0, 1)])
    with pytest.raises(InputError):
        PermGroup(3, [(0, 1)])


def test_membership_via_chain():
    g = sym(4)
    assert pm.parse_perm("(1 2 3 4)", 4) in g
    assert (0, 1, 3, 2) in g
    a4 = PermGroup(4, [pm.parse_perm("(1 2 3)", 4), pm.parse_perm("(2 3 4)", 4)])
    assert a4.order == 12
    assert pm.parse_perm("(1 2)", 4) not in a4


def test_element_bound_enforced(monkeypatch):
    from artinlab.config import LIMITS
    monkeypatch.setattr(LIMITS, "element_bound", 5)
    with pytest.raises(CapacityError):
        sym(3).elements()


def test_conjugacy_classes_s3_s4():
    # oracle: brute-force conjugation orbit partition
    s3 = sym(3)
    assert sorted(sz for _, sz in s3.conjugacy_classes()) == [1, 2, 3]
    expected = [[len(c) for c in oracle_classes(4, sym(4).generators)]]
    got = [sz for _, sz in sym(4).conjugacy_classes()]
    assert got == expected[0]
    assert sorted(got) == sorted([1, 6, 8, 3, 6])
    assert sum(got) == 24


def test_conjugacy_classes_trivial():
    t = PermGroup(1, [])
    assert t.conjugacy_classes() == [((0,), 1)]


def test_class_order_canonical():
    g = sym(4)
    classes = g.conjugacy_classes()
    # identity first; sizes weakly increasing on equal sizes sorted by rep
    assert classes[0][0] == pm.identity(4)
    keys = [(sz, rep) for rep, sz in classes]
    assert keys == sorted(keys)
    # representative is the lex-min member of its class
    for rep, _ in classes:
        orbit = {pm.conjugate(rep, g_) for g_ in g.elements()}
        assert rep == min(orbit)


def test_center_and_centralizer():
    q8 = quaternion8()
    z = gp.center(q8)
    assert z.order == 2                     # {1, -1}
    s3 = sym(3)
    x = pm.parse_perm("(1 2 3)", 3)
    c = gp.centralizer(s3, x)
    assert c.order == 3


def test_derived_and_abelianization():
    s4 = sym(4)
    d = gp.derived_subgroup(s4)
    assert d.order == 12                    # A4
    inv = gp.abelianization(s4)
    assert inv.factors == [2]
    q8 = quaternion8()
    assert gp.derived_subgroup(q8).order == 2
    assert gp.abelianization(q8).factors == [2, 2]
    c6 = PermGroup(6, [tuple(list(range(1, 6)) + [0])])
    assert gp.abelianization(c6).factors == [6]


def test_abelianization_projection_is_homomorphism():
    s4 = sym(4)
    inv = gp.abelianization(s4)
    els = s4.elements()
    import random
    rng = random.Random(7)
    for _ in range(50):
        a, b = rng.choice(els), rng.choice(els)
        pa, pb = inv.project(a), inv.project(b)
        pab = inv.project(pm.mult(a, b))
        assert pab == tuple((x + y) % d for x, y, d in zip(pa, pb, inv.factors))
    # kernel of the projection is the derived subgroup
    ker = [g for g in els if all(v == 0 for v in inv.project(g))]
    assert len(ker) == 12


def test_sylow_and_fitting():
    s4 = sym(4)
    syl2 = gp.sylow_subgroup(s4, 2)
    assert syl2.order == 8
    syl3 = gp.sylow_subgroup(s4, 3)
    assert syl3.order == 3
    with pytest.raises(InputError):
        gp.sylow_subgroup(s4, 5)
    # fitting(S4) = V4, via the p-core product (oracle: brute force)
    fit = gp.fitting_subgroup(s4)
    assert fit.order == 4
    assert gp.is_normal(s4, fit)


def test_minimal_normals_and_socle():
    s3 = sym(3)
    mins = gp.minimal_normal_subgroups(s3)
    assert len(mins) == 1 and mins[0].order == 3     # A3
    s4 = sym(4)
    mins4 = gp.minimal_normal_subgroups(s4)
    assert [n.order for n in mins4] == [4]
    soc = gp.socle(s4)
    assert soc.order == 4
    a5 = PermGroup(5, [pm.parse_perm("(1 2 3)", 5), pm.parse_perm("(1 2 3 4 5)", 5)])
    assert [n.order for n in gp.minimal_normal_subgroups(a5)] == [60]


def test_normal_subgroups_enumeration():
    s4 = sym(4)
    normals = gp.normal_subgroups(s4)
    assert sorted(n.order for n in normals) == [1, 4, 12, 24]
    c12 = PermGroup(12, [tuple(list(range(1, 12)) + [0])])
    assert sorted(n.order for n in gp.normal_subgroups(c12)) == [1, 2, 3, 4, 6, 12]


def test_quotient_group():
    s4 = sym(4)
    v4 = gp.fitting_subgroup(s4)
    q, proj = gp.quotient_group(s4, v4)
    assert q.order == 6
    assert not q.is_abelian()               # isomorphic to S3
    # projection is a homomorphism with kernel V4
    for a in s4.elements()[:10]:
        for b in s4.elements()[:5]:
            assert proj(pm.mult(a, b)) == pm.mult(proj(a), proj(b))
    ker = [g for g in s4.elements() if proj(g) == pm.identity(q.degree)]
    assert len(ker) == 4
    # quotient by the trivial subgroup is G up to relabelling
    q2, _ = gp.quotient_group(s4, PermGroup(4, []))
    assert q2.order == 24
    # Q8 / center is abelian of type [2,2]
    q8 = quaternion8()
    qq, _ = gp.quotient_group(q8, gp.center(q8))
    assert qq.order == 4
    assert gp.abelianization(qq).factors == [2, 2]


def test_quotient_requires_normal():
    s3 = sym(3)
    h = s3.subgroup([pm.parse_perm("(1 2)", 3)])
    with pytest.raises(InputError):
        gp.quotient_group(s3, h)


def test_lagrange_and_order_consistency():
    for g in [sym(3), sym(4), quaternion8()]:
        assert len(g.elements()) == g.order
        for n in gp.normal_subgroups(g):
            assert g.order % n.order == 0


def test_normalizer_core():
    s4 = sym(4)
    h = s4.subgroup([pm.parse_perm("(1 2)", 4)])
    n = gp.normalizer(s4, h)
    assert n.order == 4
    assert gp.core(s4, gp.sylow_subgroup(s4, 2)).order == 4  # O_2(S4) = V4
    assert gp.core(s4, h).order == 1
