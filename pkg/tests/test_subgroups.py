import pytest

from artinlab import catalog as cat
from artinlab.errors import CapacityError
from artinlab.subgroups import (is_cyclic_group, is_elementary, is_nilpotent,
                                is_nilpotent_lcs, nilpotent_rank,
                                subgroup_lattice, subgroups_up_to_conjugacy)

from oracles import all_subgroup_sets


def names(subs):
    return sorted(s.order for s in subs)


def test_s4_lattice_matches_bruteforce_oracle():
    s4 = cat.symmetric(4)
    lat = subgroup_lattice(s4)
    oracle = all_subgroup_sets(4, s4.generators)
    assert lat.total_subgroups() == len(oracle) == 30
    assert len(lat.class_reps) == 11
    # every enumerated class rep is in the oracle and vice versa
    reps = {H.element_set() for H in lat.class_reps}
    assert reps <= oracle


def test_s3_nilpotent_classes():
    subs = subgroups_up_to_conjugacy(cat.symmetric(3), "nilpotent")
    assert names(subs) == [1, 2, 3]


def test_c4_cyclic_classes():
    subs = subgroups_up_to_conjugacy(cat.cyclic(4), "cyclic")
    assert names(subs) == [1, 2, 4]


def test_a5_nilpotent_classes():
    subs = subgroups_up_to_conjugacy(cat.alternating(5), "nilpotent")
    assert names(subs) == [1, 2, 3, 4, 5]
    v4 = next(s for s in subs if s.order == 4)
    assert not is_cyclic_group(v4.group)


def test_a5_lattice_counts():
    lat = subgroup_lattice(cat.alternating(5))
    assert len(lat.class_reps) == 9
    assert lat.total_subgroups() == 59


def test_lagrange_for_all_classes():
    g = cat.sl23()
    for H in subgroup_lattice(g).class_reps:
        assert g.order % H.order == 0


def test_nilpotent_two_implementations_agree():
    groups = [cat.symmetric(3), cat.symmetric(4), cat.quaternion8(),
              cat.dihedral(4), cat.dihedral(6), cat.cyclic(12), cat.sl23(),
              cat.frobenius21(), cat.alternating(4)]
    for g in groups:
        assert is_nilpotent(g) == is_nilpotent_lcs(g), g.name
    assert is_nilpotent(cat.quaternion8())
    assert not is_nilpotent(cat.symmetric(3))
    assert is_nilpotent(cat.dihedral(4))      # 2-group
    assert not is_nilpotent(cat.dihedral(6))


def test_elementary_and_rank_filters():
    q8 = cat.quaternion8()
    assert is_elementary(q8)
    assert nilpotent_rank(q8) == 2
    c2c2c2 = cat.direct_product(cat.dihedral(2), cat.cyclic(2))
    assert is_elementary(c2c2c2)
    assert nilpotent_rank(c2c2c2) == 3
    subs = subgroups_up_to_conjugacy(c2c2c2, "elementary_rank_le_2")
    assert max(s.order for s in subs) == 4
    # C6 = C2 x C3 is elementary (p-group times coprime cyclic)
    assert is_elementary(cat.cyclic(6))
    # S3 is not even nilpotent
    assert not is_elementary(cat.symmetric(3))
    # D4 x C3: one non-cyclic Sylow (the 2-part), cyclic 3-part
    d4c3 = cat.direct_product(cat.dihedral(4), cat.cyclic(3))
    assert is_elementary(d4c3)
    d4d3 = cat.direct_product(cat.dihedral(4), cat.symmetric(3))
    assert not is_elementary(d4d3)


def test_capacity_error(monkeypatch):
    from artinlab.config import LIMITS
    monkeypatch.setattr(LIMITS, "subgroup_bound", 10)
    with pytest.raises(CapacityError):
        subgroup_lattice(cat.symmetric(4))


def test_improper_and_trivial_included():
    subs = subgroups_up_to_conjugacy(cat.cyclic(2), "nilpotent")
    assert names(subs) == [1, 2]
