import pytest
from hypothesis import given, strategies as st

from artinlab import perm as pm
from artinlab.errors import InputError


def test_parse_and_format_roundtrip():
    p = pm.parse_perm("(1 2 3)(4 5)")
    assert p == (1, 2, 0, 4, 3)
    assert pm.cycle_str(p) == "(1 2 3)(4 5)"
    assert pm.parse_perm("()", 3) == (0, 1, 2)
    assert pm.parse_perm("(1,2)", 4) == (1, 0, 2, 3)


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        pm.parse_perm("(1 2")
    with pytest.raises(InputError):
        pm.parse_perm("(1 2)(2 3)")
    with pytest.raises(InputError):
        pm.parse_perm("(0 1)")
    with pytest.raises(InputError):
        pm.parse_perm("(1 5)", degree=3)


def test_mult_applies_left_factor_first():
    a = pm.parse_perm("(1 2)", 3)
    b = pm.parse_perm("(2 3)", 3)
    ab = pm.mult(a, b)
    # point 1 -> a -> 2 -> b -> 3
    assert ab[0] == 2


perms5 = st.permutations(list(range(5))).map(tuple)


@given(perms5, perms5, perms5)
def test_group_axioms(a, b, c):
    e = pm.identity(5)
    assert pm.mult(pm.mult(a, b), c) == pm.mult(a, pm.mult(b, c))
    assert pm.mult(a, e) == a and pm.mult(e, a) == a
    assert pm.mult(a, pm.inverse(a)) == e


@given(perms5)
def test_order_and_power(p):
    o = pm.order(p)
    assert pm.power(p, o) == pm.identity(5)
    for k in range(1, o):
        assert pm.power(p, k) != pm.identity(5)


@given(perms5, perms5)
def test_conjugate_is_homomorphism_in_first_slot(a, b):
    # (ab)^g = a^g b^g
    g = pm.parse_perm("(1 3 5)", 5)
    lhs = pm.conjugate(pm.mult(a, b), g)
    rhs = pm.mult(pm.conjugate(a, g), pm.conjugate(b, g))
    assert lhs == rhs
