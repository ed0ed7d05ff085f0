import random

import pytest

from bmsadec import gf
from bmsadec.errors import (
    GcdViolation,
    NonPrimitiveModulus,
    PeriodNotDividingGroupOrder,
)
from bmsadec.gf import ZERO, FieldSpec, FieldTower

A = FieldTower.parse


def test_build_gf16(tower):
    assert tower.size == 16
    assert tower.n_units == 15
    assert tower.q == 2


def test_gcd_violation():
    spec = FieldSpec(p=2, m=1, s=4, modulus=(1, 1, 0, 0, 1), r1=6, r2=15)
    with pytest.raises(GcdViolation):
        gf.build_field(spec)


def test_non_primitive_modulus():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
    spec = FieldSpec(p=2, m=1, s=4, modulus=(1, 1, 1, 1, 1), r1=15, r2=15)
    with pytest.raises(NonPrimitiveModulus):
        gf.build_field(spec)


def test_period_not_dividing():
    spec = FieldSpec(p=2, m=1, s=4, modulus=(1, 1, 0, 0, 1), r1=15, r2=7)
    with pytest.raises(PeriodNotDividingGroupOrder):
        gf.build_field(spec)


def test_arith_golden_values(tower):
    # a has order 15
    assert tower.mul(7, 8) == 0
    # additions forced by the worked examples' traces
    assert tower.add(A("a^9"), A("a^3")) == A("a")
    assert tower.add(A("a^6"), A("a^4")) == A("a^12")


def test_inverse_and_axioms(tower):
    rng = random.Random(7)
    elems = list(tower.elements())
    for _ in range(300):
        x, y, z = (rng.choice(elems) for _ in range(3))
        assert tower.add(x, y) == tower.add(y, x)
        assert tower.mul(x, y) == tower.mul(y, x)
        assert tower.mul(x, tower.add(y, z)) == tower.add(
            tower.mul(x, y), tower.mul(x, z))
        if x != ZERO:
            assert tower.mul(x, tower.inv(x)) == 0


def test_div_by_zero(tower):
    with pytest.raises(ZeroDivisionError):
        tower.inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        tower.div(3, ZERO)


def test_frobenius_fixes_exactly_gf_q(tower):
    fixed = [x for x in tower.elements() if tower.frobenius(x) == x]
    assert sorted(fixed) == sorted([ZERO, 0])  # GF(2) inside GF(16)
    for x in tower.elements():
        assert tower.in_subfield(x) == (tower.frobenius(x) == x)


def test_frobenius_is_additive_and_multiplicative(tower):
    for x in tower.elements():
        for y in tower.elements():
            assert tower.frobenius(tower.add(x, y)) == tower.add(
                tower.frobenius(x), tower.frobenius(y))
            assert tower.frobenius(tower.mul(x, y)) == tower.mul(
                tower.frobenius(x), tower.frobenius(y))


def test_primitive_pair_defaults(tower):
    alpha = gf.primitive_pair(tower)
    assert (alpha.e1, alpha.e2) == (1, 1)  # (q^s-1)/r_i = 1


def test_primitive_pair_mixed_orders():
    spec = FieldSpec(p=2, m=1, s=4, modulus=(1, 1, 0, 0, 1), r1=15, r2=5)
    tw = gf.build_field(spec)
    alpha = gf.primitive_pair(tw)
    assert (alpha.e1, alpha.e2) == (1, 3)
    assert gf.element_order(tw, 3) == 5


def test_primitive_pair_rejects_wrong_order(tower):
    with pytest.raises(PeriodNotDividingGroupOrder):
        gf.primitive_pair(tower, e1=3, e2=1)  # a^3 has order 5, not 15


def test_odd_characteristic_field():
    # GF(9) over GF(3), modulus x^2 + x + 2 (primitive), periods 8 x 8
    spec = FieldSpec(p=3, m=1, s=2, modulus=(2, 1, 1), r1=8, r2=8)
    tw = gf.build_field(spec)
    assert tw.n_units == 8
    rng = random.Random(1)
    elems = list(tw.elements())
    for _ in range(200):
        x, y = rng.choice(elems), rng.choice(elems)
        assert tw.add(x, tw.neg(x)) == ZERO
        assert tw.sub(tw.add(x, y), y) == x
        if x != ZERO:
            assert tw.mul(x, tw.inv(x)) == 0


def test_format_and_parse_roundtrip(tower):
    for x in tower.elements():
        assert FieldTower.parse(FieldTower.fmt(x)) == x
