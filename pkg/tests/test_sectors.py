from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sector_rank_oracle
from pgl2coh.sectors import (
    SectorGenerator,
    TorsionClass,
    age,
    group_order,
    nonzero_classes,
    parse_sector,
    sector_generators,
    sector_integral,
    sector_rank,
    sector_total_rank,
    shift_generator,
    torsion_group,
    weil_pairing,
)

bits4 = st.tuples(*(st.integers(0, 1) for _ in range(6))).map(TorsionClass)


@pytest.mark.parametrize("g", range(2, 9))
def test_ranks(g):
    for s in range(2 * g - 1):
        assert sector_rank(g, s) == sector_rank_oracle(g, s)
    assert sector_total_rank(g) == 2 ** (2 * g - 3)


def test_rank_out_of_range():
    with pytest.raises(ValueError):
        sector_rank(2, 4)


@given(bits4, bits4, bits4)
def test_weil_pairing_bilinear_alternating(x, y, z):
    assert weil_pairing(x, x) == 0
    assert weil_pairing(x, y) == weil_pairing(y, x)
    assert weil_pairing(x + y, z) == (weil_pairing(x, z) + weil_pairing(y, z)) % 2


def test_weil_pairing_nondegenerate():
    g = 2
    for x in nonzero_classes(g):
        assert any(weil_pairing(x, y) for y in torsion_group(g))
    e1, e3 = TorsionClass.basis_vector(2, 1), TorsionClass.basis_vector(2, 3)
    assert weil_pairing(e1, e3) == 1
    assert weil_pairing(e1, TorsionClass.basis_vector(2, 2)) == 0


def test_group():
    assert len(torsion_group(3)) == group_order(3) == 64
    assert len(nonzero_classes(2)) == 15


def test_generator_validation():
    k = TorsionClass.basis_vector(2, 1)
    with pytest.raises(ValueError):
        SectorGenerator(k, 1)
    with pytest.raises(ValueError):
        SectorGenerator(k, 4)
    with pytest.raises(ValueError):
        SectorGenerator(TorsionClass.zero(2), 0)
    with pytest.raises(ValueError):
        SectorGenerator(k, 0, 2)


@pytest.mark.parametrize("g", range(2, 6))
def test_degrees_and_age(g):
    k = nonzero_classes(g)[-1]
    assert age(k) == g - 1
    assert age(TorsionClass.zero(g)) == 0
    for x in sector_generators(g, k):
        assert x.real_degree == x.s + 2 * (g - 1)
        assert 2 * x.algebraic_degree == x.real_degree


@pytest.mark.parametrize("g", range(2, 6))
def test_sector_integral(g):
    gens = sector_generators(g, nonzero_classes(g)[0])
    top = [x for x in gens if x.is_top()]
    assert len(top) == 1
    assert sector_integral(g, {top[0]: 1}) == Fraction(1, 2 ** (2 * g))
    assert sector_integral(g, {gens[0]: 5}) == 0


def test_parse_round_trip():
    x = parse_sector("t[1000]:h2:1")
    assert str(x) == "t[1000]:h2:1"
    assert x.kappa == TorsionClass.basis_vector(2, 1)
    with pytest.raises(ValueError):
        parse_sector("t[10]:h2")


def test_shift_truncates_index():
    k = TorsionClass.basis_vector(3, 2)
    x = SectorGenerator(k, 2, 4)
    assert shift_generator(x, 2) == SectorGenerator(k, 4, 1)
    assert shift_generator(x, 4) is None
    # two steps agree with one
    y = SectorGenerator(k, 0, 1)
    assert shift_generator(shift_generator(y, 2), 2) == shift_generator(y, 4)
