import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import donaldson_by_sympy
from pgl2coh.gw import (
    JacobianMonomial,
    StackyModel,
    UnsupportedFeature,
    donaldson_evaluate,
    extension_rank,
    gw_value,
    moduli_dim,
    nodal_locus_dim,
    substitute_x,
    virtual_dim_M,
    virtual_dim_N,
)


@pytest.mark.parametrize("g", range(2, 9))
def test_virtual_dimensions(g):
    k = g - 1
    assert virtual_dim_M(g, 3, 1, (0, k, k), half_degree=True) == g
    assert virtual_dim_M(g, 2, 1, (k, k), half_degree=True) == g - 1
    assert virtual_dim_M(g, 3, 1, (0, 0, 0)) == 3 * g - 1
    assert nodal_locus_dim(g) == g - 2
    assert virtual_dim_N(g, 0, (0, 0, 0)) == 2 * g - 1
    assert virtual_dim_N(g, 1, (0, 0, 0)) == 3 * g - 1
    assert virtual_dim_N(g, 1, (0, k, k)) == g + 1


def test_bad_ages():
    with pytest.raises(ValueError):
        virtual_dim_M(3, 3, 1, (0, 1, 2))


@pytest.mark.parametrize("g", range(2, 9))
def test_extension_ranks(g):
    assert extension_rank(StackyModel.PlainP1, g) == 2 * g
    assert extension_rank(StackyModel.P12, g) == g
    assert extension_rank(StackyModel.P22, g) == 0
    assert moduli_dim(StackyModel.PlainP1, g) == 3 * g - 1
    assert moduli_dim(StackyModel.P22, g) == g


def test_donaldson_values():
    assert donaldson_evaluate(2, 3, 0) == -32
    assert donaldson_evaluate(2, 1, 1) == 0
    assert donaldson_evaluate(2, 1, 0) == 0
    assert gw_value(2, 3, 0) == 32
    assert gw_value(3, 6, 0) == donaldson_evaluate(3, 6, 0)


@pytest.mark.parametrize("g", range(2, 6))
def test_donaldson_against_sympy(g):
    for n2 in range(0, (3 * g - 3) // 2 + 1):
        n1 = 3 * g - 3 - 2 * n2
        assert donaldson_evaluate(g, n1, n2) == donaldson_by_sympy(g, n1, n2)


@given(st.integers(2, 5), st.integers(0, 14), st.integers(0, 8))
@settings(max_examples=80, deadline=None)
def test_off_degree_vanishes(g, n1, n2):
    if n1 + 2 * n2 + 2 != 3 * g - 1:
        assert donaldson_evaluate(g, n1, n2) == 0


def test_substitution_base_case():
    for g in range(2, 8):
        assert substitute_x(g, 2 * g - 1) == (0, 1)
        assert substitute_x(g, 2 * g - 2) is None


def test_omega_normalization_is_linear():
    assert donaldson_evaluate(2, 3, 0, omega_top=1) == -16


def test_n3_unsupported():
    with pytest.raises(UnsupportedFeature):
        donaldson_evaluate(2, 1, 0, 1)


def test_monomial_validation():
    with pytest.raises(ValueError):
        JacobianMonomial(-1, 0)
