import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import invariant_series_coefficients, quotient_dimension, to_sympy
from pgl2coh.classical import classical_relations, expected_invariant_series
from pgl2coh.groebner import IdealPresentation, monomials_of_degree
from pgl2coh.hilbert import (
    HilbertSeries,
    complete_intersection_series,
    component_dimension_by_linear_algebra,
    hilbert_series,
    tpoly_format,
)
from pgl2coh.polynomial import Poly


@pytest.mark.parametrize("g", range(2, 7))
def test_invariant_series_closed_form(g):
    series = hilbert_series(IdealPresentation(list(classical_relations(g))))
    assert series == expected_invariant_series(g)
    n = 3 * g
    assert series.coefficients(n) == invariant_series_coefficients(g, n)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_component_dimensions_against_sympy_rank(g):
    gens = list(classical_relations(g))
    sym = [to_sympy(f) for f in gens]
    for d in range(3 * g - 1):
        assert component_dimension_by_linear_algebra(gens, d) == quotient_dimension(sym, d)


def test_polynomial_series():
    s = complete_intersection_series((2, 3, 4), (1, 2, 3))
    assert s.as_polynomial() == {0: 1, 1: 1, 2: 1, 3: 1}
    assert tpoly_format({0: 1, 2: 16, 3: 4, 4: 16, 6: 1}) == "1 + 16t^2 + 4t^3 + 16t^4 + t^6"


def test_infinite_series_has_no_polynomial():
    s = hilbert_series(IdealPresentation([Poly.var("a")]))
    assert s.as_polynomial() is None
    # Q[b, g] with weights 2, 3
    assert s.coefficients(7) == [1, 0, 1, 1, 1, 1, 2]


def test_equality_is_by_value():
    x = HilbertSeries.from_dict({0: 1, 1: -1}, (1,))
    y = HilbertSeries.from_dict({0: 1}, ())
    assert x == y


monomial = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2), st.just(0))


@given(st.lists(monomial, min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_monomial_ideal_series_counts_standard_monomials(gens):
    ideal = IdealPresentation([Poly.monomial(m) for m in gens])
    s = hilbert_series(ideal)
    counts = [
        sum(1 for m in monomials_of_degree(d) if not any(all(x >= y for x, y in zip(m, n)) for n in gens))
        for d in range(10)
    ]
    assert s.coefficients(10) == counts
