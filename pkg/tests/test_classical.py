import pytest
import sympy as sp

from oracles import a, b, g, hand_relations, poincare_closed_form, to_sympy
from pgl2coh.classical import (
    InvariantRing,
    classical_relations,
    full_poincare_polynomial,
    invariant_ring,
    primitive_dimension,
    ring_json,
)
from pgl2coh.polynomial import ALPHA, BETA, GAMMA, Poly


def test_genus_two_relations():
    q = classical_relations(2)
    assert tuple(q) == (ALPHA ** 2 + BETA, ALPHA * BETA + GAMMA, ALPHA * GAMMA)


def test_genus_three_hand_expansion():
    q = classical_relations(3)
    assert sp.expand(to_sympy(q.q1) - (a ** 3 + 5 * a * b + 4 * g)) == 0
    assert sp.expand(to_sympy(q.q2) - (a ** 2 * b + b ** 2 + sp.Rational(4, 3) * a * g)) == 0
    assert sp.expand(to_sympy(q.q3) - (a ** 2 * g + b * g)) == 0


@pytest.mark.parametrize("level", range(1, 8))
def test_recursion_against_sympy(level):
    ours = [to_sympy(x) for x in classical_relations(level)]
    assert [sp.expand(x - y) for x, y in zip(ours, hand_relations(level))] == [0, 0, 0]


@pytest.mark.parametrize("level", range(1, 8))
def test_relation_degrees(level):
    assert classical_relations(level).degrees() == (level, level + 1, level + 2)


def test_genus_two_ring():
    ring = invariant_ring(2)
    basis = [m for d in range(4) for m in ring.graded_basis(d)]
    assert [Poly.monomial(m) for m in basis] == [ALPHA ** k for k in range(4)]
    assert ring.top_monomial == (3, 0, 0, 0)
    assert ring.integrate(ALPHA ** 3) == 1
    assert ring.integrate(BETA * ALPHA) == -1


@pytest.mark.parametrize("g", range(2, 6))
def test_poincare_duality(g):
    assert invariant_ring(g).is_poincare_duality()


def test_normalization_rescales_pairing():
    ring = InvariantRing(3, normalization=4)
    assert ring.pairing(ALPHA ** 2, ALPHA ** 4) == 4 * invariant_ring(3).pairing(ALPHA ** 2, ALPHA ** 4)


@pytest.mark.parametrize("g", range(2, 6))
def test_full_poincare_polynomial(g):
    assert full_poincare_polynomial(g) == poincare_closed_form(g)


def test_genus_two_poincare():
    assert full_poincare_polynomial(2) == {0: 1, 2: 1, 3: 4, 4: 1, 6: 1}


def test_primitive_dimension():
    assert [primitive_dimension(3, k) for k in range(4)] == [1, 6, 14, 14]


def test_bad_genus():
    with pytest.raises(ValueError):
        classical_relations(0)
    with pytest.raises(ValueError):
        InvariantRing(1)


def test_ring_json():
    assert ring_json(2) == {
        "genus": 2,
        "generators": [["a", 1], ["b", 2], ["g", 3]],
        "relations": ["a^2 + b", "a*b + g", "a*g"],
        "hilbert": [1, 1, 1, 1],
    }
