"""The invariant cohomology ring Q[a, b, g]/I_g of the rank-2 moduli space M.

I_g is generated by the level-g triple of the three-term recursion seeded by
(1, 0, 0).  The full Poincare polynomial adds the primitive exterior powers of
H^3(M) tensored with the smaller rings Q[a, b, g]/I_{g-k}.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .groebner import DEFAULT_DEGREE_CAP, IdealPresentation
from .hilbert import complete_intersection_series, hilbert_series, tpoly_add
from .linalg import rank
from .polynomial import ALPHA, ALPHA_LAST_ORDER, BETA, GAMMA, ONE, Poly, format_monomial


@dataclass(frozen=True)
class RelationTriple:
    r: int
    q1: Poly
    q2: Poly
    q3: Poly

    def __iter__(self):
        return iter((self.q1, self.q2, self.q3))

    def degrees(self, weights=ALPHA_LAST_ORDER.weights):
        return tuple(q.degree(weights) for q in self)


def classical_step(r, triple):
    """One step of the recursion, from level r to level r + 1."""
    q1, q2, q3 = triple
    return (
        ALPHA * q1 + r * r * q2,
        BETA * q1 + Fraction(2 * r, r + 1) * q3,
        GAMMA * q1,
    )


@lru_cache(maxsize=None)
def classical_relations(g):
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    triple = (ONE, Poly(), Poly())
    for r in range(g):
        triple = classical_step(r, triple)
    return RelationTriple(g, *triple)


class InvariantRing:
    """Q[a, b, g]/I_g with its Groebner engine and a normalized top-degree pairing.

    ``normalization`` is the value of the pairing on 1 and the top standard
    monomial; it only rescales absolute intersection numbers.  ``relations``
    and ``order`` replace I_g and the alpha-last order, e.g. for the
    classical limit of the g=2 table conventions.
    """

    def __init__(self, g, normalization=1, degree_cap=DEFAULT_DEGREE_CAP, relations=None,
                 order=ALPHA_LAST_ORDER):
        if g < 2:
            raise ValueError(f"genus must be >= 2, got {g}")
        self.genus = g
        self.normalization = Fraction(normalization)
        self.relations = classical_relations(g) if relations is None else tuple(relations)
        self.ideal = IdealPresentation(list(self.relations), ("a", "b", "g"), order, degree_cap)
        self.top_degree = 3 * g - 3
        self._top = None

    def normal_form(self, p):
        return self.ideal.normal_form(p)

    def multiply(self, x, y):
        return self.normal_form(x * y)

    def graded_basis(self, d):
        return self.ideal.graded_basis(d)

    def dimensions(self):
        return [len(self.graded_basis(d)) for d in range(self.top_degree + 1)]

    def hilbert_series(self):
        return hilbert_series(self.ideal)

    @property
    def top_monomial(self):
        """Lexicographically least standard monomial of top degree."""
        if self._top is None:
            top = self.graded_basis(self.top_degree)
            if not top:
                raise ArithmeticError(f"degree {self.top_degree} component vanishes for g={self.genus}")
            self._top = min(top)
        return self._top

    def integrate(self, p):
        """Top-degree coefficient of the normal form of p, times the normalization."""
        return self.normal_form(p).coefficient(self.top_monomial) * self.normalization

    def pairing(self, x, y):
        return self.integrate(x * y)

    def pairing_matrix(self, d):
        """Gram matrix between standard monomials of degree d and of degree top - d."""
        left = self.graded_basis(d)
        right = self.graded_basis(self.top_degree - d)
        return [[self.pairing(Poly.monomial(m), Poly.monomial(n)) for n in right] for m in left]

    def is_poincare_duality(self):
        for d in range(self.top_degree + 1):
            mat = self.pairing_matrix(d)
            n = len(mat)
            if n != len(self.graded_basis(self.top_degree - d)):
                return False
            if n and rank(mat) != n:
                return False
        return True

    def __repr__(self):
        return f"InvariantRing(g={self.genus}, top={format_monomial(self.top_monomial)})"


@lru_cache(maxsize=None)
def invariant_ring(g):
    return InvariantRing(g)


def poincare_pairing(ring, x, y):
    return ring.pairing(x, y)


def expected_invariant_series(g):
    """Closed form (1-t^g)(1-t^{g+1})(1-t^{g+2}) / ((1-t)(1-t^2)(1-t^3))."""
    return complete_intersection_series((g, g + 1, g + 2), (1, 2, 3))


def primitive_dimension(g, k):
    """dim of the primitive part of the k-th exterior power of a 2g-dimensional space."""
    return comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)


def _invariant_polynomial(r):
    if r == 1:
        return {0: 1}
    return invariant_ring(r).hilbert_series().as_polynomial()


def full_poincare_polynomial(g):
    """Poincare polynomial of H*(M) in the real cohomological degree, {degree: Betti number}."""
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    total = {}
    for k in range(g):
        factor = _invariant_polynomial(g - k)
        dim = primitive_dimension(g, k)
        shifted = {3 * k + 2 * d: dim * c for d, c in factor.items()}
        total = tpoly_add(total, shifted)
    return total


def ring_json(g):
    """Plain-data description of Q[a, b, g]/I_g."""
    ring = invariant_ring(g)
    series = ring.hilbert_series().as_polynomial()
    return {
        "genus": g,
        "generators": [["a", 1], ["b", 2], ["g", 3]],
        "relations": [str(q) for q in ring.relations],
        "hilbert": [series.get(d, 0) for d in range(max(series) + 1)],
    }
