"""Chen-Ruan cohomology of [M/Gamma] with the degree-zero orbifold cup product.

Products split by the sector pair:

* untwisted x untwisted: normal form in Q[a, b, g]/I_g;
* untwisted x twisted: restriction to the sector, i.e. a degree shift that dies
  once it passes the top degree 2(g-1);
* twisted x twisted, same sector: the untwisted class Omega pinned down by its
  pairing against a power of alpha;
* twisted x twisted, different sectors: nonzero only for two sector units with
  Weil pairing 1, giving 2^{2g-2} times the top class of the sum sector.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .classes import OrbifoldClass
from .classical import InvariantRing, full_poincare_polynomial, primitive_dimension
from .hilbert import tpoly_add
from .linalg import matmul, nullspace, rank, solve, transpose
from .polynomial import Poly, format_monomial
from .sectors import (
    SectorGenerator,
    group_order,
    sector_generators,
    sector_rank,
    shift_generator,
    weil_pairing,
)

# sector-degree shift produced by each of a, b, g acting on a twisted class
SECTOR_SHIFT = (2, 4, 6)


class ChenRuanRing:
    """The Sp-invariant Chen-Ruan ring of [M/Gamma] for one genus."""

    def __init__(self, g, normalization=1, invariant=None):
        self.genus = g
        self.invariant = invariant or InvariantRing(g, normalization)
        self.order = group_order(g)
        self._omega = {}

    # building blocks

    def unit(self):
        return OrbifoldClass.unit(self.genus)

    def untwisted(self, p):
        return OrbifoldClass(self.genus, p)

    def reduce(self, x):
        """Normal form of the untwisted part."""
        return OrbifoldClass(self.genus, self.reduce_untwisted(x.untwisted), x.twisted)

    def reduce_untwisted(self, p):
        return self.invariant.normal_form(p)

    def multiply_untwisted(self, p, q):
        return self.invariant.normal_form(p * q)

    def act_on_sector(self, p, x):
        """Untwisted polynomial p times the sector generator x (cases 2 and 3)."""
        out = OrbifoldClass(self.genus)
        for m, c in self.reduce_untwisted(p).items():
            y = self.shift(m, x)
            if y is not None:
                out = out + OrbifoldClass.sector(y, c)
        return out

    def shift(self, m, x):
        step = sum(e * w for e, w in zip(m[:3], SECTOR_SHIFT))
        if m[3]:
            raise ValueError("the classical cup product has no quantum parameter")
        return shift_generator(x, step)

    def omega(self, u):
        """Untwisted class of algebraic degree u/2 + 2(g-1) pairing to 1 with alpha^k.

        k = (g-1) - u/2 is the complementary degree; Omega pairs to 0 with the
        other standard monomials of degree k.  Under the orbifold pairing this
        is the value 1/|Gamma|.
        """
        if u not in self._omega:
            g = self.genus
            ring = self.invariant
            top = 2 * (g - 1) + u // 2
            k = ring.top_degree - top
            rows = ring.graded_basis(top)
            cols = ring.graded_basis(k)
            target = (k, 0, 0, 0)
            if target not in cols:
                raise ArithmeticError(f"alpha^{k} is not a standard monomial")
            # Omega = sum_m c_m m with <Omega, n> = [n == alpha^k] for every column n
            matrix = [[ring.pairing(Poly.monomial(m), Poly.monomial(n)) for m in rows] for n in cols]
            rhs = [Fraction(int(n == target)) for n in cols]
            coeffs = solve(matrix, rhs)
            self._omega[u] = Poly({m: c for m, c in zip(rows, coeffs)})
        return self._omega[u]

    def twisted_product(self, x, y):
        """Product of two sector generators."""
        g = self.genus
        if x.kappa == y.kappa:
            if x.s + y.s <= 2 * (g - 1):
                return OrbifoldClass(g, self.omega(x.s + y.s))
            return OrbifoldClass(g)
        if weil_pairing(x.kappa, y.kappa) == 1 and x.s == 0 and y.s == 0:
            z = SectorGenerator(x.kappa + y.kappa, 2 * (g - 1), 1)
            return OrbifoldClass.sector(z, 2 ** (2 * g - 2))
        return OrbifoldClass(g)

    # public operations

    def product(self, x, y):
        x._check(y)
        if x.genus != self.genus:
            raise ValueError(f"class of genus {x.genus} in a genus {self.genus} ring")
        out = OrbifoldClass(self.genus)
        if x.untwisted and y.untwisted:
            out = OrbifoldClass(self.genus, self.multiply_untwisted(x.untwisted, y.untwisted))
        for gen, c in y.twisted_items():
            if x.untwisted:
                out = out + self.act_on_sector(x.untwisted, gen).scale(c)
        for gen, c in x.twisted_items():
            if y.untwisted:
                out = out + self.act_on_sector(y.untwisted, gen).scale(c)
        for gx, cx in x.twisted_items():
            for gy, cy in y.twisted_items():
                out = out + self.twisted_product(gx, gy).scale(cx * cy)
        return out

    def pairing(self, x, y):
        """Orbifold Poincare pairing; sectors pair only with themselves."""
        x._check(y)
        if x.has_q() or y.has_q():
            raise ValueError("the orbifold pairing is defined on classes without Q")
        total = self.invariant.pairing(x.untwisted, y.untwisted) / self.order
        g = self.genus
        ytw = y.twisted
        for gen, c in x.twisted_items():
            dual = SectorGenerator(gen.kappa, 2 * (g - 1) - gen.s, gen.index)
            if dual in ytw:
                total += c.coefficient((0, 0, 0, 0)) * ytw[dual].coefficient((0, 0, 0, 0)) / self.order
        return total

    def generators(self, include_untwisted_basis=True):
        """Additive basis: standard monomials of Q[a,b,g]/I_g, then all sector generators."""
        out = []
        if include_untwisted_basis:
            for d in range(self.invariant.top_degree + 1):
                out += [OrbifoldClass(self.genus, Poly.monomial(m)) for m in self.invariant.graded_basis(d)]
        out += [OrbifoldClass.sector(x) for x in sector_generators(self.genus)]
        return out

    def structure_table(self, gens=None):
        gens = gens if gens is not None else self.generators()
        rows = []
        for i, x in enumerate(gens):
            for y in gens[i:]:
                rows.append({"left": str(x), "right": str(y), "result": result_terms(self.product(x, y))})
        return rows


def result_terms(z):
    """[term, coefficient] pairs with exact fraction strings."""
    out = []
    for m, c in z.untwisted.sorted_terms():
        out.append([format_monomial(m) or "1", _frac(c)])
    for x, coeff in z.twisted_items():
        for m, c in coeff.sorted_terms():
            body = str(x) if not any(m) else f"{x}*{format_monomial(m)}"
            out.append([body, _frac(c)])
    return out


def _frac(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


@lru_cache(maxsize=None)
def chen_ruan_ring(g):
    return ChenRuanRing(g)


def cr_product(x, y):
    return chen_ruan_ring(x.genus).product(x, y)


def orbifold_pairing(x, y):
    return chen_ruan_ring(x.genus).pairing(x, y)


def cr_poincare_polynomial(g):
    """{real degree: dimension} of the full Chen-Ruan cohomology."""
    twisted = {}
    n = group_order(g) - 1
    for s in range(0, 2 * g - 1, 2):
        twisted[s + 2 * (g - 1)] = twisted.get(s + 2 * (g - 1), 0) + n * sector_rank(g, s)
    return tpoly_add(full_poincare_polynomial(g), twisted)


# Full pairing matrix, including the primitive classes built from H^3(M).


def _wedge_basis(g, k):
    return list(combinations(range(2 * g), k))


def _symplectic(i, j, g):
    if j == i + g:
        return 1
    if i == j + g:
        return -1
    return 0


def _det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def primitive_subspace(g, k):
    """Basis (as coordinate vectors on k-subsets) of the kernel of contraction by omega."""
    src = _wedge_basis(g, k)
    if k < 2:
        return [[Fraction(int(i == j)) for i in range(len(src))] for j in range(len(src))]
    dst = {I: n for n, I in enumerate(_wedge_basis(g, k - 2))}
    rows = [[Fraction(0)] * len(src) for _ in dst]
    for col, I in enumerate(src):
        for i in range(g):
            if i in I and i + g in I:
                # remove e_i then e_{i+g}, each with the sign of its position
                p = I.index(i)
                rest = I[:p] + I[p + 1:]
                q = rest.index(i + g)
                J = rest[:q] + rest[q + 1:]
                rows[dst[J]][col] += (-1) ** (p + q)
    return nullspace(rows, len(src))


def wedge_gram(g, k):
    src = _wedge_basis(g, k)
    return [[_det([[_symplectic(i, j, g) for j in J] for i in I]) for J in src] for I in src]


def full_pairing_matrix(g, normalization=1):
    """Gram matrix of the orbifold pairing on the whole Chen-Ruan space.

    Block diagonal over (primitive exterior power k) x (ring Q[a,b,g]/I_{g-k}),
    plus the twisted sectors.  Returns (labels, matrix).
    """
    order = group_order(g)
    labels = []
    blocks = []
    for k in range(g):
        prim = primitive_subspace(g, k)
        assert len(prim) == primitive_dimension(g, k)
        gram = wedge_gram(g, k)
        pk = transpose(prim) if prim else []
        prim_gram = matmul(matmul(prim, gram), pk) if prim else []
        r = g - k
        if r == 1:
            ring_basis = [(0, 0, 0, 0)]
            ring_pair = [[Fraction(normalization)]]
        else:
            ring = InvariantRing(r, normalization)
            ring_basis = [m for d in range(ring.top_degree + 1) for m in ring.graded_basis(d)]
            ring_pair = [[ring.pairing(Poly.monomial(m), Poly.monomial(n)) for n in ring_basis] for m in ring_basis]
        block = [
            [prim_gram[i][j] * ring_pair[s][t] / order for j in range(len(prim)) for t in range(len(ring_basis))]
            for i in range(len(prim))
            for s in range(len(ring_basis))
        ]
        labels += [f"P{k}[{i}]*{format_monomial(m) or '1'}" for i in range(len(prim)) for m in ring_basis]
        blocks.append(block)
    twisted = sector_generators(g)
    index = {x: n for n, x in enumerate(twisted)}
    tw_block = [[Fraction(0)] * len(twisted) for _ in twisted]
    for x in twisted:
        dual = SectorGenerator(x.kappa, 2 * (g - 1) - x.s, x.index)
        tw_block[index[x]][index[dual]] = Fraction(1, order)
    labels += [str(x) for x in twisted]
    blocks.append(tw_block)
    n = sum(len(b) for b in blocks)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            matrix[off + i][off:off + len(row)] = row
        off += len(b)
    return labels, matrix


def full_pairing_rank(g):
    labels, matrix = full_pairing_matrix(g)
    return len(labels), rank(matrix)
