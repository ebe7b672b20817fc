"""Hilbert series of graded quotients Q[vars]/I as rational functions in t."""

from dataclasses import dataclass
from fractions import Fraction

from .groebner import monomials_of_degree
from .linalg import rank
from .polynomial import ALPHA_LAST_ORDER, VARIABLES, monomial_degree, monomial_divides, monomial_mul


def tpoly_mul(p, q):
    out = {}
    for i, x in p.items():
        for j, y in q.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def tpoly_add(p, q, sign=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def tpoly_format(p, var="t"):
    """Format {degree: coefficient} as ``1 + 16t^2 + ...`` (ascending degree)."""
    if not p:
        return "0"
    out = []
    for d in sorted(p):
        c = p[d]
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + (var if d == 1 else f"{var}^{d}")
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(out)


def _minimalize(monos):
    out = []
    for m in sorted(set(monos), key=sum):
        if not any(monomial_divides(n, m) for n in out):
            out.append(m)
    return out


def _numerator(monos, weights):
    """K-polynomial numerator of Q[x]/(monos) by the colon-ideal recursion."""
    monos = _minimalize(monos)
    if not monos:
        return {0: 1}
    *rest, m = monos
    colon = [tuple(max(x - y, 0) for x, y in zip(n, m)) for n in rest]
    d = monomial_degree(m, weights)
    shifted = {k + d: v for k, v in _numerator(colon, weights).items()}
    return tpoly_add(_numerator(rest, weights), shifted, sign=-1)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / prod_w (1 - t^w) for the weights in ``denominator``."""

    numerator: tuple  # coefficients, index = degree
    denominator: tuple  # one weight per variable

    @classmethod
    def from_dict(cls, num, denominator):
        top = max(num, default=-1)
        return cls(tuple(num.get(i, 0) for i in range(top + 1)), tuple(sorted(denominator)))

    def numerator_dict(self):
        return {i: c for i, c in enumerate(self.numerator) if c}

    def denominator_dict(self):
        out = {0: 1}
        for w in self.denominator:
            out = tpoly_mul(out, {0: 1, w: -1})
        return out

    def coefficients(self, n):
        """First n coefficients of the power series expansion."""
        series = [Fraction(0)] * n
        for i, c in self.numerator_dict().items():
            if i < n:
                series[i] += c
        for w in self.denominator:
            for i in range(w, n):
                series[i] += series[i - w]
        return [int(x) for x in series]

    def coefficient(self, d):
        return self.coefficients(d + 1)[d]

    def as_polynomial(self):
        """Exact division by the denominator; None when the series is infinite."""
        num = {i: Fraction(c) for i, c in self.numerator_dict().items()}
        for w in self.denominator:
            # divide by (1 - t^w): q_i = p_i + q_{i-w}
            if not num:
                break
            top = max(num)
            q = {}
            for i in range(top - w + 1):
                v = num.get(i, 0) + q.get(i - w, 0)
                if v:
                    q[i] = v
            check = tpoly_mul(q, {0: 1, w: -1})
            if tpoly_add(check, num, sign=-1):
                return None
            num = q
        return {i: int(c) for i, c in num.items()}

    def is_polynomial(self):
        return self.as_polynomial() is not None

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        # cross-multiply to compare rational functions
        lhs = tpoly_mul(self.numerator_dict(), other.denominator_dict())
        rhs = tpoly_mul(other.numerator_dict(), self.denominator_dict())
        return lhs == rhs

    def __hash__(self):
        return hash(self.denominator)

    def __str__(self):
        poly = self.as_polynomial()
        if poly is not None:
            return tpoly_format(poly)
        den = "".join(f"(1 - t^{w})" if w > 1 else "(1 - t)" for w in self.denominator)
        return f"({tpoly_format(self.numerator_dict())}) / ({den})"


def hilbert_series(ideal):
    """Hilbert series of the quotient by ideal; generators must be homogeneous."""
    ideal.check_homogeneous()
    weights = [ideal.weights[VARIABLES.index(v)] for v in ideal.variables]
    restricted = [
        tuple(m[VARIABLES.index(v)] for v in ideal.variables) for m in ideal.leading_monomials()
    ]
    return HilbertSeries.from_dict(_numerator(restricted, weights), weights)


def complete_intersection_series(degrees, weights):
    num = {0: 1}
    for d in degrees:
        num = tpoly_mul(num, {0: 1, d: -1})
    return HilbertSeries.from_dict(num, weights)


def component_dimension_by_linear_algebra(generators, d, variables=("a", "b", "g"), order=ALPHA_LAST_ORDER):
    """dim of degree-d part of Q[vars]/(generators), without any Groebner basis.

    The degree-d piece of a homogeneous ideal is spanned by m*f over generators f
    and monomials m of complementary degree; the dimension is the number of
    monomials minus the rank of that spanning set.
    """
    weights = order.weights
    target = monomials_of_degree(d, variables, order)
    index = {m: i for i, m in enumerate(target)}
    rows = []
    for f in generators:
        if not f:
            continue
        fd = f.degree(weights)
        if fd > d:
            continue
        for m in monomials_of_degree(d - fd, variables, order):
            row = [0] * len(target)
            for n, c in f.items():
                row[index[monomial_mul(m, n)]] = c
            rows.append(row)
    return len(target) - (rank(rows) if rows else 0)
