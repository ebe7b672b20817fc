"""Sparse polynomials with exact rational coefficients in the variables a, b, g, Q.

The variables stand for alpha (degree 1), beta (degree 2), gamma (degree 3)
and the quantum parameter Q, whose degree depends on context.  A monomial is a
tuple of four non-negative exponents.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import NamedTuple

VARIABLES = ("a", "b", "g", "Q")
UNICODE_NAMES = ("α", "β", "γ", "\U0001d514")
NVARS = len(VARIABLES)

# Q has algebraic degree 2 for untwisted relations; the twisted products use 1.
DEFAULT_WEIGHTS = (1, 2, 3, 2)
TWISTED_WEIGHTS = (1, 2, 3, 1)

ONE_MONOMIAL = (0, 0, 0, 0)


class MonomialOrder(NamedTuple):
    """Weighted graded reverse lexicographic order.

    ``priority`` lists variable indices from the largest variable to the smallest.
    """

    weights: tuple = DEFAULT_WEIGHTS
    priority: tuple = (0, 1, 2, 3)

    def key(self, m):
        # larger key = larger monomial
        return _order_key(self.weights, self.priority, m)

    def with_weights(self, weights):
        return MonomialOrder(tuple(weights), self.priority)

    def describe(self):
        names = " > ".join(VARIABLES[i] for i in self.priority)
        return f"grevlex {names}, weights {self.weights}"


# a > b > g > Q: used for display and for the table-mode ring.
DEFAULT_ORDER = MonomialOrder()
# g > b > a > Q: alpha is the smallest ring variable, so powers of alpha stay standard.
ALPHA_LAST_ORDER = MonomialOrder(DEFAULT_WEIGHTS, (2, 1, 0, 3))


@lru_cache(maxsize=1 << 16)
def _order_key(weights, priority, m):
    return (monomial_degree(m, weights), tuple(-m[i] for i in reversed(priority)))


def monomial_degree(m, weights=DEFAULT_WEIGHTS):
    return sum(e * w for e, w in zip(m, weights))


def grevlex_key(m, order=DEFAULT_ORDER):
    return order.key(m)


def monomial_mul(m, n):
    return tuple(x + y for x, y in zip(m, n))


def monomial_div(m, n):
    """Return m / n, assuming n divides m."""
    return tuple(x - y for x, y in zip(m, n))


def monomial_divides(n, m):
    return all(x <= y for x, y in zip(n, m))


def monomial_lcm(m, n):
    return tuple(max(x, y) for x, y in zip(m, n))


def variables_of(m):
    return frozenset(VARIABLES[i] for i, e in enumerate(m) if e)


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Poly:
    """Immutable polynomial over Q, stored as a mapping monomial -> Fraction.

    Zero coefficients are never stored, so the zero polynomial is the empty map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in dict(terms).items():
                if len(m) != NVARS or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m!r}")
                c = _coerce(c)
                if c:
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already validated, coefficients Fractions; zeros are dropped here
        p = object.__new__(cls)
        p._terms = {m: c for m, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({tuple(m): c})

    @classmethod
    def var(cls, name, power=1):
        exps = [0] * NVARS
        exps[VARIABLES.index(name)] = power
        return cls({tuple(exps): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m):
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def variables(self):
        out = set()
        for m in self._terms:
            out |= variables_of(m)
        return frozenset(out)

    def degrees(self, weights=DEFAULT_WEIGHTS):
        return {monomial_degree(m, weights) for m in self._terms}

    def is_homogeneous(self, weights=DEFAULT_WEIGHTS):
        return len(self.degrees(weights)) <= 1

    def degree(self, weights=DEFAULT_WEIGHTS):
        """Largest degree of a term; -1 for the zero polynomial."""
        return max(self.degrees(weights), default=-1)

    def sorted_terms(self, order=DEFAULT_ORDER):
        """Terms in descending monomial order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order=DEFAULT_ORDER):
        return max(self._terms, key=order.key)

    def leading_term(self, order=DEFAULT_ORDER):
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def monic(self, order=DEFAULT_ORDER):
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Poly()
        return Poly._raw({m: v * c for m, v in self._terms.items()})

    def mul_term(self, m, c=1):
        c = _coerce(c)
        return Poly._raw({monomial_mul(n, m): v * c for n, v in self._terms.items()})

    def substitute(self, name, value):
        """Replace one variable by a rational constant."""
        i = VARIABLES.index(name)
        value = _coerce(value)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            n = m[:i] + (0,) + m[i + 1:]
            out[n] = out.get(n, 0) + c * value ** e
        return Poly(out)

    def homogeneous_part(self, d, weights=DEFAULT_WEIGHTS):
        return Poly({m: c for m, c in self._terms.items() if monomial_degree(m, weights) == d})

    # arithmetic

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for m, c in self._terms.items():
            for n, d in other._terms.items():
                k = monomial_mul(m, n)
                out[k] = out.get(k, 0) + c * d
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_fraction(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m, unicode=False):
    names = UNICODE_NAMES if unicode else VARIABLES
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(terms, unicode=False):
    """Join (coefficient, body) pairs as ``x + y - z``; an empty body means a constant."""
    out = []
    for c, body in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not body:
            text = format_fraction(a)
        elif a == 1:
            text = body
        else:
            text = f"{format_fraction(a)}*{body}"
        if not out:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out) if out else "0"


def format_poly(p, order=DEFAULT_ORDER, unicode=False):
    """Canonical text form, terms in descending monomial order."""
    return format_terms(
        [(c, format_monomial(m, unicode)) for m, c in p.sorted_terms(order)], unicode
    )


ALPHA = Poly.var("a")
BETA = Poly.var("b")
GAMMA = Poly.var("g")
QPARAM = Poly.var("Q")
ONE = Poly.constant(1)
