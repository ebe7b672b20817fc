"""Formal sums of untwisted polynomials and twisted-sector generators.

The untwisted part is a polynomial in a, b, g and possibly Q.  The twisted part
maps each sector generator to a coefficient, itself a polynomial in Q only.
"""

from fractions import Fraction
from numbers import Rational

from .polynomial import (
    DEFAULT_ORDER,
    ONE_MONOMIAL,
    Poly,
    format_fraction,
    format_monomial,
    format_terms,
    monomial_degree,
)
from .sectors import SectorGenerator

# algebraic degree of Q: 2 against untwisted classes, 1 next to twisted ones
UNTWISTED_Q_WEIGHT = 2
TWISTED_Q_WEIGHT = 1


def _q_only(p):
    extra = p.variables() - {"Q"}
    if extra:
        raise ValueError(f"twisted coefficient {p} may only involve Q, found {sorted(extra)}")
    return p


class OrbifoldClass:
    __slots__ = ("genus", "untwisted", "_twisted", "_hash")

    def __init__(self, genus, untwisted=None, twisted=None):
        self.genus = genus
        if untwisted is None:
            untwisted = Poly()
        elif not isinstance(untwisted, Poly):
            untwisted = Poly.constant(untwisted)
        self.untwisted = untwisted
        clean = {}
        for x, c in (twisted or {}).items():
            if not isinstance(x, SectorGenerator):
                raise TypeError(f"expected a SectorGenerator, got {x!r}")
            if x.genus != genus:
                raise ValueError(f"generator {x} has genus {x.genus}, expected {genus}")
            c = c if isinstance(c, Poly) else Poly.constant(c)
            c = _q_only(c)
            if c:
                clean[x] = clean.get(x, Poly()) + c
        self._twisted = {x: c for x, c in clean.items() if c}
        self._hash = None

    @classmethod
    def unit(cls, genus):
        return cls(genus, Poly.constant(1))

    @classmethod
    def sector(cls, x, coefficient=1):
        return cls(x.genus, None, {x: coefficient})

    @property
    def twisted(self):
        return dict(self._twisted)

    def twisted_items(self):
        return sorted(self._twisted.items())

    def is_zero(self):
        return not self.untwisted and not self._twisted

    def __bool__(self):
        return not self.is_zero()

    def has_q(self):
        return "Q" in self.untwisted.variables() or any(c.variables() for c in self._twisted.values())

    def specialize_q(self, value=0):
        return OrbifoldClass(
            self.genus,
            self.untwisted.substitute("Q", value),
            {x: c.substitute("Q", value) for x, c in self._twisted.items()},
        )

    def _check(self, other):
        if not isinstance(other, OrbifoldClass):
            raise TypeError(f"expected OrbifoldClass, got {type(other).__name__}")
        if other.genus != self.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other):
        self._check(other)
        tw = dict(self._twisted)
        for x, c in other._twisted.items():
            tw[x] = tw.get(x, Poly()) + c
        return OrbifoldClass(self.genus, self.untwisted + other.untwisted, tw)

    def __neg__(self):
        return OrbifoldClass(self.genus, -self.untwisted, {x: -c for x, c in self._twisted.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by a rational number or a polynomial in Q."""
        if isinstance(c, (int, Rational)):
            c = Poly.constant(c)
        _q_only(c)
        return OrbifoldClass(self.genus, self.untwisted * c, {x: v * c for x, v in self._twisted.items()})

    def __eq__(self, other):
        if not isinstance(other, OrbifoldClass):
            return NotImplemented
        return (self.genus, self.untwisted, self._twisted) == (other.genus, other.untwisted, other._twisted)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.genus, self.untwisted, frozenset(self._twisted.items())))
        return self._hash

    # grading

    def term_degrees(self, q_untwisted=UNTWISTED_Q_WEIGHT, q_twisted=TWISTED_Q_WEIGHT):
        """Algebraic degree of every term (real degree is twice this)."""
        out = []
        w_u = (1, 2, 3, q_untwisted)
        w_t = (1, 2, 3, q_twisted)
        for m in self.untwisted.monomials():
            out.append(monomial_degree(m, w_u))
        for x, c in self._twisted.items():
            for m in c.monomials():
                out.append(Fraction(x.real_degree, 2) + monomial_degree(m, w_t))
        return out

    def real_degrees(self, **kw):
        return {2 * d for d in self.term_degrees(**kw)}

    def is_homogeneous(self, **kw):
        return len(set(self.term_degrees(**kw))) <= 1

    # text

    def format(self, unicode=False):
        terms = [(c, format_monomial(m, unicode)) for m, c in self.untwisted.sorted_terms(DEFAULT_ORDER)]
        for x, coeff in self.twisted_items():
            for m, c in coeff.sorted_terms(DEFAULT_ORDER):
                body = str(x)
                if m != ONE_MONOMIAL:
                    body = f"{body}*{format_monomial(m, unicode)}"
                terms.append((c, body))
        return format_terms(terms, unicode)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"OrbifoldClass(g={self.genus}, {self.format()!r})"


def format_scalar(c):
    return format_fraction(Fraction(c))
