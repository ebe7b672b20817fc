"""Closed-form dimension counts and the Jacobian-side degree-one evaluator.

Nothing here computes geometry.  The dimension formulas are linear in g, and
the evaluator expands (4w + X)^n1 X^(2 n2 + 2) formally, trading powers of X
for powers of w by X^(2g-1+i) = (-8)^i / i! w^i.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial


class StackyModel(Enum):
    PlainP1 = "P1"
    P12 = "P(1,2)"
    P22 = "P_{2,2}"


def _check_ages(g, ages):
    for a in ages:
        if a not in (0, g - 1):
            raise ValueError(f"age {a} is neither 0 nor g-1 = {g - 1}")


def virtual_dim_M(g, n_marks, e, ages, half_degree=False):
    """Expected dimension of degree-e orbifold stable maps to [M/Gamma] with n marks.

    With ``half_degree`` the degree term is e rather than 2e, for curves whose
    local monodromy halves the degree.
    """
    if e < 0:
        raise ValueError("degree must be non-negative")
    _check_ages(g, ages)
    return (3 * g - 6) + n_marks + (e if half_degree else 2 * e) - sum(ages)


def virtual_dim_N(g, e, ages):
    """Expected dimension of three-pointed degree-e maps to the moduli space N."""
    if e < 0:
        raise ValueError("degree must be non-negative")
    _check_ages(g, ages)
    return (2 * g - 4) + 3 + g * e - sum(ages)


def nodal_locus_dim(g):
    """Two-pointed maps with both marks twisted: (3g-6) + 2 - 2(g-1) = g - 2."""
    return virtual_dim_M(g, 2, 0, (g - 1, g - 1))


@dataclass(frozen=True)
class _RRData:
    # O(k) twisted by a line bundle of slope tau, integrated against h
    k: int
    tau: Fraction
    h_integral: Fraction
    stacky: tuple


_RR = {
    StackyModel.PlainP1: _RRData(1, Fraction(1), Fraction(1), ()),
    StackyModel.P12: _RRData(1, Fraction(3, 2), Fraction(1, 2), (Fraction(1, 2),)),
    StackyModel.P22: _RRData(2, Fraction(2), Fraction(1, 4), (Fraction(1), Fraction(1))),
}


def extension_rank(model, g):
    """Rank N of the bundle of extensions over the Jacobian.

    Orbifold Riemann-Roch: chi = -(k + tau) g int h + sum_p c_p g / 2, with no
    global sections, so N = -chi.
    """
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    d = _RR[StackyModel(model)]
    chi = -(d.k + d.tau) * g * d.h_integral + sum(c * g / 2 for c in d.stacky)
    n = -chi
    if n.denominator != 1:
        raise ArithmeticError(f"non-integral extension rank {n}")
    return int(n)


def moduli_dim(model, g):
    """Dimension of the space of extensions: a P^(N-1)-bundle over J, or J itself."""
    n = extension_rank(model, g)
    return g if n == 0 else (n - 1) + g


# Jacobian side


@dataclass(frozen=True)
class JacobianMonomial:
    p: int
    x: int
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        if self.p < 0 or self.x < 0:
            raise ValueError("exponents must be non-negative")


class UnsupportedFeature(NotImplementedError):
    pass


def expand(g, n1, n2):
    """Terms of (4w + X)^n1 X^(2 n2 + 2) as JacobianMonomials."""
    extra = 2 * n2 + 2
    return [JacobianMonomial(j, n1 - j + extra, Fraction(comb(n1, j) * 4 ** j)) for j in range(n1 + 1)]


def substitute_x(g, x):
    """X^x as (power of w, coefficient); None when it vanishes (x < 2g - 1)."""
    i = x - (2 * g - 1)
    if i < 0:
        return None
    return i, Fraction((-8) ** i, factorial(i))


def donaldson_evaluate(g, n1, n2, n3=0, omega_top=None):
    """Pairing of (4w + X)^n1 (X^2)^n2 X^2 with [J].

    ``omega_top`` is the value of w^g on [J], g! by default.  Inputs off the
    degree n1 + 2 n2 + 2 = 3g - 1 give 0.
    """
    if n3:
        raise UnsupportedFeature("gamma has no expression on the Jacobian")
    if min(n1, n2) < 0:
        raise ValueError("exponents must be non-negative")
    if n1 + 2 * n2 + 2 != 3 * g - 1:
        return Fraction(0)
    top = Fraction(factorial(g) if omega_top is None else omega_top)
    total = Fraction(0)
    for term in expand(g, n1, n2):
        sub = substitute_x(g, term.x)
        if sub is None:
            continue
        i, c = sub
        if term.p + i == g:
            total += term.coefficient * c
    return total * top


def gw_sign(g):
    return -1 if (g - 1) % 2 else 1


def gw_value(g, n1, n2, n3=0, omega_top=None):
    """GW-side number: the Jacobian value times (-1)^(g-1)."""
    return gw_sign(g) * donaldson_evaluate(g, n1, n2, n3, omega_top)
