"""Buchberger's algorithm, normal forms and graded bases for homogeneous ideals.

Orders are weighted grevlex (see ``MonomialOrder``).  Every ideal carries the
order it was built with, hence its weight table, and the variables it lives in.
"""

import itertools
import threading

from .polynomial import (
    ALPHA_LAST_ORDER,
    NVARS,
    VARIABLES,
    Poly,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_DEGREE_CAP = 64


class DegreeCapExceeded(RuntimeError):
    pass


class VariableMismatch(ValueError):
    """A polynomial uses a variable the ideal does not know about."""


class InhomogeneousGenerator(ValueError):
    pass


def reduce(p, basis, order, leads=None):
    """Full reduction of p by the polynomial list basis; returns the remainder.

    ``leads`` may carry the precomputed [(leading term, f)] list for basis.
    """
    if not basis or not p:
        return p
    if leads is None:
        leads = [(f.leading_term(order), f) for f in basis]
    key = order.key
    work = dict(p.items())
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for (lm, lc), f in leads:
            if monomial_divides(lm, m):
                q = monomial_div(m, lm)
                factor = c / lc
                for n, d in f.items():
                    if n == lm:
                        continue
                    k = monomial_mul(n, q)
                    v = work.get(k, 0) - factor * d
                    if v:
                        work[k] = v
                    else:
                        work.pop(k, None)
                break
        else:
            rem[m] = c
    return Poly._raw(rem)


def spoly(f, g, order):
    (lf, cf), (lg, cg) = f.leading_term(order), g.leading_term(order)
    lcm = monomial_lcm(lf, lg)
    return f.mul_term(monomial_div(lcm, lf), 1 / cf) - g.mul_term(monomial_div(lcm, lg), 1 / cg)


def buchberger(gens, order=ALPHA_LAST_ORDER, degree_cap=DEFAULT_DEGREE_CAP):
    """Return the reduced Groebner basis of gens, sorted by leading monomial."""
    weights = order.weights
    basis = []
    for f in gens:
        f = reduce(f, basis, order)
        if f:
            basis.append(f.monic(order))
    lead = lambda f: f.leading_monomial(order)
    pairs = set(itertools.combinations(range(len(basis)), 2))

    def pair_degree(p):
        return monomial_degree(monomial_lcm(lead(basis[p[0]]), lead(basis[p[1]])), weights)

    while pairs:
        i, j = min(pairs, key=lambda p: (pair_degree(p), p))
        pairs.remove((i, j))
        li, lj = lead(basis[i]), lead(basis[j])
        lcm = monomial_lcm(li, lj)
        if lcm == monomial_mul(li, lj):
            continue  # coprime leading monomials
        if any(
            k not in (i, j)
            and monomial_divides(lead(basis[k]), lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        if monomial_degree(lcm, weights) > degree_cap:
            raise DegreeCapExceeded(
                f"S-polynomial of degree {monomial_degree(lcm, weights)} exceeds cap {degree_cap}"
            )
        h = reduce(spoly(basis[i], basis[j], order), basis, order)
        if h:
            basis.append(h.monic(order))
            n = len(basis) - 1
            pairs |= {(k, n) for k in range(n)}
    return _interreduce(basis, order)


def _interreduce(basis, order):
    lead = lambda f: f.leading_monomial(order)
    minimal = []
    for f in sorted(basis, key=lambda f: order.key(lead(f))):
        if not any(monomial_divides(lead(h), lead(f)) for h in minimal):
            minimal.append(f)
    reduced = []
    for i, f in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm, lc = f.leading_term(order)
        tail = reduce(f - Poly.monomial(lm, lc), others, order)
        reduced.append((Poly.monomial(lm, lc) + tail).monic(order))
    return sorted(reduced, key=lambda f: order.key(lead(f)))


class IdealPresentation:
    """An ideal of Q[a, b, g, Q] restricted to the given variables.

    The Groebner basis is computed lazily on first use and cached; the lock keeps
    the computation single-owner when the object is shared between threads.
    """

    def __init__(self, generators, variables=("a", "b", "g"), order=ALPHA_LAST_ORDER,
                 degree_cap=DEFAULT_DEGREE_CAP):
        self.variables = tuple(v for v in VARIABLES if v in variables)
        self.order = order
        self.weights = order.weights
        self.degree_cap = degree_cap
        gens = []
        for f in generators:
            f = f if isinstance(f, Poly) else Poly.constant(f)
            self._check_variables(f)
            gens.append(f)
        self.generators = tuple(gens)
        self._basis = None
        self._leads = None
        self._lock = threading.Lock()

    def _check_variables(self, p):
        extra = p.variables() - set(self.variables)
        if extra:
            raise VariableMismatch(
                f"polynomial {p} uses {sorted(extra)} outside ideal variables {list(self.variables)}"
            )

    @property
    def basis(self):
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    self._basis = tuple(buchberger(self.generators, self.order, self.degree_cap))
        return self._basis

    def set_basis(self, basis):
        """Install a known reduced Groebner basis (e.g. from a cache)."""
        with self._lock:
            self._basis = tuple(basis)
            self._leads = None

    def leading_monomials(self):
        return [f.leading_monomial(self.order) for f in self.basis]

    def normal_form(self, p):
        self._check_variables(p)
        if self._leads is None:
            self._leads = [(f.leading_term(self.order), f) for f in self.basis]
        return reduce(p, self.basis, self.order, self._leads)

    def contains(self, p):
        return not self.normal_form(p)

    def is_standard(self, m):
        return not any(monomial_divides(lm, m) for lm in self.leading_monomials())

    def graded_basis(self, d):
        return [m for m in monomials_of_degree(d, self.variables, self.order) if self.is_standard(m)]

    def check_homogeneous(self):
        for f in self.generators:
            if not f.is_homogeneous(self.weights):
                raise InhomogeneousGenerator(f"generator {f} is not homogeneous for weights {self.weights}")

    def __repr__(self):
        return f"IdealPresentation({[str(f) for f in self.generators]}, {self.order.describe()})"


def groebner(gens, variables=("a", "b", "g"), order=ALPHA_LAST_ORDER, degree_cap=DEFAULT_DEGREE_CAP):
    """Build an ideal presentation and compute its reduced Groebner basis eagerly."""
    ideal = IdealPresentation(gens, variables, order, degree_cap)
    ideal.basis
    return ideal


def normal_form(p, ideal):
    return ideal.normal_form(p)


def graded_basis(ideal, d):
    if d < 0:
        raise ValueError("degree must be non-negative")
    return ideal.graded_basis(d)


def monomials_of_degree(d, variables=("a", "b", "g"), order=ALPHA_LAST_ORDER):
    """All monomials in the given variables of weighted degree d, descending order."""
    weights = order.weights
    idx = [VARIABLES.index(v) for v in variables]
    out = []

    def rec(k, remaining, exps):
        if k == len(idx):
            if remaining == 0:
                out.append(tuple(exps))
            return
        w = weights[idx[k]]
        for e in range(remaining // w + 1):
            exps[idx[k]] = e
            rec(k + 1, remaining - e * w, exps)
        exps[idx[k]] = 0

    if d >= 0:
        rec(0, d, [0] * NVARS)
    return sorted(out, key=order.key, reverse=True)
