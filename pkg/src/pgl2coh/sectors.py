"""The 2-torsion group Gamma = F_2^{2g}, its Weil pairing, and twisted-sector data.

Each nonzero kappa labels a twisted sector whose invariant cohomology sits in
even degrees 0..2(g-1) with C(2(g-1), s) generators in degree s.  Generators are
opaque triples (kappa, s, index).
"""

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import comb


@total_ordering
@dataclass(frozen=True)
class TorsionClass:
    bits: tuple

    def __post_init__(self):
        if len(self.bits) % 2 or any(x not in (0, 1) for x in self.bits):
            raise ValueError(f"expected an even-length bit vector, got {self.bits!r}")

    @classmethod
    def zero(cls, g):
        return cls((0,) * (2 * g))

    @classmethod
    def basis_vector(cls, g, i):
        """e_i for 1 <= i <= 2g."""
        return cls(tuple(int(j == i - 1) for j in range(2 * g)))

    @classmethod
    def parse(cls, text):
        if not re.fullmatch(r"[01]+", text):
            raise ValueError(f"bad bit string {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def genus(self):
        return len(self.bits) // 2

    def is_zero(self):
        return not any(self.bits)

    def __add__(self, other):
        _check_same(self, other)
        return TorsionClass(tuple(x ^ y for x, y in zip(self.bits, other.bits)))

    __sub__ = __add__

    def __lt__(self, other):
        return self.bits < other.bits

    def __str__(self):
        return "".join(map(str, self.bits))


def _check_same(x, y):
    if len(x.bits) != len(y.bits):
        raise ValueError(f"torsion classes of different lengths: {x} and {y}")


def weil_pairing(x, y):
    """Standard symplectic form sum_i x_i y_{i+g} + x_{i+g} y_i mod 2."""
    _check_same(x, y)
    g = x.genus
    u, v = x.bits, y.bits
    return sum(u[i] * v[i + g] + u[i + g] * v[i] for i in range(g)) % 2


def torsion_group(g):
    return [TorsionClass(bits) for bits in itertools.product((0, 1), repeat=2 * g)]


def nonzero_classes(g):
    return [k for k in torsion_group(g) if not k.is_zero()]


def group_order(g):
    return 2 ** (2 * g)


def sector_rank(g, s):
    if not 0 <= s <= 2 * (g - 1):
        raise ValueError(f"sector degree {s} outside [0, {2 * (g - 1)}]")
    return 0 if s % 2 else comb(2 * (g - 1), s)


def sector_total_rank(g):
    return sum(sector_rank(g, s) for s in range(0, 2 * g - 1, 2))


def age(kappa):
    return 0 if kappa.is_zero() else kappa.genus - 1


@total_ordering
@dataclass(frozen=True)
class SectorGenerator:
    """1_kappa h_s, the index-th generator of H^s of the kappa sector."""

    kappa: TorsionClass
    s: int
    index: int = 1

    def __post_init__(self):
        g = self.kappa.genus
        if self.kappa.is_zero():
            raise ValueError("twisted generators need a nonzero torsion class")
        if self.s % 2:
            raise ValueError(f"odd sector degree {self.s}")
        if not 0 <= self.s <= 2 * (g - 1):
            raise ValueError(f"sector degree {self.s} outside [0, {2 * (g - 1)}]")
        if not 1 <= self.index <= sector_rank(g, self.s):
            raise ValueError(f"index {self.index} outside [1, {sector_rank(g, self.s)}]")

    @property
    def genus(self):
        return self.kappa.genus

    @property
    def real_degree(self):
        return self.s + 2 * age(self.kappa)

    @property
    def algebraic_degree(self):
        return (self.genus - 1) + self.s // 2

    def is_top(self):
        return self.s == 2 * (self.genus - 1)

    def sort_key(self):
        return (self.kappa.bits, self.s, self.index)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"t[{self.kappa}]:h{self.s}:{self.index}"


SECTOR_PATTERN = re.compile(r"t\[([01]+)\]:h(\d+):(\d+)")


def parse_sector(text):
    m = SECTOR_PATTERN.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad sector generator {text!r}")
    return SectorGenerator(TorsionClass.parse(m.group(1)), int(m.group(2)), int(m.group(3)))


def sector_generators(g, kappa=None):
    kappas = [kappa] if kappa is not None else nonzero_classes(g)
    return [
        SectorGenerator(k, s, i)
        for k in kappas
        for s in range(0, 2 * g - 1, 2)
        for i in range(1, sector_rank(g, s) + 1)
    ]


def shift_generator(x, step):
    """Image of x under multiplication by a class of sector degree ``step``.

    Lands in degree s + step, keeping the index when the target has room and
    truncating it to the last target generator otherwise; None past the top.
    Since the binomial ranks are unimodal, shifting in several steps agrees with
    a single shift by the total.
    """
    t = x.s + step
    if t > 2 * (x.genus - 1):
        return None
    return SectorGenerator(x.kappa, t, min(x.index, sector_rank(x.genus, t)))


def sector_integral(g, coefficients):
    """Integral over the kappa sector of a class given as {SectorGenerator: coeff}.

    Every top-degree generator integrates to 1/|Gamma|; lower degrees give 0.
    """
    total = Fraction(0)
    for x, c in coefficients.items():
        if x.genus != g:
            raise ValueError("genus mismatch")
        if x.is_top():
            total += Fraction(c)
    return total / group_order(g)
