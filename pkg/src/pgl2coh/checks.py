"""Invariant suites run by ``pgl2coh check``.

Each suite returns a list of CheckResult; suites are independent and may run
in parallel threads.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chen_ruan import ChenRuanRing, cr_poincare_polynomial, full_pairing_rank
from .classes import OrbifoldClass
from .classical import (
    classical_relations,
    expected_invariant_series,
    full_poincare_polynomial,
    invariant_ring,
)
from .expr import parse, to_text
from .gw import StackyModel, donaldson_evaluate, extension_rank, nodal_locus_dim, virtual_dim_M, virtual_dim_N
from .hilbert import component_dimension_by_linear_algebra
from .polynomial import ALPHA, BETA, GAMMA, DEFAULT_WEIGHTS
from .quantum import quantum_relations, quantum_ring, specialize, table_check, twisted_alpha_product
from .sectors import (
    age,
    group_order,
    nonzero_classes,
    sector_generators,
    sector_integral,
    sector_rank,
    sector_total_rank,
    weil_pairing,
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def format(self):
        mark = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{mark} {self.suite}: {self.name}{tail}"


def _palindromic(p):
    top = max(p)
    return all(p.get(d, 0) == p.get(top - d, 0) for d in range(top + 1))


def classical_suite(genera):
    out = []
    for g in genera:
        ring = invariant_ring(g)
        series = ring.hilbert_series()
        out.append(CheckResult("classical", f"g={g} Hilbert series closed form", series == expected_invariant_series(g)))
        dims = ring.dimensions()
        lin = [component_dimension_by_linear_algebra(list(ring.relations), d) for d in range(ring.top_degree + 1)]
        out.append(CheckResult("classical", f"g={g} graded dims by linear algebra", dims == lin, str(dims)))
        out.append(CheckResult("classical", f"g={g} Poincare duality", ring.is_poincare_duality()))
        out.append(CheckResult("classical", f"g={g} full Poincare palindromic", _palindromic(full_poincare_polynomial(g))))
    return out


def sector_suite(genera):
    out = []
    for g in genera:
        ranks = all(sector_rank(g, s) == (comb(2 * (g - 1), s) if s % 2 == 0 else 0) for s in range(2 * g - 1))
        out.append(CheckResult("sectors", f"g={g} sector ranks", ranks))
        out.append(CheckResult("sectors", f"g={g} total rank 2^(2g-3)", sector_total_rank(g) == 2 ** (2 * g - 3)))
        kappa = nonzero_classes(g)[0]
        out.append(CheckResult("sectors", f"g={g} age", age(kappa) == g - 1))
        top = sector_generators(g, kappa)[-1]
        out.append(CheckResult("sectors", f"g={g} top integral", sector_integral(g, {top: 1}) == Fraction(1, group_order(g))))
    return out


def chen_ruan_suite(genera):
    out = []
    for g in genera:
        out.append(CheckResult("chen-ruan", f"g={g} Poincare palindromic", _palindromic(cr_poincare_polynomial(g))))
        if g > 3:
            continue
        ring = ChenRuanRing(g)
        kappas = nonzero_classes(g)
        gens = ring.generators(include_untwisted_basis=True)
        # two sectors suffice for commutativity; case (4) is checked over all pairs of units
        sample = [x for x in gens if not x.twisted or next(iter(x.twisted)).kappa in kappas[:2]]
        comm = all(ring.product(x, y) == ring.product(y, x) for x, y in itertools.combinations(sample, 2))
        out.append(CheckResult("chen-ruan", f"g={g} commutativity", comm))
        graded = all(ring.product(x, y).is_homogeneous() for x, y in itertools.combinations(sample, 2))
        out.append(CheckResult("chen-ruan", f"g={g} graded products", graded))
        ok = True
        for k1, k2 in itertools.combinations(kappas, 2):
            x = OrbifoldClass.sector(sector_generators(g, k1)[0])
            y = OrbifoldClass.sector(sector_generators(g, k2)[0])
            z = ring.product(x, y)
            want = OrbifoldClass(g)
            if weil_pairing(k1, k2):
                want = OrbifoldClass.sector(sector_generators(g, k1 + k2)[-1], 2 ** (2 * g - 2))
            ok &= z == want
        out.append(CheckResult("chen-ruan", f"g={g} case (4) rule", ok))
        if g <= 3:
            n, r = full_pairing_rank(g)
            out.append(CheckResult("chen-ruan", f"g={g} pairing nondegenerate", n == r, f"{r}/{n}"))
    return out


def quantum_suite(genera):
    out = []
    for g in genera:
        rel = quantum_relations(g)
        out.append(CheckResult("quantum", f"g={g} Q=0 limit", tuple(specialize(rel)) == tuple(classical_relations(g))))
        out.append(CheckResult("quantum", f"g={g} homogeneous", all(q.is_homogeneous(DEFAULT_WEIGHTS) for q in rel)))
        ok = True
        for kappa in nonzero_classes(g):
            for x in sector_generators(g, kappa):
                z = twisted_alpha_product(x)
                ok &= z.is_homogeneous() and z.term_degrees()[0] == g + x.s // 2
        out.append(CheckResult("quantum", f"g={g} I_quantum degree audit", ok))
        if g <= 3:
            ring = quantum_ring(g)
            assoc = all(
                ring.product(ring.product(OrbifoldClass(g, x), OrbifoldClass(g, y)), OrbifoldClass(g, z))
                == ring.product(OrbifoldClass(g, x), ring.product(OrbifoldClass(g, y), OrbifoldClass(g, z)))
                for x, y, z in itertools.product((ALPHA, BETA, GAMMA), repeat=3)
            )
            out.append(CheckResult("quantum", f"g={g} untwisted associativity", assoc))
    if 2 in genera:
        rows = table_check()
        out.append(CheckResult("quantum", "g=2 table mode reproduces the table", all(r[-1] for r in rows), f"{len(rows)} lines"))
    return out


def gw_suite(genera):
    out = []
    for g in genera:
        k = g - 1
        dims = (
            virtual_dim_M(g, 3, 1, (0, k, k), half_degree=True) == g
            and virtual_dim_M(g, 2, 1, (k, k), half_degree=True) == g - 1
            and nodal_locus_dim(g) == g - 2
            and virtual_dim_M(g, 3, 1, (0, 0, 0)) == 3 * g - 1
            and virtual_dim_N(g, 1, (0, 0, 0)) == 3 * g - 1
        )
        out.append(CheckResult("gw", f"g={g} dimension formulas", dims))
        ranks = tuple(extension_rank(m, g) for m in StackyModel)
        out.append(CheckResult("gw", f"g={g} extension ranks", ranks == (2 * g, g, 0), str(ranks)))
        off = all(
            donaldson_evaluate(g, n1, n2) == 0
            for n1 in range(3 * g) for n2 in range(2 * g)
            if n1 + 2 * n2 + 2 != 3 * g - 1
        )
        out.append(CheckResult("gw", f"g={g} off-degree vanishing", off))
    if 2 in genera:
        vals = (donaldson_evaluate(2, 3, 0), donaldson_evaluate(2, 1, 1))
        out.append(CheckResult("gw", "g=2 Donaldson values", vals == (-32, 0), ", ".join(map(str, vals))))
    return out


PARSER_CORPUS = (
    "a", "a + b", "a - b - g", "a - (b - g)", "-a^2", "(-a)^2", "2/3*a*b", "a*(b + g)",
    "t[1000]:h0:1", "t[1000]:h2:1*Q", "a*t[0110]:h0:1", "--a", "-(a + b)*Q^3", "((a))",
)


def parser_suite(genera):
    ok = all(parse(to_text(parse(s, 2)), 2) == parse(s, 2) for s in PARSER_CORPUS)
    return [CheckResult("parser", "print/parse round trip", ok, f"{len(PARSER_CORPUS)} expressions")]


SUITES = (classical_suite, sector_suite, chen_ruan_suite, quantum_suite, gw_suite, parser_suite)


def run_checks(genera, jobs=1):
    genera = tuple(genera)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            parts = list(pool.map(lambda suite: suite(genera), SUITES))
    else:
        parts = [suite(genera) for suite in SUITES]
    return [r for part in parts for r in part]
