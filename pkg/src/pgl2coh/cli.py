"""Command line interface: pgl2coh <command> ...

Exit status is 0 on success, 1 when a computation or verification fails and 2
for usage or parse errors.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cache
from .chen_ruan import ChenRuanRing, cr_poincare_polynomial, result_terms
from .classical import InvariantRing, classical_relations, full_poincare_polynomial
from .expr import EvaluationError, ParseError, parse, evaluate
from .gw import UnsupportedFeature, donaldson_evaluate, gw_value
from .hilbert import tpoly_format
from .polynomial import format_poly
from .quantum import (
    SCHEMA_VERSION,
    QuantumOrbifoldPresentation,
    QuantumOrbifoldRing,
    g2_table,
    quantum_relations,
    table_check,
)


class CommandFailed(Exception):
    pass


def frac(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _classical_ring(g):
    ring = ChenRuanRing(g, invariant=InvariantRing(g))
    cache.prime(ring.invariant.ideal, g, "classical")
    return ring


def _quantum_ring(g, mode):
    ring = QuantumOrbifoldRing(g, mode)
    cache.prime(ring.ideal, g, mode)
    return ring


def _operand(text, g, ring):
    return evaluate(parse(text, g), g, ring.product)


# commands


def cmd_relations(args):
    g = args.genus
    triple = quantum_relations(g) if args.quantum else classical_relations(g)
    texts = [format_poly(q, unicode=args.unicode) for q in triple]
    if args.json:
        return {"schema_version": SCHEMA_VERSION, "genus": g, "quantum": args.quantum, "relations": texts}
    return ", ".join(t.replace(" ", "") for t in texts)


def cmd_mul(args):
    g = args.genus
    quantum = args.quantum or args.mode is not None
    ring = _quantum_ring(g, args.mode or "relations") if quantum else _classical_ring(g)
    x = _operand(args.left, g, ring)
    y = _operand(args.right, g, ring)
    z = ring.product(x, y)
    if args.json:
        return {"schema_version": SCHEMA_VERSION, "genus": g, "result": result_terms(z)}
    return z.format(args.unicode)


def cmd_pair(args):
    g = args.genus
    ring = _classical_ring(g)
    value = ring.pairing(_operand(args.left, g, ring), _operand(args.right, g, ring))
    if args.json:
        return {"schema_version": SCHEMA_VERSION, "genus": g, "pairing": frac(value)}
    return frac(value)


def cmd_hilbert(args):
    g = args.genus
    if args.orbifold:
        poly = cr_poincare_polynomial(g)
    elif args.invariant:
        ring = InvariantRing(g)
        cache.prime(ring.ideal, g, "classical")
        poly = ring.hilbert_series().as_polynomial()
    else:
        poly = full_poincare_polynomial(g)
    if args.json:
        return {"schema_version": SCHEMA_VERSION, "genus": g,
                "coefficients": [[d, frac(c)] for d, c in sorted(poly.items())]}
    return tpoly_format(poly)


def cmd_table(args):
    if args.genus != 2:
        raise CommandFailed("the quantum product table exists for genus 2 only")
    checked = {(left, right): (got, ok) for left, right, _, got, ok in table_check()}
    lines = []
    failed = False
    for left, right, result in g2_table():
        if (left, right) in checked:
            got, ok = checked[(left, right)]
            failed |= not ok
            mark = "ok" if ok else f"engine gives {got}"
        else:
            mark = "not computed: odd classes are not modelled"
        lines.append(f"{left} * {right} = {result}    [{mark}]")
    lines.append("K stands for any nonzero torsion class")
    if failed:
        raise CommandFailed("\n".join(lines))
    return "\n".join(lines)


def cmd_donaldson(args):
    g = args.genus
    try:
        jac = donaldson_evaluate(g, args.n1, args.n2, args.n3)
        gw = gw_value(g, args.n1, args.n2, args.n3)
    except UnsupportedFeature as exc:
        raise CommandFailed(str(exc)) from None
    if args.json:
        return {"schema_version": SCHEMA_VERSION, "genus": g, "jacobian": frac(jac), "gw": frac(gw)}
    return f"jacobian: {frac(jac)}\ngw: {frac(gw)}"


def cmd_check(args):
    from .checks import run_checks
    from .report import format_report

    if args.genus is not None:
        genera = [args.genus]
    else:
        genera = range(2, args.max_genus + 1)
    results = run_checks(genera, args.jobs)
    lines = [r.format() for r in results]
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    lines.append("")
    lines.append(format_report())
    text = "\n".join(lines)
    if failed:
        raise CommandFailed(text)
    return text


def cmd_export(args):
    if args.format != "json":
        raise CommandFailed(f"unsupported format {args.format}")
    pres = QuantumOrbifoldPresentation.build(args.genus, args.mode)
    text = pres.to_json()
    if args.out == "-":
        return text.rstrip("\n")
    Path(args.out).write_text(text)
    return f"wrote {args.out}"


def build_parser():
    p = argparse.ArgumentParser(prog="pgl2coh", description=__doc__.splitlines()[0])
    p.add_argument("--unicode", action="store_true", help="print a, b, g, Q as Greek letters")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    # the same flags after the subcommand; SUPPRESS keeps them from resetting the global ones
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def genus(sp, required=True, default=None):
        sp.add_argument("--genus", type=int, required=required, default=default)

    s = command("relations", help="print I_g or the quantum triple")
    genus(s)
    s.add_argument("--quantum", action="store_true")
    s.set_defaults(func=cmd_relations)

    s = command("mul", help="product of two expressions")
    genus(s)
    s.add_argument("--quantum", action="store_true")
    s.add_argument("--mode", choices=("relations", "table"))
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_mul)

    s = command("pair", help="orbifold Poincare pairing")
    genus(s)
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_pair)

    s = command("hilbert", help="Poincare or Hilbert polynomial")
    genus(s)
    group = s.add_mutually_exclusive_group()
    group.add_argument("--orbifold", action="store_true", help="Chen-Ruan Poincare polynomial")
    group.add_argument("--invariant", action="store_true", help="Hilbert series of Q[a,b,g]/I_g")
    s.set_defaults(func=cmd_hilbert)

    s = command("table", help="the genus-2 quantum product table")
    genus(s, required=False, default=2)
    s.set_defaults(func=cmd_table)

    s = command("donaldson", help="Jacobian-side and GW-side degree-one numbers")
    genus(s)
    s.add_argument("--n1", type=int, required=True)
    s.add_argument("--n2", type=int, required=True)
    s.add_argument("--n3", type=int, default=0)
    s.set_defaults(func=cmd_donaldson)

    s = command("check", help="run the invariant suites and the consistency report")
    genus(s, required=False)
    s.add_argument("--max-genus", type=int, default=4)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_check)

    s = command("export", help="write the quantum presentation")
    genus(s)
    s.add_argument("--format", default="json")
    s.add_argument("--mode", choices=("relations", "table"), default="relations")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "genus", None) is not None and args.genus < 2:
        parser.error("--genus must be at least 2")
    try:
        out = args.func(args)
    except (ParseError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CommandFailed as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, dict):
        out = json.dumps(out, sort_keys=True, ensure_ascii=False)
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
