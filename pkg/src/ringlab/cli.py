"""Command-line interface.

Subcommands: classify, verify, table, witness, spectrum.  Exit codes are
0 = success, 1 = verification failure, 2 = input error.  Output is
deterministic: identical invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from ringlab import classify as _classify
from ringlab import corpus as _corpus
from ringlab import elements, spectrum, structural
from ringlab.classify import PREDICATES
from ringlab.core import RingLabError

SHORT_NAMES = {
    "reduced": "red",
    "nearly_reduced": "nred",
    "roughly_reduced": "rred",
    "vnr": "vnr",
    "zero_dimensional": "0dim",
    "complemented": "cmpl",
    "semi_complemented": "semi",
    "pi_complemented": "pi",
    "almost_complemented": "alm",
    "roughly_complemented": "rgh",
    "property_A": "A",
    "annihilator_condition": "ac",
    "property_D": "D",
    "property_D_flat": "Db",
    "unique_prime": "upr",
    "local": "loc",
    "min_compact": "minK",
}

GLYPHS = {True: "✓", False: "✗", None: "?"}


def _load_expr(text: str):
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return structural.parse_ring_expr(text)


def _select_corpus(args) -> list:
    if args.zn:
        lo_hi = args.zn.split("..")
        if len(lo_hi) != 2:
            raise ValueError("--zn expects a range like 2..64")
        lo, hi = int(lo_hi[0]), int(lo_hi[1])
        if lo < 2 or hi < lo:
            raise ValueError("--zn range must satisfy 2 <= A <= B")
        return _corpus.zn_range(lo, hi)
    return _corpus.corpus_by_name(args.corpus)


def cmd_classify(args) -> int:
    expr = _load_expr(args.expr)
    report = structural.classify_expr(expr, args.max_order)
    if args.json:
        print(report.to_json())
        return 0
    print(f"ring: {report.label}")
    for name in PREDICATES:
        v = report.verdicts[name]
        print(f"  {GLYPHS[v.value]} {name:22s} {v.provenance}")
    if report.module_profile is not None:
        p = report.module_profile
        print(
            f"  module profile: torsion={GLYPHS[p.torsion]}"
            f" torsion_free={GLYPHS[p.torsion_free]} atorsion={GLYPHS[p.atorsion]}"
        )
    print("legend: ✓ true, ✗ false, ? undecided by the rule layer")
    return 0


def cmd_verify(args) -> int:
    exprs = _select_corpus(args)
    checked = skipped = 0
    hierarchy_violations = 0
    theorem_failures = 0
    lines = []
    for expr in exprs:
        ring = structural.realize_finite(expr, args.max_order)
        if ring is None:
            skipped += 1
            continue
        checked += 1
        violations = _classify.verify_hierarchy(ring)
        theorems = _classify.verify_theorems(ring)
        hierarchy_violations += len(violations)
        failures = theorems.failures()
        theorem_failures += len(failures)
        if violations or failures:
            detail = "; ".join(
                [f"{s}=>{d}" for s, d in violations]
                + [f"{c.name}: {c.detail}" for c in failures]
            )
            lines.append(f"FAIL {ring.label}: {detail}")
    for line in lines:
        print(line)
    print(
        f"checked {checked} rings, skipped {skipped} (over cap);"
        f" hierarchy violations: {hierarchy_violations}; theorem failures: {theorem_failures}"
    )
    return 0 if hierarchy_violations == 0 and theorem_failures == 0 else 1


def cmd_table(args) -> int:
    exprs = _select_corpus(args)
    rows = []
    for expr in exprs:
        ring = structural.realize_finite(expr, args.max_order)
        if ring is None:
            continue
        report = _classify.classify_ring(ring)
        rows.append((ring, report))
    if args.json:
        out = [report.as_json_dict(ring) for ring, report in rows]
        print(json.dumps(out, indent=2))
        return 0
    label_width = max((len(r.label) for r, _ in rows), default=4)
    header = "ring".ljust(label_width) + "  " + " ".join(
        SHORT_NAMES[p].rjust(4) for p in PREDICATES
    )
    print(header)
    for ring, report in rows:
        cells = " ".join(GLYPHS[report.value(p)].rjust(4) for p in PREDICATES)
        print(ring.label.ljust(label_width) + "  " + cells)
    print()
    print("legend: ✓ true, ✗ false;")
    for p in PREDICATES:
        print(f"  {SHORT_NAMES[p]:>4} = {p}")
    return 0


def cmd_witness(args) -> int:
    expr = _load_expr(args.expr)
    ring = structural.realize_finite(expr, args.max_order)
    if ring is None:
        raise RingLabError(
            f"{structural.expr_label(expr)} has no finite realization within the cap;"
            " witness listings need one"
        )
    x = args.element
    if not 0 <= x < ring.order:
        raise RingLabError(f"element index {x} out of range [0, {ring.order})")
    profile = elements.profile_element(ring, x)
    print(f"ring: {ring.label}, element {x} = {ring.names[x]}")
    flags_line = ", ".join(
        name
        for name, value in (
            ("unit", profile.is_unit),
            ("regular", profile.is_regular),
            ("aregular", profile.is_aregular),
            ("nilpotent", profile.is_nilpotent),
            ("idempotent", profile.is_idempotent),
            ("von Neumann regular", profile.is_vn_regular),
            ("pi-regular", profile.is_pi_regular),
        )
        if value
    )
    print(f"  flags: {flags_line or 'none'}")
    if profile.nilpotency_index is not None:
        print(f"  nilpotency index: {profile.nilpotency_index}")
    if profile.vn_witness is not None:
        print(f"  quasi-inverse witness: {ring.names[profile.vn_witness]}")
    if profile.pi_exponent is not None:
        print(f"  least von-Neumann-regular power: {profile.pi_exponent}")

    w = elements.find_complement(ring, x)
    print(f"  complement: {ring.names[w.partner] if w else 'none'}")
    w = elements.find_pi_complement(ring, x)
    print(f"  pi-complement: (n={w.exponent}, partner {ring.names[w.partner]})")
    w = elements.find_almost_complement(ring, x)
    print(f"  almost-complement: {ring.names[w.partner] if w else 'none'}")
    w = elements.find_rough_complement(ring, x)
    print(f"  rough-complement: {ring.names[w.partner] if w else 'none'}")
    return 0


def cmd_spectrum(args) -> int:
    expr = _load_expr(args.expr)
    ring = structural.realize_finite(expr, args.max_order)
    if ring is None:
        raise RingLabError(
            f"{structural.expr_label(expr)} has no finite realization within the cap"
        )
    report = spectrum.prime_spectrum(ring)
    print(f"ring: {ring.label} (order {ring.order})")

    def fmt(ideal):
        return "{" + ",".join(ring.names[i] for i in ideal.elements()) + "}"

    print(f"  nilradical: {fmt(spectrum.nilradical(ring))}")
    print(f"  jacobson radical: {fmt(spectrum.jacobson_radical(ring))}")
    print(f"  aregular-annihilator ideal: {fmt(spectrum.eta_ideal(ring))}")
    print(f"  primes ({len(report.primes)}):")
    for p, mn, mx in zip(report.primes, report.minimal_flags, report.maximal_flags):
        tags = "".join([" minimal" if mn else "", " maximal" if mx else ""])
        print(f"    {fmt(p)}{tags}")
    print("  minimal-prime subspace compact: yes (finite spectrum)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="Exact complementedness classification of finite commutative rings"
        " and structural classification of infinite constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a ring expression")
    p.add_argument("expr", help="inline JSON expression or @file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="hierarchy and theorem sweep over a corpus")
    p.add_argument("--zn", default=None, metavar="A..B")
    p.add_argument("--corpus", default="default")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="one row per ring, one column per predicate")
    p.add_argument("--zn", default=None, metavar="A..B")
    p.add_argument("--corpus", default="default")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("witness", help="element profile and all witness searches")
    p.add_argument("expr", help="inline JSON expression or @file")
    p.add_argument("element", type=int)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("spectrum", help="prime spectrum and radicals")
    p.add_argument("expr", help="inline JSON expression or @file")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (RingLabError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
