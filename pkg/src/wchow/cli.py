"""Command line entry point ``wchow``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .delta_one import delta1, delta1_even_crosscheck, sl2gm_delta1
from .delta_two import relation
from .errors import WchowError
from .ideal import graded_membership
from .presentation import poly_document, emit, present, verify_closed_forms
from .ring import format_polynomial, gl2_ring, parse_polynomial, pgl2gm_ring

MEMBER_RINGS = {"gl2": gl2_ring, "pgl2gm": pgl2gm_ring}


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_present(args) -> int:
    p = present(args.n, simplify=args.simplify)
    _write(emit(p, args.format, normalize_signs=args.positive), args.out)
    return 0


def cmd_delta1(args) -> int:
    res = delta1(args.n)
    doc = {"N": res.N, "parity": res.parity, "degree": res.degree, "c3_determined": res.c3_determined}
    doc.update(poly_document(res.cls))
    if args.crosscheck:
        if res.parity != "even":
            raise WchowError("the crosscheck applies to even N")
        doc["sl2gm"] = format_polynomial(sl2gm_delta1(args.n))
        doc["crosscheck_mod_c3"] = format_polynomial(delta1_even_crosscheck(args.n))
        doc["crosscheck_agrees"] = not res.notes
    if args.format == "json":
        _write(json.dumps(doc, indent=2) + "\n", None)
    else:
        lines = [f"delta1 N={res.N} degree {res.degree}: {doc['polynomial']}"]
        if not res.c3_determined:
            lines.append("warning: c3-part not determined; c3-free part shown")
        if args.crosscheck:
            lines.append(f"sl2gm: {doc['sl2gm']}")
            lines.append(f"crosscheck modulo c3 agrees: {doc['crosscheck_agrees']}")
        _write("\n".join(lines) + "\n", None)
    return 0


def cmd_relation(args) -> int:
    r = relation(args.n, args.k, args.m)
    if args.format == "json":
        doc = {"N": r.N, "family": r.family, "k": r.k, "m": r.m, "degree": r.degree}
        doc.update(poly_document(r.polynomial))
        _write(json.dumps(doc, indent=2) + "\n", None)
    else:
        _write(f"[{r.family} k={r.k} m={r.m}] degree {r.degree}: {format_polynomial(r.polynomial)}\n", None)
    return 0


def cmd_verify(args) -> int:
    report = verify_closed_forms(args.n)
    if args.json:
        _write(json.dumps(report.as_dict(), indent=2) + "\n", None)
    else:
        for item in report.items:
            status = "PASS" if item.passed else "FAIL"
            line = f"{status} {item.name}"
            if item.detail:
                line += f" ({item.detail})"
            print(line)
            if not item.passed and item.expected:
                print(f"  expected: {item.expected}")
                print(f"  got:      {item.got}")
    return 0 if report.passed else 1


def _read_polys(path: str, ring):
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    return [parse_polynomial(ln, ring) for ln in lines if ln and not ln.startswith("#")]


def cmd_member(args) -> int:
    ring = MEMBER_RINGS[args.ring]()
    targets = _read_polys(args.target, ring)
    if len(targets) != 1:
        raise WchowError("the target file must hold exactly one polynomial")
    gens = _read_polys(args.ideal, ring)
    cert = graded_membership(targets[0], gens, ring)
    if cert is None:
        print("not a member")
        return 1
    print("member")
    if args.certificate:
        text = "\n".join(format_polynomial(c) for c in cert.cofactors) + "\n"
        Path(args.certificate).write_text(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wchow", description="Integral Chow rings of minimal Weierstrass fibrations")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="full presentation for a given N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.add_argument("--simplify", action="store_true")
    p.add_argument("--positive", action="store_true", help="make leading coefficients positive")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("delta1", help="class of the non-reduced discriminant locus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--crosscheck", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_delta1)

    p = sub.add_parser("relation", help="a single relation f_{k,m} or g_{k,m}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("verify", help="compare with the known closed forms")
    p.add_argument("--n", type=int, choices=(1, 2), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("member", help="homogeneous ideal membership")
    p.add_argument("--ring", choices=sorted(MEMBER_RINGS), required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--certificate")
    p.set_defaults(func=cmd_member)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (WchowError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
