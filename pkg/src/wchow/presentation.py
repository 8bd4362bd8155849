"""Full presentations, the reproduction report for N = 1, 2, and serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import IO

from .delta_one import DeltaOneResult, delta1, delta1_even, delta1_even_crosscheck, sl2gm_delta1
from .delta_two import RelationRecord, all_relations, relation
from .errors import WchowError
from .ideal import graded_membership, ideal_equal, minimal_generators
from .ring import (
    GradedPolynomial,
    RingSpec,
    format_polynomial,
    gl2_ring,
    parse_polynomial,
    pgl2gm_ring,
    ring_by_name,
)
from . import reference as ref

CHARACTERISTIC_NOTE = "valid over fields of characteristic other than 2 and 3"


@dataclass
class Presentation:
    N: int
    ring: RingSpec
    generator_meta: dict[str, str]
    relations: list[RelationRecord]
    delta1: DeltaOneResult
    reduced_relations: list[GradedPolynomial] | None = None

    def polynomials(self) -> list[GradedPolynomial]:
        return [self.delta1.cls] + [r.polynomial for r in self.relations]

    def degrees(self) -> list[int]:
        return [8 * self.N + 1] + [r.degree for r in self.relations]

    def __len__(self):
        return 1 + len(self.relations)


def _generator_meta(N: int) -> dict[str, str]:
    if N % 2:
        return {
            "c1": f"first Chern class of the rank 2 bundle E_{N}",
            "c2": f"second Chern class of the rank 2 bundle E_{N}",
        }
    return {
        "tau1": f"first Chern class of the line bundle L_{N}",
        "c2": f"second Chern class of the rank 3 bundle E_{N} (whose c1 vanishes)",
        "c3": f"third Chern class of the rank 3 bundle E_{N}",
    }


def present(N: int, simplify: bool = False) -> Presentation:
    if N < 1:
        raise WchowError("N must be at least 1")
    ring = gl2_ring() if N % 2 else pgl2gm_ring()
    rels = all_relations(N)
    d1 = delta1(N)
    p = Presentation(N, ring, _generator_meta(N), rels, d1)
    if len(p) != comb(N + 2, 2):
        raise WchowError("internal error: wrong number of relations")
    if simplify:
        p.reduced_relations = minimal_generators(p.polynomials(), ring)
    return p


# ---------------------------------------------------------------------------
# reproduction report


@dataclass
class CheckItem:
    name: str
    passed: bool
    expected: str = ""
    got: str = ""
    detail: str = ""


@dataclass
class Report:
    N: int
    items: list[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def add(self, name, expected, got, detail=""):
        ok = expected == got
        self.items.append(CheckItem(name, ok, format_polynomial(expected), format_polynomial(got), detail))

    def add_bool(self, name, ok, detail=""):
        self.items.append(CheckItem(name, bool(ok), detail=detail))

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "passed": self.passed,
            "items": [i.__dict__ for i in self.items],
        }


def verify_closed_forms(N: int) -> Report:
    """Compare computed values with the known closed forms for N = 1 or 2."""
    if N not in (1, 2):
        raise WchowError("closed forms are available for N = 1 and N = 2 only")
    report = Report(N)
    p = present(N)
    if N == 1:
        report.add("delta1", ref.reference("delta1_n1"), p.delta1.cls)
        report.add("f_1,0", ref.reference("f_n1_k1_m0"), relation(1, 1, 0).polynomial)
        report.add("f_1,1", ref.reference("f_n1_k1_m1"), relation(1, 1, 1).polynomial)
        cmp = ideal_equal(p.polynomials(), ref.ring_n1_ideal(), gl2_ring())
        certified = cmp.equal and all(c.verify() for c in cmp.certificates)
        report.add_bool("ideal equality", certified, f"{len(cmp.certificates)} certificates")
        return report
    ring = pgl2gm_ring()
    g = {(r.k, r.m): r.polynomial for r in p.relations}
    report.add("g_1,0 = -r9", -ref.reference("r9"), g[1, 0])
    report.add("g_1,1 = -r10", -ref.reference("r10"), g[1, 1])
    report.add("g_2,0", ref.reference("g_n2_k2_m0"), g[2, 0])
    report.add("g_2,1", ref.reference("g_n2_k2_m1"), g[2, 1])
    report.add("g_2,2 = -c2 g_2,0", -ring.var("c2") * g[2, 0], g[2, 2])
    d1 = delta1_even(2)
    report.add("delta1", ref.reference("delta1_n2"), d1.cls)
    c3 = ring.index("c3")
    report.add_bool("delta1 has no c3 term", d1.c3_determined and not any(e[c3] for e, _ in d1.cls.items()))
    report.add("SL2 x Gm class", ref.reference("delta1_n2_sl2gm"), sl2gm_delta1(2))
    report.add("crosscheck modulo c3", _drop_c3(d1.cls), delta1_even_crosscheck(2))
    cert = graded_membership(d1.cls, [g[1, 0], g[1, 1]], ring)
    report.add_bool("delta1 in (g_1,0, g_1,1)", cert is not None and cert.verify())
    cmp = ideal_equal(p.polynomials(), ref.ring_n2_ideal(), ring)
    detail = "; ".join(f"{side}: {format_polynomial(q)} not a member" for side, q in cmp.missing)
    report.add_bool("ideal equality", cmp.equal, detail)
    return report


def _drop_c3(p: GradedPolynomial) -> GradedPolynomial:
    c3 = p.ring.index("c3")
    return GradedPolynomial(p.ring, {e: c for e, c in p.items() if not e[c3]})


# ---------------------------------------------------------------------------
# emission


def _signed(p: GradedPolynomial, normalize: bool) -> GradedPolynomial:
    if normalize and p and p.leading_term()[1] < 0:
        return -p
    return p


def _entries(p: Presentation):
    yield "delta1", None, None, p.delta1.degree, p.delta1.cls
    for r in p.relations:
        yield r.family, r.k, r.m, r.degree, r.polynomial


def poly_document(q: GradedPolynomial) -> dict:
    return {
        "polynomial": format_polynomial(q),
        "terms": [{"coefficient": str(c), "exponents": list(e)} for e, c in q.terms()],
    }


def to_document(p: Presentation, normalize_signs: bool = False) -> dict:
    ring = p.ring
    torsion = [f"{rule.prime}*{format_polynomial(ring.monomial(rule.divisor))}" for rule in ring.torsion]
    relations = []
    for family, k, m, degree, q in _entries(p):
        item = {"family": family, "k": k, "m": m, "degree": degree}
        item.update(poly_document(_signed(q, normalize_signs)))
        relations.append(item)
    reduced = None
    if p.reduced_relations is not None:
        reduced = [poly_document(_signed(q, normalize_signs)) for q in p.reduced_relations]
    doc = {
        "N": p.N,
        "ring": {
            "name": ring.name,
            "variables": [{"name": n, "degree": d} for n, d in ring.variables],
            "torsion_relations": torsion,
        },
        "relations": relations,
        "reduced": reduced,
        "metadata": {
            "generators": p.generator_meta,
            "characteristic": CHARACTERISTIC_NOTE,
            "delta1_c3_determined": p.delta1.c3_determined,
        },
    }
    return doc


def emit(p: Presentation, fmt: str = "text", sink: IO[str] | None = None, normalize_signs: bool = False) -> str:
    """Render ``p``; writes to ``sink`` when given and returns the text."""
    if fmt == "json":
        text = json.dumps(to_document(p, normalize_signs), indent=2) + "\n"
    elif fmt == "text":
        text = _render_text(p, normalize_signs)
    else:
        raise WchowError(f"unknown format {fmt!r}")
    if sink is not None:
        sink.write(text)
    return text


def _render_text(p: Presentation, normalize_signs: bool) -> str:
    ring = p.ring
    lines = [f"N = {p.N}"]
    var_list = ", ".join(f"{n} (degree {d})" for n, d in ring.variables)
    lines.append(f"ring: Z[{', '.join(ring.names)}] with {var_list}")
    for rule in ring.torsion:
        lines.append(f"torsion: {rule.prime}*{format_polynomial(ring.monomial(rule.divisor))} = 0")
    lines.append(f"note: {CHARACTERISTIC_NOTE}")
    lines.append("generators:")
    for name, meta in p.generator_meta.items():
        lines.append(f"  {name}: {meta}")
    lines.append(f"relations ({len(p)}):")
    for family, k, m, degree, q in _entries(p):
        tag = family if k is None else f"{family} k={k} m={m}"
        lines.append(f"  [{tag}] degree {degree}: {format_polynomial(_signed(q, normalize_signs))}")
    if not p.delta1.c3_determined:
        lines.append("  warning: the c3-part of delta1 is not determined; its c3-free part is shown")
    if p.reduced_relations is not None:
        lines.append(f"reduced ({len(p.reduced_relations)}):")
        for q in p.reduced_relations:
            lines.append(f"  degree {q.degree()}: {format_polynomial(_signed(q, normalize_signs))}")
    return "\n".join(lines) + "\n"


def read_json(text: str) -> dict:
    """Parse an emitted document back into polynomials.

    Returns ``{"N", "ring", "relations": [(family, k, m, poly)], "reduced"}``.
    """
    doc = json.loads(text)
    ring = ring_by_name(doc["ring"]["name"])
    rels = [
        (r["family"], r["k"], r["m"], parse_polynomial(r["polynomial"], ring))
        for r in doc["relations"]
    ]
    reduced = doc.get("reduced")
    if reduced is not None:
        reduced = [parse_polynomial(r["polynomial"], ring) for r in reduced]
    return {"N": doc["N"], "ring": ring, "relations": rels, "reduced": reduced}


__all__ = [
    "CheckItem",
    "Presentation",
    "Report",
    "emit",
    "poly_document",
    "present",
    "read_json",
    "to_document",
    "verify_closed_forms",
]
