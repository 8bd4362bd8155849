import random

import pytest
import sympy

from wchow.ring import GradedPolynomial

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def to_sympy(p: GradedPolynomial):
    syms = sympy.symbols(p.ring.names)
    return sympy.Add(*[c * sympy.Mul(*[s**k for s, k in zip(syms, e)]) for e, c in p.items()])


def from_sympy(expr, ring) -> GradedPolynomial:
    syms = sympy.symbols(ring.names)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    return GradedPolynomial(ring, {tuple(e): int(c) for e, c in poly.terms()})


def random_poly(ring, degree, rng, terms=4, bound=20):
    monos = ring.monomials_of_degree(degree)
    picked = rng.sample(monos, min(terms, len(monos)))
    return GradedPolynomial(ring, {m: rng.randint(-bound, bound) for m in picked})


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {text}")
