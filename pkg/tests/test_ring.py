from fractions import Fraction

import pytest
import sympy

from conftest import from_sympy, random_poly, to_sympy
from wchow.errors import NotDivisibleError, ParseError, RingMismatchError, WchowError
from wchow.ring import (
    GradedPolynomial,
    RationalGradedPolynomial,
    RingSpec,
    exact_divide,
    expand_in_roots,
    format_polynomial,
    gl2_ring,
    gl3_ring,
    p5_ring,
    parse_polynomial,
    pgl2gm_ring,
    root_ring,
    substitute,
    symmetrize,
)


def test_arithmetic_matches_sympy(rng):
    ring = gl3_ring()
    for _ in range(30):
        a = random_poly(ring, rng.randint(0, 5), rng)
        b = random_poly(ring, rng.randint(0, 5), rng)
        assert to_sympy(a * b).expand() == (to_sympy(a) * to_sympy(b)).expand()
        assert to_sympy(a + b).expand() == (to_sympy(a) + to_sympy(b)).expand()
        assert to_sympy(a**3).expand() == (to_sympy(a) ** 3).expand()


def test_torsion_reduces_c3_coefficients_mod_2():
    ring = pgl2gm_ring()
    c2, c3 = ring.var("c2"), ring.var("c3")
    assert 2 * c3 == 0
    assert 3 * c3 * c2 == c3 * c2
    assert -c3 == c3
    assert 5 * c2 != c2


def test_scale_divide_uses_inverse_mod_2_on_torsion():
    ring = pgl2gm_ring()
    p = parse_polynomial("6*c2+c3", ring)
    assert p.scale_divide(3) == parse_polynomial("2*c2+c3", ring)
    with pytest.raises(WchowError):
        parse_polynomial("5*c2", ring).scale_divide(3)


def test_p5_normal_form_matches_sympy_remainder(rng):
    ring = p5_ring(True)
    t, c1, c2, c3, h = sympy.symbols(ring.names)
    rel = sympy.expand((h**3 - 2*c1*h**2 + 4*c2*h - 8*c3) * (h**3 - 2*c1*h**2 + (c1**2 + c2)*h + c3 - c1*c2))
    for _ in range(10):
        a = random_poly(ring, 4, rng)
        b = random_poly(ring, 5, rng)
        expect = sympy.rem(sympy.expand(to_sympy(a) * to_sympy(b) * h**4), rel, h)
        got = a * b * ring.var("h") ** 4
        assert sympy.expand(to_sympy(got) - expect) == 0
        assert all(e[-1] <= 5 for e, _ in got.items())


def test_format_and_parse_round_trip(rng):
    for ring in (gl2_ring(), pgl2gm_ring(), p5_ring(False)):
        for _ in range(20):
            p = random_poly(ring, rng.randint(0, 6), rng)
            assert parse_polynomial(format_polynomial(p), ring) == p


def test_format_conventions():
    ring = gl2_ring()
    assert format_polynomial(ring.zero()) == "0"
    assert format_polynomial(parse_polynomial("c2 - 3*c1^2 - 5", ring)) == "-3*c1^2+c2-5"
    half = RationalGradedPolynomial(ring, {(1, 0): Fraction(1, 2)})
    assert format_polynomial(half) == "1/2*c1"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("c1+*c2", gl2_ring())
    with pytest.raises(ParseError):
        parse_polynomial("x1", gl2_ring())


def test_homogeneity_and_degree():
    ring = gl2_ring()
    p = parse_polynomial("c1^2+c2", ring)
    assert p.is_homogeneous() and p.degree() == 2
    assert not parse_polynomial("c1+c2", ring).is_homogeneous()


def test_exact_divide_round_trip(rng):
    ring = gl3_ring()
    for _ in range(20):
        a = random_poly(ring, rng.randint(1, 4), rng)
        b = random_poly(ring, rng.randint(1, 4), rng)
        if not a or not b:
            continue
        assert exact_divide(a * b, b) == a


def test_exact_divide_rejects():
    ring = gl2_ring()
    c1, c2 = ring.gens()
    with pytest.raises(NotDivisibleError):
        exact_divide(c1**2 + c2, c1)
    with pytest.raises(WchowError):
        exact_divide(p5_ring().var("h"), p5_ring().var("h"))


def test_symmetrize_numeric_oracle(rng):
    from itertools import permutations

    from wchow.ring import evaluate

    R = root_ring(3)
    target = gl3_ring()
    ls = R.gens()
    for _ in range(10):
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        p = R.one()
        for x, y, z in permutations(ls):
            p = p * (a * x + b * y + c * z)
        sym = symmetrize(p, target)
        for _ in range(3):
            r = [rng.randint(-5, 5) for _ in range(3)]
            e1, e2, e3 = sum(r), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], r[0] * r[1] * r[2]
            at_roots = evaluate(p, dict(zip(R.names, r)))
            assert evaluate(sym, {"c1": -e1, "c2": e2, "c3": -e3}) == at_roots
        assert expand_in_roots(sym, R) == p


def test_symmetrize_rejects_non_symmetric():
    R = root_ring(2)
    l1, _ = R.gens()
    with pytest.raises(WchowError):
        symmetrize(l1, gl2_ring())


def test_substitute_checks_degree():
    ring = gl2_ring()
    c1, c2 = ring.gens()
    with pytest.raises(WchowError):
        substitute(c1, {"c1": c2})
    assert substitute(c1 * c2, {"c1": 2 * c1}).to_integral() == 2 * c1 * c2


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        gl2_ring().var("c1") + gl3_ring().var("c1")


def test_ringspec_validation():
    with pytest.raises(WchowError):
        RingSpec("bad", (("x", 1), ("x", 2)))
