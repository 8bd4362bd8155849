import os

import pytest

from wchow.classes import (
    CUTOFF_ENV,
    RepDescriptor,
    TotalClass,
    binomial,
    chern_gl2_sym,
    chern_gl3_sym,
    chern_pgl2_V,
    chern_sl2gm_V,
    default_cutoff,
    segre,
    twist_chern,
    twist_segre,
    w_sequence,
)
from wchow.errors import NotAUnitError, WchowError
from wchow.ring import evaluate, gl2_ring, parse_polynomial, pgl2gm_ring


def gl2_closed_form(m, D):
    """Pairing the roots j and m-j gives quadratic factors in t."""
    ring = gl2_ring()
    c1, c2 = ring.gens()
    t_poly = [ring.one()]

    def mul(a, b):
        out = [ring.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return out

    if m % 2 == 0:
        t_poly = mul(t_poly, [ring.one(), -(m // 2) * c1])
    for j in range((m + 1) // 2):
        t_poly = mul(t_poly, [ring.one(), -m * c1, j * (m - j) * c1**2 + (2 * j - m) ** 2 * c2])
    return [t_poly[d] if d < len(t_poly) else ring.zero() for d in range(D + 1)]


@pytest.mark.parametrize("m", range(0, 13))
def test_gl2_sym_closed_formula(m):
    assert list(chern_gl2_sym(m, 0, m + 3).pieces) == gl2_closed_form(m, m + 3)


def test_gl2_sym_numeric_roots(rng):
    for _ in range(40):
        m, a = rng.randint(0, 9), rng.randint(-3, 3)
        l1, l2 = rng.randint(-4, 4), rng.randint(-4, 4)
        roots = [j * l1 + (m - j) * l2 - a * (l1 + l2) for j in range(m + 1)]
        c = chern_gl2_sym(m, a, m + 1)
        vals = {"c1": -(l1 + l2), "c2": l1 * l2}
        expected = _elementary(roots)
        assert [evaluate(p, vals) for p in c.pieces] == expected


def _elementary(roots):
    e = [1] + [0] * len(roots)
    for r in roots:
        for k in range(len(roots), 0, -1):
            e[k] += r * e[k - 1]
    return e


def test_pgl2_small_cases():
    ring = pgl2gm_ring()
    c = chern_pgl2_V(2, 5)
    assert c.pieces[:4] == (ring.one(), ring.zero(), ring.var("c2"), ring.var("c3"))
    assert not any(c.pieces[4:])
    assert chern_pgl2_V(0, 3).pieces == TotalClass.one(ring, 3).pieces


def test_pgl2_torus_restriction(rng):
    # on the maximal torus c2 -> -u^2, c3 -> 0 and V_2m has weights -m..m
    for two_m in range(0, 26, 2):
        m = two_m // 2
        u = rng.randint(1, 5)
        c = chern_pgl2_V(two_m, two_m + 1)
        vals = {"tau1": 0, "c2": -u * u, "c3": 0}
        expected = _elementary([j * u for j in range(-m, m + 1)])
        assert [evaluate(p, vals) for p in c.pieces] == expected


def test_sl2gm_numeric_roots(rng):
    for _ in range(30):
        two_m, w = 2 * rng.randint(0, 6), rng.randint(-6, 0)
        u, tau = rng.randint(-4, 4), rng.randint(-4, 4)
        roots = [(2 * i - two_m) * u + w * tau for i in range(two_m + 1)]
        c = chern_sl2gm_V(two_m, w, two_m + 1)
        vals = {"tau1": tau, "c2": -u * u}
        assert [evaluate(p, vals) for p in c.pieces] == _elementary(roots)


def test_gl3_sym_numeric_roots(rng):
    for _ in range(30):
        n = rng.randint(0, 4)
        r = [rng.randint(-3, 3) for _ in range(3)]
        roots = [a * r[0] + b * r[1] + (n - a - b) * r[2] for a in range(n + 1) for b in range(n + 1 - a)]
        c = chern_gl3_sym(n, len(roots))
        e = _elementary(r)
        # r are the roots of the dual, so c_i = (-1)^i e_i(r)
        vals = {"c1": -e[1], "c2": e[2], "c3": -e[3]}
        assert [evaluate(p, vals) for p in c.pieces] == _elementary(roots)


@pytest.mark.parametrize("m", [1, 4, 7])
def test_segre_inverts_chern(m):
    c = chern_gl2_sym(m, 1, 14)
    prod = c * segre(c)
    assert prod.pieces == TotalClass.one(c.ring, 14).pieces


def test_segre_rejects_non_unit():
    ring = gl2_ring()
    with pytest.raises(NotAUnitError):
        segre(TotalClass(ring, (ring.constant(2), ring.zero())))


def test_twist_segre_agrees_with_inverted_twist_chern(rng):
    ring = gl2_ring()
    t = ring.var("c1") * 3
    for m in (0, 2, 5):
        c = chern_gl2_sym(m, 0, 10)
        s_twisted = segre(twist_chern(c, m + 1, t))
        for j in range(8):
            assert twist_segre(segre(c), m + 1, t, j) == s_twisted[j]


def test_twist_segre_trivial_line():
    ring = gl2_ring()
    t = ring.var("c1")
    assert twist_segre(TotalClass.one(ring, 4), 1, t, 2) == t**2


@pytest.mark.parametrize("d", [1, 2, 3])
def test_w_bundle_vanishes_above_rank(d):
    seq = w_sequence(2, d, 4 * d + 4, True)
    assert seq.ambient.pieces == (seq.sub * seq.quotient).pieces
    assert not any(seq.quotient.pieces[seq.rank + 1 :])
    assert seq.quotient[seq.rank]


def test_binomial_negative_upper():
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3
    assert binomial(5, 2) == 10


def test_cutoff_env(monkeypatch):
    assert default_cutoff(3) == 34
    monkeypatch.setenv(CUTOFF_ENV, "50")
    assert default_cutoff(3) == 50
    monkeypatch.setenv(CUTOFF_ENV, "x")
    with pytest.raises(WchowError):
        default_cutoff(3)


def test_truncated_class_rejects_high_degree():
    c = chern_gl2_sym(2, 0, 3)
    assert not c[-1]
    with pytest.raises(WchowError):
        c[7]


def test_rep_descriptor():
    rep = RepDescriptor("PGL2", "pgl2_V", (4,))
    assert rep.rank == 5
    assert rep.chern(6).pieces == chern_pgl2_V(4, 6).pieces
    assert RepDescriptor("GL3xGm", "gl3_form_bundle", (2, 1, "quotient")).rank == 5
    with pytest.raises(WchowError):
        RepDescriptor("GL2", "pgl2_V", (4,))
    with pytest.raises(WchowError):
        RepDescriptor("PGL2", "pgl2_V", (3,))
