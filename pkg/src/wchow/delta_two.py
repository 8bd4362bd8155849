"""Relations coming from forms with a point of high vanishing order.

Each relation is a sum over index triples ``(i, j, l)`` of a coefficient
``C_k(i, j, l)`` times a pushforward from the projective space of degree-k
binary forms.  The coefficient is

    zeta^(10k-i) * sum over splittings (i,j,l) = (i2,j2,l2) + (i3,j3,l3) of
    prod_d C(2d(N-k)+i_d-j_d, 2d(N-k)+l_d) (2d)^(2dk-j_d-l_d) c_{j_d}(V_2dN) s_{l_d}(V_2d(N-k))

with ``zeta = (N-1) c1 / 2`` for odd ``N`` and ``zeta = -tau1`` for even ``N``.
The pushforward only depends on ``e = i - j - l``, so the builders group the
sum by ``e_d = i_d - j_d - l_d`` for each ``d`` separately and convolve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classes import (
    TotalClass,
    binomial,
    chern_gl2_sym,
    chern_pgl2_V,
    default_cutoff,
    segre,
)
from .errors import IntegralityError, WchowError
from .pushforward import push_even, push_odd
from .ring import GradedPolynomial, gl2_ring, pgl2gm_ring, substitute


@dataclass(frozen=True)
class RelationRecord:
    N: int
    k: int
    m: int
    family: str
    polynomial: GradedPolynomial
    degree: int

    def __post_init__(self):
        if not 1 <= self.k <= self.N or not 0 <= self.m <= self.k:
            raise WchowError(f"indices out of range: N={self.N}, k={self.k}, m={self.m}")
        if self.degree != 9 * self.k + self.m:
            raise WchowError("degree tag must be 9k + m")
        p = self.polynomial
        if p and (not p.is_homogeneous() or p.degree() != self.degree):
            raise WchowError(f"{self.family}_{self.k},{self.m} is not homogeneous of degree {self.degree}")


@dataclass(frozen=True)
class _Tables:
    zeta: GradedPolynomial
    chern: dict  # d -> TotalClass of V_{2dN}
    segre: dict  # d -> TotalClass of V_{2d(N-k)}


def _gl2_sym_chern(m: int, D: int) -> TotalClass:
    return chern_gl2_sym(m, 0, D)


@lru_cache(maxsize=None)
def _tables(N: int, k: int, lift: bool = False) -> _Tables:
    D = default_cutoff(N)
    if N % 2:
        ring = gl2_ring()
        zeta = ring.var("c1") * ((N - 1) // 2)
        chern = {d: _gl2_sym_chern(2 * d * N, D) for d in (2, 3)}
        seg = {d: segre(_gl2_sym_chern(2 * d * (N - k), D)) for d in (2, 3)}
    else:
        chern = {d: chern_pgl2_V(2 * d * N, D, lift) for d in (2, 3)}
        seg = {d: segre(chern_pgl2_V(2 * d * (N - k), D, lift)) for d in (2, 3)}
        zeta = -chern[2].ring.var("tau1")
    return _Tables(zeta, chern, seg)


def _check(N: int, k: int, m: int):
    if N < 1 or not 1 <= k <= N or not 0 <= m <= k:
        raise WchowError(f"need 1 <= k <= N and 0 <= m <= k, got N={N}, k={k}, m={m}")


def _splits(k: int, d: int):
    """Triples ``(i_d, j_d, l_d)`` with ``j_d + l_d <= i_d <= 2dk``."""
    for i in range(2 * d * k + 1):
        for j in range(i + 1):
            for l in range(i - j + 1):
                yield i, j, l


def c_coefficient(N: int, k: int, i: int, j: int, l: int, *, lift: bool = False) -> GradedPolynomial:
    """The coefficient ``C_k(i, j, l)`` in the ring for the parity of ``N``."""
    _check(N, k, 0)
    t = _tables(N, k, lift)
    ring = t.zeta.ring
    if not (0 <= j and 0 <= l and j + l <= i <= 10 * k):
        return ring.zero()
    total = ring.zero()
    for i2, j2, l2 in _splits(k, 2):
        i3, j3, l3 = i - i2, j - j2, l - l2
        if min(i3, j3, l3) < 0 or i3 > 6 * k or j3 + l3 > i3:
            continue
        total = total + _factor(N, k, 2, i2, j2, l2, t) * _factor(N, k, 3, i3, j3, l3, t)
    return total * t.zeta ** (10 * k - i)


def _factor(N, k, d, i, j, l, t, folded=False):
    base = 2 * d * (N - k)
    c, s = t.chern[d][j], t.segre[d][l]
    if not c or not s:
        return t.zeta.ring.zero()
    coeff = binomial(base + i - j, base + l)
    if folded:
        # (2d)^(2dk-j-l) 2^-(i-j-l) = (2d)^(2dk-i) d^(i-j-l)
        coeff *= (2 * d) ** (2 * d * k - i) * d ** (i - j - l)
    else:
        coeff *= (2 * d) ** (2 * d * k - j - l)
    return c * s * coeff


def _grouped(N: int, k: int, d: int, t: _Tables, folded: bool) -> dict[int, GradedPolynomial]:
    """``P_d[e] = sum over i_d - j_d - l_d = e`` including the zeta power."""
    ring = t.zeta.ring
    zpow = [t.zeta**p for p in range(2 * d * k + 1)]
    out: dict[int, GradedPolynomial] = {}
    for i, j, l in _splits(k, d):
        z = zpow[2 * d * k - i]
        if not z:
            continue
        term = _factor(N, k, d, i, j, l, t, folded)
        if term:
            e = i - j - l
            out[e] = out.get(e, ring.zero()) + term * z
    return out


def _convolved(N: int, k: int, folded: bool) -> dict[int, GradedPolynomial]:
    t = _tables(N, k)
    p2 = _grouped(N, k, 2, t, folded)
    p3 = _grouped(N, k, 3, t, folded)
    out: dict[int, GradedPolynomial] = {}
    for e2, a in p2.items():
        for e3, b in p3.items():
            prod = a * b
            if prod:
                e = e2 + e3
                out[e] = out.get(e, prod.ring.zero()) + prod
    return out


@lru_cache(maxsize=None)
def _q_even(N: int, k: int):
    return _convolved(N, k, False)


@lru_cache(maxsize=None)
def _q_odd(N: int, k: int):
    return _convolved(N, k, True)


def _push_table(ring, k: int):
    if ring.name == "gl2":
        return segre(chern_gl2_sym(k, 0, 10 * k + 2))
    return segre(chern_pgl2_V(k - 1 if k % 2 else k, 10 * k + 2))


def relation_f(N: int, k: int, m: int) -> RelationRecord:
    """``f_{k,m}`` for odd ``N``, in Z[c1, c2]."""
    if N % 2 == 0:
        raise WchowError("f-relations are defined for odd N")
    _check(N, k, m)
    sk = _push_table(gl2_ring(), k)
    total = gl2_ring().zero()
    for e, q in _q_even(N, k).items():
        total = total + q * push_even(e + m, k, sk)
    return RelationRecord(N, k, m, "f", total, 9 * k + m)


def relation_g_even_k(N: int, k: int, m: int) -> RelationRecord:
    """``g_{k,m}`` for even ``N`` and even ``k``, in Z[tau1, c2, c3]/(2c3)."""
    if N % 2 or k % 2:
        raise WchowError("g_even needs even N and even k")
    _check(N, k, m)
    sk = _push_table(pgl2gm_ring(), k)
    total = pgl2gm_ring().zero()
    for e, q in _q_even(N, k).items():
        total = total + q * push_even(e + m, k, sk)
    return RelationRecord(N, k, m, "g_even", total, 9 * k + m)


def relation_g_odd_k(N: int, k: int, m: int, *, route: str = "factored") -> RelationRecord:
    """``g_{k,m}`` for even ``N`` and odd ``k``.

    Writing ``m = 2n + r`` with ``r`` in {0, 1}, each triple contributes
    ``k^-1 2^-(i-j-l) C_k(i,j,l) pi_*(gamma1^(r+i-j-l) gamma2^n)``.  The
    factored route folds ``2^-(i-j-l)`` into the per-d scalars so all
    arithmetic stays integral; ``route="direct"`` sums the triples in
    rational arithmetic over the torsion-free lift and asserts that the
    denominators clear.
    """
    if N % 2 or k % 2 == 0:
        raise WchowError("g_odd needs even N and odd k")
    _check(N, k, m)
    n, r = divmod(m, 2)
    if route == "direct":
        return RelationRecord(N, k, m, "g_odd", _g_odd_direct(N, k, n, r), 9 * k + m)
    if route != "factored":
        raise WchowError(f"unknown route {route!r}")
    sk = _push_table(pgl2gm_ring(), k)
    total = pgl2gm_ring().zero()
    for e, q in _q_odd(N, k).items():
        total = total + q * push_odd(r + e, n, k, sk, divide=False)
    try:
        total = total.scale_divide(k)
    except IntegralityError as exc:
        raise IntegralityError(f"integrality violation: g_{k},{m} not divisible by {k}") from exc
    return RelationRecord(N, k, m, "g_odd", total, 9 * k + m)


def _g_odd_direct(N: int, k: int, n: int, r: int) -> GradedPolynomial:
    t = _tables(N, k, True)
    lift = t.zeta.ring
    sk = segre(chern_pgl2_V(k - 1, 10 * k + 2, True))
    total = lift.zero().to_rational()
    for i in range(10 * k + 1):
        for j in range(i + 1):
            for l in range(i - j + 1):
                c = c_coefficient(N, k, i, j, l, lift=True)
                if not c:
                    continue
                e = i - j - l
                push = push_odd(r + e, n, k, sk, divide=False)
                if push:
                    total = total + (c * push).to_rational() * Fraction(1, k * 2**e)
    if not total.is_integral():
        raise IntegralityError("integrality violation: denominators survive in the direct sum")
    return substitute(total.to_integral(), {}, pgl2gm_ring()).to_integral()


def relation(N: int, k: int, m: int) -> RelationRecord:
    if N % 2:
        return relation_f(N, k, m)
    if k % 2:
        return relation_g_odd_k(N, k, m)
    return relation_g_even_k(N, k, m)


def all_relations(N: int) -> list[RelationRecord]:
    return [relation(N, k, m) for k in range(1, N + 1) for m in range(k + 1)]


__all__ = [
    "RelationRecord",
    "all_relations",
    "c_coefficient",
    "relation",
    "relation_f",
    "relation_g_even_k",
    "relation_g_odd_k",
]
