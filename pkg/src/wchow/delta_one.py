"""Fundamental class of the locus of forms with identically vanishing discriminant.

For odd ``N`` the class is a quotient of top Chern classes of GL2
representations and is found by exact division in Z[c1, c2].

For even ``N`` the defining identity lives in the Chow ring of P^5 over
B(GL3 x Gm): ``xi * c_top(W_2N) = c_top(W_4N) * c_top(W_6N)``, and the class
is ``xi`` at ``h = c1 = 0``.  That identity has no integral solution (nor a
rational one), so the default route determines the answer through its two
reductions instead:

* modulo c3: at ``h = c1 = c3 = 0`` the identity becomes an exact division
  in Z[tau1, c2];
* modulo 2: the identity is solvable over GF(2), and when every GF(2)
  solution has the same value at ``h = c1 = 0`` this fixes the c3-part,
  whose coefficients live in Z/2.

The SL2 x Gm computation followed by ``c2 -> c2/4`` gives an independent
value modulo c3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .classes import chern_w_top
from .errors import NotDivisibleError, WchowError
from .ideal import IntegerMatrix, hermite_solve, normal_monomials, solve_mod2
from .ring import (
    GradedPolynomial,
    exact_divide,
    gl2_ring,
    gl2gm_ring,
    p5_ring,
    pgl2gm_ring,
    root_ring,
    sl2gm_ring,
    substitute,
    symmetrize,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaOneResult:
    N: int
    parity: str
    cls: GradedPolynomial
    crosscheck_mod_c3: GradedPolynomial | None = None
    c3_determined: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def degree(self) -> int:
        return 8 * self.N + 1


def _gl2_top(m: int, twist: int) -> GradedPolynomial:
    R = root_ring(2)
    l1, l2 = R.gens()
    c1 = -(l1 + l2)
    prod = R.one()
    for j in range(m + 1):
        prod = prod * (j * l1 + (m - j) * l2 + twist * c1)
    return symmetrize(prod, gl2_ring())


def _sl2gm_top(m: int, tau_weight: int) -> GradedPolynomial:
    R = root_ring(2, (("tau1", 1),))
    l1, l2, tau = R.gens()
    prod = R.one()
    for i in range(m + 1):
        prod = prod * (i * l1 + (m - i) * l2 + tau_weight * tau)
    full = symmetrize(prod, gl2gm_ring())
    return substitute(full, {"c1": 0}, sl2gm_ring()).to_integral()


def _check_N(N: int, parity: int):
    if N < 1 or N % 2 != parity:
        kind = "odd" if parity else "even"
        raise WchowError(f"N must be a positive {kind} integer, got {N}")


@lru_cache(maxsize=None)
def delta1_odd(N: int) -> DeltaOneResult:
    """``c_{10N+2}(V_{4N} + V_{6N}) / c_{2N+1}(V_{2N})`` in Z[c1, c2]."""
    _check_N(N, 1)
    num = _gl2_top(4 * N, 2 * (N - 1)) * _gl2_top(6 * N, 3 * (N - 1))
    den = _gl2_top(2 * N, N - 1)
    try:
        q = exact_divide(num, den)
    except NotDivisibleError as exc:
        raise WchowError(f"internal error: odd Delta1 quotient for N={N} is not polynomial") from exc
    return DeltaOneResult(N, "odd", q)


# ---------------------------------------------------------------------------
# even N


@lru_cache(maxsize=None)
def sl2gm_delta1(N: int) -> GradedPolynomial:
    """The SL2 x Gm quotient ``c_{10N+2}(V_{4N,6N}) / c_{2N+1}(V_{2N})`` in Z[tau1, c2]."""
    _check_N(N, 0)
    num = _sl2gm_top(4 * N, -4) * _sl2gm_top(6 * N, -6)
    den = _sl2gm_top(2 * N, -2)
    try:
        return exact_divide(num, den)
    except NotDivisibleError as exc:
        raise WchowError(f"internal error: SL2 x Gm quotient for N={N} is not polynomial") from exc


def _quarter_c2(p: GradedPolynomial) -> GradedPolynomial:
    ring = sl2gm_ring()
    c2 = ring.var("c2").to_rational() * Fraction(1, 4)
    return substitute(p, {"c2": c2}, ring).to_integral()


def _embed_pgl2(p: GradedPolynomial) -> GradedPolynomial:
    return substitute(p, {}, pgl2gm_ring()).to_integral()


@lru_cache(maxsize=None)
def delta1_even_crosscheck(N: int) -> GradedPolynomial:
    """The Delta1 class modulo c3 from the SL2 x Gm route, in the PGL2 ring."""
    return _embed_pgl2(_quarter_c2(sl2gm_delta1(N)))


@lru_cache(maxsize=None)
def _w_tops(N: int, with_c1: bool):
    return tuple(chern_w_top(N, d, with_c1=with_c1) for d in (1, 2, 3))


def _mod_c3_part(N: int) -> GradedPolynomial:
    w1, w2, w3 = _w_tops(N, False)
    target = sl2gm_ring()

    def red(p):
        return substitute(p, {"h": 0, "c3": 0}, target).to_integral()

    num, den = red(w2) * red(w3), red(w1)
    try:
        q = exact_divide(num, den)
    except NotDivisibleError as exc:
        raise WchowError(f"internal error: Delta1 modulo c3 for N={N} is not polynomial") from exc
    if q * den != num:
        raise WchowError("internal error: modulo-c3 quotient failed round trip")
    return q


def _mod_2_part(N: int):
    """Value of ``xi`` at ``h = c1 = 0`` over GF(2) as a set of monomials.

    Returns ``None`` when GF(2) solutions disagree there.
    """
    ring = p5_ring(True)
    w1, w2, w3 = _w_tops(N, True)
    rhs = w2 * w3
    unknowns = normal_monomials(ring, 8 * N + 1)
    rows = normal_monomials(ring, 10 * N + 2)
    index = {m: i for i, m in enumerate(rows)}

    def bits(p):
        v = 0
        for e, c in p.items():
            if c & 1:
                v |= 1 << index[e]
        return v

    columns = [bits(ring.monomial(m) * w1) for m in unknowns]
    x, kernel = solve_mod2(columns, bits(rhs))
    if x is None:
        raise WchowError(f"internal error: Delta1 identity for N={N} has no solution modulo 2")
    hi, ci = ring.index("h"), ring.index("c1")
    at_zero = [j for j, m in enumerate(unknowns) if m[hi] == 0 and m[ci] == 0]
    mask = sum(1 << j for j in at_zero)
    if any(k & mask for k in kernel):
        return None
    return {unknowns[j] for j in at_zero if x >> j & 1}


@lru_cache(maxsize=None)
def delta1_even(N: int, method: str = "split", with_c1: bool = True) -> DeltaOneResult:
    """Delta1 class for even ``N`` in Z[tau1, c2, c3]/(2 c3).

    ``method="split"`` (default) combines the modulo-c3 exact division with
    the GF(2) solve described in the module docstring.  ``method="p5"`` runs
    the integral linear solve in the P^5 ring directly and raises when it
    has no solution; ``with_c1=False`` restricts that solve to ``c1 = 0``.
    """
    _check_N(N, 0)
    if method == "p5":
        return _delta1_even_p5(N, with_c1)
    if method != "split":
        raise WchowError(f"unknown method {method!r}")
    target = pgl2gm_ring()
    free_part = _mod_c3_part(N)
    cross = delta1_even_crosscheck(N)
    notes = []
    value = _embed_pgl2(free_part)
    if value != cross:
        notes.append("SL2 x Gm crosscheck disagrees modulo c3")
        if N == 2:
            raise WchowError("internal error: crosscheck failed for N=2")
    mod2 = _mod_2_part(N)
    if mod2 is None:
        notes.append("c3-part undetermined: GF(2) solutions differ at h=c1=0")
        log.warning("Delta1 for N=%d: c3-part not determined, reporting the c3-free part", N)
        return DeltaOneResult(N, "even", value, cross, False, tuple(notes))
    hi = p5_ring(True).index("h")
    ci = p5_ring(True).index("c1")

    def to_target(m):
        return tuple(x for i, x in enumerate(m) if i not in (ci, hi))

    mod2_target = {to_target(m) for m in mod2}
    c3 = target.index("c3")
    free_mod2 = {e for e, c in free_part.items() if c % 2}
    if {(a, b) for (a, b, c) in mod2_target if c == 0} != free_mod2:
        raise WchowError("internal error: modulo-2 and modulo-c3 reductions disagree")
    extra = GradedPolynomial(target, {m: 1 for m in mod2_target if m[c3]})
    return DeltaOneResult(N, "even", value + extra, cross, True, tuple(notes))


def _delta1_even_p5(N: int, with_c1: bool) -> DeltaOneResult:
    ring = p5_ring(with_c1)
    w1, w2, w3 = _w_tops(N, with_c1)
    rhs = w2 * w3
    unknowns = normal_monomials(ring, 8 * N + 1)
    rows = normal_monomials(ring, 10 * N + 2)
    index = {m: i for i, m in enumerate(rows)}
    columns = [{index[e]: c for e, c in (ring.monomial(m) * w1).items()} for m in unknowns]
    A = IntegerMatrix.from_columns(columns, len(rows))
    b = [0] * len(rows)
    for e, c in rhs.items():
        b[index[e]] = c
    x = hermite_solve(A, b)
    if x is None:
        raise WchowError(f"no solution: the Delta1 identity for N={N} is not solvable in {ring.name}")
    xi = GradedPolynomial(ring, {m: v for m, v in zip(unknowns, x) if v})
    if xi * w1 != rhs:
        raise WchowError("internal error: solution failed round trip")
    bindings = {"h": 0}
    if with_c1:
        bindings["c1"] = 0
    value = substitute(xi, bindings, pgl2gm_ring()).to_integral()
    return DeltaOneResult(N, "even", value, delta1_even_crosscheck(N))


def delta1(N: int) -> DeltaOneResult:
    return delta1_odd(N) if N % 2 else delta1_even(N)


__all__ = [
    "DeltaOneResult",
    "delta1",
    "delta1_even",
    "delta1_even_crosscheck",
    "delta1_odd",
    "sl2gm_delta1",
]
