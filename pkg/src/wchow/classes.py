"""Total Chern and Segre classes of the representations the package needs.

Classes are degree-truncated: a :class:`TotalClass` stores the graded pieces
``c_0, ..., c_D`` for a cutoff ``D``.  Root-product families are computed by
expanding ``prod (1 + r t)`` over explicit Chern roots and symmetrizing each
coefficient separately.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import NotAUnitError, WchowError
from .ring import (
    GradedPolynomial,
    RingSpec,
    gl2_ring,
    gl2gm_ring,
    gl3_ring,
    p5_ring,
    pgl2gm_ring,
    root_ring,
    sl2gm_ring,
    substitute,
    symmetrize,
)

CUTOFF_ENV = "WCHOW_CUTOFF"


def default_cutoff(N: int) -> int:
    """Truncation degree for invariant ``N``; the environment may override it."""
    raw = os.environ.get(CUTOFF_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise WchowError(f"{CUTOFF_ENV} must be an integer, got {raw!r}") from None
        if value < 0:
            raise WchowError(f"{CUTOFF_ENV} must be non-negative")
        return value
    return 10 * N + 4


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the falling-factorial rule for negative ``n``."""
    if k < 0:
        raise WchowError(f"binomial with negative lower argument {k}")
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


@dataclass(frozen=True)
class TotalClass:
    """Graded pieces ``pieces[d]`` of degree ``d`` for ``0 <= d <= cutoff``."""

    ring: RingSpec
    pieces: tuple[GradedPolynomial, ...]

    def __post_init__(self):
        deg = self.ring.degree
        for d, p in enumerate(self.pieces):
            if p.ring != self.ring:
                raise WchowError("piece lives in the wrong ring")
            if any(deg(e) != d for e, _ in p.items()):
                raise WchowError(f"piece {d} is not homogeneous of degree {d}")

    @property
    def cutoff(self) -> int:
        return len(self.pieces) - 1

    def __getitem__(self, d: int) -> GradedPolynomial:
        if d < 0:
            return self.ring.zero()
        if d > self.cutoff:
            raise WchowError(f"degree {d} exceeds the truncation cutoff {self.cutoff}")
        return self.pieces[d]

    def __mul__(self, other: "TotalClass") -> "TotalClass":
        if other.ring != self.ring:
            raise WchowError("total classes live in different rings")
        D = min(self.cutoff, other.cutoff)
        out = []
        for d in range(D + 1):
            acc = self.ring.zero()
            for i in range(d + 1):
                a, b = self.pieces[i], other.pieces[d - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TotalClass(self.ring, tuple(out))

    def truncate(self, D: int) -> "TotalClass":
        return TotalClass(self.ring, self.pieces[: D + 1])

    def nonzero_degrees(self) -> list[int]:
        return [d for d, p in enumerate(self.pieces) if p]

    @classmethod
    def one(cls, ring: RingSpec, cutoff: int) -> "TotalClass":
        return cls(ring, (ring.one(),) + (ring.zero(),) * cutoff)


def segre(c: TotalClass) -> TotalClass:
    """Formal inverse of a total class with constant piece 1."""
    if c.pieces[0] != 1:
        raise NotAUnitError("not a unit: constant piece is not 1")
    s = [c.ring.one()]
    for d in range(1, c.cutoff + 1):
        acc = c.ring.zero()
        for i in range(1, d + 1):
            if c.pieces[i] and s[d - i]:
                acc = acc - c.pieces[i] * s[d - i]
        s.append(acc)
    return TotalClass(c.ring, tuple(s))


def twist_segre(s: TotalClass, rank: int, t: GradedPolynomial, j: int) -> GradedPolynomial:
    """Degree-``j`` Segre class of ``V (x) M`` from ``s(V)``, where ``c_1(M) = t``."""
    out = s.ring.zero()
    for l in range(j + 1):
        if s[l]:
            out = out + binomial(rank - 1 + j, rank - 1 + l) * s[l] * (-t) ** (j - l)
    return out


def twist_chern(c: TotalClass, rank: int, t: GradedPolynomial, cutoff: int | None = None) -> TotalClass:
    """Total Chern class of ``V (x) M`` from ``c(V)``, where ``c_1(M) = t``."""
    D = c.cutoff if cutoff is None else cutoff
    tp = [t**i for i in range(D + 1)]
    out = []
    for k in range(D + 1):
        acc = c.ring.zero()
        for i in range(min(k, rank) + 1):
            if c[i]:
                acc = acc + binomial(rank - i, k - i) * c[i] * tp[k - i]
        out.append(acc)
    return TotalClass(c.ring, tuple(out))


def root_product(roots: list[GradedPolynomial], D: int) -> list[GradedPolynomial]:
    """Pieces ``e_0..e_D`` of ``prod (1 + r t)``."""
    ring = roots[0].ring if roots else None
    e = [ring.one()] + [ring.zero()] * D if ring else []
    for r in roots:
        for k in range(min(D, len(roots)), 0, -1):
            if e[k - 1]:
                e[k] = e[k] + r * e[k - 1]
    return e


def _symmetrized_class(roots, D, target) -> TotalClass:
    if not roots:
        return TotalClass.one(target, D)
    pieces = [symmetrize(p, target) for p in root_product(roots, D)]
    return TotalClass(target, tuple(pieces))


def _sym_weights(n: int, k: int):
    """Exponent vectors of degree-n monomials in k variables."""
    if k == 1:
        yield (n,)
        return
    for a in range(n, -1, -1):
        for rest in _sym_weights(n - a, k - 1):
            yield (a,) + rest


# ---------------------------------------------------------------------------
# families


@lru_cache(maxsize=None)
def chern_gl2_sym(m: int, a: int, D: int) -> TotalClass:
    """``c(Sym^m E^dual (x) det(E)^a)`` in Z[c1, c2]."""
    if m < 0:
        raise WchowError("symmetric power must be non-negative")
    R = root_ring(2)
    l1, l2 = R.gens()
    c1 = -(l1 + l2)
    roots = [j * l1 + (m - j) * l2 + a * c1 for j in range(m + 1)]
    return _symmetrized_class(roots, D, gl2_ring())


@lru_cache(maxsize=None)
def chern_pgl2_V(two_m: int, D: int, lift: bool = False) -> TotalClass:
    """Total Chern class of the PGL2-representation ``V_{2m}``.

    ``c_d`` is the coefficient of ``t^(2m+1-d)`` in
    ``t prod_{j=1}^m (t^2 + j^2 c2)`` plus a c3-correction whose shape depends
    on the parity of ``m``.  With ``lift`` the result is kept in the
    torsion-free ring Z[tau1, c2, c3].
    """
    if two_m < 0 or two_m % 2:
        raise WchowError("PGL2 representations V_{2m} need an even non-negative index")
    ring = pgl2gm_lift_ring() if lift else pgl2gm_ring()
    m = two_m // 2
    if m == 0:
        return TotalClass.one(ring, D)
    c2, c3 = ring.var("c2"), ring.var("c3")
    # polynomials in t as coefficient lists
    P = [ring.zero(), ring.one()]
    for j in range(1, m + 1):
        P = _tmul(P, [j * j * c2, ring.zero(), ring.one()], ring)
    base = [ring.zero(), c2, ring.zero(), ring.one()]  # t^3 + c2 t
    if m % 2 == 0:
        half, shift = m // 2, m // 2 + 1
    else:
        half, shift = (m + 1) // 2, (m - 1) // 2
    extra = [ring.zero()]
    for j in range(1, half + 1):
        term = [comb(half, j) * c3**j]
        for _ in range(half - j):
            term = _tmul(term, base, ring)
        extra = _tadd(extra, term, ring)
    extra = [ring.zero()] * shift + extra
    P = _tadd(P, extra, ring)
    top = 2 * m + 1
    pieces = []
    for d in range(D + 1):
        idx = top - d
        pieces.append(P[idx] if 0 <= idx < len(P) else ring.zero())
    return TotalClass(ring, tuple(pieces))


def _tmul(a, b, ring):
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _tadd(a, b, ring):
    n = max(len(a), len(b))
    a = a + [ring.zero()] * (n - len(a))
    b = b + [ring.zero()] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


@lru_cache(maxsize=None)
def pgl2gm_lift_ring() -> RingSpec:
    return RingSpec("pgl2gm_lift", (("tau1", 1), ("c2", 2), ("c3", 3)))


@lru_cache(maxsize=None)
def chern_sl2gm_V(two_m: int, tau_weight: int, D: int) -> TotalClass:
    """``c(Sym^{2m} E^dual (x) L^w)`` for SL2 x Gm in Z[tau1, c2]."""
    if two_m < 0 or two_m % 2:
        raise WchowError("SL2 x Gm family needs an even non-negative index")
    R = root_ring(2, (("tau1", 1),))
    l1, l2, tau = R.gens()
    roots = [i * l1 + (two_m - i) * l2 + tau_weight * tau for i in range(two_m + 1)]
    with_c1 = _symmetrized_class(roots, D, gl2gm_ring())
    target = sl2gm_ring()
    pieces = tuple(substitute(p, {"c1": 0}, target).to_integral() for p in with_c1.pieces)
    return TotalClass(target, pieces)


# ---------------------------------------------------------------------------
# bundles on P^5


@lru_cache(maxsize=None)
def chern_gl3_sym(n: int, D: int) -> TotalClass:
    """``c(Sym^n F^dual)`` for the standard GL3-representation, in Z[c1, c2, c3]."""
    R = root_ring(3)
    ls = R.gens()
    roots = []
    for w in _sym_weights(n, 3):
        r = R.zero()
        for coeff, l in zip(w, ls):
            if coeff:
                r = r + coeff * l
        roots.append(r)
    return _symmetrized_class(roots, D, gl3_ring())


def _to_p5(c: TotalClass, target: RingSpec) -> TotalClass:
    bindings = {} if "c1" in target.names else {"c1": 0}
    pieces = tuple(substitute(p, bindings, target).to_integral() for p in c.pieces)
    return TotalClass(target, pieces)


@dataclass(frozen=True)
class WSequence:
    """The exact sequence ``0 -> sub -> ambient -> W -> 0`` on P^5."""

    N: int
    d: int
    rank: int
    sub: TotalClass
    ambient: TotalClass
    quotient: TotalClass


def _check_w_args(N, d):
    if N < 2 or N % 2:
        raise WchowError("W-bundles are defined for even N >= 2")
    if d not in (1, 2, 3):
        raise WchowError("d must be 1, 2 or 3")


@lru_cache(maxsize=None)
def w_sequence(N: int, d: int, D: int | None = None, with_c1: bool = True) -> WSequence:
    """Chern classes of the sequence defining the bundle ``W^N_{2dN}`` over P^5.

    The ambient bundle is ``Sym^{dN}`` of the dual standard GL3-representation
    twisted by weight ``-2d`` of Gm; the sub-bundle is ``Sym^{dN-2}`` with the
    same twist and an extra ``O(-1)``.
    """
    _check_w_args(N, d)
    n = d * N
    rank = 2 * n + 1
    D = rank if D is None else D
    target = p5_ring(with_c1)
    tau, h = target.var("tau1"), target.var("h")
    amb_rank, sub_rank = comb(n + 2, 2), comb(n, 2)
    amb = twist_chern(_to_p5(chern_gl3_sym(n, D), target), amb_rank, -2 * d * tau)
    sub = twist_chern(_to_p5(chern_gl3_sym(n - 2, D), target), sub_rank, -2 * d * tau - h)
    quotient = amb * segre(sub)
    return WSequence(N, d, rank, sub, amb, quotient)


def chern_w_top(N: int, d: int, D: int | None = None, with_c1: bool = True) -> GradedPolynomial:
    """Top Chern class ``c_{2dN+1}`` of ``W^N_{2dN}`` in the P^5 ring."""
    seq = w_sequence(N, d, D, with_c1)
    return seq.quotient[seq.rank]


def top_chern_sub(N: int, d: int, with_c1: bool = True) -> GradedPolynomial:
    r = comb(d * N, 2)
    return w_sequence(N, d, max(r, 2 * d * N + 1), with_c1).sub[r]


def top_chern_ambient(N: int, d: int, with_c1: bool = True) -> GradedPolynomial:
    r = comb(d * N + 2, 2)
    return w_sequence(N, d, max(r, 2 * d * N + 1), with_c1).ambient[r]


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class RepDescriptor:
    """Symbolic name of a representation together with its parameters.

    ``kind`` is one of ``sym_dual`` (m), ``sym_dual_det_twist`` (m, a),
    ``pgl2_V`` (2m), ``sym_dual_tau_twist`` (2m, w) or
    ``gl3_form_bundle`` (N, d, part) with part ``ambient``, ``sub`` or
    ``quotient``.
    """

    group: str
    kind: str
    params: tuple

    _KINDS = {
        "sym_dual": "GL2",
        "sym_dual_det_twist": "GL2",
        "pgl2_V": "PGL2",
        "sym_dual_tau_twist": "SL2xGm",
        "gl3_form_bundle": "GL3xGm",
    }

    def __post_init__(self):
        expected = self._KINDS.get(self.kind)
        if expected is None:
            raise WchowError(f"unknown representation kind {self.kind!r}")
        if expected != self.group:
            raise WchowError(f"{self.kind} belongs to {expected}, not {self.group}")
        ints = [p for p in self.params if isinstance(p, int)]
        if self.kind != "sym_dual_tau_twist" and any(p < 0 for p in ints):
            raise WchowError("parameters must be non-negative")
        if self.kind == "pgl2_V" and self.params[0] % 2:
            raise WchowError("pgl2_V needs an even degree")

    @property
    def rank(self) -> int:
        k, p = self.kind, self.params
        if k in ("sym_dual", "sym_dual_det_twist", "pgl2_V", "sym_dual_tau_twist"):
            return p[0] + 1
        N, d, part = p
        n = d * N
        return {"ambient": comb(n + 2, 2), "sub": comb(n, 2), "quotient": 2 * n + 1}[part]

    def chern(self, D: int) -> TotalClass:
        k, p = self.kind, self.params
        if k == "sym_dual":
            return chern_gl2_sym(p[0], 0, D)
        if k == "sym_dual_det_twist":
            return chern_gl2_sym(p[0], p[1], D)
        if k == "pgl2_V":
            return chern_pgl2_V(p[0], D)
        if k == "sym_dual_tau_twist":
            return chern_sl2gm_V(p[0], p[1], D)
        N, d, part = p
        return getattr(w_sequence(N, d, D), part)

    def segre(self, D: int) -> TotalClass:
        return segre(self.chern(D))


__all__ = [
    "CUTOFF_ENV",
    "RepDescriptor",
    "TotalClass",
    "WSequence",
    "binomial",
    "chern_gl2_sym",
    "chern_gl3_sym",
    "chern_pgl2_V",
    "chern_sl2gm_V",
    "chern_w_top",
    "default_cutoff",
    "pgl2gm_lift_ring",
    "root_product",
    "segre",
    "top_chern_ambient",
    "top_chern_sub",
    "twist_chern",
    "twist_segre",
    "w_sequence",
]
