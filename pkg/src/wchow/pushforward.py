"""Pushforwards of hyperplane monomials from projective spaces of binary forms.

For even ``k`` (and always for GL2) the projective bundle formula gives
``pi_*(h^m) = s_{m-k}(V_k)``.  For odd ``k`` under PGL2 the Chow ring of
``P(V_k)`` is generated over the base by classes ``gamma1, gamma2`` and

    pi_*(gamma1^m gamma2^n) = k^-1 sum_q E_{n,m}(q) s_{2(n-q)+m-k}(V_{k-1}) 2 c2^q.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .classes import RepDescriptor, TotalClass
from .errors import IntegralityError, WchowError
from .ring import GradedPolynomial


@dataclass(frozen=True)
class PushContext:
    """Which pushforward applies: group tag, ``k`` and the base representation."""

    group: str
    k: int
    base: RepDescriptor

    def __post_init__(self):
        if self.k < 1:
            raise WchowError("k must be at least 1")
        if self.group not in ("GL2", "PGL2"):
            raise WchowError(f"unsupported group {self.group!r}")
        expected = self.k - 1 if self.odd else self.k
        if self.base.rank != expected + 1:
            raise WchowError(f"base representation should be V_{expected}")

    @property
    def odd(self) -> bool:
        return self.group == "PGL2" and self.k % 2 == 1

    @classmethod
    def build(cls, group: str, k: int) -> "PushContext":
        if group == "GL2":
            return cls(group, k, RepDescriptor("GL2", "sym_dual", (k,)))
        degree = k - 1 if k % 2 else k
        return cls(group, k, RepDescriptor("PGL2", "pgl2_V", (degree,)))

    def segre_table(self, D: int) -> TotalClass:
        return self.base.segre(D)


def e_coeff(n: int, m: int, q: int) -> int:
    """``(-1)^q sum_{a+b=2q+1} 2^(m-a) C(m,a) C(n,b)``."""
    if min(n, m, q) < 0:
        raise WchowError("e_coeff arguments must be non-negative")
    total = 0
    for a in range(min(m, 2 * q + 1) + 1):
        b = 2 * q + 1 - a
        if b <= n:
            total += 2 ** (m - a) * comb(m, a) * comb(n, b)
    return -total if q % 2 else total


def push_even(m: int, k: int, segre_table: TotalClass) -> GradedPolynomial:
    """``pi_*(h^m) = s_{m-k}(V_k)``; zero when ``m < k``."""
    if m < k:
        return segre_table.ring.zero()
    return segre_table[m - k]


def push_odd(m: int, n: int, k: int, segre_table: TotalClass, divide: bool = True) -> GradedPolynomial:
    """``pi_*(gamma1^m gamma2^n)`` for odd ``k``.

    ``segre_table`` is the Segre class of ``V_{k-1}``.  With ``divide=False``
    the sum is returned before the final division by ``k``.
    """
    if k < 1 or k % 2 == 0:
        raise WchowError("push_odd needs an odd k")
    if m < 0 or n < 0:
        raise WchowError("exponents must be non-negative")
    ring = segre_table.ring
    c2 = ring.var("c2")
    total = ring.zero()
    top = 2 * n + m - k
    q = 0
    while 2 * q <= top:
        coeff = e_coeff(n, m, q)
        s = segre_table[top - 2 * q]
        if coeff and s:
            total = total + 2 * coeff * s * c2**q
        q += 1
    if not divide:
        return total
    try:
        return total.scale_divide(k)
    except IntegralityError as exc:
        raise IntegralityError(f"integrality violation: pushforward sum not divisible by {k}") from exc


__all__ = ["PushContext", "e_coeff", "push_even", "push_odd"]
