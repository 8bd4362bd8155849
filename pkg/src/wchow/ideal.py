"""Integer linear algebra for graded rings.

The central routine is :func:`hermite_solve`, which decides ``A x = b`` over
the integers.  Small systems go through a column Hermite reduction with
smallest-pivot Euclidean steps.  Large ones first try a multimodular shortcut
via python-flint (rational solves on several column supports, glued together
with the extended gcd); whenever the shortcut cannot decide, the exact
reduction runs.  Every returned solution is re-verified.

Homogeneous ideal membership in a fixed degree is a lattice problem: the
columns are normal forms of ``mu * g`` for monomials ``mu`` of complementary
degree, and in a ring with a torsion rule ``p * m = 0`` the extra columns
``p * e_m`` absorb the identification.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import gcd

from .errors import RingMismatchError, WchowError
from .ring import GradedPolynomial, Monomial, RingSpec

log = logging.getLogger(__name__)

try:
    import flint
except ImportError:  # pragma: no cover - the dependency is declared
    flint = None

_PRIME = (1 << 61) - 1
_FAST_THRESHOLD = 800
_FAST_TRIALS = 8


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise WchowError("matrix entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows) -> "IntegerMatrix":
        data = tuple(tuple(int(v) for v in r) for r in rows)
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, columns, nrows: int) -> "IntegerMatrix":
        data = [[0] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                data[i][j] = int(v)
        return cls(nrows, len(columns), tuple(tuple(r) for r in data))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __matmul__(self, x):
        if len(x) != self.cols:
            raise WchowError("dimension mismatch in matrix-vector product")
        return [sum(a * v for a, v in zip(row, x) if a and v) for row in self.entries]


# ---------------------------------------------------------------------------
# exact column Hermite reduction


def _hnf_solve(A: IntegerMatrix, b: list[int]) -> list[int] | None:
    m, n = A.rows, A.cols
    cols = [[A.entries[i][j] for i in range(m)] for j in range(n)]
    unim = [[int(i == j) for i in range(n)] for j in range(n)]
    pivots = []  # (row, column index)
    p = 0
    for i in range(m):
        if p == n:
            break
        while True:
            live = [j for j in range(p, n) if cols[j][i]]
            if not live:
                break
            piv = min(live, key=lambda j: abs(cols[j][i]))
            if len(live) == 1:
                break
            pv = cols[piv][i]
            for j in live:
                if j == piv:
                    continue
                q = cols[j][i] // pv
                if q:
                    cj, cp = cols[j], cols[piv]
                    for r in range(i, m):
                        if cp[r]:
                            cj[r] -= q * cp[r]
                    uj, up = unim[j], unim[piv]
                    for r in range(n):
                        if up[r]:
                            uj[r] -= q * up[r]
        live = [j for j in range(p, n) if cols[j][i]]
        if not live:
            continue
        j = live[0]
        cols[p], cols[j] = cols[j], cols[p]
        unim[p], unim[j] = unim[j], unim[p]
        pivots.append((i, p))
        p += 1
    y = [0] * n
    piv_of_row = dict(pivots)
    for i in range(m):
        residual = b[i] - sum(cols[j][i] * y[j] for j in range(p) if y[j] and cols[j][i])
        if i in piv_of_row:
            j = piv_of_row[i]
            q, r = divmod(residual, cols[j][i])
            if r:
                return None
            y[j] = q
        elif residual:
            return None
    x = [0] * n
    for j in range(p):
        if y[j]:
            uj = unim[j]
            for r in range(n):
                if uj[r]:
                    x[r] += y[j] * uj[r]
    return x


# ---------------------------------------------------------------------------
# multimodular shortcut


def _pivots_mod_p(rows: list[list[int]]) -> list[int]:
    if not rows or not rows[0]:
        return []
    M = flint.nmod_mat([[v % _PRIME for v in r] for r in rows], _PRIME)
    R, rank = M.rref()
    out, c = [], 0
    for i in range(rank):
        while int(R[i, c]) == 0:
            c += 1
        out.append(c)
        c += 1
    return out


def _rational_entries(y, n):
    out = []
    for i in range(n):
        v = y[i, 0]
        if hasattr(v, "q"):
            out.append((int(v.p), int(v.q)))
        else:
            out.append((int(v), 1))
    return out


def _fast_solve(A: IntegerMatrix, b: list[int]):
    """Return ``("solved", x)``, ``("unsolvable", None)`` or ``("unknown", None)``."""
    m, n = A.rows, A.cols
    rows = [list(r) for r in A.entries]
    transposed = [[rows[i][j] for i in range(m)] for j in range(n)]
    R = _pivots_mod_p(transposed)
    r = len(R)
    if r == 0:
        return ("solved", [0] * n) if not any(b) else ("unsolvable", None)
    sub_rows = [rows[i] for i in R]
    rhs = flint.fmpz_mat([[b[i]] for i in R])
    lattice = []  # (d, x) with A x = d b
    g = 0
    for trial in range(_FAST_TRIALS):
        order = list(range(n))
        if trial:
            random.Random(trial).shuffle(order)
        piv = _pivots_mod_p([[row[j] for j in order] for row in sub_rows])
        if len(piv) != r:
            return "unknown", None
        C = [order[j] for j in piv]
        B = flint.fmpz_mat([[row[j] for j in C] for row in sub_rows])
        try:
            y = _rational_entries(B.solve(rhs), r)
        except ZeroDivisionError:
            continue
        d = 1
        for _, q in y:
            d = d * q // gcd(d, q)
        x = [0] * n
        for j, (p, q) in zip(C, y):
            x[j] = p * (d // q)
        if A @ x != [d * v for v in b]:
            # the rows outside R are not implied by R: either the rational
            # system is inconsistent or the rank was underestimated mod p
            full = flint.fmpz_mat(rows)
            aug = flint.fmpz_mat([row + [v] for row, v in zip(rows, b)])
            if aug.rank() > full.rank():
                return "unsolvable", None
            return "unknown", None
        if r == n and d != 1:
            return "unsolvable", None
        lattice.append((d, x))
        g = gcd(g, d)
        if g == 1:
            break
    if g != 1:
        return "unknown", None
    # combine: sum u_t d_t = 1
    coeffs, acc = [1], lattice[0][0]
    for d, _ in lattice[1:]:
        s, t, acc = _xgcd(acc, d)
        coeffs = [c * s for c in coeffs] + [t]
    x = [0] * n
    for u, (_, xt) in zip(coeffs, lattice):
        if u:
            for j, v in enumerate(xt):
                if v:
                    x[j] += u * v
    return "solved", x


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -x0, -y0, -a
    return x0, y0, a


def hermite_solve(A: IntegerMatrix, b, *, fast: bool | None = None) -> list[int] | None:
    """Integer solution of ``A x = b`` or ``None`` when none exists.

    ``fast`` forces (True) or disables (False) the flint shortcut; by default
    it is used for large systems.
    """
    b = [int(v) for v in b]
    if len(b) != A.rows:
        raise WchowError("right-hand side length does not match the matrix")
    if fast is None:
        fast = flint is not None and A.rows * A.cols >= _FAST_THRESHOLD
    if fast and flint is not None:
        status, x = _fast_solve(A, b)
        if status == "unsolvable":
            return None
        if status == "solved":
            if A @ x != b:
                raise WchowError("internal error: fast solution failed verification")
            return x
        log.debug("fast path undecided on %dx%d system, falling back", A.rows, A.cols)
    x = _hnf_solve(A, b)
    if x is not None and A @ x != b:
        raise WchowError("internal error: solution failed verification")
    return x


def matrix_rank(A: IntegerMatrix) -> int:
    """Rank over the rationals."""
    if A.rows == 0 or A.cols == 0:
        return 0
    if flint is not None:
        return flint.fmpz_mat([list(r) for r in A.entries]).rank()
    from fractions import Fraction

    rows = [[Fraction(v) for v in r] for r in A.entries]
    rank = 0
    for c in range(A.cols):
        piv = next((i for i in range(rank, A.rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(A.rows):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# linear algebra over GF(2)


def solve_mod2(columns: list[int], target: int) -> tuple[int | None, list[int]]:
    """Solve over GF(2) with vectors packed into Python integers.

    Returns ``(x, kernel)``: ``x`` is a bitmask over the columns whose sum is
    ``target`` (``None`` if there is none), ``kernel`` a basis of the null
    space as bitmasks.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, vec in enumerate(columns):
        combo = 1 << j
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                pivots[top] = (vec, combo)
                break
            pv, pc = pivots[top]
            vec ^= pv
            combo ^= pc
        else:
            kernel.append(combo)
    combo, vec = 0, target
    while vec:
        top = vec.bit_length() - 1
        if top not in pivots:
            return None, kernel
        pv, pc = pivots[top]
        vec ^= pv
        combo ^= pc
    return combo, kernel


# ---------------------------------------------------------------------------
# graded membership


@dataclass
class MembershipCertificate:
    target: GradedPolynomial
    generators: list[GradedPolynomial]
    cofactors: list[GradedPolynomial]
    residual: GradedPolynomial

    def verify(self) -> bool:
        total = self.target.ring.zero()
        for c, g in zip(self.cofactors, self.generators):
            total = total + c * g
        return total + self.residual == self.target and not self.residual


def normal_monomials(ring: RingSpec, d: int) -> list[Monomial]:
    """Monomials of degree ``d`` that are not rewritten by the ring relations."""
    leads = [rule.lead for rule in ring.rewrites]
    out = []
    for mono in ring.monomials_of_degree(d):
        if not any(all(a >= b for a, b in zip(mono, lead)) for lead in leads):
            out.append(mono)
    return out


def _check_inputs(target, gens, ring):
    for p in [target, *gens]:
        if p.ring != ring:
            raise RingMismatchError(f"polynomial lives in {p.ring.name}, expected {ring.name}")
        if p._rational:
            raise WchowError("membership needs integer polynomials")
        if not p.is_homogeneous():
            raise WchowError("membership needs homogeneous polynomials")


def graded_membership(target: GradedPolynomial, gens, ring: RingSpec | None = None, *, fast: bool | None = None):
    """Certificate that ``target`` lies in the ideal of ``gens``, else ``None``."""
    ring = ring or target.ring
    gens = list(gens)
    _check_inputs(target, gens, ring)
    zero = ring.zero()
    if not target:
        return MembershipCertificate(target, gens, [zero] * len(gens), zero)
    D = target.degree()
    columns = []  # (gen index or None, multiplier monomial, polynomial)
    for gi, g in enumerate(gens):
        if not g or g.degree() > D:
            continue
        for mono in normal_monomials(ring, D - g.degree()):
            prod = ring.monomial(mono) * g
            if prod:
                columns.append((gi, mono, prod))
    for rule in ring.torsion:
        for mono in normal_monomials(ring, D):
            if all(a >= b for a, b in zip(mono, rule.divisor)):
                columns.append((None, mono, rule.prime))
    row_set = set(e for e, _ in target.items())
    for gi, mono, prod in columns:
        row_set.update([mono] if gi is None else (e for e, _ in prod.items()))
    rows = sorted(row_set, key=ring.sort_key, reverse=True)
    index = {e: i for i, e in enumerate(rows)}
    col_vectors = []
    for gi, mono, prod in columns:
        if gi is None:
            col_vectors.append({index[mono]: prod})
        else:
            col_vectors.append({index[e]: c for e, c in prod.items()})
    A = IntegerMatrix.from_columns(col_vectors, len(rows))
    b = [0] * len(rows)
    for e, c in target.items():
        b[index[e]] = c
    x = hermite_solve(A, b, fast=fast)
    if x is None:
        return None
    cof = [dict() for _ in gens]
    for (gi, mono, _), v in zip(columns, x):
        if v and gi is not None:
            cof[gi][mono] = cof[gi].get(mono, 0) + v
    cert = MembershipCertificate(
        target, gens, [GradedPolynomial(ring, c) for c in cof], zero
    )
    if not cert.verify():
        raise WchowError("internal error: membership certificate does not re-verify")
    return cert


def minimal_generators(gens, ring: RingSpec | None = None) -> list[GradedPolynomial]:
    """Greedy sweep in ascending degree dropping redundant generators."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = ring or gens[0].ring
    order = sorted(range(len(gens)), key=lambda i: (gens[i].degree(), i))
    kept = []
    for i in order:
        g = gens[i]
        if kept and graded_membership(g, kept, ring) is not None:
            continue
        kept.append(g)
    return kept


@dataclass
class IdealComparison:
    equal: bool
    certificates: list[MembershipCertificate] = field(default_factory=list)
    missing: list[tuple[str, GradedPolynomial]] = field(default_factory=list)

    def __bool__(self):
        return self.equal


def ideal_equal(gens_a, gens_b, ring: RingSpec | None = None, torsion_extras=()) -> IdealComparison:
    """Mutual membership test of two homogeneous ideals."""
    gens_a = list(gens_a) + list(torsion_extras)
    gens_b = list(gens_b) + list(torsion_extras)
    ring = ring or (gens_a + gens_b)[0].ring
    result = IdealComparison(True)
    for side, src, dst in (("left", gens_a, gens_b), ("right", gens_b, gens_a)):
        for g in src:
            cert = graded_membership(g, dst, ring)
            if cert is None:
                result.equal = False
                result.missing.append((side, g))
            else:
                result.certificates.append(cert)
    return result


__all__ = [
    "IdealComparison",
    "IntegerMatrix",
    "MembershipCertificate",
    "graded_membership",
    "hermite_solve",
    "ideal_equal",
    "matrix_rank",
    "minimal_generators",
    "normal_monomials",
    "solve_mod2",
]
