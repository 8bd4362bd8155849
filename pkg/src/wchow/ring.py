"""Weighted-graded polynomial rings over the integers and the rationals.

A :class:`RingSpec` declares variables with weighted degrees together with
reduction rules.  Two kinds of rule are supported:

* torsion rules ``(p, d)``: the coefficient of any monomial divisible by
  ``d`` is reduced modulo ``p`` into ``{0, ..., p-1}``;
* rewrite rules ``(lead, replacement)``: a monomial divisible by ``lead`` is
  replaced, repeatedly, until no term is divisible any more.

Polynomials are stored sparsely as ``{exponent tuple: coefficient}`` and are
always kept in normal form, so equality is a term-wise comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterable, Mapping, Union

from .errors import (
    NotDivisibleError,
    NotSymmetricError,
    IntegralityError,
    ParseError,
    RingMismatchError,
    WchowError,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class TorsionRule:
    prime: int
    divisor: Monomial


@dataclass(frozen=True)
class RewriteRule:
    lead: Monomial
    replacement: tuple[tuple[Monomial, int], ...]


@dataclass(frozen=True)
class RingSpec:
    """Variables ``(name, degree)`` plus reduction rules.

    ``roots`` lists the variables that play the role of Chern roots; only
    those are touched by :func:`symmetrize`.
    """

    name: str
    variables: tuple[tuple[str, int], ...]
    torsion: tuple[TorsionRule, ...] = ()
    rewrites: tuple[RewriteRule, ...] = ()
    roots: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.variables)
        if len({v for v, _ in self.variables}) != n:
            raise WchowError(f"duplicate variable names in ring {self.name}")
        if any(d <= 0 for _, d in self.variables):
            raise WchowError("variable degrees must be positive")
        for rule in self.torsion:
            if len(rule.divisor) != n or rule.prime < 2:
                raise WchowError("malformed torsion rule")
        for rule in self.rewrites:
            if len(rule.lead) != n or not any(rule.lead):
                raise WchowError("malformed rewrite rule")
            d = self.degree(rule.lead)
            for mono, _ in rule.replacement:
                if self.degree(mono) != d:
                    raise WchowError("rewrite rule is not homogeneous")
        for r in self.roots:
            if r not in self.names:
                raise WchowError(f"unknown root variable {r}")

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.variables)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.variables)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_domain(self) -> bool:
        return not self.torsion and not self.rewrites

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise WchowError(f"ring {self.name} has no variable {name!r}") from None

    def degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def sort_key(self, mono: Monomial):
        return (self.degree(mono), mono)

    def monomials_of_degree(self, d: int, bounds: Mapping[str, int] | None = None) -> list[Monomial]:
        """All monomials of weighted degree ``d`` in descending graded-lex order.

        ``bounds`` optionally caps the exponent of named variables.
        """
        caps = [None] * self.nvars
        for name, cap in (bounds or {}).items():
            caps[self.index(name)] = cap
        degs = self.degrees
        out: list[Monomial] = []

        def rec(i, left, acc):
            if i == len(degs) - 1:
                if left % degs[i] == 0 and (caps[i] is None or left // degs[i] <= caps[i]):
                    out.append(tuple(acc) + (left // degs[i],))
                return
            top = left // degs[i]
            if caps[i] is not None:
                top = min(top, caps[i])
            for e in range(top, -1, -1):
                rec(i + 1, left - e * degs[i], acc + [e])

        if d >= 0 and degs:
            rec(0, d, [])
        elif d == 0:
            out.append(())
        return out

    # normal forms --------------------------------------------------------

    def _rewrite(self, terms: dict) -> dict:
        rules = self.rewrites
        if not rules:
            return terms
        out: dict = {}
        pending = terms
        while pending:
            nxt: dict = {}
            for e, c in pending.items():
                if not c:
                    continue
                for rule in rules:
                    lead = rule.lead
                    if all(a >= b for a, b in zip(e, lead)):
                        q = tuple(a - b for a, b in zip(e, lead))
                        for r, rc in rule.replacement:
                            m = tuple(a + b for a, b in zip(q, r))
                            nxt[m] = nxt.get(m, 0) + c * rc
                        break
                else:
                    out[e] = out.get(e, 0) + c
            pending = nxt
        return out

    def _torsion(self, terms: dict) -> dict:
        for rule in self.torsion:
            p, d = rule.prime, rule.divisor
            for e, c in terms.items():
                if all(a >= b for a, b in zip(e, d)):
                    terms[e] = c % p
        return terms

    def normalize(self, terms: dict) -> dict:
        terms = self._torsion(self._rewrite(terms))
        return {e: c for e, c in terms.items() if c}

    def normalize_rational(self, terms: dict) -> dict:
        terms = self._rewrite(terms)
        return {e: c for e, c in terms.items() if c}

    # constructors --------------------------------------------------------

    def zero(self) -> "GradedPolynomial":
        return GradedPolynomial(self, {}, normalized=True)

    def one(self) -> "GradedPolynomial":
        return self.constant(1)

    def constant(self, c: int) -> "GradedPolynomial":
        return GradedPolynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "GradedPolynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return GradedPolynomial(self, {tuple(e): 1})

    def gens(self) -> tuple["GradedPolynomial", ...]:
        return tuple(self.var(v) for v in self.names)

    def monomial(self, exps: Mapping[str, int] | Monomial, coeff: int = 1) -> "GradedPolynomial":
        if isinstance(exps, Mapping):
            e = [0] * self.nvars
            for k, v in exps.items():
                e[self.index(k)] = v
            exps = tuple(e)
        return GradedPolynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "GradedPolynomial":
        return parse_polynomial(text, self)


# ---------------------------------------------------------------------------
# polynomials


Scalar = Union[int, Fraction]


class _PolyBase:
    __slots__ = ("ring", "_terms")
    _rational = False

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, Scalar] | None = None, *, normalized: bool = False):
        self.ring = ring
        raw = dict(terms) if terms else {}
        if not normalized:
            n = ring.nvars
            for e, c in raw.items():
                if len(e) != n or any(x < 0 for x in e):
                    raise WchowError(f"bad exponent vector {e} for ring {ring.name}")
            raw = self._normalize(ring, {e: self._coerce(c) for e, c in raw.items()})
        self._terms = raw

    @staticmethod
    def _coerce(c):
        return c

    @classmethod
    def _normalize(cls, ring, terms):
        return ring.normalize(terms)

    def _new(self, terms, ring=None):
        return type(self)(ring or self.ring, terms)

    # access --------------------------------------------------------------

    def items(self):
        return self._terms.items()

    def terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending graded-lex order."""
        key = self.ring.sort_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def coefficient(self, mono: Mapping[str, int] | Monomial) -> Scalar:
        if isinstance(mono, Mapping):
            e = [0] * self.ring.nvars
            for k, v in mono.items():
                e[self.ring.index(k)] = v
            mono = tuple(e)
        return self._terms.get(tuple(mono), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {self.ring.degree(e) for e in self._terms}

    def degree(self) -> int | None:
        """Highest weighted degree, or ``None`` for the zero polynomial."""
        ds = self.degrees()
        return max(ds) if ds else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading_term(self) -> tuple[Monomial, Scalar]:
        if not self._terms:
            raise WchowError("zero polynomial has no leading term")
        e = max(self._terms, key=self.ring.sort_key)
        return e, self._terms[e]

    def variables(self) -> set[str]:
        names = self.ring.names
        return {names[i] for e in self._terms for i, x in enumerate(e) if x}

    # arithmetic ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, _PolyBase):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring.name} vs {other.ring.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return None
        return NotImplemented

    def _result_type(self, other):
        if self._rational or (other is not None and other._rational):
            return RationalGradedPolynomial
        return GradedPolynomial

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            cls = RationalGradedPolynomial if isinstance(other, Fraction) else type(self)
            o = cls(self.ring, {(0,) * self.ring.nvars: other})
        terms = dict(self._terms)
        for e, c in o._terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._result_type(o)(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            cls = RationalGradedPolynomial if isinstance(other, Fraction) else type(self)
            return cls(self.ring, {e: c * other for e, c in self._terms.items()})
        a, b = self._terms, o._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                m = tuple([x + y for x, y in zip(e1, e2)])
                out[m] = get(m, 0) + c1 * c2
        return self._result_type(o)(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise WchowError("only non-negative integer powers are supported")
        result = self._result_type(None)(self.ring, {(0,) * self.ring.nvars: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, _PolyBase):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.ring.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.name, frozenset(self._terms.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.ring.name}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    # misc ----------------------------------------------------------------

    def graded_component(self, d: int):
        return graded_component(self, d)

    def scale_divide(self, k: int):
        """Divide every coefficient by the integer ``k`` exactly.

        In a ring with a torsion rule ``(p, d)``, coefficients of monomials
        divisible by ``d`` are residues mod ``p`` and get multiplied by the
        inverse of ``k`` mod ``p`` instead.
        """
        if k == 0:
            raise ZeroDivisionError("division by zero")
        if self._rational:
            return RationalGradedPolynomial(self.ring, {e: c / k for e, c in self._terms.items()})
        out = {}
        for e, c in self._terms.items():
            rule = _torsion_rule_for(self.ring, e)
            if rule is not None:
                out[e] = c * pow(k, -1, rule.prime)
            elif c % k:
                raise IntegralityError(f"coefficient {c} is not divisible by {k}")
            else:
                out[e] = c // k
        return GradedPolynomial(self.ring, out)

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self._terms.values():
            g = gcd(g, int(c))
        return g


def _torsion_rule_for(ring: RingSpec, e: Monomial) -> TorsionRule | None:
    for rule in ring.torsion:
        if all(a >= b for a, b in zip(e, rule.divisor)):
            return rule
    return None


class GradedPolynomial(_PolyBase):
    """Integer polynomial in normal form for its ring."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise IntegralityError(f"non-integral coefficient {c}")
            return c.numerator
        if not isinstance(c, int):
            raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        return c

    def to_rational(self) -> "RationalGradedPolynomial":
        return RationalGradedPolynomial(self.ring, {e: Fraction(c) for e, c in self._terms.items()}, normalized=True)


class RationalGradedPolynomial(_PolyBase):
    """Rational polynomial; torsion rules are only applied by :meth:`to_integral`."""

    __slots__ = ()
    _rational = True

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    @classmethod
    def _normalize(cls, ring, terms):
        return ring.normalize_rational(terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def to_integral(self) -> GradedPolynomial:
        bad = [c for c in self._terms.values() if c.denominator != 1]
        if bad:
            raise IntegralityError(f"non-integral coefficient {bad[0]}")
        return GradedPolynomial(self.ring, {e: c.numerator for e, c in self._terms.items()})


AnyPoly = Union[GradedPolynomial, RationalGradedPolynomial]


# ---------------------------------------------------------------------------
# operations


def poly_arith(a: AnyPoly, b: AnyPoly, op: str) -> AnyPoly:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring.name} vs {b.ring.name}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def graded_component(p: AnyPoly, d: int) -> AnyPoly:
    deg = p.ring.degree
    return type(p)(p.ring, {e: c for e, c in p.items() if deg(e) == d}, normalized=True)


def exact_divide(num: GradedPolynomial, den: GradedPolynomial) -> GradedPolynomial:
    """Return ``q`` with ``q * den == num`` in a polynomial ring over Z."""
    ring = num.ring
    if den.ring != ring:
        raise RingMismatchError(f"{ring.name} vs {den.ring.name}")
    if not ring.is_domain:
        raise WchowError(f"exact division needs a ring without relations, got {ring.name}")
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    key = ring.sort_key
    lead_e, lead_c = den.leading_term()
    den_items = list(den.items())
    rem = dict(num.items())
    quot: dict = {}
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        q = tuple(a - b for a, b in zip(e, lead_e))
        if any(x < 0 for x in q) or c % lead_c:
            raise NotDivisibleError("not divisible")
        qc = c // lead_c
        quot[q] = qc
        for de, dc in den_items:
            m = tuple(a + b for a, b in zip(q, de))
            v = rem.get(m, 0) - qc * dc
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return GradedPolynomial(ring, quot, normalized=True)


def _as_rational(value, ring: RingSpec) -> RationalGradedPolynomial:
    if isinstance(value, (int, Fraction)):
        return RationalGradedPolynomial(ring, {(0,) * ring.nvars: value})
    if value.ring != ring:
        raise RingMismatchError(f"binding lives in {value.ring.name}, expected {ring.name}")
    if isinstance(value, GradedPolynomial):
        return value.to_rational()
    return value


def substitute(p: AnyPoly, bindings: Mapping[str, object], target: RingSpec | None = None) -> RationalGradedPolynomial:
    """Replace variables of ``p`` by polynomials of ``target``.

    Variables without a binding map to the variable of the same name in
    ``target``.  Each binding must be zero or homogeneous of the degree of the
    variable it replaces.  Use :meth:`RationalGradedPolynomial.to_integral`
    to assert integrality of the result.
    """
    src = p.ring
    target = target or src
    images = []
    for name, deg in src.variables:
        if name in bindings:
            img = _as_rational(bindings[name], target)
            if img and (not img.is_homogeneous() or img.degree() != deg):
                raise WchowError(f"binding for {name} must be homogeneous of degree {deg}")
        elif name in target.names:
            if target.degrees[target.index(name)] != deg:
                raise WchowError(f"variable {name} changes degree")
            img = target.var(name).to_rational()
        else:
            if any(e[src.index(name)] for e, _ in p.items()):
                raise WchowError(f"no image for variable {name} in {target.name}")
            img = None
        images.append(img)

    powers: list[dict[int, RationalGradedPolynomial]] = [{} for _ in images]

    def power(i, k):
        cache_i = powers[i]
        if k not in cache_i:
            cache_i[k] = images[i] ** k
        return cache_i[k]

    out: dict = {}
    for e, c in p.items():
        term = RationalGradedPolynomial(target, {(0,) * target.nvars: c})
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
                if not term:
                    break
        for m, v in term.items():
            out[m] = out.get(m, 0) + v
    return RationalGradedPolynomial(target, out)


def evaluate(p: AnyPoly, values: Mapping[str, Scalar]) -> Scalar:
    """Evaluate ``p`` at numbers; relations of the ring are ignored."""
    names = p.ring.names
    vals = [values[n] for n in names]
    total = 0
    for e, c in p.items():
        t = c
        for v, k in zip(vals, e):
            if k:
                t *= v**k
        total += t
    return total


# symmetric reduction -------------------------------------------------------


@cache
def _elementary(k: int, d: int) -> dict:
    """e_d in k variables as a dict of exponent tuples."""
    out = {}
    for idx in _subsets(k, d):
        e = [0] * k
        for i in idx:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def _subsets(k, d, start=0):
    if d == 0:
        yield ()
        return
    for i in range(start, k - d + 1):
        for rest in _subsets(k, d - 1, i + 1):
            yield (i,) + rest


def _dmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            m = tuple([x + y for x, y in zip(e1, e2)])
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


@cache
def _elementary_monomial(ns: tuple[int, ...]) -> dict:
    """prod_d e_d^{ns[d-1]} expanded in len(ns) variables."""
    k = len(ns)
    if not any(ns):
        return {(0,) * k: 1}
    d = max(i for i, n in enumerate(ns) if n)
    lower = list(ns)
    lower[d] -= 1
    return _dmul(_elementary_monomial(tuple(lower)), _elementary(k, d + 1))


def symmetrize(p: GradedPolynomial, target: RingSpec) -> GradedPolynomial:
    """Rewrite a symmetric polynomial in Chern roots through Chern classes.

    The d-th elementary symmetric function of the roots equals
    ``(-1)^d c_d``; variables of ``target`` named ``c1, c2, ...`` receive
    the result and every non-root variable is carried over by name.
    """
    src = p.ring
    roots = src.roots
    if not roots:
        raise WchowError(f"ring {src.name} declares no Chern roots")
    k = len(roots)
    ridx = [src.index(r) for r in roots]
    others = [i for i in range(src.nvars) if i not in ridx]
    cidx = [target.index(f"c{d}") for d in range(1, k + 1)]
    oidx = [target.index(src.names[i]) for i in others]

    groups: dict[tuple, dict] = {}
    for e, c in p.items():
        g = groups.setdefault(tuple(e[i] for i in others), {})
        g[tuple(e[i] for i in ridx)] = c

    for g in groups.values():
        for a in range(k - 1):
            for e, c in g.items():
                s = list(e)
                s[a], s[a + 1] = s[a + 1], s[a]
                if g.get(tuple(s), 0) != c:
                    raise NotSymmetricError("not symmetric")

    out: dict = {}
    nt = target.nvars
    for oexp, g in groups.items():
        g = dict(g)
        while g:
            lead = max(g)
            c = g[lead]
            ns = tuple(lead[i] - (lead[i + 1] if i + 1 < k else 0) for i in range(k))
            if any(n < 0 for n in ns):
                raise NotSymmetricError("not symmetric")
            for m, v in _elementary_monomial(ns).items():
                r = g.get(m, 0) - c * v
                if r:
                    g[m] = r
                else:
                    g.pop(m, None)
            sign = -1 if sum((d + 1) * n for d, n in enumerate(ns)) % 2 else 1
            e = [0] * nt
            for d, n in enumerate(ns):
                e[cidx[d]] += n
            for i, x in zip(oidx, oexp):
                e[i] += x
            e = tuple(e)
            out[e] = out.get(e, 0) + sign * c
    return GradedPolynomial(target, out)


def expand_in_roots(p: GradedPolynomial, roots_ring: RingSpec) -> GradedPolynomial:
    """Inverse of :func:`symmetrize`: write each ``c_d`` as ``(-1)^d e_d(roots)``."""
    k = len(roots_ring.roots)
    bindings = {}
    for d in range(1, k + 1):
        name = f"c{d}"
        if name in p.ring.names:
            e = GradedPolynomial(roots_ring, {
                tuple(_lift_root_exps(roots_ring, m)): c for m, c in _elementary(k, d).items()
            })
            bindings[name] = e if d % 2 == 0 else -e
    return substitute(p, bindings, roots_ring).to_integral()


def _lift_root_exps(ring: RingSpec, m: tuple) -> list[int]:
    e = [0] * ring.nvars
    for r, x in zip(ring.roots, m):
        e[ring.index(r)] = x
    return e


# text grammar ---------------------------------------------------------------


def _format_coeff(c: Scalar) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_polynomial(p: AnyPoly) -> str:
    """Canonical text: descending graded-lex, ``C*v^e`` terms, ``0`` for zero."""
    if not p:
        return "0"
    names = p.ring.names
    out = []
    for e, c in p.terms():
        body = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        a = abs(c)
        if not body:
            s = _format_coeff(a)
        elif a == 1:
            s = body
        else:
            s = f"{_format_coeff(a)}*{body}"
        if c < 0:
            out.append("-" + s)
        else:
            out.append(("+" if out else "") + s)
    return "".join(out)


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?|([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?)$")


def parse_polynomial(text: str, ring: RingSpec, *, rational: bool = False) -> AnyPoly:
    """Parse the canonical grammar; whitespace and term order are free."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    pieces = _TERM_RE.findall(s)
    if "".join(pieces) != s:
        raise ParseError(f"cannot parse {text!r}")
    terms: dict = {}
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        coeff: Scalar = Fraction(sign) if rational else sign
        e = [0] * ring.nvars
        for factor in body.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            num, den, name, exp = m.groups()
            if num is not None:
                if den is not None:
                    if not rational:
                        raise ParseError(f"fraction {factor!r} in an integer polynomial")
                    coeff *= Fraction(int(num), int(den))
                else:
                    coeff *= int(num)
            else:
                if name not in ring.names:
                    raise ParseError(f"unknown variable {name!r} for ring {ring.name}")
                e[ring.index(name)] += int(exp) if exp else 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + coeff
    cls = RationalGradedPolynomial if rational else GradedPolynomial
    return cls(ring, terms)


# concrete rings ---------------------------------------------------------------


@cache
def gl2_ring() -> RingSpec:
    return RingSpec("gl2", (("c1", 1), ("c2", 2)))


@cache
def gl2gm_ring() -> RingSpec:
    return RingSpec("gl2gm", (("tau1", 1), ("c1", 1), ("c2", 2)))


@cache
def gl3_ring() -> RingSpec:
    return RingSpec("gl3", (("c1", 1), ("c2", 2), ("c3", 3)))


@cache
def pgl2gm_ring() -> RingSpec:
    return RingSpec(
        "pgl2gm",
        (("tau1", 1), ("c2", 2), ("c3", 3)),
        torsion=(TorsionRule(2, (0, 0, 1)),),
    )


@cache
def sl2gm_ring() -> RingSpec:
    return RingSpec("sl2gm", (("tau1", 1), ("c2", 2)))


@cache
def p5_ring(with_c1: bool = True) -> RingSpec:
    """Chow ring of P^5 over B(GL3 x Gm), or its specialisation at c1 = 0.

    Generated by h over the base with the monic sextic
    (h^3 - 2c1h^2 + 4c2h - 8c3)(h^3 - 2c1h^2 + (c1^2 + c2)h + c3 - c1c2).
    """
    if with_c1:
        variables = (("tau1", 1), ("c1", 1), ("c2", 2), ("c3", 3), ("h", 1))
    else:
        variables = (("tau1", 1), ("c2", 2), ("c3", 3), ("h", 1))
    free = RingSpec("p5free" if with_c1 else "p5free0", variables)
    h, c2, c3 = free.var("h"), free.var("c2"), free.var("c3")
    c1 = free.var("c1") if with_c1 else free.zero()
    rel = (h**3 - 2 * c1 * h**2 + 4 * c2 * h - 8 * c3) * (h**3 - 2 * c1 * h**2 + (c1**2 + c2) * h + c3 - c1 * c2)
    lead = free.monomial({"h": 6})
    tail = lead - rel
    rule = RewriteRule(next(iter(lead.items()))[0], tuple(sorted(tail.items())))
    return RingSpec("p5" if with_c1 else "p5c1zero", variables, rewrites=(rule,))


@cache
def root_ring(k: int, extras: tuple[tuple[str, int], ...] = ()) -> RingSpec:
    """Polynomial ring in Chern roots ``l1..lk`` (degree 1) plus extra variables."""
    roots = tuple(f"l{i}" for i in range(1, k + 1))
    return RingSpec(f"roots{k}", tuple((r, 1) for r in roots) + tuple(extras), roots=roots)


RINGS = {
    "gl2": gl2_ring,
    "gl2gm": gl2gm_ring,
    "gl3": gl3_ring,
    "pgl2gm": pgl2gm_ring,
    "sl2gm": sl2gm_ring,
    "p5": p5_ring,
}


def ring_by_name(name: str) -> RingSpec:
    try:
        return RINGS[name]()
    except KeyError:
        raise WchowError(f"unknown ring {name!r}; choose from {sorted(RINGS)}") from None


def polys(ring: RingSpec, texts: Iterable[str]) -> list[GradedPolynomial]:
    return [parse_polynomial(t, ring) for t in texts]
