"""Sparse multivariate (Laurent) polynomials and rational functions.

A :class:`Poly` maps exponent tuples to nonzero field elements.  Variables
flagged as Laurent may carry negative exponents.  Terms are ordered by the
graded lexicographic order on the declared variable order, which also fixes
the printed form and the leading term used for normalisation.

A :class:`RatFunc` is a reduced fraction of two polynomials with
nonnegative exponents whose denominator has leading coefficient one, so two
fractions are equal exactly when their numerators and denominators are.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .coefficients import QQ, Cyclotomic, format_rational
from .errors import DivisionByZero, InexactDivision, RingMismatch

__all__ = ["PolyRing", "Poly", "RatFunc", "poly_gcd", "grlex_key"]


def grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class PolyRing:
    """Descriptor of a (Laurent) polynomial ring over an exact field."""

    __slots__ = ("variables", "laurent", "field", "_index", "_hash")

    def __init__(self, variables: Sequence[str], laurent: Sequence[bool] | None = None, field=QQ):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables) or not all(variables):
            raise ValueError(f"variable names must be distinct and nonempty: {variables}")
        laurent = tuple(bool(f) for f in laurent) if laurent is not None else (False,) * len(variables)
        if len(laurent) != len(variables):
            raise ValueError("one laurent flag per variable")
        self.variables = variables
        self.laurent = laurent
        self.field = field
        self._index = {v: i for i, v in enumerate(variables)}
        self._hash = hash((variables, laurent, field))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable named {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.laurent == other.laurent
            and self.field == other.field
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        flags = "".join("L" if f else "." for f in self.laurent)
        return f"PolyRing({list(self.variables)}, {flags}, {self.field!r})"

    # constructors

    @property
    def zero_exp(self):
        return (0,) * len(self.variables)

    @property
    def zero(self) -> "Poly":
        return Poly._make(self, {})

    @property
    def one(self) -> "Poly":
        return Poly._make(self, {self.zero_exp: self.field.one})

    def constant(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly._make(self, {self.zero_exp: c} if c else {})

    def gen(self, var) -> "Poly":
        i = var if isinstance(var, int) else self.index(var)
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly._make(self, {exp: self.field.one})

    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp, c=1) -> "Poly":
        return Poly(self, {tuple(exp): c})

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, self.laurent, field)


class Poly:
    """An immutable sparse polynomial; terms map exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict | None = None):
        field = ring.field
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != ring.nvars:
                raise ValueError(f"exponent {exp} has wrong length for {ring}")
            for e, flag, name in zip(exp, ring.laurent, ring.variables):
                if e < 0 and not flag:
                    raise ValueError(f"negative exponent on non-Laurent variable {name}")
            c = field.convert(c)
            if c:
                clean[exp] = clean.get(exp, field.zero) + c
                if not clean[exp]:
                    del clean[exp]
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # coercion

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.ring.constant(other)
        return NotImplemented

    # queries

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def leading_exp(self):
        return max(self.terms, key=grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exp()]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def min_exp(self):
        n = self.ring.nvars
        if not self.terms:
            return (0,) * n
        return tuple(min(e[i] for e in self.terms) for i in range(n))

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def coeffs_in(self, var) -> dict[int, "Poly"]:
        """Split as a polynomial in one variable with coefficients free of it."""
        i = var if isinstance(var, int) else self.ring.index(var)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1 :]] = c
        return {k: Poly._make(self.ring, t) for k, t in parts.items()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            if v is None:
                terms[e] = c
            else:
                v = v + c
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return Poly._make(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero
        return Poly._make(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero
        if len(a) < len(b):
            a, b = b, a
        terms: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = terms.get(e)
                terms[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._make(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision(f"{self} is not a unit")
            return self.ring.one / self ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Exact division; raises InexactDivision when a remainder is left."""
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not other:
                raise DivisionByZero("division by zero")
            return self.scale(1 / self.ring.field.convert(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_divide(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_divide(other, self)

    def divides(self, other: "Poly") -> bool:
        try:
            exact_divide(other, self)
        except InexactDivision:
            return False
        return True

    # comparison

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # maps

    def substitute(self, images: Sequence["Poly"], _powers: dict | None = None) -> "Poly":
        """Simultaneously replace variable i by images[i]."""
        ring = images[0].ring if images else self.ring
        gens = [tuple(1 if j == i else 0 for j in range(ring.nvars)) for i in range(ring.nvars)]
        identity = [
            img.ring.nvars == self.ring.nvars
            and len(img.terms) == 1
            and img.terms.get(gens[i]) == 1
            for i, img in enumerate(images)
        ]
        powers = _powers if _powers is not None else {}
        out: dict = {}
        for e, c in self.terms.items():
            base = tuple(x if identity[i] else 0 for i, x in enumerate(e))
            term = Poly._make(ring, {base: ring.field.convert(c)})
            for i, k in enumerate(e):
                if k and not identity[i]:
                    key = (i, k)
                    pw = powers.get(key)
                    if pw is None:
                        pw = images[i] ** k
                        powers[key] = pw
                    term = term * pw
            for te, tc in term.terms.items():
                v = out.get(te)
                out[te] = tc if v is None else v + tc
        return Poly._make(ring, {e: c for e, c in out.items() if c})

    def evaluate(self, point: Sequence):
        """Value at a point given by one field element per variable."""
        field = self.ring.field
        total = field.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> "Poly":
        """Move into ``ring`` sending variable i to variable positions[i]."""
        n = ring.nvars
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                if k:
                    new[positions[i]] = k
            terms[tuple(new)] = ring.field.convert(c)
        return Poly._make(ring, terms)

    def change_field(self, field) -> "Poly":
        ring = self.ring.with_field(field)
        return Poly(ring, self.terms)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    # printing

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _format_monomial(ring: PolyRing, exp) -> str:
    parts = []
    for name, k in zip(ring.variables, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def coeff_sign_body(c):
    """Split a coefficient into a sign and an unsigned printable body.

    The body is parenthesised when it is itself a sum.
    """
    if isinstance(c, Cyclotomic):
        if c.is_rational():
            return coeff_sign_body(c.coeffs[0])
        nz = [(k, x) for k, x in enumerate(c.coeffs) if x]
        if len(nz) == 1:
            k, x = nz[0]
            mono = "z" if k == 1 else f"z^{k}"
            sign = "-" if x < 0 else "+"
            a = abs(x)
            return sign, (mono if a == 1 else f"{format_rational(a)}*{mono}"), False
        return "+", f"({c.body()})", False
    c = Fraction(c)
    return ("-" if c < 0 else "+"), format_rational(abs(c)), c.denominator == 1 and abs(c) == 1


def format_term(c, mono: str):
    """(sign, body) for ``c * mono`` with unit coefficients suppressed."""
    sign, body, _ = coeff_sign_body(c)
    if not mono:
        return sign, body
    if body == "1":
        return sign, mono
    return sign, f"{body}*{mono}"


def join_signed(parts) -> str:
    out = []
    for idx, (sign, body) in enumerate(parts):
        if idx == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out) if out else "0"


def format_poly(p: Poly) -> str:
    return join_signed(format_term(c, _format_monomial(p.ring, e)) for e, c in p.sorted_terms())


# exact division and gcd


def _divide_nonneg(p: dict, q: dict, ring: PolyRing) -> dict:
    lt = max(q, key=grlex_key)
    lc = q[lt]
    rem = dict(p)
    quot: dict = {}
    while rem:
        e = max(rem, key=grlex_key)
        d = _sub_exp(e, lt)
        if any(x < 0 for x in d):
            raise InexactDivision("remainder is nonzero")
        c = rem[e] / lc
        quot[d] = c
        for qe, qc in q.items():
            ne = _add_exp(d, qe)
            v = rem.get(ne)
            v = -c * qc if v is None else v - c * qc
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return quot


def _shift(terms: dict, by) -> dict:
    return {_add_exp(e, by): c for e, c in terms.items()}


def exact_divide(p: Poly, q: Poly) -> Poly:
    if not q.terms:
        raise DivisionByZero("division by the zero polynomial")
    if not p.terms:
        return p.ring.zero
    ring = p.ring
    if len(q.terms) == 1:
        (qe, qc), = q.terms.items()
        terms = {}
        for e, c in p.terms.items():
            d = _sub_exp(e, qe)
            for x, flag in zip(d, ring.laurent):
                if x < 0 and not flag:
                    raise InexactDivision(f"{q} does not divide {p}")
            terms[d] = c / qc
        return Poly._make(ring, terms)
    # pull out Laurent monomial content so the remaining division is polynomial
    pm, qm = p.min_exp(), q.min_exp()
    pmask = tuple(x if (flag or x < 0) else 0 for x, flag in zip(pm, ring.laurent))
    qmask = tuple(x if (flag or x < 0) else 0 for x, flag in zip(qm, ring.laurent))
    p0 = _shift(p.terms, tuple(-x for x in pmask))
    q0 = _shift(q.terms, tuple(-x for x in qmask))
    quot = _divide_nonneg(p0, q0, ring)
    quot = _shift(quot, _sub_exp(pmask, qmask))
    for e in quot:
        for x, flag in zip(e, ring.laurent):
            if x < 0 and not flag:
                raise InexactDivision(f"{q} does not divide {p}")
    return Poly._make(ring, quot)


def _content_in(p: Poly, i: int) -> Poly:
    g = None
    for c in sorted(p.coeffs_in(i).values(), key=lambda c: len(c.terms)):
        g = c.monic() if g is None else _gcd(g, c)
        if g.is_constant():
            return p.ring.one
    return g


def _int_primitive(p: Poly) -> Poly:
    # rescale to coprime integer coefficients so the remainder sequence stays small
    if not all(isinstance(c, Fraction) for c in p.terms.values()):
        return p
    den = 1
    num = 0
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    for c in p.terms.values():
        num = math.gcd(num, int(c * den))
    scale = Fraction(den, num)
    return Poly._make(p.ring, {e: c * scale for e, c in p.terms.items()})


def _prem(a: Poly, b: Poly, i: int) -> Poly:
    ring = a.ring
    db = b.degree_in(i)
    lb = b.coeffs_in(i)[db]
    r = a
    while r and r.degree_in(i) >= db:
        dr = r.degree_in(i)
        lr = r.coeffs_in(i)[dr]
        shift = tuple(dr - db if j == i else 0 for j in range(ring.nvars))
        r = lb * r - lr * Poly._make(ring, _shift(b.terms, shift))
    return r


class _HeuristicFailed(Exception):
    pass


def _int_divides(q: dict, p: dict) -> bool:
    lt = max(q, key=grlex_key)
    lc = q[lt]
    rem = dict(p)
    while rem:
        e = max(rem, key=grlex_key)
        d = _sub_exp(e, lt)
        if any(x < 0 for x in d) or rem[e] % lc:
            return False
        c = rem[e] // lc
        for qe, qc in q.items():
            ne = _add_exp(d, qe)
            v = rem.get(ne, 0) - c * qc
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return True


def _icontent(f: dict) -> int:
    g = 0
    for c in f.values():
        g = math.gcd(g, c)
    return g


def _eval_last(f: dict, k: int, x: int) -> dict:
    out: dict = {}
    for e, c in f.items():
        key = e[: k - 1] + (0,) + e[k:]
        out[key] = out.get(key, 0) + c * x ** e[k - 1]
    return {e: c for e, c in out.items() if c}


def _interpolate(h: dict, x: int, k: int) -> dict:
    out = {}
    i = 0
    half = x // 2
    while h:
        digits = {}
        for e, c in h.items():
            r = c % x
            if r > half:
                r -= x
            if r:
                digits[e] = r
        for e, c in digits.items():
            out[e[: k - 1] + (i,) + e[k:]] = c
        h = {e: (c - digits.get(e, 0)) // x for e, c in h.items()}
        h = {e: c for e, c in h.items() if c}
        i += 1
    return out


def _heu_gcd(f: dict, g: dict, k: int) -> dict:
    """gcd of integer polynomials in the first k variables, by evaluation at a large integer."""
    cf, cg = _icontent(f), _icontent(g)
    c = math.gcd(cf, cg)
    if k == 0:
        return {(0,) * len(next(iter(f))): c}
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    if all(not e[k - 1] for e in f) and all(not e[k - 1] for e in g):
        return {e: v * c for e, v in _heu_gcd(f, g, k - 1).items()}
    nf, ng = max(map(abs, f.values())), max(map(abs, g.values()))
    lf, lg = abs(f[max(f, key=grlex_key)]), abs(g[max(g, key=grlex_key)])
    bound = 2 * min(nf, ng) + 29
    x = max(min(bound, 99 * math.isqrt(bound)), 2 * min(nf // lf, ng // lg) + 2)
    for _ in range(6):
        ff, gg = _eval_last(f, k, x), _eval_last(g, k, x)
        if ff and gg:
            h = _interpolate(_heu_gcd(ff, gg, k - 1), x, k)
            if h:
                ch = _icontent(h)
                h = {e: v // ch for e, v in h.items()}
                if _int_divides(h, f) and _int_divides(h, g):
                    return {e: v * c for e, v in h.items()}
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    raise _HeuristicFailed


def _integer_terms(p: Poly) -> dict | None:
    if not all(isinstance(c, Fraction) for c in p.terms.values()):
        return None
    return {e: int(c) for e, c in _int_primitive(p).terms.items()}


def _strip_monomial(p: Poly):
    m = p.min_exp()
    if any(m):
        return Poly._make(p.ring, _shift(p.terms, tuple(-x for x in m))), m
    return p, m


def _gcd(p: Poly, q: Poly) -> Poly:
    ring = p.ring
    if not p.terms:
        return q.monic()
    if not q.terms:
        return p.monic()
    if p.is_constant() or q.is_constant():
        return ring.one
    p, pm = _strip_monomial(p)
    q, qm = _strip_monomial(q)
    mono = tuple(min(x, y) for x, y in zip(pm, qm))
    g = None
    fi, gi = _integer_terms(p), _integer_terms(q)
    if fi is not None and gi is not None:
        try:
            g = Poly._make(ring, {e: Fraction(c) for e, c in _heu_gcd(fi, gi, ring.nvars).items()})
        except _HeuristicFailed:
            pass
    if g is None:
        g = _gcd_stripped(p, q)
    if any(mono):
        g = Poly._make(ring, _shift(g.terms, mono))
    return g.monic()


def _gcd_stripped(p: Poly, q: Poly) -> Poly:
    ring = p.ring
    if p.is_constant() or q.is_constant():
        return ring.one
    if p.is_monomial() or q.is_monomial():
        # monomial content was removed, so a monomial here is a constant
        return ring.one
    used = p.variables_used() | q.variables_used()
    i = min(used)
    if p.degree_in(i) <= 0:
        return _gcd(p, _content_in(q, i))
    if q.degree_in(i) <= 0:
        return _gcd(_content_in(p, i), q)
    cp, cq = _content_in(p, i), _content_in(q, i)
    a, b = _int_primitive(exact_divide(p, cp)), _int_primitive(exact_divide(q, cq))
    if a.degree_in(i) < b.degree_in(i):
        a, b = b, a
    while True:
        r = _prem(a, b, i)
        if not r:
            g = b
            break
        if r.degree_in(i) <= 0:
            g = ring.one
            break
        a, b = b, _int_primitive(exact_divide(r, _content_in(r, i)))
    if not g.is_constant():
        g = exact_divide(g, _content_in(g, i))
    return (_gcd(cp, cq) * g).monic()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor of two polynomials with nonnegative exponents.

    For Laurent rings the result is the gcd in the underlying polynomial ring.
    """
    if p.ring != q.ring:
        raise RingMismatch(f"{p.ring} vs {q.ring}")
    return _gcd(p, q)


class RatFunc:
    """A reduced fraction num/den of polynomials; den has leading coefficient 1."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is None:
                self._set(num.num, num.den)
                return
            num = num / den
            self._set(num.num, num.den)
            return
        ring = num.ring
        if den is None:
            den = ring.one
        elif not isinstance(den, Poly):
            den = ring.constant(den)
        n, d = _canonical(num, den, reduce=True)
        self._set(n, d)

    def _set(self, num, den):
        self.ring = num.ring
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        if not p.has_negative_exponents():
            return cls._make(p, p.ring.one)
        n, d = _canonical(p, p.ring.one, reduce=False)
        return cls._make(n, d)

    @classmethod
    def from_coprime(cls, num: Poly, den: Poly) -> "RatFunc":
        """Build from a pair already known to be coprime up to monomials."""
        n, d = _canonical(num, den, reduce=False)
        return cls._make(n, d)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return RatFunc._make(self.ring.constant(other), self.ring.one)
        return NotImplemented

    def is_polynomial_fraction(self) -> bool:
        return self.den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            if self.den.is_constant():
                return RatFunc._make(self.num + o.num, self.den)
            return RatFunc(self.num + o.num, self.den)
        # any common factor of the sum with the new denominator divides g
        g = poly_gcd(self.den, o.den)
        b, d = exact_divide(self.den, g), exact_divide(o.den, g)
        num = self.num * d + o.num * b
        den = b * o.den
        if not g.is_constant():
            r = poly_gcd(num, g)
            if not r.is_constant():
                num, den = exact_divide(num, r), exact_divide(den, r)
        return RatFunc.from_coprime(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den.is_constant() and o.den.is_constant():
            return RatFunc._make(self.num * o.num, self.den)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = exact_divide(self.num, g1) * exact_divide(o.num, g2)
        den = exact_divide(self.den, g2) * exact_divide(o.den, g1)
        return RatFunc.from_coprime(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return RatFunc.from_coprime(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc.from_coprime(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.ring == other.ring and self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction, Cyclotomic)):
            try:
                o = self._coerce(other)
            except RingMismatch:
                return False
            return self == o
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den.is_constant() else hash((self.num, self.den))
        return self._hash

    def as_poly(self) -> Poly | None:
        """The equal element of the base ring, or None when there is none."""
        if self.den.is_constant():
            return self.num
        if self.den.is_monomial():
            (e, c), = self.den.terms.items()
            if all(flag or not x for x, flag in zip(e, self.ring.laurent)):
                return Poly._make(self.ring, _shift(self.num.terms, tuple(-x for x in e)))
        return None

    def substitute(self, auto) -> "RatFunc":
        return RatFunc.from_coprime(auto(self.num), auto(self.den))

    def __str__(self):
        p = self.as_poly()
        if p is not None and not p.has_negative_exponents():
            return str(self.num)
        if p is not None:
            return str(p)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _canonical(num: Poly, den: Poly, reduce: bool):
    if not den.terms:
        raise DivisionByZero("zero denominator")
    ring = num.ring
    if not num.terms:
        return ring.zero, ring.one
    n, nm = _strip_monomial(num)
    d, dm = _strip_monomial(den)
    diff = _sub_exp(nm, dm)
    up = tuple(max(x, 0) for x in diff)
    down = tuple(max(-x, 0) for x in diff)
    if reduce and not d.is_constant() and not n.is_constant():
        g = _gcd_stripped(n, d)
        if not g.is_constant():
            n, d = exact_divide(n, g), exact_divide(d, g)
    if any(up):
        n = Poly._make(ring, _shift(n.terms, up))
    if any(down):
        d = Poly._make(ring, _shift(d.terms, down))
    lc = d.leading_coeff()
    if lc != 1:
        inv = 1 / lc
        n, d = n.scale(inv), d.scale(inv)
    return n, d


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    raise TypeError(f"cannot view {x!r} as a rational function")


def ensure_poly(x, ring: PolyRing) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, RatFunc):
        p = x.as_poly()
        if p is None:
            raise InexactDivision(f"{x} is not in the base ring")
        return p
    return ring.constant(x)


def sum_polys(ring: PolyRing, items: Iterable[Poly]) -> Poly:
    total = ring.zero
    for p in items:
        total = total + p
    return total
