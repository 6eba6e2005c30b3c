"""Exact coefficient fields: the rationals and cyclotomic fields Q(zeta_m).

Rationals are plain :class:`fractions.Fraction` values.  Elements of
Q(zeta_m) are residues modulo the m-th cyclotomic polynomial, so every
element has exactly one representation and equality is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch

Rational = Fraction

__all__ = [
    "Rational",
    "Cyclotomic",
    "RationalField",
    "CyclotomicField",
    "QQ",
    "cyclotomic_polynomial",
    "root_of_unity",
    "field_arith",
    "format_rational",
    "parse_rational",
]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    assert not any(num), "cyclotomic division not exact"
    return out


def _reduce(coeffs: list, m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    coeffs = [Fraction(c) for c in coeffs]
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for j in range(deg):
                coeffs[k - deg + j] -= c * phi[j]
            coeffs[k] = Fraction(0)
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs[:deg])


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return q, _trim(a[: len(b) - 1])


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


class Cyclotomic:
    """An element of Q(zeta_m), stored as its residue modulo Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = _reduce(list(coeffs), m)

    @classmethod
    def _raw(cls, m, coeffs):
        obj = object.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, m: int, c) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(m)) - 1
        return cls._raw(m, (Fraction(c),) + (Fraction(0),) * (deg - 1))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise FieldMismatch(f"conductors {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.m, other)
        return NotImplemented

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.m, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.m, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.m, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.m, tuple(x * other for x in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.m, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return Cyclotomic.from_rational(self.m, 1 / self.coeffs[0])
        # extended Euclid: s*self + t*phi = g, g a nonzero constant
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1) if s1 else [])
        c = r1[0]
        return Cyclotomic(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return Cyclotomic._raw(self.m, tuple(x / other for x in self.coeffs))
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
        result = Cyclotomic.from_rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def body(self, symbol: str = "z") -> str:
        """Polynomial text in ``symbol`` without the conductor annotation."""
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else symbol if k == 1 else f"{symbol}^{k}"
            parts.append((c, mono))
        return _join_terms(parts) if parts else "0"

    def __str__(self):
        return f"{self.body()} (m={self.m})"

    def __repr__(self):
        return f"Cyclotomic({self.m}, {list(map(str, self.coeffs))})"


def _join_terms(parts) -> str:
    out = []
    for idx, (c, mono) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if mono:
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        else:
            body = format_rational(a)
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(sign + body)
    return "".join(out)


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise DivisionByZero("zero denominator")
    return Fraction(int(num), int(den) if den else 1)


class RationalField:
    """The field Q; elements are Fractions."""

    conductor = 1
    name = "Q"

    def convert(self, c) -> Fraction:
        if isinstance(c, Cyclotomic):
            if not c.is_rational():
                raise FieldMismatch(f"{c} is not rational")
            return c.coeffs[0]
        return Fraction(c)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains_roots(self, k: int) -> bool:
        return k in (1, 2)

    def root(self, k: int, e: int = 1):
        if not self.contains_roots(k):
            raise FieldMismatch(f"Q has no primitive {k}-th root of unity")
        return Fraction(-1) ** (e % 2) if k == 2 else Fraction(1)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class CyclotomicField:
    """The field Q(zeta_m)."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("conductor must be positive")
        self.conductor = m
        self.name = f"Q(zeta_{m})"

    def convert(self, c) -> Cyclotomic:
        if isinstance(c, Cyclotomic):
            if c.m != self.conductor:
                raise FieldMismatch(f"conductors {c.m} and {self.conductor} differ")
            return c
        return Cyclotomic.from_rational(self.conductor, c)

    @property
    def zero(self):
        return Cyclotomic.from_rational(self.conductor, 0)

    @property
    def one(self):
        return Cyclotomic.from_rational(self.conductor, 1)

    @property
    def generator(self) -> Cyclotomic:
        return root_of_unity(self.conductor, 1)

    def contains_roots(self, k: int) -> bool:
        m = self.conductor
        return m % k == 0 or (m % 2 == 1 and (2 * m) % k == 0)

    def root(self, k: int, e: int = 1) -> Cyclotomic:
        """zeta_k ** e inside this field."""
        m = self.conductor
        if m % k == 0:
            return root_of_unity(m, e * (m // k))
        if m % 2 == 1 and (2 * m) % k == 0:
            # -zeta_m^((m+1)/2) is a primitive 2m-th root of unity
            z2m = -root_of_unity(m, (m + 1) // 2)
            return z2m ** ((e * (2 * m // k)) % (2 * m))
        raise FieldMismatch(f"{self.name} has no primitive {k}-th root of unity")

    def to_json(self):
        return {"cyclotomic": self.conductor}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("cyclotomic", self.conductor))

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"


QQ = RationalField()


def root_of_unity(m: int, k: int) -> Cyclotomic:
    """zeta_m ** k reduced modulo Phi_m."""
    if m < 1:
        raise ValueError("conductor must be positive")
    e = k % m
    return Cyclotomic(m, [0] * e + [1])


def field_arith(a, b, op: str):
    """Exact add/sub/mul/div on two elements of the same field."""
    if isinstance(a, Cyclotomic) and isinstance(b, Cyclotomic) and a.m != b.m:
        raise FieldMismatch(f"conductors {a.m} and {b.m} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def field_from_json(spec):
    if spec in (None, "Q", "QQ", "rational"):
        return QQ
    if isinstance(spec, dict) and "cyclotomic" in spec:
        return CyclotomicField(int(spec["cyclotomic"]))
    if isinstance(spec, str):
        match = re.fullmatch(r"\s*(?:cyclotomic|Q\(zeta_)\s*(\d+)\)?\s*", spec)
        if match:
            return CyclotomicField(int(match.group(1)))
    raise ValueError(f"unrecognised field description {spec!r}")


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
