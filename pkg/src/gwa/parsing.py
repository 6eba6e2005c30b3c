"""Text input: polynomials, GWA elements and skew-ring elements.

Grammar, loosest to tightest::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' exponent)?
    exponent := ('-' | '+')? INT ('^' exponent)?
    atom   := INT | NAME | 'm' '[' ints ']' | '(' expr ')'

Positions in error messages are one-based character offsets.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import GwaElement, GwaPresentation
from .coefficients import Cyclotomic, CyclotomicField
from .errors import GwaSyntaxError, NegativeExponent, ParseError, RankOutOfRange, UnknownSymbol
from .polynomial import Poly, PolyRing, RatFunc
from .skew import SkewElement, SkewRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_GENERATOR = re.compile(r"X([pm])(\d+)$")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.pos}"


def tokenize(src: str) -> list[_Token]:
    tokens = []
    idx = 0
    while idx < len(src):
        match = _TOKEN.match(src, idx)
        if match is None or match.end() == idx:
            break
        num, name, op = match.groups()
        pos = match.start(match.lastindex) + 1
        if num is not None:
            tokens.append(_Token("int", num, pos))
        elif name is not None:
            tokens.append(_Token("name", name, pos))
        elif op is not None:
            if op not in "+-*/^()[],":
                raise GwaSyntaxError(f"unexpected character {op!r}", pos)
            tokens.append(_Token("op", op, pos))
        idx = match.end()
    tokens.append(_Token("end", "", len(src) + 1))
    return tokens


class _Parser:
    def __init__(self, src: str, domain):
        if not src.strip():
            raise GwaSyntaxError("empty expression", 1)
        self.tokens = tokenize(src)
        self.i = 0
        self.domain = domain

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.kind != "op" or t.text != text:
            what = "end of input" if t.kind == "end" else repr(t.text)
            raise GwaSyntaxError(f"expected {text!r}, found {what}", t.pos)
        return self.advance()

    def is_op(self, *texts):
        return self.tok.kind == "op" and self.tok.text in texts

    def parse(self):
        value = self.expr()
        if self.tok.kind != "end":
            raise GwaSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self):
        value = self.term()
        while self.is_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.is_op("*", "/"):
            t = self.advance()
            rhs = self.unary()
            value = value * rhs if t.text == "*" else self.domain.divide(value, rhs, t.pos)
        return value

    def unary(self):
        if self.is_op("-"):
            self.advance()
            return -self.unary()
        if self.is_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        start = self.tok.pos
        base = self.atom()
        if self.is_op("^"):
            self.advance()
            k = self.exponent()
            return self.domain.power(base, k, start)
        return base

    def exponent(self) -> int:
        sign = 1
        if self.is_op("-", "+"):
            sign = -1 if self.advance().text == "-" else 1
        t = self.tok
        if t.kind != "int":
            raise GwaSyntaxError("exponent must be an integer literal", t.pos)
        self.advance()
        k = int(t.text)
        if self.is_op("^"):
            self.advance()
            inner = self.exponent()
            if inner < 0:
                raise NegativeExponent(f"negative exponent {inner} on an integer at offset {t.pos}")
            k = k**inner
        return sign * k

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Fraction(int(t.text))
        if t.kind == "name":
            self.advance()
            if self.is_op("[") and self.domain.takes_index(t.text):
                self.advance()
                entries = []
                while True:
                    sign = 1
                    if self.is_op("-", "+"):
                        sign = -1 if self.advance().text == "-" else 1
                    e = self.tok
                    if e.kind != "int":
                        raise GwaSyntaxError("degree entries must be integers", e.pos)
                    self.advance()
                    entries.append(sign * int(e.text))
                    if self.is_op(","):
                        self.advance()
                        continue
                    self.expect("]")
                    break
                return self.domain.indexed(t.text, entries, t.pos)
            return self.domain.symbol(t.text, t.pos)
        if self.is_op("("):
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise GwaSyntaxError(f"unexpected {what}", t.pos)


def _is_number(x) -> bool:
    return isinstance(x, (int, Fraction, Cyclotomic))


class _PolyDomain:
    """Values are numbers or polynomials of one ring."""

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def takes_index(self, name) -> bool:
        return False

    def constant_of(self, x):
        if _is_number(x):
            return x
        if isinstance(x, Poly) and x.is_constant():
            return x.constant_value()
        return None

    def symbol(self, name, pos):
        if name in self.ring:
            return self.ring.gen(name)
        if name == "z" and isinstance(self.ring.field, CyclotomicField):
            return self.ring.field.generator
        raise UnknownSymbol(name)

    def divide(self, x, y, pos):
        c = self.constant_of(y)
        if c is not None:
            if not c:
                raise GwaSyntaxError("division by zero", pos)
            return x / c if _is_number(x) else x * (1 / c)
        if _is_number(x):
            x = self.ring.constant(x)
        return x / y

    def power(self, x, k, pos):
        if k >= 0:
            return x**k
        if _is_number(x):
            if not x:
                raise GwaSyntaxError("zero to a negative power", pos)
            return (1 / x) ** (-k)
        self.check_negative(x, k, pos)
        return x**k

    def check_negative(self, x, k, pos):
        ring = x.ring
        ok = x.is_monomial() and all(
            flag for flag, e in zip(ring.laurent, next(iter(x.terms))) if e
        )
        if not ok:
            raise NegativeExponent(f"negative exponent {k} at offset {pos} needs a Laurent monomial base")


class _ElementDomain(_PolyDomain):
    """Values are numbers, base polynomials or GWA elements."""

    def __init__(self, A: GwaPresentation):
        super().__init__(A.base)
        self.A = A

    def symbol(self, name, pos):
        m = _GENERATOR.match(name)
        if m and name not in self.ring:
            idx = int(m.group(2))
            if not 1 <= idx <= self.A.rank:
                raise RankOutOfRange(idx, self.A.rank)
            return self.A.xplus(idx - 1) if m.group(1) == "p" else self.A.xminus(idx - 1)
        return super().symbol(name, pos)

    def constant_of(self, x):
        if isinstance(x, GwaElement):
            if not x.terms:
                return 0
            zero = (0,) * self.A.rank
            if set(x.terms) == {zero} and x.terms[zero].is_constant():
                return x.terms[zero].constant_value()
            return None
        return super().constant_of(x)

    def divide(self, x, y, pos):
        c = self.constant_of(y)
        if c is None:
            raise ParseError(f"division at offset {pos} needs a constant divisor")
        if not c:
            raise GwaSyntaxError("division by zero", pos)
        if isinstance(x, GwaElement):
            return x / c
        return super().divide(x, y, pos)

    def power(self, x, k, pos):
        if isinstance(x, GwaElement):
            if k < 0:
                zero = (0,) * self.A.rank
                if set(x.terms) != {zero}:
                    raise NegativeExponent(f"negative exponent {k} at offset {pos} on a non-scalar element")
                return self.A.scalar(self.power(x.terms[zero], k, pos))
            return x**k
        return super().power(x, k, pos)


class _SkewDomain(_PolyDomain):
    """Values are numbers, polynomials, rational functions or skew elements."""

    def __init__(self, ring: SkewRing):
        super().__init__(ring.base)
        self.skew = ring

    def takes_index(self, name) -> bool:
        return name == "m" and name not in self.ring

    def indexed(self, name, entries, pos):
        if len(entries) != self.skew.rank:
            raise GwaSyntaxError(f"degree has {len(entries)} entries, rank is {self.skew.rank}", pos)
        return self.skew.unit(entries)

    def constant_of(self, x):
        if isinstance(x, SkewElement):
            return None
        if isinstance(x, RatFunc):
            p = x.as_poly()
            return super().constant_of(p) if p is not None else None
        return super().constant_of(x)

    def divide(self, x, y, pos):
        if isinstance(y, SkewElement):
            raise ParseError(f"cannot divide by a skew element at offset {pos}")
        c = self.constant_of(y)
        if c is not None:
            if not c:
                raise GwaSyntaxError("division by zero", pos)
            if isinstance(x, SkewElement):
                return x * self.skew.scalar(1 / c)
            return super().divide(x, y, pos)
        num = x if isinstance(x, RatFunc) else RatFunc.from_poly(self._poly(x))
        den = y if isinstance(y, RatFunc) else RatFunc.from_poly(self._poly(y))
        return num / den

    def _poly(self, x):
        return x if isinstance(x, Poly) else self.ring.constant(x)

    def power(self, x, k, pos):
        if isinstance(x, SkewElement):
            if k < 0:
                raise NegativeExponent(f"negative exponent {k} at offset {pos} on a skew element")
            out = self.skew.one
            for _ in range(k):
                out = out * x
            return out
        if k < 0 and isinstance(x, (Poly, RatFunc)):
            return RatFunc(x) ** k if isinstance(x, RatFunc) else RatFunc.from_poly(x) ** k
        return super().power(x, k, pos)


def parse_poly(src: str, ring: PolyRing) -> Poly:
    value = _Parser(src, _PolyDomain(ring)).parse()
    if isinstance(value, Poly):
        return value
    return ring.constant(value)


def parse_element(src: str, A: GwaPresentation) -> GwaElement:
    value = _Parser(src, _ElementDomain(A)).parse()
    if isinstance(value, GwaElement):
        return value
    return A.scalar(value)


def parse_skew(src: str, ring: SkewRing) -> SkewElement:
    value = _Parser(src, _SkewDomain(ring)).parse()
    if isinstance(value, SkewElement):
        return value
    return ring.scalar(value)


def parse_ratfunc(src: str, ring: PolyRing) -> RatFunc:
    value = _Parser(src, _SkewDomain(SkewRing(ring, []))).parse()
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc.from_poly(value)
    return RatFunc.from_poly(ring.constant(value))
