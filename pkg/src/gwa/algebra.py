"""Generalized Weyl algebras D(a, sigma) and their normal-form elements.

An element is a finite sum of terms ``d * X^z`` with ``d`` in the base ring
and ``X^z = X_1^{z_1} ... X_n^{z_n}``, where a negative power of ``X_i``
stands for a power of ``X_i^-``.  Coefficients always sit on the left.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .automorphism import RingAutomorphism
from .coefficients import Cyclotomic
from .errors import (
    AlgebraMismatch,
    NonCommutingSigmas,
    SigmaMovesForeignA,
    ZeroDefiningElement,
)
from .polynomial import Poly, PolyRing, format_term

__all__ = [
    "GwaPresentation",
    "GwaElement",
    "validate_presentation",
    "gwa_mul",
    "structure_coefficient",
    "tensor_power",
    "extend_rank",
]

_SCALARS = (int, Fraction, Cyclotomic)


class GwaPresentation:
    """A validated presentation of D(a, sigma) over a (Laurent) polynomial ring.

    ``blocks`` records a tensor decomposition of the base variables (one
    tuple of variable indices per factor) when the presentation is a tensor
    power; reflection-group actions need it.  A rank-1 presentation is its
    own single block.  ``parent`` points at the
    presentation this one was obtained from by :func:`extend_rank`.
    """

    def __init__(self, base: PolyRing, a: Sequence[Poly], sigma: Sequence[RingAutomorphism], blocks=None, parent=None):
        self.base = base
        self.a = tuple(a)
        self.sigma = tuple(sigma)
        if blocks is None and len(self.a) == 1:
            blocks = [range(base.nvars)]
        self.blocks = tuple(tuple(b) for b in blocks) if blocks is not None else None
        self.parent = parent
        self._sigma_z: dict = {}
        self._sigma_pow: dict = {}
        self._shifted_a: dict = {}
        self._skew = None
        self._surjective = None

    @property
    def rank(self) -> int:
        return len(self.a)

    @property
    def field(self):
        return self.base.field

    def __repr__(self):
        return f"GwaPresentation(rank={self.rank}, base={self.base!r})"

    # automorphism bookkeeping

    def sigma_power(self, i: int, k: int) -> RingAutomorphism:
        key = (i, k)
        auto = self._sigma_pow.get(key)
        if auto is None:
            auto = self.sigma[i].power(k)
            self._sigma_pow[key] = auto
        return auto

    def sigma_z(self, z) -> RingAutomorphism:
        """sigma_z = prod_i sigma_i^{z_i}."""
        z = tuple(z)
        auto = self._sigma_z.get(z)
        if auto is None:
            auto = RingAutomorphism.identity(self.base)
            for i, k in enumerate(z):
                if k:
                    auto = self.sigma_power(i, k).compose(auto)
            self._sigma_z[z] = auto
        return auto

    def shifted_a(self, i: int, r: int) -> Poly:
        """sigma_i^r(a_i)."""
        key = (i, r)
        p = self._shifted_a.get(key)
        if p is None:
            p = self.sigma_power(i, r)(self.a[i]) if r else self.a[i]
            self._shifted_a[key] = p
        return p

    def structure_coefficient(self, z, w) -> Poly:
        return structure_coefficient(self, z, w)

    def is_surjective_type(self, radius: int = 2) -> bool:
        """No sigma_z with z != 0 in the box [-radius, radius]^n acts trivially.

        Exact for presentations whose automorphisms move pairwise disjoint
        sets of variables (tensor powers): there it reduces to each sigma_i
        having infinite order, checked on its powers up to 12.
        """
        if self._surjective is not None:
            return self._surjective
        moved = [s.moved_variables() for s in self.sigma]
        disjoint = all(not (moved[i] & moved[j]) for i in range(self.rank) for j in range(i))
        if disjoint:
            ok = all(not self.sigma_power(i, k).is_identity() for i in range(self.rank) for k in range(1, 13))
        else:
            ok = True
            for z in itertools.product(range(-radius, radius + 1), repeat=self.rank):
                if any(z) and self.sigma_z(z).is_identity():
                    ok = False
                    break
        self._surjective = ok
        return ok

    # lineage for dynamic rank

    def ancestors(self):
        node = self
        while node is not None:
            yield node
            node = node.parent

    def promote(self, x: "GwaElement") -> "GwaElement":
        """View an element of an ancestor presentation inside this one."""
        if x.algebra is self:
            return x
        if not any(anc is x.algebra for anc in self.ancestors()):
            raise AlgebraMismatch("element belongs to an unrelated algebra")
        positions = list(range(x.algebra.base.nvars))
        pad = (0,) * (self.rank - x.algebra.rank)
        terms = {z + pad: d.embed(self.base, positions) for z, d in x.terms.items()}
        return GwaElement._make(self, terms)

    # element constructors

    @property
    def zero(self) -> "GwaElement":
        return GwaElement._make(self, {})

    @property
    def one(self) -> "GwaElement":
        return self.scalar(self.base.one)

    def scalar(self, d) -> "GwaElement":
        if not isinstance(d, Poly):
            d = self.base.constant(d)
        return GwaElement._make(self, {(0,) * self.rank: d} if d else {})

    def monomial(self, z, d=None) -> "GwaElement":
        d = self.base.one if d is None else d
        if not isinstance(d, Poly):
            d = self.base.constant(d)
        z = tuple(z)
        if len(z) != self.rank:
            raise ValueError(f"degree {z} does not match rank {self.rank}")
        return GwaElement._make(self, {z: d} if d else {})

    def unit_vector(self, i: int, k: int = 1):
        return tuple(k if j == i else 0 for j in range(self.rank))

    def xplus(self, i: int) -> "GwaElement":
        """X_{i+1}^+ (zero-based index)."""
        return self.monomial(self.unit_vector(i, 1))

    def xminus(self, i: int) -> "GwaElement":
        """X_{i+1}^- (zero-based index)."""
        return self.monomial(self.unit_vector(i, -1))

    def variable(self, name) -> "GwaElement":
        return self.scalar(self.base.gen(name))

    def with_field(self, field) -> "GwaPresentation":
        """The same presentation with coefficients read in a larger field."""
        base = self.base.with_field(field)

        def move(p):
            return Poly(base, p.terms)

        sigma = [
            RingAutomorphism(base, [move(p) for p in s.forward], [move(p) for p in s.backward], check=False)
            for s in self.sigma
        ]
        return GwaPresentation(base, [move(p) for p in self.a], sigma, blocks=self.blocks)

    def convert(self, x: "GwaElement") -> "GwaElement":
        """Reinterpret an element of a presentation with the same shape here."""
        if x.algebra is self:
            return x
        if x.algebra.rank != self.rank or x.algebra.base.variables != self.base.variables:
            raise AlgebraMismatch("presentations have different shapes")
        return GwaElement._make(self, {z: Poly(self.base, d.terms) for z, d in x.terms.items()})


def _check_commuting(sigma):
    for i in range(len(sigma)):
        for j in range(i):
            if sigma[i].compose(sigma[j]).forward != sigma[j].compose(sigma[i]).forward:
                raise NonCommutingSigmas(j + 1, i + 1)


def validate_presentation(base: PolyRing, a: Sequence[Poly], sigma: Sequence[RingAutomorphism], blocks=None, parent=None) -> GwaPresentation:
    """Check the defining conditions and return the presentation.

    Indices in error messages are one-based, matching X1, X2, ...
    """
    a = list(a)
    sigma = list(sigma)
    if len(a) != len(sigma) or not a:
        raise ValueError("a and sigma must be nonempty lists of equal length")
    for i, ai in enumerate(a):
        if not isinstance(ai, Poly):
            a[i] = ai = base.constant(ai)
        if ai.ring != base:
            raise ValueError(f"a_{i + 1} lives in {ai.ring}, not {base}")
        if not ai:
            raise ZeroDefiningElement(i + 1)
    for s in sigma:
        if s.ring != base:
            raise ValueError("automorphism over a different ring")
    _check_commuting(sigma)
    for i, s in enumerate(sigma):
        for j, aj in enumerate(a):
            if i != j and s(aj) != aj:
                raise SigmaMovesForeignA(i + 1, j + 1)
    return GwaPresentation(base, a, sigma, blocks=blocks, parent=parent)


def _degree_key(z):
    return (sum(abs(k) for k in z), z)


def format_generators(z) -> str:
    parts = []
    for i, k in enumerate(z):
        if k:
            name = f"Xp{i + 1}" if k > 0 else f"Xm{i + 1}"
            parts.append(name if abs(k) == 1 else f"{name}^{abs(k)}")
    return "*".join(parts)


class GwaElement:
    """An immutable element of a GWA in left normal form."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: GwaPresentation, terms: dict):
        clean = {}
        for z, d in terms.items():
            z = tuple(z)
            if len(z) != algebra.rank:
                raise ValueError(f"degree {z} does not match rank {algebra.rank}")
            if not isinstance(d, Poly):
                d = algebra.base.constant(d)
            if d:
                clean[z] = d
        self.algebra = algebra
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, algebra, terms):
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.terms = terms
        obj._hash = None
        return obj

    def _coerce(self, other) -> "GwaElement":
        if isinstance(other, GwaElement):
            return other
        if isinstance(other, Poly):
            return self.algebra.scalar(other)
        if isinstance(other, _SCALARS):
            return self.algebra.scalar(other)
        return NotImplemented

    def support(self) -> set:
        return set(self.terms)

    def coefficient(self, z) -> Poly:
        return self.terms.get(tuple(z), self.algebra.base.zero)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x, y = _common(self, other)
        terms = dict(x.terms)
        for z, d in y.terms.items():
            v = terms.get(z)
            if v is None:
                terms[z] = d
            else:
                v = v + d
                if v:
                    terms[z] = v
                else:
                    del terms[z]
        return GwaElement._make(x.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return GwaElement._make(self.algebra, {z: -d for z, d in self.terms.items()})

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

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = self.algebra.field.convert(other)
            if not c:
                return self.algebra.zero
            return GwaElement._make(self.algebra, {z: d.scale(c) for z, d in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gwa_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        if isinstance(other, Poly):
            # left multiplication by a base element needs no rewriting
            terms = {z: other * d for z, d in self.terms.items()}
            return GwaElement._make(self.algebra, {z: d for z, d in terms.items() if d})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / self.algebra.field.convert(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.algebra.one
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, GwaElement):
            try:
                x, y = _common(self, other)
            except AlgebraMismatch:
                return False
            return x.terms == y.terms
        if isinstance(other, (Poly,) + _SCALARS):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _degree_key(t[0]), reverse=True)

    def __str__(self):
        pieces = []
        for z, d in self.sorted_terms():
            gens = format_generators(z)
            if d.is_constant():
                sign, body = format_term(d.constant_value(), gens)
                pieces.append(("-" if sign == "-" else "") + body)
            elif not gens:
                pieces.append(str(d))
            elif d.is_monomial():
                (e, c), = d.terms.items()
                mono = str(Poly._make(d.ring, {e: d.ring.field.one}))
                sign, body = format_term(c, f"{mono}*{gens}")
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f"({d})*{gens}")
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"GwaElement({str(self)!r})"


def _common(x: GwaElement, y: GwaElement):
    if x.algebra is y.algebra:
        return x, y
    if any(anc is x.algebra for anc in y.algebra.ancestors()):
        return y.algebra.promote(x), y
    if any(anc is y.algebra for anc in x.algebra.ancestors()):
        return x, x.algebra.promote(y)
    raise AlgebraMismatch("elements belong to different algebras")


def _times_generator(A: GwaPresentation, terms: dict, i: int, step: int) -> dict:
    """Right-multiply a normal form by X_i^+ (step=1) or X_i^- (step=-1)."""
    out = {}
    for z, d in terms.items():
        k = z[i]
        if step > 0:
            # X_i^- X_i^+ = a_i, moved left past (X_i^-)^{|k|-1}
            coeff = d if k >= 0 else d * A.shifted_a(i, k + 1)
        else:
            # X_i^+ X_i^- = sigma_i(a_i), moved left past (X_i^+)^{k-1}
            coeff = d if k <= 0 else d * A.shifted_a(i, k)
        nz = z[:i] + (k + step,) + z[i + 1 :]
        out[nz] = coeff
    return out


def gwa_mul(x: GwaElement, y: GwaElement) -> GwaElement:
    """Product in normal form, by rewriting with the defining relations.

    Each term ``e X^w`` of ``y`` is absorbed as: first the coefficient, moved
    left through ``X^z`` by sigma_z, then one generator at a time.
    """
    x, y = _common(x, y)
    A = x.algebra
    result: dict = {}
    for w, e in y.terms.items():
        if e.is_constant():
            c = e.constant_value()
            cur = {z: d.scale(c) for z, d in x.terms.items()}
        else:
            cur = {}
            for z, d in x.terms.items():
                cur[z] = d * (A.sigma_z(z)(e) if any(z) else e)
        for i, k in enumerate(w):
            step = 1 if k > 0 else -1
            for _ in range(abs(k)):
                cur = _times_generator(A, cur, i, step)
        for z, d in cur.items():
            v = result.get(z)
            if v is None:
                result[z] = d
            else:
                v = v + d
                if v:
                    result[z] = v
                else:
                    del result[z]
    return GwaElement._make(A, result)


def structure_coefficient(A: GwaPresentation, z, w) -> Poly:
    """The c with X^z X^w = c X^{z+w}, from the per-coordinate product formula."""
    c = A.base.one
    for i, (k, l) in enumerate(zip(z, w)):
        if k > 0 and l < 0:
            for t in range(min(k, -l)):
                c = c * A.shifted_a(i, k - t)
        elif k < 0 and l > 0:
            for t in range(min(-k, l)):
                c = c * A.shifted_a(i, k + 1 + t)
    return c


def tensor_power(A: GwaPresentation, n: int) -> GwaPresentation:
    """The rank-n presentation of the n-fold tensor power of a rank-1 GWA.

    Base variable ``v`` of the seed becomes ``v1, ..., vn``.
    """
    if A.rank != 1:
        raise ValueError("tensor_power needs a rank-1 presentation")
    if n < 1:
        raise ValueError("n must be positive")
    seed = A.base
    k = seed.nvars
    names = [f"{v}{c}" for c in range(1, n + 1) for v in seed.variables]
    ring = PolyRing(names, seed.laurent * n, seed.field)
    blocks = [tuple(range(c * k, (c + 1) * k)) for c in range(n)]
    gens = ring.gens()
    a, sigma = [], []
    for c in range(n):
        pos = blocks[c]
        a.append(A.a[0].embed(ring, pos))
        fwd, inv = list(gens), list(gens)
        for j in range(k):
            fwd[pos[j]] = A.sigma[0].forward[j].embed(ring, pos)
            inv[pos[j]] = A.sigma[0].backward[j].embed(ring, pos)
        sigma.append(RingAutomorphism(ring, fwd, inv, check=False))
    return validate_presentation(ring, a, sigma, blocks=blocks)


def extend_rank(A: GwaPresentation, new_a: Poly, new_sigma: RingAutomorphism) -> GwaPresentation:
    """Adjoin one more pair of generators; the old algebra embeds as a graded subalgebra.

    ``new_sigma`` (and ``new_a``) live over a base ring whose variable list
    starts with the variables of ``A.base``; the existing automorphisms act
    trivially on the added variables.
    """
    ring = new_sigma.ring
    old = A.base
    if ring.variables[: old.nvars] != old.variables or ring.laurent[: old.nvars] != old.laurent or ring.field != old.field:
        raise ValueError("the new base ring must extend the old one")
    if new_a.ring != ring:
        new_a = new_a.embed(ring, list(range(new_a.ring.nvars)))
    positions = list(range(old.nvars))
    gens = ring.gens()
    sigma = []
    for s in A.sigma:
        fwd = [p.embed(ring, positions) for p in s.forward] + gens[old.nvars :]
        inv = [p.embed(ring, positions) for p in s.backward] + gens[old.nvars :]
        sigma.append(RingAutomorphism(ring, fwd, inv, check=False))
    sigma.append(new_sigma)
    a = [p.embed(ring, positions) for p in A.a] + [new_a]
    blocks = None
    if A.blocks is not None:
        added = tuple(range(old.nvars, ring.nvars))
        if len(added) == len(A.blocks[0]) and new_sigma.moved_variables() <= set(added):
            blocks = A.blocks + (added,)
    return validate_presentation(ring, a, sigma, blocks=blocks, parent=A)
