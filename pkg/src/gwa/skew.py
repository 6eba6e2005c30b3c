"""The skew group ring L * Z^n over the fraction field of a GWA base ring.

A :class:`SkewElement` is a finite sum ``l_mu * m[mu]`` with ``l_mu`` a
rational function and ``m[mu]`` acting on the base field through
``sigma_mu``; multiplication follows ``m[mu] * g = sigma_mu(g) * m[mu]``.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import GwaElement, GwaPresentation, structure_coefficient
from .automorphism import RingAutomorphism
from .coefficients import Cyclotomic
from .errors import (
    ContextMismatch,
    NotInImage,
    NotStabilizerInvariant,
    NotSurjectiveType,
)
from .polynomial import Poly, PolyRing, RatFunc, as_ratfunc

_SCALARS = (int, Fraction, Cyclotomic)


class SkewRing:
    """Ring context: base ring, rank n and the generator automorphisms sigma_1..sigma_n."""

    def __init__(self, base: PolyRing, sigma: Sequence[RingAutomorphism]):
        self.base = base
        self.sigma = tuple(sigma)
        self._sigma_z: dict = {}

    @classmethod
    def of(cls, A: GwaPresentation) -> "SkewRing":
        if A._skew is None:
            A._skew = cls(A.base, A.sigma)
        return A._skew

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def sigma_z(self, mu) -> RingAutomorphism:
        mu = tuple(mu)
        auto = self._sigma_z.get(mu)
        if auto is None:
            auto = RingAutomorphism.identity(self.base)
            for i, k in enumerate(mu):
                if k:
                    auto = self.sigma[i].power(k).compose(auto)
            self._sigma_z[mu] = auto
        return auto

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, SkewRing)
            and self.base == other.base
            and [s.forward for s in self.sigma] == [s.forward for s in other.sigma]
        )

    def __hash__(self):
        return hash((self.base, tuple(s.forward for s in self.sigma)))

    @property
    def identity_degree(self):
        return (0,) * self.rank

    def element(self, terms: dict) -> "SkewElement":
        return SkewElement(self, terms)

    @property
    def zero(self) -> "SkewElement":
        return SkewElement._make(self, {})

    @property
    def one(self) -> "SkewElement":
        return self.unit(self.identity_degree)

    def unit(self, mu, coeff=None) -> "SkewElement":
        coeff = RatFunc._make(self.base.one, self.base.one) if coeff is None else _to_rat(coeff, self.base)
        return SkewElement._make(self, {tuple(mu): coeff} if coeff else {})

    def scalar(self, l) -> "SkewElement":
        return self.unit(self.identity_degree, l)


def _to_rat(x, ring: PolyRing) -> RatFunc:
    if isinstance(x, (Poly, RatFunc)):
        return as_ratfunc(x)
    return RatFunc._make(ring.constant(x), ring.one)


class SkewElement:
    """An immutable element sum_mu l_mu * m[mu] of L * Z^n."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: SkewRing, terms: dict):
        clean = {}
        for mu, l in terms.items():
            mu = tuple(mu)
            if len(mu) != ring.rank:
                raise ValueError(f"degree {mu} does not match rank {ring.rank}")
            l = _to_rat(l, ring.base)
            if l:
                clean[mu] = l
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

    def _check(self, other: "SkewElement"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ContextMismatch("skew elements over different ring contexts")

    def _coerce(self, other):
        if isinstance(other, SkewElement):
            self._check(other)
            return other
        if isinstance(other, (Poly, RatFunc) + _SCALARS):
            return self.ring.scalar(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> set:
        return set(self.terms)

    def coefficient(self, mu) -> RatFunc:
        return self.terms.get(tuple(mu), _to_rat(0, self.ring.base))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for mu, l in other.terms.items():
            v = terms.get(mu)
            if v is None:
                terms[mu] = l
            else:
                v = v + l
                if v:
                    terms[mu] = v
                else:
                    del terms[mu]
        return SkewElement._make(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement._make(self.ring, {mu: -l for mu, l in self.terms.items()})

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
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return skew_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return skew_mul(other, self)

    def __eq__(self, other):
        if isinstance(other, SkewElement):
            return (other.ring is self.ring or other.ring == self.ring) and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __call__(self, l):
        return evaluate(self, l)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(abs(k) for k in t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mu, l in self.sorted_terms():
            text = str(l)
            if any(ch in text[1:] for ch in "+-") or "/" in text:
                text = f"({text})"
            pieces.append(f"{text} * m[{','.join(str(k) for k in mu)}]")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SkewElement({str(self)!r})"


def skew_mul(x: SkewElement, y: SkewElement) -> SkewElement:
    """Bilinear product with m[mu] * g = sigma_mu(g) * m[mu]."""
    x._check(y)
    ring = x.ring
    out: dict = {}
    for mu, l in x.terms.items():
        s = ring.sigma_z(mu) if any(mu) else None
        for nu, g in y.terms.items():
            g2 = g.substitute(s) if s is not None else g
            key = tuple(a + b for a, b in zip(mu, nu))
            c = l * g2
            v = out.get(key)
            out[key] = c if v is None else v + c
    return SkewElement._make(ring, {k: v for k, v in out.items() if v})


def evaluate(X: SkewElement, l) -> RatFunc:
    """X(l) = sum_mu l_mu * sigma_mu(l)."""
    ring = X.ring
    l = _to_rat(l, ring.base)
    total = _to_rat(0, ring.base)
    for mu, coeff in X.terms.items():
        total = total + coeff * (l.substitute(ring.sigma_z(mu)) if any(mu) else l)
    return total


def support(X: SkewElement) -> set:
    return X.support()


# the embedding of a GWA


def generator_twist(A: GwaPresentation, z) -> Poly:
    """t_z with X^z -> t_z * m[z]: one structure coefficient per negative coordinate."""
    cache = A.__dict__.setdefault("_twist", {})
    z = tuple(z)
    t = cache.get(z)
    if t is None:
        t = A.base.one
        for i, k in enumerate(z):
            if k < 0:
                t = t * structure_coefficient(A, A.unit_vector(i, k), A.unit_vector(i, -k))
        cache[z] = t
    return t


def embed(x: GwaElement) -> SkewElement:
    """X_i^+ -> m[e_i], X_i^- -> a_i * m[-e_i], extended multiplicatively."""
    A = x.algebra
    if not A.is_surjective_type():
        raise NotSurjectiveType("some sigma_z with z != 0 acts trivially on the base ring")
    ring = SkewRing.of(A)
    terms = {}
    for z, d in x.terms.items():
        t = generator_twist(A, z)
        terms[z] = RatFunc.from_poly(d * t)
    return SkewElement._make(ring, terms)


def preimage(X: SkewElement, A: GwaPresentation) -> GwaElement:
    """The GWA element whose embedding is X; NotInImage names the first bad degree."""
    ring = SkewRing.of(A)
    if X.ring is not ring and X.ring != ring:
        raise ContextMismatch("skew element is not over this algebra's context")
    terms = {}
    for mu, l in sorted(X.terms.items(), key=lambda t: t[0]):
        d = (l / generator_twist(A, mu)).as_poly()
        if d is None:
            raise NotInImage(mu)
        terms[mu] = d
    return GwaElement._make(A, terms)


# finite groups acting on the skew ring


def _mat_vec(mat, v):
    return tuple(sum(r * x for r, x in zip(row, v)) for row in mat)


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


class WGroupElement:
    """A base-ring automorphism paired with its integer action on degrees."""

    __slots__ = ("auto", "matrix", "label")

    def __init__(self, auto: RingAutomorphism, matrix, label=None):
        self.auto = auto
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.label = label

    def act_degree(self, mu):
        return _mat_vec(self.matrix, mu)

    def __call__(self, l):
        return self.auto(l)

    def __mul__(self, other: "WGroupElement") -> "WGroupElement":
        return WGroupElement(self.auto.compose(other.auto), _mat_mul(self.matrix, other.matrix))

    def key(self):
        return (tuple(p for p in self.auto.forward), self.matrix)

    def __eq__(self, other):
        return isinstance(other, WGroupElement) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"WGroupElement({self.label or self.auto.describe()})"


class WGroup:
    """An explicit finite group acting on the skew ring by conjugation."""

    def __init__(self, ring: SkewRing, elements: Iterable[WGroupElement], check: bool = True):
        self.ring = ring
        self.elements = list(elements)
        n = ring.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        self.identity_index = next(
            (k for k, g in enumerate(self.elements) if g.matrix == ident and g.auto.is_identity()), None
        )
        if self.identity_index is None:
            raise ValueError("the group must contain the identity")
        if check:
            self._validate()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def _validate(self):
        keys = {g.key() for g in self.elements}
        for g in self.elements:
            for h in self.elements:
                if (g * h).key() not in keys:
                    raise ValueError("element list is not closed under composition")
        n = self.ring.rank
        for g in self.elements:
            inv = g.auto.inverse()
            for i in range(n):
                e = tuple(1 if j == i else 0 for j in range(n))
                conj = g.auto.compose(self.ring.sigma[i]).compose(inv)
                if conj.forward != self.ring.sigma_z(g.act_degree(e)).forward:
                    raise ValueError(f"{g} does not conjugate sigma_{i + 1} to sigma of the image degree")

    def conjugate(self, g: WGroupElement, X: SkewElement) -> SkewElement:
        return SkewElement._make(X.ring, {g.act_degree(mu): l.substitute(g.auto) for mu, l in X.terms.items()})

    def stabilizer(self, mu) -> list[WGroupElement]:
        mu = tuple(mu)
        return [g for g in self.elements if g.act_degree(mu) == mu]

    def orbit(self, mu) -> list:
        seen = []
        for g in self.elements:
            v = g.act_degree(mu)
            if v not in seen:
                seen.append(v)
        return seen


def trivial_wgroup(ring: SkewRing) -> WGroup:
    n = ring.rank
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return WGroup(ring, [WGroupElement(RingAutomorphism.identity(ring.base), ident, label="e")])


def permutation_auto(base: PolyRing, blocks, perm) -> RingAutomorphism:
    """Automorphism moving the variables of block i onto block perm[i]."""
    gens = base.gens()
    fwd, inv = list(gens), list(gens)
    for i, j in enumerate(perm):
        for src, dst in zip(blocks[i], blocks[j]):
            fwd[src] = gens[dst]
            inv[dst] = gens[src]
    return RingAutomorphism(base, fwd, inv, check=False)


def permutation_matrix(perm):
    n = len(perm)
    return tuple(tuple(1 if perm[j] == i else 0 for j in range(n)) for i in range(n))


def symmetric_wgroup(A: GwaPresentation) -> WGroup:
    """S_n permuting the tensor factors of a tensor-power presentation."""
    if A.blocks is None:
        raise ValueError("the presentation has no tensor structure")
    ring = SkewRing.of(A)
    elements = [
        WGroupElement(permutation_auto(A.base, A.blocks, perm), permutation_matrix(perm), label=str(perm))
        for perm in itertools.permutations(range(A.rank))
    ]
    return WGroup(ring, elements)


def w_invariant(X: SkewElement, W: WGroup) -> bool:
    """True iff l_{w.mu} = w(l_mu) for every group element and every mu."""
    if X.ring is not W.ring and X.ring != W.ring:
        raise ContextMismatch("skew element and group act on different contexts")
    for g in W.elements:
        for mu, l in X.terms.items():
            if X.terms.get(g.act_degree(mu)) != l.substitute(g.auto):
                return False
    return True


def symmetrize(a, mu, W: WGroup) -> SkewElement:
    """[a mu]: the sum of w(a) * m[w.mu] over coset representatives of W / W_mu."""
    ring = W.ring
    a = _to_rat(a, ring.base)
    mu = tuple(mu)
    for g in W.stabilizer(mu):
        if a.substitute(g.auto) != a:
            raise NotStabilizerInvariant(f"{a} is not fixed by the stabilizer of {list(mu)}")
    terms = {}
    for g in W.elements:
        v = g.act_degree(mu)
        if v not in terms:
            terms[v] = a.substitute(g.auto)
    return SkewElement._make(ring, {k: v for k, v in terms.items() if v})


def f_projector(S: Iterable, f, u: SkewElement) -> SkewElement:
    """Apply prod_{s in S} (f * (-) - (-) * sigma_s^{-1}(f)) to u.

    On a term l * m[mu] each factor multiplies l by f - sigma_{mu - s}(f).
    """
    ring = u.ring
    f = _to_rat(f, ring.base)
    S = sorted({tuple(s) for s in S})
    out = {}
    for mu, l in u.terms.items():
        c = l
        for s in S:
            shift = tuple(a - b for a, b in zip(mu, s))
            c = c * (f - f.substitute(ring.sigma_z(shift)))
            if not c:
                break
        if c:
            out[mu] = c
    return SkewElement._make(ring, out)


def monoid_generates(vectors: Iterable, n: int) -> bool:
    """Whether the vectors generate Z^n as a monoid.

    Breadth-first closure from 0 inside the box [-B, B]^n with
    B = n * max |v|_inf + 1, succeeding once every +-e_i is reached.
    """
    return not unreachable_units(vectors, n)


def unreachable_units(vectors: Iterable, n: int) -> list:
    """The vectors +-e_i that the bounded monoid closure does not reach."""
    targets = set()
    for i in range(n):
        for s in (1, -1):
            targets.add(tuple(s if j == i else 0 for j in range(n)))
    vecs = sorted({tuple(v) for v in vectors if any(v)})
    if not vecs:
        return sorted(targets, reverse=True)
    bound = n * max(max(abs(x) for x in v) for v in vecs) + 1
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    while queue and targets:
        p = queue.popleft()
        for v in vecs:
            q = tuple(a + b for a, b in zip(p, v))
            if q in seen or any(abs(x) > bound for x in q):
                continue
            seen.add(q)
            targets.discard(q)
            queue.append(q)
    return sorted(targets, reverse=True)
