"""The imprimitive reflection groups G(m, p, n) and their action on tensor-power GWAs."""

from __future__ import annotations

import itertools
import math

from .algebra import GwaElement, GwaPresentation
from .coefficients import CyclotomicField, RationalField
from .errors import CapExceeded, FieldLacksRoots, NotDivisible
from .polynomial import Poly
from .skew import permutation_auto

DEFAULT_CAP = 10_000


class ReflectionGroupElement:
    """(k, pi) standing for diag(zeta_m^k) * pi; pi is zero-based with pi[i] the image of i."""

    __slots__ = ("m", "p", "zeta", "perm")

    def __init__(self, m: int, p: int, zeta, perm):
        self.m = m
        self.p = p
        self.zeta = tuple(int(k) % m for k in zeta)
        self.perm = tuple(perm)
        if sorted(self.perm) != list(range(len(self.zeta))):
            raise ValueError(f"{self.perm} is not a permutation of {len(self.zeta)} points")
        if m % p:
            raise NotDivisible(f"p={p} does not divide m={m}")
        if sum(self.zeta) % p:
            raise ValueError(f"{self.zeta} violates the product condition of G({m},{p},{len(self.zeta)})")

    @property
    def n(self) -> int:
        return len(self.perm)

    def permute(self, v):
        """pi(v) with pi(v)[pi(i)] = v[i]."""
        out = [0] * self.n
        for i, j in enumerate(self.perm):
            out[j] = v[i]
        return tuple(out)

    def __mul__(self, other: "ReflectionGroupElement") -> "ReflectionGroupElement":
        k = tuple((a + b) % self.m for a, b in zip(self.zeta, self.permute(other.zeta)))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        return ReflectionGroupElement(self.m, self.p, k, perm)

    def inverse(self) -> "ReflectionGroupElement":
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        # (k, pi)^{-1} = (-pi^{-1}(k), pi^{-1})
        k = [0] * self.n
        for j in range(self.n):
            k[inv[j]] = -self.zeta[j]
        return ReflectionGroupElement(self.m, self.p, k, inv)

    def is_identity(self) -> bool:
        return not any(self.zeta) and self.perm == tuple(range(self.n))

    def __eq__(self, other):
        return (
            isinstance(other, ReflectionGroupElement)
            and (self.m, self.p, self.zeta, self.perm) == (other.m, other.p, other.zeta, other.perm)
        )

    def __hash__(self):
        return hash((self.m, self.p, self.zeta, self.perm))

    def __repr__(self):
        return f"G({self.m},{self.p},{self.n})[zeta={list(self.zeta)}, pi={[i + 1 for i in self.perm]}]"


def group_order(m: int, p: int, n: int) -> int:
    return m**n * math.factorial(n) // p


def enumerate_group(m: int, p: int, n: int, cap: int = DEFAULT_CAP) -> list[ReflectionGroupElement]:
    if m < 1 or p < 1 or n < 1:
        raise ValueError("m, p and n must be positive")
    if m % p:
        raise NotDivisible(f"p={p} does not divide m={m}")
    size = group_order(m, p, n)
    if size > cap:
        raise CapExceeded(f"G({m},{p},{n}) has {size} elements, above the cap {cap}")
    out = []
    for perm in itertools.permutations(range(n)):
        for k in itertools.product(range(m), repeat=n):
            if sum(k) % p == 0:
                out.append(ReflectionGroupElement(m, p, k, perm))
    return out


def _require_tensorial(A: GwaPresentation, n: int):
    if A.blocks is None:
        raise ValueError("the action needs a tensor-power presentation")
    if A.rank != n:
        raise ValueError(f"group acts on rank {n}, algebra has rank {A.rank}")


def act(g: ReflectionGroupElement, x: GwaElement) -> GwaElement:
    """Permute tensor factors by pi, then scale X_i^+ by zeta^{k_i} and X_i^- by zeta^{-k_i}."""
    A = x.algebra
    _require_tensorial(A, g.n)
    field = A.field
    if not field.contains_roots(g.m):
        raise FieldLacksRoots(f"{field!r} has no primitive {g.m}-th root of unity")
    auto = permutation_auto(A.base, A.blocks, g.perm)
    terms = {}
    for z, d in x.terms.items():
        w = g.permute(z)
        e = sum(k * c for k, c in zip(g.zeta, w)) % g.m
        img = auto(d)
        if e:
            img = img.scale(field.root(g.m, e))
        terms[w] = img
    return GwaElement._make(A, terms)


def _descend(x: GwaElement, A: GwaPresentation) -> GwaElement:
    return GwaElement._make(A, {z: Poly(A.base, d.terms) for z, d in x.terms.items()})


def reynolds(G, x: GwaElement) -> GwaElement:
    """(1/|G|) * sum_g act(g, x).

    Over Q with m > 2 the sum is formed over Q(zeta_m) and brought back,
    since the average of a rational element is rational.
    """
    G = list(G)
    if not G:
        raise ValueError("empty group")
    A = x.algebra
    m = G[0].m
    work, y = A, x
    if not A.field.contains_roots(m):
        if not isinstance(A.field, RationalField):
            raise FieldLacksRoots(f"{A.field!r} has no primitive {m}-th root of unity")
        work = A.with_field(CyclotomicField(m))
        y = work.convert(x)
    total = work.zero
    for g in G:
        total = total + act(g, y)
    total = total / len(G)
    return total if work is A else _descend(total, A)


def invariant_lattice(m: int, p: int, n: int) -> list[tuple[int, ...]]:
    """A basis of the degrees fixed by the diagonal part: m Z^n + (m/p)(1,...,1) Z."""
    if m % p:
        raise NotDivisible(f"p={p} does not divide m={m}")
    basis = [(m // p,) * n]
    for i in range(1, n):
        basis.append(tuple(m if j == i else 0 for j in range(n)))
    return basis


def in_invariant_lattice(z, m: int, p: int) -> bool:
    z = tuple(z)
    if not z:
        return True
    return all(c % (m // p) == 0 for c in z) and all((c - z[0]) % m == 0 for c in z)
