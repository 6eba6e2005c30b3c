"""Substitution automorphisms of (Laurent) polynomial rings."""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import InexactDivision, NotInvertible, RingMismatch
from .polynomial import Poly, PolyRing, RatFunc


class RingAutomorphism:
    """An automorphism given by the images of the variables and of its inverse.

    The two image lists are checked against each other at construction:
    forward after inverse, and inverse after forward, must both fix every
    variable.
    """

    __slots__ = ("ring", "forward", "backward", "_powers", "_hash")

    def __init__(self, ring: PolyRing, forward: Sequence[Poly], inverse: Sequence[Poly], check: bool = True):
        forward = tuple(forward)
        inverse = tuple(inverse)
        if len(forward) != ring.nvars or len(inverse) != ring.nvars:
            raise ValueError("one image per variable is required")
        for img in forward + inverse:
            if img.ring != ring:
                raise RingMismatch(f"image {img} lives in {img.ring}, not {ring}")
        self.ring = ring
        self.forward = forward
        self.backward = inverse
        self._powers: dict = {}
        self._hash = None
        if check:
            self._check_round_trip()

    @classmethod
    def from_mapping(cls, ring: PolyRing, forward: Mapping[str, Poly], inverse: Mapping[str, Poly], check=True):
        """Build from ``{var: image}`` dicts; unmentioned variables are fixed."""
        gens = ring.gens()
        fwd = [forward.get(v, gens[i]) for i, v in enumerate(ring.variables)]
        inv = [inverse.get(v, gens[i]) for i, v in enumerate(ring.variables)]
        return cls(ring, fwd, inv, check=check)

    @classmethod
    def identity(cls, ring: PolyRing) -> "RingAutomorphism":
        gens = ring.gens()
        return cls(ring, gens, gens, check=False)

    def _check_round_trip(self):
        gens = self.ring.gens()
        try:
            there = [img.substitute(self.forward) for img in self.backward]
            back = [img.substitute(self.backward) for img in self.forward]
        except InexactDivision as exc:
            raise NotInvertible(f"images are not units where needed: {exc}") from None
        for i, g in enumerate(gens):
            if there[i] != g or back[i] != g:
                name = self.ring.variables[i]
                raise NotInvertible(f"supplied inverse does not undo the map on {name}")

    def __call__(self, x):
        if isinstance(x, Poly):
            return x.substitute(self.forward, self._powers)
        if isinstance(x, RatFunc):
            return x.substitute(self)
        return x

    def compose(self, other: "RingAutomorphism") -> "RingAutomorphism":
        """self after other: v -> self(other(v))."""
        if other.ring != self.ring:
            raise RingMismatch("automorphisms act on different rings")
        fwd = [self(img) for img in other.forward]
        inv = [other.inverse()(img) for img in self.backward]
        return RingAutomorphism(self.ring, fwd, inv, check=False)

    def inverse(self) -> "RingAutomorphism":
        return RingAutomorphism(self.ring, self.backward, self.forward, check=False)

    def power(self, k: int) -> "RingAutomorphism":
        base = self if k >= 0 else self.inverse()
        result = RingAutomorphism.identity(self.ring)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def is_identity(self) -> bool:
        return all(img == g for img, g in zip(self.forward, self.ring.gens()))

    def moved_variables(self) -> set[int]:
        gens = self.ring.gens()
        return {i for i, (img, g) in enumerate(zip(self.forward, gens)) if img != g}

    def __eq__(self, other):
        return isinstance(other, RingAutomorphism) and self.ring == other.ring and self.forward == other.forward

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.forward)
        return self._hash

    def describe(self) -> str:
        return ", ".join(f"{v} -> {img}" for v, img in zip(self.ring.variables, self.forward))

    def __repr__(self):
        return f"RingAutomorphism({self.describe()})"


def compose(alpha: RingAutomorphism, beta: RingAutomorphism) -> RingAutomorphism:
    return alpha.compose(beta)


def auto_inverse(alpha: RingAutomorphism) -> RingAutomorphism:
    return alpha.inverse()


def substitute(p, alpha: RingAutomorphism):
    return alpha(p)
