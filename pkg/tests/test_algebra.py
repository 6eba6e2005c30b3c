import itertools
import random

import pytest
from hypothesis import given, settings

from gwa import (
    PolyRing,
    RingAutomorphism,
    extend_rank,
    structure_coefficient,
    tensor_power,
    validate_presentation,
)
from gwa.errors import AlgebraMismatch, NonCommutingSigmas, SigmaMovesForeignA, ZeroDefiningElement

from strategies import mixed2, quantum, random_element, seeds, weyl, weyl1


def test_weyl_relations():
    A = weyl1()
    h = A.base.gen("h")
    xp, xm = A.xplus(0), A.xminus(0)
    assert xm * xp == A.scalar(h)
    assert xp * xm == A.scalar(h - 1)
    assert xp * A.scalar(h) == A.monomial((1,), h - 1)
    assert str(xp * A.scalar(h)) == "(h-1)*Xp1"


def test_validation_errors():
    ring = PolyRing(["h1", "h2"])
    h1, h2 = ring.gens()
    s1 = RingAutomorphism(ring, [h1 - 1, h2], [h1 + 1, h2])
    s2 = RingAutomorphism(ring, [h1, h2 - 1], [h1, h2 + 1])
    validate_presentation(ring, [h1, h2], [s1, s2])
    with pytest.raises(SigmaMovesForeignA) as exc:
        validate_presentation(ring, [h1, h2], [s1, s1])
    assert (exc.value.i, exc.value.j) == (2, 1)
    with pytest.raises(ZeroDefiningElement):
        validate_presentation(ring, [h1, ring.zero], [s1, s2])
    swap = RingAutomorphism(ring, [h2, h1], [h2, h1])
    with pytest.raises(NonCommutingSigmas):
        validate_presentation(ring, [h1 + h2, h1 * h2], [s1, swap])


def test_structure_coefficient_examples():
    A = weyl1()
    h = A.base.gen("h")
    assert structure_coefficient(A, (1,), (-1,)) == h - 1
    assert structure_coefficient(A, (-1,), (1,)) == h
    assert structure_coefficient(A, (-2,), (2,)) == h * (h + 1)
    assert structure_coefficient(A, (2,), (3,)) == A.base.one


def test_structure_coefficient_matches_products():
    for A in (weyl(2), quantum(2), mixed2()):
        for z in itertools.product(range(-2, 3), repeat=2):
            for w in itertools.product(range(-2, 3), repeat=2):
                prod = A.monomial(z) * A.monomial(w)
                zw = tuple(a + b for a, b in zip(z, w))
                assert prod == A.monomial(zw, structure_coefficient(A, z, w))


def test_tensor_power_examples():
    W2 = tensor_power(weyl1(), 2)
    assert W2.base.variables == ("h1", "h2")
    h1, h2 = W2.base.gens()
    assert W2.a == (h1, h2)
    assert W2.sigma[0].forward == (h1 - 1, h2)
    assert W2.sigma[1].forward == (h1, h2 - 1)
    W1 = tensor_power(weyl1(), 1)
    assert W1.base.variables == ("h1",) and W1.a[0] == W1.base.gen("h1")
    Q2 = quantum(2)
    q1, q2 = Q2.base.gens()
    assert Q2.base.laurent == (True, True)
    assert Q2.sigma[1].forward == (q1, 2 * q2)


def test_extend_rank():
    A = tensor_power(weyl1(), 1)
    ring = PolyRing(["h1", "h2"])
    h1, h2 = ring.gens()
    B = extend_rank(A, h2, RingAutomorphism(ring, [h1, h2 - 1], [h1, h2 + 1]))
    assert B.rank == 2 and B.blocks == ((0,), (1,))
    x = A.xplus(0) * A.scalar(A.base.gen("h1"))
    promoted = B.promote(x)
    assert set(promoted.terms) == {(1, 0)}
    assert (B.promote(A.xminus(0)) * B.promote(A.xplus(0))) == B.promote(A.xminus(0) * A.xplus(0))
    # old elements mix with new ones directly
    assert x * B.xplus(1) == B.promote(x) * B.xplus(1)
    with pytest.raises(SigmaMovesForeignA):
        extend_rank(A, h2, RingAutomorphism(ring, [h1 - 1, h2 - 1], [h1 + 1, h2 + 1]))
    with pytest.raises(AlgebraMismatch):
        weyl1().xplus(0) * B.xplus(0)


def test_printing():
    A = weyl(2)
    h1 = A.base.gen("h1")
    assert str(A.xplus(0) ** 2 * A.xminus(1)) == "Xp1^2*Xm2"
    assert str(A.scalar(-2 * h1) * A.xplus(0)) == "-2*h1*Xp1"
    assert str(A.zero) == "0"


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_grading_and_basis(seed):
    rng = random.Random(seed)
    A = rng.choice([weyl(2), quantum(2), mixed2()])
    x, y = random_element(rng, A), random_element(rng, A)
    minkowski = {tuple(a + b for a, b in zip(z, w)) for z in x.terms for w in y.terms}
    assert set((x * y).terms) <= minkowski
    assert (x - x).terms == {}


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_distributivity(seed):
    rng = random.Random(seed)
    A = rng.choice([weyl(1), weyl(3), quantum(2), mixed2()])
    x, y, z = (random_element(rng, A) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
