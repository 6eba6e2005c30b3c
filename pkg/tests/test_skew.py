import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.optimize import linprog

from gwa import (
    RatFunc,
    SkewRing,
    embed,
    evaluate,
    f_projector,
    monoid_generates,
    preimage,
    support,
    symmetric_wgroup,
    symmetrize,
    trivial_wgroup,
    w_invariant,
)
from gwa.errors import ContextMismatch, NotInImage, NotStabilizerInvariant, NotSurjectiveType
from gwa.skew import WGroup, WGroupElement

from strategies import mixed2, quantum, random_element, random_ratfunc, random_skew, seeds, weyl, weyl1


@pytest.fixture
def W1():
    return weyl1()


@pytest.fixture
def W2():
    return weyl(2)


def test_skew_mul_examples(W1, W2):
    S2 = SkewRing.of(W2)
    h1, _ = W2.base.gens()
    assert S2.unit((1, 0)) * S2.scalar(h1) == S2.unit((1, 0), h1 - 1)
    S1 = SkewRing.of(W1)
    h = W1.base.gen("h")
    assert S1.unit((1,), h) * S1.unit((-1,), h) == S1.scalar(h * (h - 1))
    x = S2.unit((1, -1), h1) + S2.scalar(3)
    assert S2.one * x == x == x * S2.one


def test_evaluate_examples(W1, W2):
    S2 = SkewRing.of(W2)
    h1, _ = W2.base.gens()
    assert evaluate(S2.unit((1, 0)), h1) == h1 - 1
    S1 = SkewRing.of(W1)
    h = W1.base.gen("h")
    X = S1.unit((1,), h) + S1.unit((-1,))
    assert evaluate(X, h) == h * (h - 1) + (h + 1)
    assert evaluate(S1.one, RatFunc(h, h + 3)) == RatFunc(h, h + 3)


def test_support_examples(W2):
    S2 = SkewRing.of(W2)
    h1, _ = W2.base.gens()
    assert support(S2.unit((1, 0), h1) + S2.unit((0, 1))) == {(1, 0), (0, 1)}
    assert support(S2.zero) == set()
    assert support(S2.unit((1, 0)) * S2.unit((0, 1))) == {(1, 1)}


def test_embed_examples(W1):
    S1 = SkewRing.of(W1)
    h = W1.base.gen("h")
    xp, xm = W1.xplus(0), W1.xminus(0)
    assert embed(xp) == S1.unit((1,))
    assert embed(xm) == S1.unit((-1,), h)
    assert embed(xp) * embed(xm) == S1.scalar(h - 1) == embed(xp * xm)


def test_preimage_examples(W1):
    S1 = SkewRing.of(W1)
    h = W1.base.gen("h")
    assert preimage(S1.scalar(h - 1), W1) == W1.scalar(h - 1)
    assert preimage(S1.unit((-1,), h), W1) == W1.xminus(0)
    with pytest.raises(NotInImage) as exc:
        preimage(S1.scalar(RatFunc(W1.base.one, h)), W1)
    assert tuple(exc.value.degree) == (0,)
    # X^- needs the factor h: 1 * m[-1] is not in the image
    with pytest.raises(NotInImage):
        preimage(S1.unit((-1,)), W1)


def test_embed_requires_surjective_type():
    from gwa import PolyRing, RingAutomorphism, validate_presentation

    ring = PolyRing(["h"])
    h = ring.gen("h")
    A = validate_presentation(ring, [h], [RingAutomorphism(ring, [-h], [-h])])
    with pytest.raises(NotSurjectiveType):
        embed(A.xplus(0))


def test_w_invariant_examples(W2):
    S2 = SkewRing.of(W2)
    h1, h2 = W2.base.gens()
    S = symmetric_wgroup(W2)
    assert w_invariant(S2.unit((1, 0), h1) + S2.unit((0, 1), h2), S)
    assert not w_invariant(S2.unit((1, 0), h1), S)
    assert w_invariant(S2.unit((1, 0), h1), trivial_wgroup(S2))
    with pytest.raises(ContextMismatch):
        w_invariant(SkewRing.of(weyl1()).one, S)


def test_symmetrize_examples(W2):
    S2 = SkewRing.of(W2)
    h1, h2 = W2.base.gens()
    S = symmetric_wgroup(W2)
    assert symmetrize(h1, (1, 0), S) == S2.unit((1, 0), h1) + S2.unit((0, 1), h2)
    assert symmetrize(h1 * h2, (1, 1), S) == S2.unit((1, 1), h1 * h2)
    with pytest.raises(NotStabilizerInvariant):
        symmetrize(h1, (1, 1), S)


def test_f_projector_examples(W2):
    S2 = SkewRing.of(W2)
    h1, _ = W2.base.gens()
    assert f_projector([(1, 0)], h1, S2.unit((1, 0), h1)) == S2.zero
    assert f_projector([(0, 1)], h1, S2.unit((1, 0)) + S2.unit((0, 1))) == S2.unit((1, 0))
    u = S2.unit((1, 0), h1) + S2.unit((2, -1))
    assert f_projector([], h1, u) == u


def test_monoid_generates_examples():
    assert monoid_generates([(1,), (-1,)], 1)
    assert not monoid_generates([(1,)], 1)
    assert monoid_generates([(1, 0), (0, 1), (-1, -1)], 2)
    assert not monoid_generates([(2,), (-2,)], 1)
    assert monoid_generates([(2,), (-3,)], 1)


def test_wgroup_validation(W2):
    S2 = SkewRing.of(W2)
    S = symmetric_wgroup(W2)
    swap = S.elements[1]
    wrong = WGroupElement(swap.auto, ((1, 0), (0, 1)))
    ident = S.elements[0]
    with pytest.raises(ValueError):
        WGroup(S2, [ident, wrong])
    with pytest.raises(ValueError):
        WGroup(S2, [swap])


def test_text_form(W2):
    S2 = SkewRing.of(W2)
    h1, h2 = W2.base.gens()
    assert str(S2.unit((1, 0), h1) + S2.unit((0, 1), h2)) == "h1 * m[1,0] + h2 * m[0,1]"
    assert str(S2.unit((0, 0), h1 - 1)) == "(h1-1) * m[0,0]"


# properties


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_module_law(seed):
    rng = random.Random(seed)
    A = rng.choice([weyl(1), weyl(2), quantum(2), mixed2()])
    ring = SkewRing.of(A)
    X, Y = random_skew(rng, ring, 3), random_skew(rng, ring, 3)
    l = random_ratfunc(rng, A.base)
    assert evaluate(X * Y, l) == evaluate(X, evaluate(Y, l))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_skew_associativity(seed):
    rng = random.Random(seed)
    ring = SkewRing.of(rng.choice([weyl(2), quantum(2)]))
    X, Y, Z = (random_skew(rng, ring, 3) for _ in range(3))
    assert (X * Y) * Z == X * (Y * Z)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_embed_homomorphism_and_preimage(seed):
    rng = random.Random(seed)
    A = rng.choice([weyl(1), weyl(3), quantum(2), mixed2()])
    x, y = random_element(rng, A), random_element(rng, A)
    assert embed(x * y) == embed(x) * embed(y)
    assert preimage(embed(x), A) == x


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_symmetrize_gives_invariants_and_decomposition(seed):
    rng = random.Random(seed)
    A = rng.choice([weyl(2), weyl(3)])
    W = symmetric_wgroup(A)
    ring = SkewRing.of(A)
    X = ring.zero
    for _ in range(rng.randint(1, 3)):
        mu = tuple(rng.randint(-2, 2) for _ in range(A.rank))
        a = random_ratfunc(rng, A.base, 2)
        # average over the stabilizer so that symmetrize accepts it
        stab = W.stabilizer(mu)
        a = sum((a.substitute(g.auto) for g in stab), RatFunc.from_poly(A.base.zero)) / len(stab)
        piece = symmetrize(a, mu, W)
        assert w_invariant(piece, W)
        X = X + piece
    assert w_invariant(X, W)
    # rebuild X from one representative per orbit
    rebuilt = ring.zero
    seen = set()
    for mu in sorted(X.terms):
        if mu in seen:
            continue
        seen.update(W.orbit(mu))
        rebuilt = rebuilt + symmetrize(X.terms[mu], mu, W)
    assert rebuilt == X


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_projector_supports(seed):
    rng = random.Random(seed)
    A = weyl(rng.randint(1, 3))
    ring = SkewRing.of(A)
    u = random_skew(rng, ring, 4)
    supp = sorted(u.support())
    S = set(rng.sample(supp, rng.randint(0, len(supp))))
    f = A.base.gens()[rng.randrange(A.base.nvars)]
    assert support(f_projector(S, f, u)) <= set(supp) - S
    complement = set(supp) - S
    assert support(f_projector(complement, f, u)) <= S


# independent oracle for monoid generation


def _lattice_index_is_one(vectors, n):
    g = 0
    for rows in itertools.combinations(vectors, n):
        g = math.gcd(g, abs(round(np.linalg.det(np.array(rows, dtype=float)))))
        if g == 1:
            return True
    return False


def _positive_relation(vectors):
    """Is there c >= 1 with sum c_v v = 0?"""
    M = np.array(vectors, dtype=float).T
    res = linprog(np.zeros(len(vectors)), A_eq=M, b_eq=np.zeros(M.shape[0]), bounds=[(1, None)] * len(vectors), method="highs")
    return res.status == 0


def oracle_generates(vectors, n):
    vectors = sorted({tuple(v) for v in vectors if any(v)})
    if not vectors or np.linalg.matrix_rank(np.array(vectors, dtype=float)) < n:
        return False
    return _lattice_index_is_one(vectors, n) and _positive_relation(vectors)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_monoid_generates_matches_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    vectors = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))]
    assert monoid_generates(vectors, n) == oracle_generates(vectors, n)
