import json
import random
from pathlib import Path

import pytest

from gwa import SkewRing, parse_element, parse_poly
from gwa.coefficients import CyclotomicField
from gwa.errors import GwaSyntaxError, NegativeExponent, ParseError, RankOutOfRange, UnknownSymbol
from gwa.parsing import parse_ratfunc, parse_skew
from gwa.serialization import dump_presentation, load_presentation, presentation_from_dict, presentation_to_dict

from strategies import mixed2, quantum, random_element, random_skew, weyl, weyl1

DATA = Path(__file__).resolve().parents[1] / "data"
W1 = weyl1()
h = W1.base.gen("h")


def test_element_examples():
    assert parse_element("Xm1*Xp1", W1) == W1.scalar(h)
    assert parse_element("Xp1*h", W1) == W1.monomial((1,), h - 1)
    assert str(parse_element("Xp1*h", W1)) == "(h-1)*Xp1"


def test_syntax_error_position():
    with pytest.raises(GwaSyntaxError) as exc:
        parse_element("Xp1*(h", W1)
    assert exc.value.position == 7
    assert str(exc.value) == "expected ')', found end of input at offset 7"
    with pytest.raises(GwaSyntaxError) as exc:
        parse_element("h + $", W1)
    assert exc.value.position == 5
    with pytest.raises(GwaSyntaxError):
        parse_element("", W1)


def test_symbol_errors():
    with pytest.raises(UnknownSymbol) as exc:
        parse_element("k*Xp1", W1)
    assert exc.value.name == "k"
    with pytest.raises(RankOutOfRange):
        parse_element("Xp2", W1)
    with pytest.raises(RankOutOfRange):
        parse_element("Xm0", W1)
    with pytest.raises(NegativeExponent):
        parse_element("Xp1^-1", W1)
    with pytest.raises(NegativeExponent):
        parse_poly("h^-1", W1.base)
    with pytest.raises(ParseError):
        parse_element("Xp1/h", W1)


def test_precedence_and_associativity():
    R = W1.base
    assert parse_poly("2^3^2", R) == R.constant(512)
    assert parse_poly("5-2-1", R) == R.constant(2)
    assert parse_poly("-h^2", R) == -(h**2)
    assert parse_poly("2*h+3*h^2", R) == 3 * h**2 + 2 * h
    assert parse_poly("h/2", R) == h / 2
    assert parse_poly("(h^2-1)/(h-1)", R) == h + 1
    W2 = weyl(2)
    x = parse_element("Xp1*Xm2 - 1/2*Xp2^2", W2)
    assert x == W2.xplus(0) * W2.xminus(1) - W2.xplus(1) ** 2 / 2


def test_laurent_and_cyclotomic():
    Q = quantum(1)
    k = Q.base.gen("h")
    assert parse_poly("h^-2 + 1/2*h", Q.base) == k**-2 + k / 2
    F = CyclotomicField(4)
    R = W1.base.with_field(F)
    p = parse_poly("z*h + z^2", R)
    assert p == R.gen("h") * F.root(4, 1) - 1


def test_ratfunc_and_skew():
    assert parse_ratfunc("1/(h)", W1.base).den == h
    S = SkewRing.of(weyl(2))
    X = parse_skew("h1 * m[1,0] + (h1-1) * m[0,1]", S)
    h1, _ = S.base.gens()
    assert X == S.unit((1, 0), h1) + S.unit((0, 1), h1 - 1)
    with pytest.raises(GwaSyntaxError):
        parse_skew("m[1]", S)


def test_round_trip_300():
    rng = random.Random(300)
    algebras = [weyl(1), weyl(2), weyl(3), quantum(2), mixed2(), W1.with_field(CyclotomicField(3))]
    for i in range(300):
        A = algebras[i % len(algebras)]
        if isinstance(A.field, CyclotomicField):
            x = A.convert(random_element(rng, W1)) * A.scalar(A.base.constant(A.field.root(3, 1)))
        else:
            x = random_element(rng, A)
        text = str(x)
        y = parse_element(text, A)
        assert y == x, text
        assert str(y) == text


def test_skew_round_trip():
    rng = random.Random(301)
    for A in (weyl(1), weyl(2), quantum(2), mixed2()):
        S = SkewRing.of(A)
        for _ in range(40):
            X = random_skew(rng, S)
            assert parse_skew(str(X), S) == X


def test_presentation_json(tmp_path):
    A = load_presentation(DATA / "weyl2.json")
    assert A.rank == 2 and A.blocks == ((0,), (1,))
    out = tmp_path / "copy.json"
    dump_presentation(A, out)
    B = load_presentation(out)
    assert presentation_to_dict(A) == presentation_to_dict(B)
    assert B.xminus(1) * B.xplus(1) == B.scalar(B.base.gen("h2"))
    Q = load_presentation(DATA / "quantum1.json")
    k = Q.base.gen("h")
    assert Q.xplus(0) * Q.scalar(k) == Q.monomial((1,), 2 * k)


def test_presentation_json_errors():
    good = json.load(open(DATA / "weyl1.json"))
    for broken in (
        {k: v for k, v in good.items() if k != "a"},
        {**good, "sigma": [{"x": "h"}]},
        {**good, "a": ["h", "h"]},
        {**good, "a": ["h*("]},
        {**good, "base": {"vars": []}},
    ):
        with pytest.raises(ParseError):
            presentation_from_dict(broken)
