from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from camfan.scalar import QuadraticNumber, format_scalar, parse_scalar, sign, to_float

SQ5 = 5 ** 0.5
fracs = st.fractions(min_value=-50, max_value=50, max_denominator=40)
quads = st.builds(lambda a, b: QuadraticNumber(a, b, 5), fracs, fracs)


def approx(q):
    return float(q.a) + float(q.b) * SQ5


def test_golden_ratio_identities():
    phi = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi * phi == phi + 1
    assert 1 / phi == phi - 1
    assert (phi ** 2).a == Fraction(3, 2)
    # 4 cos^2(pi/5) = phi^2
    assert phi ** 2 == QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5)


def test_rational_collapse_and_hash():
    q = QuadraticNumber(Fraction(3, 4), 0, 5)
    assert q == Fraction(3, 4)
    assert hash(q) == hash(Fraction(3, 4))
    assert {q: 1}[Fraction(3, 4)] == 1


def test_sign_near_zero():
    # 161^2 - 5 * 72^2 = 1, so the number below is positive but tiny
    q = QuadraticNumber(161, -72, 5)
    assert sign(q) == 1
    assert sign(-q) == -1
    assert sign(QuadraticNumber(0, 0, 5)) == 0


@pytest.mark.parametrize(
    "text,value",
    [
        ("0", Fraction(0)),
        ("-3/2", Fraction(-3, 2)),
        ("√5", QuadraticNumber(0, 1, 5)),
        ("-1/2√5", QuadraticNumber(0, Fraction(-1, 2), 5)),
        ("1/4+1/4√5", QuadraticNumber(Fraction(1, 4), Fraction(1, 4), 5)),
        ("2-√5", QuadraticNumber(2, -1, 5)),
    ],
)
def test_parse_examples(text, value):
    assert parse_scalar(text) == value
    assert format_scalar(value) == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("1/2+x")
    with pytest.raises(ValueError):
        parse_scalar("√3", d=5)


@given(quads, quads, quads)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * (1 / x) == 1


@given(quads, quads)
def test_order_matches_floats(x, y):
    fx, fy = approx(x), approx(y)
    if abs(fx - fy) > 1e-9:
        assert (x < y) == (fx < fy)
    if abs(fx) > 1e-9:
        assert sign(x) == (1 if fx > 0 else -1)
    assert abs(to_float(x) - fx) < 1e-9


@given(quads)
def test_format_round_trip(x):
    assert parse_scalar(format_scalar(x), d=5) == x


@given(fracs)
def test_format_round_trip_rational(x):
    assert parse_scalar(format_scalar(x)) == x
