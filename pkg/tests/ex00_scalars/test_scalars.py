from fractions import Fraction

import pytest

from affwreath.exceptions import BadParams, DivisionByZero, ParseError
from affwreath.scalars import (
    ONE,
    ZERO,
    CycScalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    root_of_unity,
    scalar_arith,
)


def test_rational_arithmetic():
    assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == \
        Fraction(5, 6)
    assert scalar_arith(1, 3, "div") == Fraction(1, 3)
    assert scalar_arith(2, 5, "sub") == -3
    assert str(as_scalar(Fraction(-3, 4))) == "-3/4"

    with pytest.raises(BadParams):
        scalar_arith(1, 2, "pow")


def test_roots_of_unity():
    assert root_of_unity(1, 0) == ONE
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(5, 5) == ONE
    assert root_of_unity(4) * root_of_unity(4) == -1

    z3 = root_of_unity(3)
    assert z3 * z3 == -1 - z3
    assert z3 + z3 ** 2 == -1
    assert z3 ** 3 == 1

    with pytest.raises(BadParams):
        root_of_unity(0)


def test_rational_values_drop_to_conductor_one():
    i = root_of_unity(4)
    square = i * i
    assert square.is_rational()
    assert square.conductor == 1
    assert square.rational_value() == -1


def test_mixed_conductors():
    z12 = root_of_unity(12)
    assert z12 ** 3 == root_of_unity(4)
    assert z12 ** 4 == root_of_unity(3)
    assert hash(z12 ** 3) == hash(root_of_unity(4))

    total = root_of_unity(4) + root_of_unity(3)
    assert total.conductor == 12
    assert total - root_of_unity(3) == root_of_unity(4)


def test_inverse_and_division():
    x = ONE + root_of_unity(4)
    assert x.inverse() * x == ONE
    assert (ONE / x) * x == 1
    assert 2 / as_scalar(4) == Fraction(1, 2)

    with pytest.raises(DivisionByZero):
        ONE / ZERO

    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_negative_powers():
    i = root_of_unity(4)
    assert i ** -1 == i ** 3
    assert as_scalar(2) ** -2 == Fraction(1, 4)


def test_normalized_trace():
    assert ONE.normalized_trace() == 1
    assert root_of_unity(4).normalized_trace() == 0
    # z_3 + z_3^2 = -1 averages to -1/2 per embedding
    assert root_of_unity(3).normalized_trace() == Fraction(-1, 2)


def test_format():
    assert format_scalar(as_scalar(Fraction(7, 2))) == "7/2"
    assert str(root_of_unity(3)) == "z"
    assert str(-root_of_unity(3)) == "-z"
    assert str(2 * root_of_unity(5) ** 2 - 1) == "2*z^2 - 1"
    assert repr(ONE) == "CycScalar('1', conductor=1)"


def test_parse_scalar():
    assert parse_scalar("3/6") == Fraction(1, 2)
    assert parse_scalar(" -4 ") == -4
    assert parse_scalar("z^2", 4) == -1
    assert parse_scalar("1/2*z^2 - z + 3", 4) == \
        Fraction(5, 2) - root_of_unity(4)
    assert str(parse_scalar("1/2*z^2 - z + 3", 4)) == "-z + 5/2"
    assert parse_scalar(str(root_of_unity(7) ** 3), 7) == \
        root_of_unity(7) ** 3


def test_parse_scalar_errors():
    with pytest.raises(DivisionByZero):
        parse_scalar("1/0")

    with pytest.raises(ParseError):
        parse_scalar("z")

    with pytest.raises(ParseError):
        parse_scalar("two")


def test_scalars_are_frozen():
    with pytest.raises(AttributeError):
        ONE.conductor = 2

    assert isinstance(as_scalar("1/3"), CycScalar)

    with pytest.raises(TypeError):
        as_scalar(1.5)
