from fractions import Fraction

import pytest

from affwreath.awpa import affine_wreath
from affwreath.catalog import clifford, taft, trivial
from affwreath.cyclotomic import cyclotomic_quotient, make_params
from affwreath.exceptions import ParseError
from affwreath.parsing import (
    parse_alg_elem,
    parse_cyclotomic,
    parse_element,
    parse_tensor,
    tokenize,
)
from affwreath.scalars import root_of_unity
from affwreath.tensor import tensor_space


def test_tokenize():
    assert tokenize("x12*s3 - 2") == [
        ('x', 12), ('op', '*'), ('s', 3), ('op', '-'), ('int', 2)]
    assert tokenize("s[2,1]*b(c,1)", ["1", "c"]) == [
        ('perm', "2,1"), ('op', '*'), ('word', "c,1")]
    assert tokenize("g^2_1", ["1", "g", "g^2"]) == [('slot', ("g^2", 1))]


def test_printed_elements_read_back():
    A = affine_wreath(clifford(), 2)
    s, x1 = A.s(1), A.x(1)
    for a in [s * x1, x1 * x1 * s - A.x(2), A.zero() + s, A.one()]:
        assert parse_element(A, str(a)) == a


def test_parse_generators():
    A = affine_wreath(trivial(), 2)
    assert parse_element(A, "x2*s[2,1] - 1") == A.x(2) * A.s(1) - A.one()
    assert parse_element(A, "s1*x1") == A.s(1) * A.x(1)
    assert parse_element(A, "(x1 + x2)^2") == (A.x(1) + A.x(2)) ** 2
    assert parse_element(A, "x1/2") == A.x(1).scale(Fraction(1, 2))

    C = affine_wreath(clifford(), 2)
    c = clifford().basis()[1]
    assert parse_element(C, "c_1*c_2") == C.slot(c, 1) * C.slot(c, 2)
    assert parse_element(C, "b(c,c)") == C.slot(c, 1) * C.slot(c, 2)


def test_labels_and_roots_of_unity():
    F = taft(3)
    g = F.basis_element(F.index_of("g"))
    assert parse_alg_elem(F, "g^2") == g * g
    assert parse_alg_elem(F, "g^3") == F.one()
    assert parse_alg_elem(F, "z*g") == g.scale(root_of_unity(3))
    assert parse_alg_elem(clifford(), "2*c + 1") == \
        clifford().basis()[1].scale(2) + clifford().one()


def test_parse_tensor_and_quotient():
    space = tensor_space(clifford(), 2)
    one, c = clifford().basis()
    assert parse_tensor(space, "b(c,1)") == space.tensor(c, one)
    assert parse_tensor(space, "1") == space.one()

    F = trivial()
    params = make_params(F, {1: [F.one(), -F.one()]})
    Q = cyclotomic_quotient(params, 2)
    assert parse_cyclotomic(Q, "x1^2") == Q.one()


@pytest.mark.parametrize("text", [
    "",
    "x1 +",
    "x1 )",
    "x1 % 2",
    "s2",
    "x3",
    "s[1,1]",
    "s[1,2,3]",
    "x1/x2",
    "x1^x2",
    "c",
    "b(c)",
    "y_1",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_element(affine_wreath(clifford(), 2), text)


def test_scalar_and_tensor_errors():
    with pytest.raises(ParseError):
        parse_alg_elem(trivial(), "z")

    with pytest.raises(ParseError):
        parse_alg_elem(clifford(), "x1")

    with pytest.raises(ParseError):
        parse_tensor(tensor_space(clifford(), 2), "x1*b(c,1)")
