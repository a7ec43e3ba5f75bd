# coding=utf-8
from attr.exceptions import FrozenInstanceError
import pytest

from affwreath.catalog import clifford, trivial
from affwreath.exceptions import AlgebraMismatch
from affwreath.scalars import ONE, root_of_unity
from affwreath.types import TermDict, accumulate


def test_term_dict_is_read_only():
    terms = TermDict({0: ONE})

    with pytest.raises(FrozenInstanceError):
        del terms[0]

    with pytest.raises(FrozenInstanceError):
        terms[1] = ONE

    with pytest.raises(FrozenInstanceError):
        terms.clear()

    with pytest.raises(FrozenInstanceError):
        terms.pop(0)

    with pytest.raises(FrozenInstanceError):
        terms.update({2: ONE})

    assert terms == {0: ONE}


def test_accumulate_drops_cancelled_keys():
    terms = {}
    accumulate(terms, "a", ONE)
    accumulate(terms, "b", 0)
    assert terms == {"a": ONE}
    accumulate(terms, "a", -ONE)
    assert terms == {}


def test_sparse_elements():
    F = clifford()
    one, c = F.basis()

    assert str(2 * c - one) == "2*c - 1"
    assert repr(c) == "AlgElem('c')"
    assert str(F.zero()) == "0"
    assert (c + one) - one == c
    assert c - c == 0
    assert c * c == 1
    assert one * 3 == 3
    assert c + 0 is c
    assert c.coefficient(0) == 0
    assert len(c + one) == 2
    assert (c + one).filter(lambda key: key == 1) == c


def test_coefficients_are_scalars():
    F = trivial()
    u = F.element({0: 2})
    assert u.terms[0] == 2
    assert u.terms[0].is_rational()
    assert str(u.scale(root_of_unity(3))) == "(2*z)"


def test_elements_are_frozen_and_unhashable():
    c = clifford().basis()[1]

    with pytest.raises(FrozenInstanceError):
        c.terms = {}

    with pytest.raises(FrozenInstanceError):
        c.terms[0] = ONE

    with pytest.raises(TypeError):
        hash(c)


def test_parent_mismatch():
    with pytest.raises(AlgebraMismatch):
        clifford().one() + trivial().one()
