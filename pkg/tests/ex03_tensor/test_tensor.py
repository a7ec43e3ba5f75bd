import pytest

from affwreath.catalog import clifford, cyclic_group, trivial
from affwreath.exceptions import SizeMismatch, SlotIndexError
from affwreath.perms import from_word, simple
from affwreath.tensor import (
    first_slot_space_contains,
    superpermute,
    tensor_space,
    wreath_algebra,
    wreath_mul,
)


@pytest.fixture
def cl2():
    return tensor_space(clifford(), 2)


def test_superpermute_signs(cl2):
    one, c = clifford().basis()
    cc = cl2.tensor(c, c)
    assert superpermute(simple(2, 1), cc) == -cc
    assert superpermute(simple(2, 1), cl2.tensor(one, c)) == \
        cl2.tensor(c, one)


def test_superpermute_composes():
    F = cyclic_group(3)
    one, g, g2 = F.basis()
    space = tensor_space(F, 3)
    t = space.tensor(g, one, g2)
    p = from_word(3, [1, 2])
    stepwise = superpermute(simple(3, 1), superpermute(simple(3, 2), t))
    assert superpermute(p, t) == stepwise
    assert superpermute(p, t) == space.tensor(g2, g, one)


def test_koszul_signs_in_products(cl2):
    c = clifford().basis()[1]
    c1, c2 = cl2.slot(c, 1), cl2.slot(c, 2)
    assert c1 * c2 == cl2.tensor(c, c)
    assert c2 * c1 == -cl2.tensor(c, c)
    assert str(c1 * c2) == "b(c,c)"
    assert (c1 * c2).parity() == 0
    assert c1.parity() == 1


def test_tensor_trace():
    one, c = clifford().basis()
    space = tensor_space(clifford(), 2)
    assert space.tensor(one, one).trace() == 1
    assert space.tensor(c, one).trace() == 0


def test_slot_errors(cl2):
    with pytest.raises(SlotIndexError):
        cl2.slot(clifford().one(), 3)

    with pytest.raises(SizeMismatch):
        cl2.tensor(clifford().one())

    with pytest.raises(SizeMismatch):
        superpermute(simple(3, 1), cl2.one())


def test_wreath_product():
    one, c = clifford().basis()
    W = wreath_algebra(clifford(), 2)
    s = W.simple(1)
    f1 = W.from_tensor(W.space.slot(c, 1))
    f2 = W.from_tensor(W.space.slot(c, 2))
    assert s * s == W.one()
    assert s * f1 == f2 * s
    assert str(s) == "s[2,1]"

    a = f1 + s
    b = f2 * s + W.one()
    d = s * f1 * f2
    assert wreath_mul(wreath_mul(a, b), d) == wreath_mul(a, wreath_mul(b, d))

    with pytest.raises(SizeMismatch):
        wreath_mul(s, wreath_algebra(clifford(), 3).one())


def test_first_slot_space():
    F = trivial()
    space = tensor_space(F, 3)
    assert first_slot_space_contains(F, 3, space.one(), 1)

    C = clifford()
    one, c = C.basis()
    cl3 = tensor_space(C, 3)
    assert first_slot_space_contains(C, 3, cl3.one(), 2)
    assert not first_slot_space_contains(C, 3, cl3.one(), 1)
    assert not first_slot_space_contains(C, 3, cl3.tensor(one, c, c), 2)
