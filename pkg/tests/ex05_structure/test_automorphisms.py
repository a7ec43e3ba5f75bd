import pytest

from affwreath.automorphisms import (
    apply_automorphism,
    shift_images,
    shift_parameter,
)
from affwreath.awpa import affine_wreath
from affwreath.catalog import clifford, trivial
from affwreath.exceptions import BadAutomorphismParams
from affwreath.scalars import root_of_unity


@pytest.fixture
def k2():
    return affine_wreath(trivial(), 2)


@pytest.fixture
def cl2():
    return affine_wreath(clifford(), 2)


def _elements(A):
    c = A.frob.basis()[-1]
    s, x1, x2 = A.s(1), A.x(1), A.x(2)
    return [s, x1, x2 * A.slot(c, 1), s * x1 + x2 * x2]


def test_reverse():
    A = affine_wreath(trivial(), 3)
    assert apply_automorphism('reverse', A.x(1)) == A.x(3)
    assert apply_automorphism('reverse', A.s(1)) == -A.s(2)


def test_reverse_is_multiplicative(cl2):
    assert apply_automorphism('reverse', cl2.s(1)) == -cl2.s(1)
    for a in _elements(cl2):
        for b in _elements(cl2):
            assert apply_automorphism('reverse', a * b) == \
                apply_automorphism('reverse', a) * \
                apply_automorphism('reverse', b)


def test_frobenius_induced(cl2):
    c = clifford().basis()[1]
    sign = [[1, 0], [0, -1]]
    image = apply_automorphism('frobenius_induced', cl2.slot(c, 1),
                               matrix=sign)
    assert image == -cl2.slot(c, 1)
    for a in _elements(cl2):
        for b in _elements(cl2):
            assert apply_automorphism('frobenius_induced', a * b,
                                      matrix=sign) == \
                apply_automorphism('frobenius_induced', a, matrix=sign) * \
                apply_automorphism('frobenius_induced', b, matrix=sign)

    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('frobenius_induced', cl2.x(1),
                           matrix=[[1, 0], [0, 2]])


def test_antihom_reverses_products(k2):
    s, x1 = k2.s(1), k2.x(1)
    anti = [[1]]
    assert apply_automorphism('antihom', s * x1, matrix=anti) == x1 * s
    for a in _elements(k2):
        for b in _elements(k2):
            assert apply_automorphism('antihom', a * b, matrix=anti) == \
                apply_automorphism('antihom', b, matrix=anti) * \
                apply_automorphism('antihom', a, matrix=anti)


def test_clifford_antihom(cl2):
    i = root_of_unity(4)
    c = clifford().basis()[1]
    image = apply_automorphism('antihom', cl2.slot(c, 1),
                               matrix=[[1, 0], [0, i]])
    assert image == cl2.slot(c, 1).scale(i)

    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('antihom', cl2.x(1), matrix=[[1, 0], [0, -1]])


def test_trace_change(k2):
    image = apply_automorphism('trace_change', k2.x(1) * k2.x(2), u=[2])
    B = image.parent
    assert B is not k2
    assert B.frob.trace_vec[0] == 2
    assert image == (B.x(1) * B.x(2)).scale(4)

    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('trace_change', k2.x(1), u=[0])


def test_shift(k2):
    lam = trivial().one().scale(3)
    image = apply_automorphism('shift', k2.x(2), c=lam)
    assert image == k2.x(2) + k2.one().scale(3)
    for a in _elements(k2):
        for b in _elements(k2):
            assert apply_automorphism('shift', a * b, c=lam) == \
                apply_automorphism('shift', a, c=lam) * \
                apply_automorphism('shift', b, c=lam)
    assert len(shift_images(k2, shift_parameter(k2, lam))) == 2


def test_clifford_scalar_shift_is_rejected(cl2):
    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('shift', cl2.x(1), c=clifford().one())


def test_unknown_kind_and_parameters(k2):
    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('conjugate', k2.x(1))

    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('frobenius_induced', k2.x(1))

    with pytest.raises(BadAutomorphismParams):
        apply_automorphism('reverse', k2.x(1), matrix=[[1]])
