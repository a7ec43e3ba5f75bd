import pytest

from affwreath.awpa import affine_wreath, t_element
from affwreath.catalog import builtin
from affwreath.oracle import oracle_product
from affwreath.perms import simple
from affwreath.tensor import superpermute

TWISTED = [("taft", {"q": 2}), ("taft", {"q": 3}),
           ("symmetric_group", {"n": 3})]


@pytest.fixture(params=TWISTED, ids=["T2", "T3", "kS3"])
def A(request):
    name, params = request.param
    return affine_wreath(builtin(name, **params), 2)


def test_taft_nakayama_is_not_the_identity():
    for q in (2, 3):
        F = builtin("taft", q=q)
        assert F.theta == q
        assert any(b.psi() != b for b in F.basis())


def test_slot_elements_twist_by_psi(A):
    for b in A.frob.basis():
        for i in (1, 2):
            for j in (1, 2):
                twisted = b.psi() if i == j else b
                assert A.slot(b, j) * A.x(i) == A.x(i) * A.slot(twisted, j)


def test_simple_reflection_relations(A):
    s, x1, x2 = A.s(1), A.x(1), A.x(2)
    assert s * s == A.one()
    assert s * x1 == x2 * s - t_element(A, 1, 2)
    assert s * x2 == x1 * s + t_element(A, 2, 1)
    assert s * t_element(A, 1, 2) * s == t_element(A, 2, 1)
    for k in (2, 3):
        assert s * A.x(1, k) == A.x(2, k) * s - t_element(A, 1, 2, k)


def test_tensors_move_past_s(A):
    basis = A.frob.basis()
    for f in basis[:3]:
        for g in basis[-3:]:
            t = A.space.tensor(f, g)
            moved = superpermute(simple(2, 1), t)
            assert A.s(1) * A.word(t) == A.word(moved) * A.s(1)


def test_engine_agrees_with_module(A):
    f, g = A.frob.basis()[1], A.frob.basis()[-1]
    left = [A.s(1), A.slot(f, 1) * A.s(1), A.x(2) * A.slot(g, 2)]
    right = [A.x(1) * A.slot(g, 1), A.s(1) * A.x(1, 2),
             A.slot(f, 2) * A.x(2)]
    for a in left:
        for b in right:
            assert oracle_product(a, b) == a * b


def test_associativity(A):
    f = A.frob.basis()[1]
    elements = [A.s(1) * A.x(1), A.slot(f, 2) * A.x(2), A.x(1, 2) * A.s(1)]
    for a in elements:
        for b in elements:
            for c in elements:
                assert (a * b) * c == a * (b * c)
