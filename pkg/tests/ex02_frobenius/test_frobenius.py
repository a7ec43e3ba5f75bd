import pytest

from affwreath.catalog import (
    builtin,
    clifford,
    cyclic_group,
    dual_numbers,
    symmetric_group,
    taft,
    trivial,
)
from affwreath.exceptions import (
    BadParams,
    DegenerateTrace,
    GradingViolation,
    NoUnit,
    NotAssociative,
    SpecError,
)
from affwreath.frobenius import (
    alg_mul,
    change_basis,
    check_double_dual,
    check_frobenius_morphism,
    dual_basis,
    graded_piece,
    in_span,
    make_algebra,
    opposite,
    retrace,
)
from affwreath.scalars import root_of_unity


def test_trivial():
    F = trivial()
    assert F.dim == 1
    assert F.theta == 1
    assert F.delta == 0
    assert F.is_symmetric()
    assert [str(d) for d in dual_basis(F)] == ["1"]


def test_clifford():
    F = clifford()
    one, c = F.basis()
    assert F.theta == 2
    assert F.conductor == 2
    assert c.psi() == -c
    assert one.psi() == one
    assert alg_mul(F, c, c) == one
    assert c.parity() == 1
    assert [str(d) for d in dual_basis(F)] == ["1", "c"]
    assert check_double_dual(F)


def test_dual_numbers():
    F = dual_numbers()
    one, z = F.basis()
    assert F.delta == 2
    assert F.degrees == (0, 2)
    assert F.theta == 1
    assert z * z == 0
    assert z.trace() == 1
    assert one.trace() == 0
    assert [str(d) for d in dual_basis(F)] == ["z", "1"]
    for b, d in zip(F.basis(), dual_basis(F)):
        assert (d * b).trace() == 1


def test_cyclic_group_is_symmetric():
    F = builtin("cyclic_group", m=2)
    assert F.dim == 2
    assert F.theta == 1
    assert all(b.psi() == b for b in F.basis())
    assert cyclic_group(3).basis()[1] ** 3 == 1


def test_symmetric_group_algebra():
    F = symmetric_group(3)
    assert F.dim == 6
    assert F.labels[0] == "e"
    assert F.theta == 1
    a = F.basis_element(F.index_of("a"))
    assert a * a == 1


def test_taft():
    F = taft(3)
    w = root_of_unity(3)
    g = F.basis_element(F.index_of("g"))
    y = F.basis_element(F.index_of("y"))
    assert F.theta == 3
    assert F.conductor == 3
    assert y * g == (g * y).scale(w)
    assert g.psi() == g.scale(w)
    assert y.psi() == y
    assert g ** 3 == 1
    assert y ** 3 == 0
    assert check_double_dual(F)


def test_taft_graded_piece_contains_y_powers():
    F = taft(3, degree=1)
    y2 = F.basis_element(F.index_of("y^2"))
    assert in_span(F, graded_piece(F, 1 - 3, fixed_only=True), y2)


def test_graded_pieces_of_clifford():
    F = clifford()
    one, c = F.basis()
    even = graded_piece(F, 2, fixed_only=True)
    assert len(even) == 1
    assert in_span(F, even, one)
    assert graded_piece(F, 1, fixed_only=True) == []
    assert in_span(F, graded_piece(F, 1), c)


def test_graded_pieces_of_trivial():
    F = trivial()
    for k in range(4):
        assert in_span(F, graded_piece(F, k, fixed_only=True), F.one())


def test_frobenius_morphisms():
    F = clifford()
    verdict = check_frobenius_morphism(F, F, [[1, 0], [0, 1]])
    assert verdict.valid
    assert verdict.nakayama_compatible

    sign = check_frobenius_morphism(F, F, [[1, 0], [0, -1]])
    assert sign.valid

    anti = check_frobenius_morphism(F, F, [[1, 0], [0, -1]], anti=True)
    assert not anti.valid
    assert not anti.multiplicative

    i = root_of_unity(4)
    anti = check_frobenius_morphism(F, F, [[1, 0], [0, i]], anti=True)
    assert anti.valid
    assert anti.nakayama_compatible
    assert anti.dual_identity


def test_morphism_must_preserve_trace():
    F = dual_numbers()
    verdict = check_frobenius_morphism(F, F, [[1, 0], [0, 2]])
    assert verdict.multiplicative
    assert not verdict.trace_preserving
    assert not verdict.valid
    assert "trace is not preserved" in verdict.failures


def test_opposite_and_changes():
    F = clifford()
    op = opposite(F)
    assert [list(r) for r in op.nakayama] == \
        [list(r) for r in F.nakayama_inverse]

    G = change_basis(F, [[1, 0], [0, 2]], labels=["1", "d"])
    d = G.basis_element(1)
    assert d * d == 4

    H = retrace(cyclic_group(2), cyclic_group(2).element([1, 0]))
    assert H.theta == 1

    with pytest.raises(BadParams):
        retrace(F, F.element([0, 1]))


def test_validation_errors():
    with pytest.raises(DegenerateTrace):
        make_algebra("k", ["1"], [0], [0], [[[1]]], [0])

    with pytest.raises(NoUnit):
        make_algebra("zero", ["a"], [0], [0], [[[0]]], [1])

    with pytest.raises(GradingViolation):
        make_algebra("Cl", ["1", "c"], [0, 0], [0, 1],
                     clifford().struct_consts, [0, 1])

    with pytest.raises(SpecError):
        make_algebra("k", ["1", "1"], [0, 0], [0, 0],
                     [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [1, 0])

    # (a*a)*a = b*a = b but a*(a*a) = a*b = 0
    cube = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for j in range(3):
        cube[0][j][j] = 1
        cube[j][0][j] = 1
    cube[1][1][2] = 1
    cube[2][1][2] = 1
    with pytest.raises(NotAssociative):
        make_algebra("bad", ["1", "a", "b"], [0, 0, 0], [0, 0, 0], cube,
                     [0, 0, 1], unit=[1, 0, 0])


def test_builtin_errors():
    with pytest.raises(BadParams):
        builtin("zigzag")

    with pytest.raises(BadParams):
        builtin("taft", q=1)

    with pytest.raises(BadParams):
        builtin("cyclic_group", order=2)
