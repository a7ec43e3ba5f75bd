import pytest

from affwreath import cyclotomic
from affwreath.awpa import affine_wreath
from affwreath.catalog import clifford, dual_numbers, trivial
from affwreath.cyclotomic import (
    GramReport,
    check_chi_conjugation,
    chi,
    closure_rank,
    cyclo_mul,
    cyclo_nakayama_check,
    cyclo_trace,
    cyclotomic_mackey_identity,
    cyclotomic_quotient,
    embed,
    gram_matrix,
    induction_basis,
    level_one_report,
    make_params,
    partial_trace,
    partial_trace_via_duals,
    reduce,
    shift_compatibility,
)
from affwreath.exceptions import (
    BadParams,
    DegenerateGram,
    LevelZero,
    NotPsiFixed,
    OddParity,
    ParamsMismatch,
    TooLarge,
    WrongDegree,
)
from affwreath.settings import Settings, set_settings
from affwreath.tensor import tensor_space


@pytest.fixture
def zero_params():
    """Level one over k with chi = x_1."""
    return make_params(trivial(), {1: [trivial().zero()]})


@pytest.fixture
def pm_params():
    """Level two over k with chi = (x_1 - 1)(x_1 + 1)."""
    one = trivial().one()
    return make_params(trivial(), {1: [one, -one]})


@pytest.fixture
def cl_params():
    """Level two over Cl with chi = x_1^2 - 1."""
    return make_params(clifford(), {2: [clifford().one()]})


@pytest.fixture
def small_dims():
    yield
    set_settings(None)


def test_level_one_rules(zero_params):
    Q = cyclotomic_quotient(zero_params, 2)
    A = Q.algebra
    assert Q.level == 1
    assert chi(zero_params, 2, 2) == A.x(2) - A.s(1)
    assert Q.reduce(A.x(1)) == 0
    assert Q.reduce(A.x(2)) == Q.reduce(A.s(1))
    assert reduce(zero_params, A.x(2) * A.x(2)) == Q.one()


def test_level_two_rules(pm_params):
    Q = cyclotomic_quotient(pm_params, 2)
    A = Q.algebra
    assert Q.level == 2
    assert pm_params.e == (2,)
    assert Q.reduce(A.x(1, 2)) == Q.one()
    assert Q.reduce(A.x(1, 3)) == Q.reduce(A.x(1))
    assert Q.dimension == 8
    assert len(Q.basis()) == 8
    assert check_chi_conjugation(pm_params, 3)


def test_products_and_traces(pm_params):
    Q = cyclotomic_quotient(pm_params, 2)
    A = Q.algebra
    x1, x2, s = (Q.reduce(A.x(1)), Q.reduce(A.x(2)), Q.reduce(A.s(1)))
    assert x1 * x1 == Q.one()
    assert cyclo_mul(s, s) == Q.one()
    assert cyclo_trace(x1 * x2) == 1
    assert cyclo_trace(Q.one()) == 0
    assert cyclo_trace(x1 * x2 * s) == 0
    assert Q.lift(x1 * x2) == A.x(1) * A.x(2)

    with pytest.raises(ParamsMismatch):
        cyclo_mul(x1, cyclotomic_quotient(pm_params, 3).one())


def test_clifford_parameters():
    F = clifford()
    one, c = F.basis()
    assert make_params(F, {2: [one.scale(5)]}).level == 2

    with pytest.raises(NotPsiFixed):
        make_params(F, {1: [one]})

    with pytest.raises(OddParity):
        make_params(F, {2: [c]})

    with pytest.raises(BadParams):
        make_params(F, {3: [one]})


def test_parameter_errors():
    F = dual_numbers()
    one, z = F.basis()
    assert make_params(F, {1: [z]}).level == 1

    with pytest.raises(WrongDegree):
        make_params(F, {1: [one]})

    with pytest.raises(LevelZero):
        make_params(F, {1: []})

    with pytest.raises(BadParams):
        make_params(F, {1: [clifford().one()]})

    with pytest.raises(BadParams):
        make_params(F, {1: [z]}, general=True)


def test_general_parameters():
    F = trivial()
    c = tensor_space(F, 2).one().scale(2)
    params = make_params(F, {1: [c]}, general=True, n=2)
    Q = cyclotomic_quotient(params, 2)
    assert Q.reduce(Q.algebra.x(1)) == Q.one().scale(2)

    with pytest.raises(ParamsMismatch):
        cyclotomic_quotient(params, 3)

    with pytest.raises(ParamsMismatch):
        partial_trace(Q.one())


def test_gram_matrix(cl_params):
    report = gram_matrix(cl_params, 1)
    assert report.size == 4
    assert report.invertible
    assert cyclotomic_quotient(cl_params, 2).dimension == 32


def test_nakayama(cl_params, pm_params):
    verdict = cyclo_nakayama_check(cl_params, 1, pairs=20, seed=3)
    assert verdict.holds
    assert verdict.symmetric
    assert verdict.counterexample is None
    assert verdict.images["c_1"] == "b(c)"

    assert cyclo_nakayama_check(pm_params, 2, pairs=20).holds


def test_dual_number_quotient():
    z = dual_numbers().basis()[1]
    params = make_params(dual_numbers(), {1: [z]})
    Q = cyclotomic_quotient(params, 1)
    assert Q.reduce(Q.algebra.x(1)) == Q.reduce(Q.algebra.slot(z, 1))
    assert gram_matrix(params, 1).invertible


def test_embedding_and_partial_trace(pm_params):
    small = cyclotomic_quotient(pm_params, 1)
    big = cyclotomic_quotient(pm_params, 2)
    A = big.algebra
    x1 = small.reduce(small.algebra.x(1))
    assert embed(small, big, x1) == big.reduce(A.x(1))
    assert partial_trace(big.reduce(A.x(2))) == small.one()
    assert partial_trace(big.one()) == 0
    assert partial_trace(big.reduce(A.x(1) * A.x(2))) == x1

    for z in [big.reduce(A.x(2)), big.reduce(A.x(1) * A.x(2)),
              big.reduce(A.s(1) * A.x(2)), big.one()]:
        assert partial_trace_via_duals(z) == partial_trace(z)

    with pytest.raises(ParamsMismatch):
        embed(big, small, big.one())


def test_induction_and_mackey(pm_params):
    report = induction_basis(pm_params, 1)
    assert report.free
    assert len(report.elements) == 4
    assert cyclotomic_mackey_identity(pm_params, 2)
    assert closure_rank(cyclotomic_quotient(pm_params, 2)) == 8


def test_level_one_comparison(zero_params):
    Q = cyclotomic_quotient(zero_params, 2)
    assert level_one_report(Q).ok

    three = make_params(trivial(), {1: [trivial().one().scale(3)]})
    Q3 = cyclotomic_quotient(three, 2)
    A = Q3.algebra
    assert level_one_report(Q3, samples=[A.x(2) * A.s(1)]).ok
    assert shift_compatibility(Q3, A.s(1) * A.x(1) * A.x(2))


def test_level_one_comparison_needs_level_one(pm_params):
    with pytest.raises(BadParams):
        level_one_report(cyclotomic_quotient(pm_params, 1))


def test_reduce_checks_the_algebra(pm_params):
    Q = cyclotomic_quotient(pm_params, 2)
    with pytest.raises(ParamsMismatch):
        Q.reduce(affine_wreath(trivial(), 3).x(1))


def test_size_bound(pm_params, small_dims):
    set_settings(Settings(max_dim=10))
    with pytest.raises(TooLarge):
        gram_matrix(pm_params, 2)

    with pytest.raises(TooLarge):
        induction_basis(pm_params, 1)


def test_degenerate_trace_form_is_reported(cl_params):
    report = gram_matrix(cl_params, 1)
    flat = GramReport(keys=report.keys, matrix=report.matrix,
                      size=report.size, rank=report.size - 1)
    with pytest.raises(DegenerateGram):
        cyclo_nakayama_check(cl_params, 1, gram=flat)


def test_non_symmetric_quotient():
    F = clifford()
    params = make_params(F, {1: [F.zero()]})
    verdict = cyclo_nakayama_check(params, 1, pairs=20)
    assert verdict.holds
    assert verdict.symmetric is False
    assert verdict.images["c_1"] == "-b(c)"

    Q = cyclotomic_quotient(params, 1)
    c = Q.reduce(Q.algebra.slot(F.basis()[1], 1))
    assert cyclo_trace(c * c) == 1
    assert cyclo_trace(c * c) != -cyclo_trace(c * c)


def test_dimension_identities_use_spanned_ranks(pm_params, zero_params,
                                                monkeypatch):
    Q = cyclotomic_quotient(zero_params, 2)
    assert cyclotomic_mackey_identity(pm_params, 1)
    assert level_one_report(Q).dimension_ok

    monkeypatch.setattr(cyclotomic, "closure_rank",
                        lambda Q: Q.dimension - 1)
    assert not cyclotomic_mackey_identity(pm_params, 1)
    assert not level_one_report(Q).dimension_ok
