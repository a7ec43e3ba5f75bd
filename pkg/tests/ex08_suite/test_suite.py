import random

import pytest

from affwreath.awpa import affine_wreath
from affwreath.catalog import clifford, cyclic_group, trivial
from affwreath.exceptions import BadParams, TooLarge
from affwreath.settings import Settings, set_settings
from affwreath.suite import (
    CHECKS,
    CheckResult,
    SuiteContext,
    SuiteReport,
    _expect,
    default_params,
    random_element,
    run_check,
    run_suite,
)


@pytest.fixture
def restore_settings():
    yield
    set_settings(None)


def test_full_suite_on_trivial():
    report = run_suite(trivial(), 2, seed=7, instances=3)
    assert report.passed
    assert report.first_failure is None
    assert [r.name for r in report.results] == [name for name, _ in CHECKS]
    lines = report.lines()
    assert lines[0] == "suite k n=2 seed=7"
    assert lines[1] == "PASS frobenius (3 instances)"


def test_suite_on_clifford():
    report = run_suite(clifford(), 2, seed=7, instances=2,
                       only=("relations", "oracle", "center",
                             "cyclotomic_frobenius"))
    assert report.passed
    assert [r.name for r in report.results] == \
        ["relations", "oracle", "center", "cyclotomic_frobenius"]


def test_suite_is_deterministic():
    first = run_suite(cyclic_group(2), 2, seed=11, instances=2)
    second = run_suite(cyclic_group(2), 2, seed=11, instances=2)
    assert first.lines() == second.lines()
    assert first.passed


def test_checks_do_not_share_random_state():
    alone = run_suite(trivial(), 2, seed=3, instances=2, only=("oracle",))
    together = run_suite(trivial(), 2, seed=3, instances=2,
                         only=("associativity", "oracle"))
    assert str(alone.results[0]) == str(together.results[1])


def test_check_outcomes():
    ctx = SuiteContext(affine_wreath(trivial(), 2))

    def failing(ctx, rng, instances):
        _expect(False, "boom")

    def too_large(ctx, rng, instances):
        raise TooLarge("too big")

    def broken(ctx, rng, instances):
        raise BadParams("nope")

    result = run_check("custom", failing, ctx, 0, 1)
    assert not result.passed
    assert str(result) == "FAIL custom: boom"

    result = run_check("custom", too_large, ctx, 0, 1)
    assert result.passed
    assert str(result) == "SKIP custom: too big"

    result = run_check("custom", broken, ctx, 0, 1)
    assert not result.passed
    assert result.counterexample == "BadParams: nope"


def test_first_failure_is_reported():
    results = (CheckResult("a", True, 1), CheckResult("b", False, 1, "x"),
               CheckResult("c", False, 1, "y"))
    report = SuiteReport("k", 1, 0, results)
    assert not report.passed
    assert report.first_failure.name == "b"


def test_default_params(restore_settings):
    assert default_params(clifford(), 2).level == 2
    set_settings(Settings(max_dim=100))
    assert default_params(clifford(), 2).level == 1


def test_default_params_are_drawn_from_the_seed():
    first = default_params(trivial(), 2, random.Random("5:params"))
    second = default_params(trivial(), 2, random.Random("5:params"))
    assert first.level == 2
    assert first.entries == second.entries

    draws = [default_params(trivial(), 1, random.Random(seed))
             for seed in range(20)]
    assert any(c for p in draws for _, cs in p.entries for c in cs)

    # no even psi-fixed elements of F^(1) in Cl besides zero
    params = default_params(clifford(), 2, random.Random(1))
    assert not any(c for _, cs in params.entries for c in cs)


def test_random_elements_are_seeded():
    A = affine_wreath(clifford(), 2)
    a = random_element(A, random.Random("1:x"))
    b = random_element(A, random.Random("1:x"))
    assert a == b
    assert random_element(A, random.Random(0), polynomial=True) \
        .is_polynomial()
