# -*- coding: utf-8 -*-
"""
The seeded property suite.

Every check draws its random instances from its own ``random.Random``
seeded with ``(seed, check name)``, so the report is the same whichever
checks run and in whatever order. A check returns the first counterexample
it meets as text.
"""
import logging
import random
from math import factorial

from attr import attrib

from .automorphisms import apply_automorphism, shift_parameter
from .awpa import affine_wreath, divided_difference, t_element
from .cyclotomic import (
    CycloElem,
    check_chi_conjugation,
    closure_rank,
    cyclo_nakayama_check,
    cyclo_trace,
    cyclotomic_mackey_identity,
    cyclotomic_quotient,
    embed,
    gram_matrix,
    level_one_report,
    make_params,
    partial_trace,
)
from .decorators import immutable
from .exceptions import AffWreathError, BadAutomorphismParams, TooLarge
from .frobenius import check_double_dual, graded_piece, opposite
from .oracle import oracle_product
from .perms import all_perms, compositions, simple
from .scalars import CycScalar, root_of_unity
from .settings import get_settings
from .structure import (
    elementary_symmetric,
    evaluation_hom,
    graded_dimension,
    intertwiner,
    is_central,
    mackey_dimension_report,
)
from .tensor import superpermute
from .types import accumulate

log = logging.getLogger(__name__)


# random elements


def random_scalar(rng, conductor=1):
    """A small nonzero integer, now and then times a root of unity."""
    value = CycScalar.rational(rng.choice([-2, -1, 1, 1, 2, 3]))
    if conductor > 1 and rng.random() < 0.3:
        value = value * root_of_unity(conductor, rng.randrange(conductor))
    return value


def random_alg_elem(F, rng, terms=2, parity=None):
    indices = [b for b in range(F.dim)
               if parity is None or F.parities[b] == parity]
    out = {}
    for b in rng.sample(indices, min(terms, len(indices))):
        accumulate(out, b, random_scalar(rng, F.conductor))
    return F.element(out)


def random_word(A, rng):
    return tuple(rng.randrange(A.frob.dim) for _ in range(A.n))


def random_tensor(A, rng, terms=2):
    out = {}
    for _ in range(terms):
        accumulate(out, random_word(A, rng),
                   random_scalar(rng, A.frob.conductor))
    return A.space.element(out)


def random_element(A, rng, terms=2, max_power=1, polynomial=False):
    """A few normal-form monomials with small exponents."""
    perms = all_perms(A.n)
    out = {}
    for _ in range(terms):
        alpha = tuple(rng.randint(0, max_power) for _ in range(A.n))
        p = A.identity if polynomial else rng.choice(perms)
        accumulate(out, (alpha, random_word(A, rng), p),
                   random_scalar(rng, A.frob.conductor))
    return A.zero()._new(out)


def random_cyclo(Q, rng, terms=2):
    keys = Q.basis_keys()
    out = {}
    for key in rng.sample(keys, min(terms, len(keys))):
        accumulate(out, key, random_scalar(rng, Q.frob.conductor))
    return CycloElem(Q, out)


# reports


@immutable
class CheckResult(object):
    name = attrib()
    passed = attrib()
    instances = attrib()
    counterexample = attrib(default=None)
    skipped = attrib(default=None)

    def __str__(self):
        if self.skipped:
            return "SKIP {}: {}".format(self.name, self.skipped)
        if self.passed:
            return "PASS {} ({} instances)".format(self.name, self.instances)
        return "FAIL {}: {}".format(self.name, self.counterexample)


@immutable
class SuiteReport(object):
    algebra = attrib()
    n = attrib()
    seed = attrib()
    results = attrib()

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def first_failure(self):
        return next((r for r in self.results if not r.passed), None)

    def lines(self):
        head = "suite {} n={} seed={}".format(self.algebra, self.n, self.seed)
        return [head] + [str(r) for r in self.results]


class _Failed(Exception):

    def __init__(self, description):
        super(_Failed, self).__init__(description)
        self.description = description


def _expect(condition, description):
    if not condition:
        raise _Failed(description)


# checks; each takes (context, rng, instances) and returns instance count


class SuiteContext(object):

    def __init__(self, algebra, params=None):
        self.algebra = algebra
        self.params = params

    @property
    def frob(self):
        return self.algebra.frob

    @property
    def n(self):
        return self.algebra.n


def check_frobenius(ctx, rng, instances):
    F = ctx.frob
    _expect(check_double_dual(F), "double dual of {}".format(F.name))
    op = opposite(F)
    _expect([list(r) for r in op.nakayama] ==
            [list(r) for r in F.nakayama_inverse],
            "Nakayama automorphism of {}^op is not psi^-1".format(F.name))
    for _ in range(instances):
        pf, pg = rng.randint(0, 1), rng.randint(0, 1)
        f = random_alg_elem(F, rng, parity=pf)
        g = random_alg_elem(F, rng, parity=pg)
        rhs = (g * f.psi()).trace() * (-1 if pf * pg else 1)
        _expect((f * g).trace() == rhs,
                "tr(fg) for f = {}, g = {}".format(f, g))
    return instances


def check_relations(ctx, rng, instances):
    """The defining relations, with random slot elements."""
    A = ctx.algebra
    n = A.n
    for i in range(1, n):
        s = A.s(i)
        _expect(s * s == A.one(), "s{}^2".format(i))
        _expect(s * A.x(i) == A.x(i + 1) * s - t_element(A, i, i + 1),
                "s{0} x{0}".format(i))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                _expect(s * A.x(j) == A.x(j) * s, "s{} x{}".format(i, j))
        if i + 1 < n:
            t = A.s(i + 1)
            _expect(s * t * s == t * s * t, "braid s{} s{}".format(i, i + 1))
        for j in range(i + 2, n):
            _expect(s * A.s(j) == A.s(j) * s, "s{} s{}".format(i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            _expect(A.x(i) * A.x(j) == A.x(j) * A.x(i),
                    "x{} x{}".format(i, j))
    for _ in range(instances):
        f = random_alg_elem(A.frob, rng)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = A.slot(f, j) * A.x(i)
                rhs = A.x(i) * A.slot(f.psi() if i == j else f, j)
                _expect(lhs == rhs, "{}_{} x{}".format(f, j, i))
        t = random_tensor(A, rng)
        for i in range(1, n):
            moved = superpermute(simple(n, i), t)
            _expect(A.s(i) * A.word(t) == A.word(moved) * A.s(i),
                    "s{} {}".format(i, t))
    return instances


def check_derived_relations(ctx, rng, instances):
    """Higher powers, t conjugation and the divided differences."""
    A = ctx.algebra
    n = A.n
    F = A.frob
    for i in range(1, n):
        s = A.s(i)
        for k in range(1, 4):
            _expect(s * A.x(i, k) ==
                    A.x(i + 1, k) * s - t_element(A, i, i + 1, k),
                    "s{0} x{0}^{1}".format(i, k))
            _expect(s * A.x(i + 1, k) ==
                    A.x(i, k) * s + t_element(A, i + 1, i, k),
                    "s{0} x{1}^{2}".format(i, i + 1, k))
        _expect(s * t_element(A, i, i + 1) * s == t_element(A, i + 1, i),
                "s{0} t_{0},{1} s{0}".format(i, i + 1))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            t = t_element(A, i, j)
            _expect(t.parity() in (0, None) and all(
                A.key_degree(key) == F.delta for key in t.terms),
                "t_{},{} is not even of degree delta".format(i, j))
    for _ in range(instances if n > 1 else 0):
        a = random_element(A, rng, max_power=2, polynomial=True)
        for i in range(1, n):
            leibniz = divided_difference(A, i, a)
            closed = A.from_poly(A.delta_terms(i, a.poly_terms()))
            _expect(leibniz == closed, "D_{}({})".format(i, a))
            _expect(not divided_difference(A, i, leibniz),
                    "D_{0}(D_{0}({1}))".format(i, a))
    return instances


def check_oracle(ctx, rng, instances):
    A = ctx.algebra
    for _ in range(instances):
        a = random_element(A, rng)
        b = random_element(A, rng)
        _expect(a * b == oracle_product(a, b),
                "ab against the module action for a = {}, b = {}".format(a, b))
    return instances


def check_associativity(ctx, rng, instances):
    A = ctx.algebra
    for _ in range(instances):
        a, b, c = (random_element(A, rng) for _ in range(3))
        _expect((a * b) * c == a * (b * c),
                "(ab)c for a = {}, b = {}, c = {}".format(a, b, c))
    return instances


def check_evaluation(ctx, rng, instances):
    A = ctx.algebra
    W = A.wreath
    for _ in range(instances):
        a = random_element(A, rng)
        b = random_element(A, rng)
        _expect(evaluation_hom(a * b) == evaluation_hom(a) * evaluation_hom(b),
                "ev(ab) for a = {}, b = {}".format(a, b))
        w = random_element(A, rng, max_power=0)
        image = evaluation_hom(w)
        _expect(dict(image.terms) == {(word, p): c for (_, word, p), c
                                      in w.terms.items()}
                and image.parent is W,
                "ev is not the identity on {}".format(w))
    return instances


def check_center(ctx, rng, instances):
    A = ctx.algebra
    for k in range(1, A.n + 1):
        z = elementary_symmetric(A, k)
        verdict = is_central(z)
        _expect(verdict.central, "e_{}(x^theta) fails against {}".format(
            k, ", ".join(verdict.failing)))
        _expect(verdict.structural,
                "e_{}(x^theta) fails the structural test".format(k))
    return A.n


def check_intertwiners(ctx, rng, instances):
    A = ctx.algebra
    n = A.n
    theta = A.frob.theta
    omegas = {i: intertwiner(A, i) for i in range(1, n)}
    for i, om in omegas.items():
        t = t_element(A, i, i + 1, theta)
        diff = A.x(i, theta) - A.x(i + 1, theta)
        _expect(om * om == t * t - diff * diff, "Omega_{}^2".format(i))
        for j in range(1, n + 1):
            k = i + 1 if j == i else (i if j == i + 1 else j)
            _expect(om * A.x(j) == A.x(k) * om,
                    "Omega_{} x{}".format(i, j))
        for j in range(i + 2, n):
            _expect(om * omegas[j] == omegas[j] * om,
                    "Omega_{} Omega_{}".format(i, j))
    for _ in range(instances if n > 1 else 0):
        f = random_tensor(A, rng)
        for i, om in omegas.items():
            moved = superpermute(simple(n, i), f)
            _expect(om * A.word(f) == A.word(moved) * om,
                    "Omega_{} {}".format(i, f))
    return instances


def check_automorphisms(ctx, rng, instances):
    A = ctx.algebra
    try:
        scalar = A.frob.one().scale(rng.choice([1, 2, -1]))
        shift = shift_parameter(A, scalar)
    except BadAutomorphismParams:
        shift = None
    for _ in range(instances):
        a = random_element(A, rng)
        b = random_element(A, rng)
        once = apply_automorphism('reverse', a)
        _expect(apply_automorphism('reverse', once) == a,
                "reverse twice on {}".format(a))
        _expect(apply_automorphism('reverse', a * b) ==
                once * apply_automorphism('reverse', b),
                "reverse(ab) for a = {}, b = {}".format(a, b))
        if shift is not None:
            _expect(apply_automorphism('shift', a * b, c=shift) ==
                    apply_automorphism('shift', a, c=shift)
                    * apply_automorphism('shift', b, c=shift),
                    "shift(ab) for a = {}, b = {}".format(a, b))
    return instances


def check_graded_dimension(ctx, rng, instances):
    A = ctx.algebra
    cutoff = 3 * A.frob.delta if A.frob.delta else 3
    report = graded_dimension(A, cutoff)
    _expect(report.matches, "counts {} against {}".format(
        list(report.counts), list(report.expected)))
    return 1


def check_mackey(ctx, rng, instances):
    A = ctx.algebra
    pairs = 0
    for mu in compositions(A.n):
        for nu in compositions(A.n):
            report = mackey_dimension_report(A, mu, nu, 1)
            _expect(report.matches, "Mackey identity for {} and {}".format(
                list(mu), list(nu)))
            pairs += 1
    return pairs


def default_params(F, n, rng=None):
    """
    Level 2 when its Gram matrix fits, else level 1.

    Without ``rng`` the parameters are zero; with it each one is a random
    combination of the even psi-fixed basis of F^(1) in degree delta.
    """
    bound = get_settings().max_dim
    level = 2 if (factorial(n) * (2 * F.dim) ** n) ** 2 <= bound else 1
    pool = [b for b in graded_piece(F, 1, fixed_only=True)
            if b.parity() == 0 and b.degrees() == {F.delta}]

    def draw():
        c = F.zero()
        if rng is not None:
            for b in pool:
                c = c + b.scale(rng.randint(-2, 2))
        return c

    return make_params(F, {1: [draw() for _ in range(level)]})


def check_cyclotomic_basis(ctx, rng, instances):
    Q = cyclotomic_quotient(ctx.params, ctx.n)
    rank = closure_rank(Q)
    _expect(rank == Q.dimension, "closure rank {} against {}".format(
        rank, Q.dimension))
    _expect(check_chi_conjugation(ctx.params, ctx.n),
            "chi_i against conjugation of chi_1")
    try:
        _expect(cyclotomic_mackey_identity(ctx.params, ctx.n),
                "cyclotomic Mackey dimension identity")
    except TooLarge as e:
        log.debug("cyclotomic Mackey identity skipped: %s", e)
    A = ctx.algebra
    for _ in range(instances):
        a = random_element(A, rng, max_power=ctx.params.level)
        b = random_element(A, rng, max_power=ctx.params.level)
        _expect(Q.reduce(a * b) == Q.reduce(a) * Q.reduce(b),
                "reduce(ab) for a = {}, b = {}".format(a, b))
    if ctx.params.level == 1 and not ctx.params.general:
        _expect(level_one_report(Q).ok, "level one comparison")
    return instances


def check_cyclotomic_frobenius(ctx, rng, instances):
    gram = gram_matrix(ctx.params, ctx.n)
    _expect(gram.invertible, "Gram matrix has rank {} of {}".format(
        gram.rank, gram.size))
    verdict = cyclo_nakayama_check(ctx.params, ctx.n, pairs=instances,
                                   seed=rng.randrange(1 << 30), gram=gram)
    _expect(verdict.holds, "Nakayama identity for {}".format(
        verdict.counterexample))
    return instances


def check_partial_trace(ctx, rng, instances):
    if ctx.params.general:
        raise TooLarge("partial traces need first-slot parameters")
    small = cyclotomic_quotient(ctx.params, ctx.n)
    big = cyclotomic_quotient(ctx.params, ctx.n + 1)
    for _ in range(instances):
        z = random_cyclo(big, rng)
        a = random_cyclo(small, rng)
        b = random_cyclo(small, rng)
        lhs = partial_trace(embed(small, big, a) * z * embed(small, big, b))
        _expect(lhs == a * partial_trace(z) * b,
                "bimodule property for z = {}".format(z))
        _expect(cyclo_trace(z) == cyclo_trace(partial_trace(z)),
                "composition of traces for z = {}".format(z))
    return instances


CHECKS = (
    ('frobenius', check_frobenius),
    ('relations', check_relations),
    ('derived_relations', check_derived_relations),
    ('oracle', check_oracle),
    ('associativity', check_associativity),
    ('evaluation', check_evaluation),
    ('center', check_center),
    ('intertwiners', check_intertwiners),
    ('automorphisms', check_automorphisms),
    ('graded_dimension', check_graded_dimension),
    ('mackey', check_mackey),
    ('cyclotomic_basis', check_cyclotomic_basis),
    ('cyclotomic_frobenius', check_cyclotomic_frobenius),
    ('partial_trace', check_partial_trace),
)

CYCLOTOMIC_CHECKS = ('cyclotomic_basis', 'cyclotomic_frobenius',
                     'partial_trace')


def run_check(name, func, ctx, seed, instances):
    rng = random.Random("{}:{}".format(seed, name))
    try:
        count = func(ctx, rng, instances)
    except _Failed as e:
        log.debug("check %s failed: %s", name, e.description)
        return CheckResult(name, False, instances, e.description)
    except TooLarge as e:
        return CheckResult(name, True, 0, skipped=str(e))
    except AffWreathError as e:
        return CheckResult(name, False, instances, "{}: {}".format(
            type(e).__name__, e))
    return CheckResult(name, True, count)


def run_suite(F, n, seed=0, instances=None, params=None, only=None):
    """
    Run the property checks on A_n(F) (and A_n^C(F), with ``params`` or
    the default parameters) in canonical order.
    """
    instances = instances or get_settings().suite_instances
    ctx = SuiteContext(affine_wreath(F, n), params)
    results = []
    for name, func in CHECKS:
        if only and name not in only:
            continue
        if name in CYCLOTOMIC_CHECKS and ctx.params is None:
            try:
                ctx.params = default_params(
                    F, n, random.Random("{}:params".format(seed)))
            except AffWreathError as e:
                results.append(CheckResult(name, False, 0, str(e)))
                continue
        results.append(run_check(name, func, ctx, seed, instances))
        log.debug("%s", results[-1])
    return SuiteReport(algebra=F.name, n=n, seed=seed,
                       results=tuple(results))
