# -*- coding: utf-8 -*-
"""
Structure theory of A_n(F): Jucys-Murphy elements and the evaluation map,
centers and centralizers, intertwiners, leading terms in the associated
graded algebra, graded dimensions and Mackey bookkeeping.
"""
import itertools
import logging
from functools import lru_cache
from math import comb, factorial

from attr import attrib
from sympy import Poly, Symbol, series

from .awpa import AwpaElem, t_element
from .decorators import immutable
from .exceptions import SlotIndexError, ZeroElement
from .linalg import SparseEchelon, nullspace, same_span, sparse_to_dense
from .perms import (
    compose,
    double_coset,
    inverse_of,
    min_double_cosets,
    permute_exponents,
    simple,
    transposition,
    young_order,
)
from .scalars import ONE
from .tensor import (
    WreathElem,
    in_tensor_span,
    permute_terms,
    tensor_space_basis,
)
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


def _sign(exponent):
    return -1 if exponent % 2 else 1


# Jucys-Murphy elements


def jucys_murphy(A, k):
    """J_k = sum_{i<k} t_{i,k} s_{i,k} in F^{(x)n} x| S_n."""
    A.check_slot(k)
    W = A.wreath
    out = {}
    for i in range(1, k):
        s = transposition(A.n, i, k)
        for (alpha, word), c in A.t_poly(i, k, 1).items():
            accumulate(out, (word, s), c)
    return WreathElem(W, out)


def _jm_power(A, alpha):
    cache = A._cache
    key = ('jm_power', alpha)
    if key not in cache:
        W = A.wreath
        value = W.one()
        for k, e in enumerate(alpha, 1):
            if e:
                value = value * jucys_murphy(A, k) ** e
        cache[key] = value
    return cache[key]


def evaluation_hom(a):
    """The surjection A_n(F) -> F^{(x)n} x| S_n sending x_k to J_k."""
    A = a.parent
    W = A.wreath
    out = {}
    for (alpha, word, p), c in a.terms.items():
        tail = {(word, p): ONE}
        for key, d in W.mul_terms(_jm_power(A, alpha).terms, tail).items():
            accumulate(out, key, c * d)
    return WreathElem(W, out)


# centers and centralizers


def supercommutator(z, g):
    """[z, g] = z g - (-1)^{|z||g|} g z, split over the parity of z."""
    total = z.zero(z.parent)
    g_parity = g.parity() or 0
    for parity in (0, 1):
        part = z.filter(lambda key: z.parent.key_parity(key) == parity)
        if part:
            total = total + part * g - (g * part).scale(
                _sign(parity * g_parity))
    return total


def _generator_names(A):
    names = ["x1"] if A.n else []
    for i in range(1, A.n + 1):
        names.extend("{}_{}".format(label, i) for label in A.frob.labels)
    names.extend("s{}".format(i) for i in range(1, A.n))
    return names


@immutable
class CentralVerdict(object):
    central = attrib()
    structural = attrib()
    failing = attrib(default=())

    def __bool__(self):
        return self.central


def _structural_center_test(z):
    A = z.parent
    ident = A.identity
    if any(p != ident for (_, _, p) in z.terms):
        return False
    by_alpha = {}
    for (alpha, word, _), c in z.terms.items():
        by_alpha.setdefault(alpha, {})[word] = c
    space = A.space
    theta = A.frob.theta
    for alpha, words in by_alpha.items():
        t = space.element(words)
        basis = tensor_space_basis(A.frob, A.n, tuple(-a % theta
                                                      for a in alpha))
        if not in_tensor_span(basis, t):
            return False
        for j in range(1, A.n):
            s = simple(A.n, j)
            moved = permute_terms(space, s, words)
            target = by_alpha.get(permute_exponents(s, alpha), {})
            if space.element(moved) != space.element(target):
                return False
    return True


def is_central(z):
    """
    Test supercommutation with x_1, every f_i and every s_j, and report
    the structural criterion (identity permutations, slot pieces in
    F_psi^(-alpha), invariance of the coefficient family) alongside.
    """
    A = z.parent
    failing = tuple(name for name, g in zip(_generator_names(A),
                                            A.generators())
                    if supercommutator(z, g))
    return CentralVerdict(
        central=not failing,
        structural=_structural_center_test(z),
        failing=failing,
    )


def candidate_monomials(A, degree):
    """All keys with polynomial degree at most ``degree``."""
    keys = []
    for total in range(degree + 1):
        for alpha in _exponents(A.n, total):
            for word in A.space.all_words():
                for p in itertools.permutations(range(1, A.n + 1)):
                    keys.append((alpha, word, tuple(p)))
    return keys


def _exponents(n, total):
    if n == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total + 1):
        out.extend((first,) + rest for rest in _exponents(n - 1,
                                                          total - first))
    return out


def centralizer_up_to_degree(generators, degree, A=None, keys=None):
    """
    Basis of the elements of polynomial degree at most ``degree`` that
    supercommute with every generator.
    """
    A = A or generators[0].parent
    keys = keys if keys is not None else candidate_monomials(A, degree)
    basis = []
    for parity in (0, 1):
        block = [k for k in keys if A.key_parity(k) == parity]
        if not block:
            continue
        columns = []
        for key in block:
            m = A.monomial(*key)
            column = {}
            for index, g in enumerate(generators):
                for k, c in supercommutator(m, g).terms.items():
                    column[(index, k)] = c
            columns.append(column)
        matrix, _ = sparse_to_dense(columns)
        for v in nullspace(matrix, n_cols=len(block)):
            basis.append(AwpaElem(A, {k: c for k, c in zip(block, v)
                                           if c}))
    log.debug("centralizer of %d generators to degree %d: dim %d",
              len(generators), degree, len(basis))
    return basis


def center(A, degree):
    return centralizer_up_to_degree(A.generators(), degree, A=A)


def poly_generators(A):
    """x_1..x_n and every f_i: generators of P_n(F)."""
    gens = [A.x(i) for i in range(1, A.n + 1)]
    for i in range(1, A.n + 1):
        gens.extend(A.slot(b, i) for b in A.frob.basis())
    return gens


def expected_poly_centralizer(A, degree):
    """sum over |alpha| <= degree of x^alpha F_psi^(-alpha), as a basis."""
    theta = A.frob.theta
    basis = []
    for total in range(degree + 1):
        for alpha in _exponents(A.n, total):
            pieces = tensor_space_basis(A.frob, A.n, tuple(-a % theta
                                                           for a in alpha))
            for t in pieces:
                basis.append(A.x_power(alpha) * A.word(t))
    return basis


def same_subspace(first, second):
    return same_span([e.terms for e in first], [e.terms for e in second])


def elementary_symmetric(A, k, power=None):
    """e_k(x_1^power, ..., x_n^power); power defaults to theta."""
    power = A.frob.theta if power is None else power
    total = A.zero()
    for subset in itertools.combinations(range(1, A.n + 1), k):
        alpha = [0] * A.n
        for i in subset:
            alpha[i - 1] = power
        total = total + A.x_power(tuple(alpha))
    return total


# intertwiners


def intertwiner(A, i):
    """Omega_i = x_{i+1}^theta s_i - s_i x_{i+1}^theta."""
    if not 1 <= i < A.n:
        raise SlotIndexError("Omega_{} is not defined in A_{}".format(
            i, A.n))
    x = A.x(i + 1, A.frob.theta)
    s = A.s(i)
    return x * s - s * x


# associated graded algebra


@immutable(eq=False)
class AssociatedGraded(object):
    """(k[x] x| F)^{(x)n} x| S_n, where permutations pass x's freely."""
    algebra = attrib()

    def __repr__(self):
        return "<AssociatedGraded of {!r}>".format(self.algebra)

    def multiply(self, a, b):
        return GradedElem(self, graded_mul_terms(self.algebra, a.terms,
                                                 b.terms))

    def one(self):
        return GradedElem(self, dict(self.algebra.one().terms))

    def format_key(self, key):
        return self.algebra.format_key(key)


class GradedElem(SparseElem):
    __slots__ = ()


@lru_cache(maxsize=None)
def associated_graded(A):
    return AssociatedGraded(A)


def graded_mul_terms(A, left, right):
    """(x^a b p)(x^c d q) = x^a b (p x^c d) pq."""
    space = A.space
    out = {}
    for (alpha, u, p), a in left.items():
        head = {(alpha, u): ONE}
        for (beta, v, q), b in right.items():
            sign, pv = space.permute_word(p, v)
            moved = {(permute_exponents(p, beta), pv): ONE}
            pq = compose(p, q)
            ab = a * b if sign > 0 else -(a * b)
            for (gamma, w), c in A.poly_mul(head, moved).items():
                accumulate(out, (gamma, w, pq), ab * c)
    return out


def leading_term(a):
    """The top polynomial-degree part of ``a`` in the associated graded
    algebra."""
    if not a:
        raise ZeroElement("the zero element has no leading term")
    top = a.poly_degree()
    G = associated_graded(a.parent)
    return GradedElem(G, {key: c for key, c in a.terms.items()
                          if sum(key[0]) == top})


def as_graded(a):
    return GradedElem(associated_graded(a.parent), dict(a.terms))


# graded dimension


@immutable
class GradedDimension(object):
    by_polynomial_layer = attrib()
    counts = attrib()
    expected = attrib()

    @property
    def matches(self):
        return list(self.counts) == list(self.expected)


def closed_form_series(F, n, cutoff):
    """Coefficients of n! (grdim F / (1 - q^delta))^n up to q^cutoff."""
    q = Symbol('q')
    grdim = sum(q ** d for d in F.degrees)
    expr = factorial(n) * (grdim / (1 - q ** F.delta)) ** n
    expansion = series(expr, q, 0, cutoff + 1).removeO()
    coeffs = Poly(expansion, q).all_coeffs()[::-1] if expansion != 0 else []
    coeffs = [int(c) for c in coeffs] + [0] * (cutoff + 1 - len(coeffs))
    return coeffs[:cutoff + 1]


def _straightened(A, alpha, word, p):
    """p * b * x^alpha, straightened by the multiplication engine."""
    return A.perm(p) * A.monomial(A.zero_alpha, word) * A.x_power(alpha)


def graded_dimension(A, cutoff):
    """
    Count degrees in the span of the straightened products p b x^alpha and
    compare with the closed form.

    With delta = 0 every degree is infinite, so the counts are taken per
    polynomial layer |alpha| = d of the filtration instead.
    """
    F, n = A.frob, A.n
    perms = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    words = A.space.all_words()
    if F.delta == 0:
        echelon = SparseEchelon()
        counts = []
        for d in range(cutoff + 1):
            before = len(echelon)
            for alpha in _exponents(n, d):
                for word in words:
                    for p in perms:
                        echelon.add(_straightened(A, alpha, word, p).terms)
            counts.append(len(echelon) - before)
        expected = [factorial(n) * comb(d + n - 1, n - 1) * F.dim ** n
                    if n else (1 if d == 0 else 0)
                    for d in range(cutoff + 1)]
        return GradedDimension(True, tuple(counts), tuple(expected))
    layers = [SparseEchelon() for _ in range(cutoff + 1)]
    for total in range(cutoff // F.delta + 1):
        for alpha in _exponents(n, total):
            for word in words:
                if F.delta * total + A.space.word_degree(word) > cutoff:
                    continue
                for p in perms:
                    prod = _straightened(A, alpha, word, p)
                    for degree, part in prod.components().items():
                        if degree <= cutoff:
                            layers[degree].add(part.terms)
    counts = [len(layer) for layer in layers]
    log.debug("graded dimension of %r up to q^%d: %s", A, cutoff, counts)
    return GradedDimension(False, tuple(counts),
                           tuple(closed_form_series(F, n, cutoff)))


# Mackey bookkeeping


@immutable
class MackeyRow(object):
    perm = attrib()
    mu_cap = attrib()
    nu_cap = attrib()
    coset_size = attrib()
    rank = attrib()
    formula_rank = attrib()
    phi_ok = attrib()


@immutable
class MackeyReport(object):
    mu = attrib()
    nu = attrib()
    cutoff = attrib()
    total = attrib()
    spanned = attrib()
    rows = attrib()

    @property
    def matches(self):
        return (sum(r.rank for r in self.rows) == self.total == self.spanned
                and all(r.rank == r.formula_rank and r.phi_ok
                        for r in self.rows))


def _phi_check(A, p, mu_cap):
    """phi_{p^-1}: s_i -> s_{p^-1 i}, x_i -> x_{p^-1 i} respects the
    relations on the generators of the Young subgroup of mu_cap."""
    n = A.n
    inv = inverse_of(p)
    start = 0
    for size in mu_cap:
        for i in range(start + 1, start + size):
            j = inv[i - 1]
            if inv[i] != j + 1:
                return False
            conj = compose(compose(inv, simple(n, i)), p)
            if conj != simple(n, j):
                return False
            s = A.s(j)
            lhs = s * A.x(j)
            rhs = A.x(inv[i]) * s - t_element(A, j, inv[i])
            if lhs != rhs:
                return False
            for k in range(1, n + 1):
                if k in (i, i + 1):
                    continue
                xk = A.x(inv[k - 1])
                if s * xk != xk * s:
                    return False
        start += size
    return True


def _truncated_products(A, cutoff):
    """p -> the straightened products p b x^alpha with |alpha| <= cutoff."""
    words = A.space.all_words()
    out = {}
    for p in itertools.permutations(range(1, A.n + 1)):
        p = tuple(p)
        out[p] = [_straightened(A, alpha, word, p).terms
                  for total in range(cutoff + 1)
                  for alpha in _exponents(A.n, total)
                  for word in words]
    return out


def mackey_dimension_report(A, mu, nu, cutoff):
    """
    Compare the truncated dimension of Res_mu Ind_nu of the regular module
    with the sum over minimal double coset representatives.

    The rank of a double coset D is measured on the products p b x^alpha
    with p in D, keeping only their terms whose permutation lies in D.
    """
    n = A.n
    layer = A.frob.dim ** n * comb(cutoff + n, n)
    products = _truncated_products(A, cutoff)
    whole = SparseEchelon()
    for terms in itertools.chain.from_iterable(products.values()):
        whole.add(terms)
    rows = []
    for p, mu_cap, nu_cap in min_double_cosets(mu, nu):
        coset = double_coset(p, mu, nu)
        echelon = SparseEchelon()
        for w in coset:
            for terms in products[w]:
                echelon.add({key: c for key, c in terms.items()
                             if key[2] in coset})
        formula = young_order(mu) * young_order(nu) // young_order(mu_cap)
        rows.append(MackeyRow(
            perm=p,
            mu_cap=mu_cap,
            nu_cap=nu_cap,
            coset_size=len(coset),
            rank=len(echelon),
            formula_rank=formula * layer,
            phi_ok=_phi_check(A, p, mu_cap),
        ))
    return MackeyReport(mu=tuple(mu), nu=tuple(nu), cutoff=cutoff,
                        total=factorial(n) * layer, spanned=len(whole),
                        rows=tuple(rows))
