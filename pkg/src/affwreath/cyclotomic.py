# -*- coding: utf-8 -*-
"""
Cyclotomic quotients A_n^C(F) = A_n(F) / (chi_C).

``chi_C = prod_k prod_j (x_1^k - c^(k,j))`` has degree d in x_1. Monomials
reduce with ``x_i^d = rule_i`` where ``rule_1 = x_1^d - chi_1`` and
``rule_i = s_{i-1} rule_{i-1} s_{i-1} + t^(d)_{i-1,i} s_{i-1}``; each rule
lowers the exponent of x_i and only touches slots up to i, so rewriting the
lowest overflowing slot first terminates.
"""
import itertools
import logging
import random
from functools import lru_cache
from math import factorial

from attr import attrib

from .automorphisms import apply_automorphism
from .awpa import AwpaElem, affine_wreath
from .decorators import cached_on, immutable
from .exceptions import (
    BadParams,
    CycloParamsError,
    DegenerateGram,
    LevelZero,
    NotPsiFixed,
    OddParity,
    ParamsMismatch,
    SingularMatrix,
    TooLarge,
    WrongDegree,
)
from .frobenius import AlgElem, graded_piece, in_span
from .linalg import SparseEchelon, inverse, rank
from .perms import from_word, identity_perm
from .scalars import ONE, ZERO
from .settings import get_settings
from .structure import evaluation_hom
from .tensor import TensorElem, first_slot_space_contains, tensor_space
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


def _sign(exponent):
    return -1 if exponent % 2 else 1


# parameters


@immutable(eq=False)
class CycloParams(object):
    frob = attrib()
    entries = attrib()
    level = attrib()
    general = attrib(default=False)
    slots = attrib(default=1)
    chi_terms = attrib(default=None, repr=False)

    def __repr__(self):
        return "<CycloParams over {} level={}{}>".format(
            self.frob.name, self.level, " general" if self.general else "")

    @property
    def e(self):
        return tuple(len(cs) for _, cs in self.entries)


def _as_tensor(F, slots, c):
    if isinstance(c, AlgElem):
        if c.parent is not F:
            raise BadParams("parameter {} is not in {}".format(c, F.name))
        return tensor_space(F, slots).slot(c, 1)
    if isinstance(c, TensorElem) and c.parent is tensor_space(F, slots):
        return c
    raise BadParams("parameter {!r} is neither in {} nor in {}^{}".format(
        c, F.name, F.name, slots))


def _validate_entry(F, slots, k, c, general):
    space = tensor_space(F, slots)
    if any(space.word_parity(w) for w in c.terms):
        raise OddParity("c^({}) = {} is odd".format(k, c))
    if any(space.word_degree(w) != k * F.delta for w in c.terms):
        raise WrongDegree("c^({}) = {} must have degree {}".format(
            k, c, k * F.delta))
    if general:
        ok = first_slot_space_contains(F, slots, c, k)
    else:
        f = F.element({w[0]: coeff for w, coeff in c.terms.items()})
        ok = in_span(F, graded_piece(F, k, fixed_only=True), f)
    if not ok:
        raise NotPsiFixed("c^({}) = {} is not in the psi-fixed piece of "
                          "degree {}".format(k, c, k))


def _normalize_entries(F, entries):
    if isinstance(entries, dict):
        pairs = sorted((int(k), list(v)) for k, v in entries.items())
    else:
        pairs = [(k, list(v)) for k, v in enumerate(entries, 1)]
    for k, _ in pairs:
        if not 1 <= k <= F.theta:
            raise BadParams("k = {} is outside 1..theta = {}".format(
                k, F.theta))
    return pairs


def _chi(A, factors):
    chi = A.one()
    for k, c in factors:
        chi = chi * (A.x(1, k) - A.word(c))
    return chi


def make_params(F, entries, general=False, n=None, seed=0):
    """
    Validate the parameters c^(k,j) and precompute chi_C.

    ``entries`` maps k to the list of c^(k,j) (elements of F, or of
    F^{(x)n} when ``general`` is set), or lists them for k = 1, 2, ...
    """
    if general and not n:
        raise BadParams("general parameters need the number of slots n")
    slots = n if general else 1
    pairs = _normalize_entries(F, entries)
    normalized = []
    for k, cs in pairs:
        tensors = tuple(_as_tensor(F, slots, c) for c in cs)
        for c in tensors:
            _validate_entry(F, slots, k, c, general)
        normalized.append((k, tensors))
    level = sum(k * len(cs) for k, cs in normalized)
    if level < 1:
        raise LevelZero("the level of the parameters is {}".format(level))

    A = affine_wreath(F, slots)
    factors = [(k, c) for k, cs in normalized for c in cs]
    chi = _chi(A, factors)
    shuffled = list(factors)
    random.Random(seed).shuffle(shuffled)
    if _chi(A, shuffled) != chi:
        raise CycloParamsError("chi depends on the order of its factors")
    log.debug("cyclotomic parameters over %s: level %d", F.name, level)
    return CycloParams(frob=F, entries=tuple(normalized), level=level,
                       general=general, slots=slots, chi_terms=chi)


# the quotient


@immutable(eq=False)
class CyclotomicQuotient(object):
    params = attrib()
    n = attrib()
    _cache = attrib(factory=dict, init=False, repr=False)

    def __repr__(self):
        return "<CyclotomicQuotient A_{}^C({}) level={}>".format(
            self.n, self.frob.name, self.level)

    @property
    def frob(self):
        return self.params.frob

    @property
    def level(self):
        return self.params.level

    @property
    def algebra(self):
        return affine_wreath(self.frob, self.n)

    @property
    def dimension(self):
        return factorial(self.n) * (self.level * self.frob.dim) ** self.n

    # rewriting rules

    def _pad(self, terms):
        """Embed terms over the parameter slots into A_n."""
        A = self.algebra
        extra = self.n - self.params.slots
        if extra < 0:
            raise ParamsMismatch("parameters for {} slots used in A_{}"
                                 .format(self.params.slots, self.n))
        rest = tensor_space(self.frob, extra).unit_word_terms()
        out = {}
        for (alpha, word, _), c in terms.items():
            for tail, d in rest.items():
                accumulate(out, (alpha + (0,) * extra, word + tail,
                                 A.identity), c * d)
        return AwpaElem(A, out)

    @cached_on('_cache')
    def rule(self, i):
        A = self.algebra
        d = self.level
        if i == 1:
            chi1 = self._pad(self.params.chi_terms.terms)
            return A.x(1, d) - chi1
        s = A.s(i - 1)
        return s * self.rule(i - 1) * s + A.from_poly(
            A.t_poly(i - 1, i, d)) * s

    def chi(self, i):
        self.algebra.check_slot(i)
        return self.algebra.x(i, self.level) - self.rule(i)

    @cached_on('_cache')
    def reduce_key(self, key):
        alpha, word, p = key
        d = self.level
        i = next((j for j, e in enumerate(alpha, 1) if e >= d), None)
        if i is None:
            return {key: ONE}
        A = self.algebra
        head = list(alpha)
        head[i - 1] -= d
        left = {(tuple(head), w, A.identity): c
                for w, c in A.space.unit_word_terms().items()}
        right = {(A.zero_alpha, word, p): ONE}
        step = A.mul_terms(A.mul_terms(left, self.rule(i).terms), right)
        out = {}
        for k, c in step.items():
            for r, e in self.reduce_key(k).items():
                accumulate(out, r, c * e)
        return out

    def reduce_terms(self, terms):
        out = {}
        for key, c in terms.items():
            for r, e in self.reduce_key(key).items():
                accumulate(out, r, c * e)
        return out

    def reduce(self, a):
        if a.parent is not self.algebra:
            raise ParamsMismatch("{!r} is not an element of {!r}".format(
                a, self.algebra))
        return CycloElem(self, self.reduce_terms(a.terms))

    # parent protocol

    def multiply(self, a, b):
        return CycloElem(self, self.reduce_terms(
            self.algebra.mul_terms(a.terms, b.terms)))

    def one(self):
        return self.reduce(self.algebra.one())

    def format_key(self, key):
        return self.algebra.format_key(key)

    def lift(self, a):
        return AwpaElem(self.algebra, dict(a.terms))

    # basis and traces

    def basis_keys(self):
        A = self.algebra
        exps = list(itertools.product(range(self.level), repeat=self.n))
        return [(alpha, word, tuple(p))
                for alpha in exps
                for word in A.space.all_words()
                for p in itertools.permutations(range(1, self.n + 1))]

    def basis(self):
        return [CycloElem(self, {k: ONE}) for k in self.basis_keys()]

    def trace_terms(self, terms):
        top = (self.level - 1,) * self.n
        ident = identity_perm(self.n)
        space = self.algebra.space
        total = ZERO
        for (alpha, word, p), c in terms.items():
            if alpha == top and p == ident:
                total = total + c * space.word_trace(word)
        return total

    def generators(self):
        A = self.algebra
        return [self.reduce(g) for g in A.generators()]

    def nakayama_terms(self, terms):
        """nu: x -> x, f -> psi^d(f), p -> p."""
        space = self.algebra.space
        exps = (self.level,) * self.n
        out = {}
        for (alpha, word, p), c in terms.items():
            for w, e in space.psi_word(word, exps).items():
                accumulate(out, (alpha, w, p), c * e)
        return out

    def key_parity(self, key):
        return self.algebra.key_parity(key)


class CycloElem(SparseElem):
    __slots__ = ()

    def parity(self):
        parities = {self.parent.key_parity(k) for k in self.terms}
        return parities.pop() if len(parities) == 1 else None


@lru_cache(maxsize=None)
def cyclotomic_quotient(params, n):
    if params.general and n != params.slots:
        raise ParamsMismatch("general parameters are fixed to n = {}"
                             .format(params.slots))
    return CyclotomicQuotient(params, n)


def chi(params, i, n):
    """chi_i in A_n(F)."""
    return cyclotomic_quotient(params, n).chi(i)


def reduce(params, a):
    return cyclotomic_quotient(params, a.parent.n).reduce(a)


def cyclo_mul(a, b):
    if a.parent is not b.parent:
        raise ParamsMismatch("elements of different cyclotomic quotients")
    return a * b


def cyclo_trace(a):
    return a.parent.trace_terms(a.terms)


def check_chi_conjugation(params, n):
    """chi_i from the rules equals s_{i-1}..s_1 chi_1 s_1..s_{i-1}."""
    Q = cyclotomic_quotient(params, n)
    A = Q.algebra
    chi1 = Q.chi(1)
    for i in range(2, n + 1):
        p = A.perm(from_word(n, range(i - 1, 0, -1)))
        q = A.perm(from_word(n, range(1, i)))
        if p * chi1 * q != Q.chi(i):
            return False
    return True


# Frobenius structure


def _check_size(entries, what):
    bound = get_settings().max_dim
    if entries > bound:
        raise TooLarge("{} needs {} entries, above the bound {} "
                       "(AWPA_MAX_DIM)".format(what, entries, bound))


@immutable
class GramReport(object):
    keys = attrib(repr=False)
    matrix = attrib(repr=False)
    size = attrib()
    rank = attrib()

    @property
    def invertible(self):
        return self.rank == self.size


def gram_matrix(params, n):
    """G[u][v] = tr_C(u v) over the monomial basis."""
    Q = cyclotomic_quotient(params, n)
    keys = Q.basis_keys()
    _check_size(len(keys) ** 2, "the Gram matrix of A_{}^C".format(n))
    A = Q.algebra
    matrix = []
    for u in keys:
        row = []
        for v in keys:
            prod = Q.reduce_terms(A.mul_terms({u: ONE}, {v: ONE}))
            row.append(Q.trace_terms(prod))
        matrix.append(row)
    r = rank(matrix)
    log.debug("Gram matrix of size %d has rank %d", len(keys), r)
    return GramReport(keys=tuple(keys), matrix=matrix, size=len(keys),
                      rank=r)


@immutable
class NakayamaVerdict(object):
    holds = attrib()
    symmetric = attrib()
    pairs = attrib()
    images = attrib()
    counterexample = attrib(default=None)


def _random_homogeneous(Q, rng, parity, terms=3):
    keys = [k for k in Q.basis_keys() if Q.key_parity(k) == parity]
    if not keys:
        return CycloElem.zero(Q)
    out = {}
    for key in rng.sample(keys, min(terms, len(keys))):
        accumulate(out, key, ONE * rng.randint(-3, 3))
    return CycloElem(Q, out)


def cyclo_nakayama_check(params, n, pairs=200, seed=0, gram=None):
    """
    Check tr_C(ab) = (-1)^{|a||b|} tr_C(b nu(a)) on random homogeneous
    pairs, after confirming the trace form is nondegenerate.
    """
    Q = cyclotomic_quotient(params, n)
    gram = gram or gram_matrix(params, n)
    if not gram.invertible:
        raise DegenerateGram("tr_C is degenerate on A_{}^C: rank {} of {}"
                             .format(n, gram.rank, gram.size))
    rng = random.Random(seed)
    counterexample = None
    for _ in range(pairs):
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        a = _random_homogeneous(Q, rng, pa)
        b = _random_homogeneous(Q, rng, pb)
        lhs = cyclo_trace(a * b)
        nu_a = CycloElem(Q, Q.nakayama_terms(a.terms))
        rhs = cyclo_trace(b * nu_a) * _sign(pa * pb)
        if lhs != rhs:
            counterexample = (str(a), str(b))
            break
    images = {}
    symmetric = True
    for name, g in zip(_generator_labels(Q), Q.generators()):
        image = CycloElem(Q, Q.nakayama_terms(g.terms))
        symmetric = symmetric and image == g
        images[name] = str(image)
    return NakayamaVerdict(
        holds=counterexample is None,
        symmetric=symmetric,
        pairs=pairs,
        images=images,
        counterexample=counterexample,
    )


def _generator_labels(Q):
    names = ["x1"] if Q.n else []
    for i in range(1, Q.n + 1):
        names.extend("{}_{}".format(label, i) for label in Q.frob.labels)
    names.extend("s{}".format(i) for i in range(1, Q.n))
    return names


# restriction and induction


def embed(Q_small, Q_big, a):
    """A_n^C -> A_{n+1}^C on the first n slots."""
    if Q_small.params is not Q_big.params or Q_big.n != Q_small.n + 1:
        raise ParamsMismatch("cannot embed {!r} in {!r}".format(Q_small,
                                                                Q_big))
    unit = {i: c for i, c in enumerate(Q_small.frob.unit) if c}
    out = {}
    for (alpha, word, p), c in a.terms.items():
        for b, d in unit.items():
            accumulate(out, (alpha + (0,), word + (b,),
                             p + (len(p) + 1,)), c * d)
    return CycloElem(Q_big, out)


def partial_trace(z):
    """
    tr_{n+1}: A_{n+1}^C -> A_n^C, projecting onto the summand
    x_{n+1}^{d-1} F_{n+1} A_n^C and applying tr in slot n+1.
    """
    Q = z.parent
    if Q.params.general:
        raise ParamsMismatch("partial traces need first-slot parameters")
    if Q.n < 1:
        raise ParamsMismatch("A_0^C has no partial trace")
    small = cyclotomic_quotient(Q.params, Q.n - 1)
    top = Q.level - 1
    last = Q.n
    F = Q.frob
    out = {}
    for (alpha, word, p), c in z.terms.items():
        if alpha[-1] != top or p[-1] != last:
            continue
        t = F.trace_vec[word[-1]]
        if t:
            accumulate(out, (alpha[:-1], word[:-1], p[:-1]), c * t)
    return CycloElem(small, out)


def partial_trace_via_duals(z):
    """sum_y tr_C(y^vee z) y over a basis y of A_n^C and its left duals."""
    Q = z.parent
    small = cyclotomic_quotient(Q.params, Q.n - 1)
    gram = gram_matrix(Q.params, Q.n - 1)
    try:
        duals = inverse(gram.matrix)
    except SingularMatrix:
        raise DegenerateGram("tr_C is degenerate on A_{}^C".format(small.n))
    total = CycloElem.zero(small)
    for index, key in enumerate(gram.keys):
        dual = CycloElem(small, {k: c for k, c in zip(gram.keys,
                                                      duals[index]) if c})
        value = cyclo_trace(embed(small, Q, dual) * z)
        if value:
            total = total + CycloElem(small, {key: ONE}).scale(value)
    return total


@immutable
class InductionReport(object):
    elements = attrib(repr=False)
    rank = attrib()
    expected = attrib()
    small_dimension = attrib()

    @property
    def free(self):
        return (self.rank == self.expected
                and len(self.elements) * self.small_dimension
                == self.expected)


def induction_basis(params, n):
    """
    The right A_n^C basis x_j^a b_j s_j...s_n of A_{n+1}^C, with the rank
    of its products against A_n^C.
    """
    small = cyclotomic_quotient(params, n)
    big = cyclotomic_quotient(params, n + 1)
    _check_size(big.dimension * small.dimension,
                "the induction basis check for n = {}".format(n))
    A = big.algebra
    elements = []
    for j in range(1, n + 2):
        tail = A.perm(from_word(n + 1, range(j, n + 1)))
        for a in range(params.level):
            for b in params.frob.basis():
                elements.append(big.reduce(A.x(j, a) * A.slot(b, j) * tail)
                                if a else big.reduce(A.slot(b, j) * tail))
    echelon = SparseEchelon()
    small_basis = [embed(small, big, y) for y in small.basis()]
    for e in elements:
        for y in small_basis:
            echelon.add((e * y).terms)
    log.debug("induction basis for n = %d: rank %d of %d", n, len(echelon),
              big.dimension)
    return InductionReport(elements=tuple(elements), rank=len(echelon),
                           expected=big.dimension,
                           small_dimension=small.dimension)


def cyclotomic_mackey_identity(params, n):
    """
    dim A_{n+1}^C = d dim F dim A_n^C + n d dim F dim A_n^C on the spanned
    dimensions, with the induced module free of that rank.
    """
    small = closure_rank(cyclotomic_quotient(params, n))
    big = closure_rank(cyclotomic_quotient(params, n + 1))
    step = params.level * params.frob.dim * small
    induced = induction_basis(params, n)
    log.debug("cyclotomic Mackey for n = %d: %d, %d, induced rank %d",
              n, small, big, induced.rank)
    return (big == step + n * step and induced.rank == big
            and big == cyclotomic_quotient(params, n + 1).dimension)


def closure_rank(Q):
    """Dimension of the span of everything reachable from 1 by left
    multiplication with x_1, the f_1 and the s_j."""
    _check_size(Q.dimension, "the closure of A_{}^C".format(Q.n))
    A = Q.algebra
    gens = []
    if Q.n:
        gens.append(Q.reduce(A.x(1)))
        gens.extend(Q.reduce(A.slot(b, 1)) for b in Q.frob.basis())
    gens.extend(Q.reduce(A.s(j)) for j in range(1, Q.n))
    echelon = SparseEchelon()
    start = Q.one()
    echelon.add(start.terms)
    queue = [start]
    while queue:
        v = queue.pop()
        for g in gens:
            w = g * v
            if w and echelon.add(w.terms):
                queue.append(w)
    return len(echelon)


# level one


@immutable
class LevelOneReport(object):
    dimension_ok = attrib()
    structure_ok = attrib()
    evaluation_ok = attrib()

    @property
    def ok(self):
        return self.dimension_ok and self.structure_ok and self.evaluation_ok


def _level_one_parameter(Q):
    if Q.level != 1 or Q.params.general:
        raise BadParams("level one comparison needs first-slot parameters "
                        "of level 1, got level {}".format(Q.level))
    (_, cs), = [(k, cs) for k, cs in Q.params.entries if cs]
    c, = cs
    return tensor_space(Q.frob, Q.n).slot(
        Q.frob.element({w[0]: v for w, v in c.terms.items()}), 1)


def level_one_report(Q, samples=None):
    """
    Compare A_n^C at level one with F^{(x)n} x| S_n: dimensions, structure
    constants on the basis b p, and reduce(a) = ev(shift_c(a)) on the
    generators and ``samples``.
    """
    c = _level_one_parameter(Q)
    A = Q.algebra
    W = A.wreath
    dimension_ok = closure_rank(Q) == factorial(Q.n) * Q.frob.dim ** Q.n

    structure_ok = True
    keys = Q.basis_keys()
    for u in keys:
        for v in keys:
            lhs = Q.reduce_terms(A.mul_terms({u: ONE}, {v: ONE}))
            rhs = W.mul_terms({(u[1], u[2]): ONE}, {(v[1], v[2]): ONE})
            if {(w, p): x for (_, w, p), x in lhs.items()} != rhs:
                structure_ok = False
                break
        if not structure_ok:
            break

    evaluation_ok = True
    for a in list(A.generators()) + list(samples or []):
        reduced = Q.reduce(a)
        image = evaluation_hom(apply_automorphism('shift', a, c=c))
        if {(w, p): x for (_, w, p), x in reduced.terms.items()} != dict(
                image.terms):
            evaluation_ok = False
            break
    return LevelOneReport(dimension_ok=dimension_ok,
                          structure_ok=structure_ok,
                          evaluation_ok=evaluation_ok)


def shift_compatibility(Q, a):
    """
    shift_c maps the ideal of chi = x_1 - c onto that of chi = x_1, so
    reducing before or after the shift must agree there.
    """
    c = _level_one_parameter(Q)
    zero = make_params(Q.frob, {1: [Q.frob.zero()]})
    target = cyclotomic_quotient(zero, Q.n)
    direct = target.reduce(apply_automorphism('shift', a, c=c))
    via = target.reduce(apply_automorphism('shift', Q.lift(Q.reduce(a)),
                                           c=c))
    return direct == via

