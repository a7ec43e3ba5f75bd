# -*- coding: utf-8 -*-
"""
Normal-form arithmetic in the affine wreath product algebra A_n(F).

Every element is a combination of monomials ``x^alpha * b * p`` keyed by
``(alpha, word, p)``: an exponent tuple, a basis word of F^{(x)n} and a
permutation in one-line notation. The polynomial subalgebra P_n(F) uses
the keys ``(alpha, word)``.

Multiplication moves the permutation of the left factor across the
polynomial part of the right factor one simple reflection at a time with
``s_i a = (s_i a) s_i - D_i(a)``; basis words move across powers of x by
``f x_i = x_i psi_i(f)``.
"""
import logging
from functools import lru_cache

from attr import attrib

from .decorators import cached_on, immutable
from .exceptions import NotPolynomial, SizeMismatch, SlotIndexError
from .perms import (
    compose,
    format_perm,
    identity_perm,
    left_simple,
    permute_exponents,
    reduced_word_of,
    simple,
)
from .scalars import ONE, as_scalar
from .tensor import tensor_space, wreath_algebra
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


def _add_into(out, terms, scale=ONE):
    for key, c in terms.items():
        accumulate(out, key, c * scale)


def format_exponents(alpha):
    factors = []
    for i, a in enumerate(alpha, 1):
        if a == 1:
            factors.append("x{}".format(i))
        elif a > 1:
            factors.append("x{}^{}".format(i, a))
    return factors


@immutable(eq=False)
class AffineWreath(object):
    frob = attrib()
    n = attrib()
    _cache = attrib(factory=dict, init=False, repr=False)

    def __repr__(self):
        return "<AffineWreath A_{}({})>".format(self.n, self.frob.name)

    @property
    def space(self):
        return tensor_space(self.frob, self.n)

    @property
    def wreath(self):
        return wreath_algebra(self.frob, self.n)

    @property
    def identity(self):
        return identity_perm(self.n)

    @property
    def zero_alpha(self):
        return (0,) * self.n

    def unit_vector(self, i, power=1):
        alpha = [0] * self.n
        alpha[i - 1] = power
        return tuple(alpha)

    def check_slot(self, i):
        if not 1 <= i <= self.n:
            raise SlotIndexError("index {} out of range 1..{}".format(
                i, self.n))

    # P_n(F)

    def poly_x(self, alpha):
        """x^alpha in P_n(F)."""
        return {(tuple(alpha), w): c
                for w, c in self.space.unit_word_terms().items()}

    def poly_word(self, terms):
        zero = self.zero_alpha
        return {(zero, w): c for w, c in terms.items()}

    def poly_mul(self, left, right):
        """(x^a b)(x^c d) = x^{a+c} psi^c(b) d."""
        space = self.space
        out = {}
        for (alpha, u), a in left.items():
            for (beta, v), b in right.items():
                ab = a * b
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                for w, c in space.psi_word(u, beta).items():
                    for z, d in space.word_product(w, v).items():
                        accumulate(out, (gamma, z), ab * c * d)
        return out

    def poly_act(self, i, terms):
        """s_i applied to the coefficients: x^a b -> x^{s_i a} (s_i b)."""
        p = simple(self.n, i)
        space = self.space
        out = {}
        for (alpha, word), c in terms.items():
            sign, w = space.permute_word(p, word)
            accumulate(out, (permute_exponents(p, alpha), w),
                       c if sign > 0 else -c)
        return out

    @cached_on('_cache')
    def t_poly(self, i, j, k=1):
        """t^(k)_{i,j} = sum_b sum_l b_i x_i^{k-1-l} x_j^l (b^vee)_j."""
        frob = self.frob
        space = self.space
        out = {}
        for b in range(frob.dim):
            left = self.poly_word(space.slot_terms({b: ONE}, i))
            dual = {a: c for a, c in enumerate(frob.dual[b]) if c}
            right = self.poly_word(space.slot_terms(dual, j))
            for ell in range(k):
                alpha = [0] * self.n
                alpha[i - 1] += k - 1 - ell
                alpha[j - 1] += ell
                middle = self.poly_x(alpha)
                _add_into(out, self.poly_mul(self.poly_mul(left, middle),
                                             right))
        return out

    @cached_on('_cache')
    def delta_monomial(self, i, alpha, word):
        """D_i(x^alpha b) from the closed forms of D_i on powers."""
        a, b = alpha[i - 1], alpha[i]
        rest = list(alpha)
        rest[i - 1] = rest[i] = 0
        first = self.poly_mul(self.t_poly(i, i + 1, a),
                              self.poly_x(self.unit_vector(i + 1, b)))
        second = self.poly_mul(self.poly_x(self.unit_vector(i + 1, a)),
                               self.t_poly(i + 1, i, b))
        d = dict(first)
        _add_into(d, second, -ONE)
        if not d:
            return {}
        return self.poly_mul(d, {(tuple(rest), word): ONE})

    def delta_terms(self, i, terms):
        out = {}
        for (alpha, word), c in terms.items():
            _add_into(out, self.delta_monomial(i, alpha, word), c)
        return out

    @cached_on('_cache')
    def perm_action(self, p, beta, word):
        """
        p * (x^beta b) as ``{rho: P_rho}`` with ``p x^beta b = sum P_rho rho``.
        """
        if p == self.identity:
            return {p: {(beta, word): ONE}}
        i = reduced_word_of(p)[0]
        rest = left_simple(i, p)
        out = {}
        for rho, poly in self.perm_action(rest, beta, word).items():
            moved = self.poly_act(i, poly)
            if moved:
                target = out.setdefault(left_simple(i, rho), {})
                _add_into(target, moved)
            correction = self.delta_terms(i, poly)
            if correction:
                target = out.setdefault(rho, {})
                _add_into(target, correction, -ONE)
        return {rho: poly for rho, poly in out.items() if poly}

    # A_n(F)

    def mul_terms(self, left, right):
        out = {}
        for (alpha, u, p), a in left.items():
            head = {(alpha, u): ONE}
            for (beta, v, q), b in right.items():
                ab = a * b
                for rho, poly in self.perm_action(p, beta, v).items():
                    rq = compose(rho, q)
                    for (gamma, w), c in self.poly_mul(head, poly).items():
                        accumulate(out, (gamma, w, rq), ab * c)
        return out

    def multiply(self, a, b):
        return AwpaElem(self, self.mul_terms(a.terms, b.terms))

    def one(self):
        return self.from_poly(self.poly_x(self.zero_alpha))

    def zero(self):
        return AwpaElem.zero(self)

    def format_key(self, key):
        alpha, word, p = key
        factors = format_exponents(alpha)
        factors.extend(self.space.format_key(word))
        if p != self.identity:
            factors.append("s" + format_perm(p))
        return factors

    # constructors

    def from_poly(self, terms, perm=None):
        p = perm or self.identity
        return AwpaElem(self, {(alpha, w, p): c
                               for (alpha, w), c in terms.items()})

    def x(self, i, power=1):
        self.check_slot(i)
        return self.from_poly(self.poly_x(self.unit_vector(i, power)))

    def x_power(self, alpha):
        return self.from_poly(self.poly_x(alpha))

    def slot(self, f, i):
        """f_i for an element f of F."""
        return self.from_poly(self.poly_word(self.space.slot_terms(
            f.terms, i)))

    def word(self, t):
        return self.from_poly(self.poly_word(t.terms))

    def monomial(self, alpha, word, perm=None, coeff=1):
        return AwpaElem(self, {(tuple(alpha), tuple(word),
                                tuple(perm or self.identity)):
                               as_scalar(coeff)})

    def perm(self, p):
        p = tuple(getattr(p, 'images', p))
        return self.from_poly(self.poly_x(self.zero_alpha), perm=p)

    def s(self, i):
        return self.perm(simple(self.n, i))

    def from_wreath(self, w):
        zero = self.zero_alpha
        return AwpaElem(self, {(zero, word, p): c
                               for (word, p), c in w.terms.items()})

    def generators(self):
        """x_1, the slot elements f_i (f in B, all i) and s_1..s_{n-1}."""
        gens = []
        if self.n:
            gens.append(self.x(1))
        for i in range(1, self.n + 1):
            for b in self.frob.basis():
                gens.append(self.slot(b, i))
        gens.extend(self.s(i) for i in range(1, self.n))
        return gens

    # grading

    def key_degree(self, key):
        alpha, word, _ = key
        return self.frob.delta * sum(alpha) + self.space.word_degree(word)

    def key_parity(self, key):
        return self.space.word_parity(key[1])


class AwpaElem(SparseElem):
    __slots__ = ()

    @property
    def n(self):
        return self.parent.n

    def is_polynomial(self):
        ident = self.parent.identity
        return all(p == ident for (_, _, p) in self.terms)

    def poly_terms(self):
        if not self.is_polynomial():
            raise NotPolynomial("{} is not in P_n(F)".format(self))
        return {(alpha, w): c for (alpha, w, _), c in self.terms.items()}

    def components(self):
        """Homogeneous components by total degree."""
        out = {}
        for key, c in self.terms.items():
            out.setdefault(self.parent.key_degree(key), {})[key] = c
        return {d: self._new(t) for d, t in sorted(out.items())}

    def parity(self):
        parities = {self.parent.key_parity(k) for k in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def poly_degree(self):
        return max((sum(alpha) for alpha, _, _ in self.terms), default=-1)


@lru_cache(maxsize=None)
def affine_wreath(frob, n):
    return AffineWreath(frob, n)


def normal_form_mul(a, b):
    if a.parent.n != b.parent.n:
        raise SizeMismatch("cannot multiply elements of A_{} and A_{}".format(
            a.parent.n, b.parent.n))
    return a * b


def t_element(A, i, j, k=1):
    """t^(k)_{i,j} in normal form."""
    A.check_slot(i)
    A.check_slot(j)
    if i == j:
        raise SlotIndexError("t_{{i,j}} needs i != j, got {} twice".format(i))
    if k < 1:
        raise SlotIndexError("t^(k) needs k >= 1, got {}".format(k))
    return A.from_poly(A.t_poly(i, j, k))


def divided_difference(A, i, a):
    """
    D_i(a) for a in P_n(F), computed from D_i(x_i) = t_{i,i+1},
    D_i(x_{i+1}) = -t_{i+1,i}, D_i(F^{(x)n}) = 0 and the twisted Leibniz
    rule D_i(x_j m) = D_i(x_j) m + x_{s_i(j)} D_i(m).
    """
    if not 1 <= i < A.n:
        raise SlotIndexError("D_{} is not defined in A_{}".format(i, A.n))
    out = {}
    for (alpha, word), c in a.poly_terms().items():
        _add_into(out, _leibniz(A, i, alpha, word), c)
    return A.from_poly(out)


def _leibniz(A, i, alpha, word):
    cache = A._cache
    key = ('leibniz', i, alpha, word)
    if key in cache:
        return cache[key]
    j = next((k for k, e in enumerate(alpha, 1) if e), None)
    if j is None:
        value = {}
    else:
        rest = list(alpha)
        rest[j - 1] -= 1
        rest = tuple(rest)
        m = {(rest, word): ONE}
        value = {}
        if j == i:
            _add_into(value, A.poly_mul(A.t_poly(i, i + 1), m))
        elif j == i + 1:
            _add_into(value, A.poly_mul(A.t_poly(i + 1, i), m), -ONE)
        inner = _leibniz(A, i, rest, word)
        if inner:
            sj = i + 1 if j == i else (i if j == i + 1 else j)
            _add_into(value, A.poly_mul(A.poly_x(A.unit_vector(sj)), inner))
    cache[key] = value
    return value
