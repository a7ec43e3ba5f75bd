# -*- coding: utf-8 -*-
"""
Tensor powers F^{(x)n} with the superpermutation action, and the wreath
product F^{(x)n} x| S_n.

A basis word is a tuple of basis indices of F, one per slot.
"""
import itertools
import logging
from functools import lru_cache

from attr import attrib

from .decorators import cached_on, immutable
from .exceptions import SizeMismatch, SlotIndexError
from .linalg import SparseEchelon
from .perms import (
    compose,
    format_perm,
    identity_perm,
    simple,
    superpermute_word,
)
from .scalars import ONE, ZERO
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


def _expand(factors):
    """Tensor a list of per-slot dicts ``index -> coeff`` into words."""
    out = {(): ONE}
    for slot in factors:
        nxt = {}
        for word, c in out.items():
            for b, d in slot.items():
                nxt[word + (b,)] = c * d
        out = nxt
    return out


@immutable(eq=False)
class TensorSpace(object):
    frob = attrib()
    n = attrib()
    _cache = attrib(factory=dict, init=False, repr=False)

    def __repr__(self):
        return "<TensorSpace {}^{}>".format(self.frob.name, self.n)

    # words

    def unit_terms(self):
        return {i: c for i, c in enumerate(self.frob.unit) if c}

    @cached_on('_cache')
    def unit_word_terms(self):
        return _expand([self.unit_terms()] * self.n)

    def is_unit_word(self, word):
        u = self.frob.unit_index
        return u is not None and all(b == u for b in word)

    def word_parity(self, word):
        return sum(self.frob.parities[b] for b in word) % 2

    def word_degree(self, word):
        return sum(self.frob.degrees[b] for b in word)

    def word_trace(self, word):
        value = ONE
        for b in word:
            t = self.frob.trace_vec[b]
            if not t:
                return ZERO
            value = value * t
        return value

    def all_words(self):
        return list(itertools.product(range(self.frob.dim), repeat=self.n))

    # products and actions on words

    @cached_on('_cache')
    def word_product(self, u, v):
        """Product of two basis words with the Koszul sign."""
        parities = self.frob.parities
        flips = 0
        odd_v = 0
        for p in range(self.n):
            flips += parities[u[p]] * odd_v
            odd_v += parities[v[p]]
        factors = [self.frob.products[u[p]][v[p]] for p in range(self.n)]
        out = _expand(factors)
        if flips % 2:
            out = {w: -c for w, c in out.items()}
        return out

    def mul_terms(self, left, right):
        out = {}
        for u, a in left.items():
            for v, b in right.items():
                ab = a * b
                for w, c in self.word_product(u, v).items():
                    accumulate(out, w, ab * c)
        return out

    @cached_on('_cache')
    def permute_word(self, p, word):
        sign, out = superpermute_word(p, word, self.frob.parities)
        return sign, out

    @cached_on('_cache')
    def psi_word(self, word, exponents):
        """(psi^{e_1} (x) ... (x) psi^{e_n}) applied to a basis word."""
        theta = self.frob.theta
        return _expand([self.frob.psi_terms(b, e % theta)
                        for b, e in zip(word, exponents)])

    def psi_terms(self, terms, exponents):
        out = {}
        for word, c in terms.items():
            for w, d in self.psi_word(word, tuple(exponents)).items():
                accumulate(out, w, c * d)
        return out

    def slot_terms(self, f_terms, i):
        """f_i = 1 (x) ... (x) f (x) ... (x) 1 with f in slot i."""
        if not 1 <= i <= self.n:
            raise SlotIndexError("slot {} out of range 1..{}".format(
                i, self.n))
        unit = self.unit_terms()
        return _expand([f_terms if p == i - 1 else unit
                        for p in range(self.n)])

    def map_terms(self, terms, matrix):
        """Apply the linear map of F with the given matrix in every slot."""
        images = [{k: c for k, c in enumerate(row) if c} for row in matrix]
        out = {}
        for word, c in terms.items():
            for w, d in _expand([images[b] for b in word]).items():
                accumulate(out, w, c * d)
        return out

    # parent protocol

    def multiply(self, a, b):
        return TensorElem(self, self.mul_terms(a.terms, b.terms))

    def one(self):
        return TensorElem(self, self.unit_word_terms())

    def format_key(self, word):
        if self.is_unit_word(word):
            return []
        return [format_word(self.frob, word)]

    def element(self, terms):
        return TensorElem(self, terms)

    def tensor(self, *elements):
        if len(elements) != self.n:
            raise SizeMismatch("need {} tensor factors, got {}".format(
                self.n, len(elements)))
        return TensorElem(self, _expand([e.terms for e in elements]))

    def slot(self, f, i):
        return TensorElem(self, self.slot_terms(f.terms, i))


def format_word(frob, word):
    return "b({})".format(",".join(frob.labels[b] for b in word))


class TensorElem(SparseElem):
    __slots__ = ()

    @property
    def n(self):
        return self.parent.n

    def parity(self):
        parities = {self.parent.word_parity(w) for w in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def trace(self):
        total = ZERO
        for w, c in self.terms.items():
            total = total + c * self.parent.word_trace(w)
        return total


@lru_cache(maxsize=None)
def tensor_space(frob, n):
    return TensorSpace(frob, n)


def superpermute(pi, t):
    """The Koszul-signed action ^pi t of a permutation on F^{(x)n}."""
    p = getattr(pi, 'images', pi)
    if len(p) != t.parent.n:
        raise SizeMismatch("permutation of {} letters on {} slots".format(
            len(p), t.parent.n))
    return t._new(permute_terms(t.parent, p, t.terms))


def permute_terms(space, p, terms):
    out = {}
    for word, c in terms.items():
        sign, w = space.permute_word(p, word)
        accumulate(out, w, c if sign > 0 else -c)
    return out


# wreath product


@immutable(eq=False)
class WreathAlgebra(object):
    frob = attrib()
    n = attrib()
    _cache = attrib(factory=dict, init=False, repr=False)

    def __repr__(self):
        return "<WreathAlgebra {}^{} x| S{}>".format(
            self.frob.name, self.n, self.n)

    @property
    def space(self):
        return tensor_space(self.frob, self.n)

    def mul_terms(self, left, right):
        space = self.space
        out = {}
        for (u, p), a in left.items():
            for (v, q), b in right.items():
                sign, pv = space.permute_word(p, v)
                pq = compose(p, q)
                ab = a * b if sign > 0 else -(a * b)
                for w, c in space.word_product(u, pv).items():
                    accumulate(out, (w, pq), ab * c)
        return out

    def multiply(self, a, b):
        return WreathElem(self, self.mul_terms(a.terms, b.terms))

    def one(self):
        ident = identity_perm(self.n)
        return WreathElem(self, {(w, ident): c for w, c in
                                 self.space.unit_word_terms().items()})

    def format_key(self, key):
        word, p = key
        factors = self.space.format_key(word)
        if p != identity_perm(self.n):
            factors.append("s" + format_perm(p))
        return factors

    def from_tensor(self, t, perm=None):
        p = perm or identity_perm(self.n)
        return WreathElem(self, {(w, p): c for w, c in t.terms.items()})

    def perm(self, p):
        p = getattr(p, 'images', p)
        return WreathElem(self, {(w, tuple(p)): c for w, c in
                                 self.space.unit_word_terms().items()})

    def simple(self, i):
        return self.perm(simple(self.n, i))


class WreathElem(SparseElem):
    __slots__ = ()


@lru_cache(maxsize=None)
def wreath_algebra(frob, n):
    return WreathAlgebra(frob, n)


def wreath_mul(a, b):
    if a.parent.n != b.parent.n:
        raise SizeMismatch("wreath products over {} and {} slots".format(
            a.parent.n, b.parent.n))
    return a * b


# slot spaces


def tensor_space_basis(frob, n, alpha):
    """Basis of F_psi^(alpha_1) (x) ... (x) F_psi^(alpha_n)."""
    from .frobenius import graded_piece

    if len(alpha) != n:
        raise SizeMismatch("exponent vector of length {} for {} slots"
                           .format(len(alpha), n))
    space = tensor_space(frob, n)
    pieces = [graded_piece(frob, a, fixed_only=True) for a in alpha]
    return [space.tensor(*factors) for factors in itertools.product(*pieces)]


def in_tensor_span(basis, t):
    echelon = SparseEchelon()
    for b in basis:
        echelon.add(b.terms)
    return echelon.contains(t.terms)


def first_slot_space_contains(frob, n, c, k):
    """
    Whether ``c`` lies in (F_psi^(k) (x) F_psi^(0) (x) ... )^{S_n^1}, the
    tensors of that shape fixed by s_2, ..., s_{n-1}.
    """
    alpha = (k,) + (0,) * (n - 1)
    if not in_tensor_span(tensor_space_basis(frob, n, alpha), c):
        return False
    return all(superpermute(simple(n, j), c) == c for j in range(2, n))
