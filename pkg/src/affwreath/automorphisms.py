# -*- coding: utf-8 -*-
"""
Automorphisms of A_n(F) and the anti-isomorphism onto A_n(F)^op.

``apply_automorphism(kind, a, **params)`` with kind one of

* ``reverse``: x_i -> x_{n+1-i}, f -> (w_0 f), s_j -> -s_{n-j};
* ``frobenius_induced``: a Frobenius automorphism ``matrix`` of F in every
  slot;
* ``antihom``: a Frobenius anti-automorphism ``matrix`` of F, extended by
  p -> p^-1 and reversing products;
* ``trace_change``: x_i -> x_i u_i into A_n(F') where F' has the trace
  f -> tr(f u);
* ``shift``: x_i -> x_i + c^(i) for ``c`` in the first-slot space of
  degree 1.
"""
import logging
from functools import lru_cache
from inspect import signature

from .awpa import affine_wreath
from .exceptions import (
    AlgebraError,
    BadAutomorphismParams,
    BadParams,
    SingularMatrix,
)
from .frobenius import AlgElem, check_frobenius_morphism, retrace
from .linalg import inverse
from .perms import compose, from_word, inverse_of, length_of
from .scalars import ONE, as_scalar
from .tensor import TensorElem, first_slot_space_contains, superpermute
from .types import accumulate

log = logging.getLogger(__name__)


def _reverse(a):
    A = a.parent
    n = A.n
    w0 = tuple(range(n, 0, -1))
    space = A.space
    out = {}
    for (alpha, word, p), c in a.terms.items():
        sign, w = space.permute_word(w0, word)
        q = compose(compose(w0, p), w0)
        if length_of(p) % 2:
            sign = -sign
        accumulate(out, (tuple(reversed(alpha)), w, q),
                   c if sign > 0 else -c)
    return a._new(out)


def _check_matrix(F, matrix, anti):
    try:
        verdict = check_frobenius_morphism(F, F, matrix, anti=anti)
    except AlgebraError as e:
        raise BadAutomorphismParams(str(e))
    if not verdict.valid or not verdict.nakayama_compatible:
        raise BadAutomorphismParams(
            "not a Frobenius {}morphism: {}".format(
                "anti-" if anti else "", "; ".join(verdict.failures)))
    try:
        inverse([[as_scalar(c) for c in row] for row in matrix])
    except SingularMatrix:
        raise BadAutomorphismParams("map is not invertible")
    return [[as_scalar(c) for c in row] for row in matrix]


def _frobenius_induced(a, matrix):
    A = a.parent
    matrix = _check_matrix(A.frob, matrix, anti=False)
    out = {}
    for (alpha, word, p), c in a.terms.items():
        for w, d in A.space.map_terms({word: ONE}, matrix).items():
            accumulate(out, (alpha, w, p), c * d)
    return a._new(out)


def _antihom(a, matrix):
    """x^alpha b p -> p^-1 tau(b) x^alpha."""
    A = a.parent
    matrix = _check_matrix(A.frob, matrix, anti=True)
    total = A.zero()
    for (alpha, word, p), c in a.terms.items():
        image = A.word(A.space.element(
            A.space.map_terms({word: ONE}, matrix)))
        total = total + (A.perm(inverse_of(p)) * image
                         * A.x_power(alpha)).scale(c)
    return total


@lru_cache(maxsize=None)
def _retraced(F, coords):
    return retrace(F, F.element(list(coords)))


def trace_change_target(F, u):
    coords = tuple(u.vector()) if isinstance(u, AlgElem) else tuple(
        as_scalar(c) for c in u)
    try:
        return _retraced(F, coords), coords
    except BadParams as e:
        raise BadAutomorphismParams(str(e))


def _trace_change(a, u):
    A = a.parent
    F2, coords = trace_change_target(A.frob, u)
    B = affine_wreath(F2, A.n)
    u2 = F2.element(list(coords))
    powers = {}

    def xu_power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = (B.x(i) * B.slot(u2, i)) ** e
        return powers[(i, e)]

    total = B.zero()
    for (alpha, word, p), c in a.terms.items():
        term = B.one()
        for i, e in enumerate(alpha, 1):
            if e:
                term = term * xu_power(i, e)
        term = term * B.monomial(B.zero_alpha, word, p)
        total = total + term.scale(c)
    return total


def shift_parameter(A, c):
    """Normalize ``c`` to a tensor and validate it for the shift map."""
    if isinstance(c, AlgElem):
        c = A.space.slot(c, 1)
    if not isinstance(c, TensorElem) or c.parent is not A.space:
        raise BadAutomorphismParams("shift needs an element of {}^{}"
                                    .format(A.frob.name, A.n))
    if any(A.space.word_parity(w) for w in c.terms):
        raise BadAutomorphismParams("shift parameter must be even")
    if any(A.space.word_degree(w) != A.frob.delta for w in c.terms):
        raise BadAutomorphismParams("shift parameter must have degree {}"
                                    .format(A.frob.delta))
    if A.n and not first_slot_space_contains(A.frob, A.n, c, 1):
        raise BadAutomorphismParams(
            "shift parameter is not in the first-slot space of degree 1")
    return c


def shift_images(A, c):
    """The images x_i + c^(i), c^(i) = (s_{i-1} ... s_1) c."""
    images = []
    for i in range(1, A.n + 1):
        p = from_word(A.n, range(i - 1, 0, -1))
        images.append(A.x(i) + A.word(superpermute(p, c)))
    return images


def _shift(a, c):
    A = a.parent
    c = shift_parameter(A, c)
    images = shift_images(A, c)
    powers = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = images[i - 1] ** e
        return powers[(i, e)]

    total = A.zero()
    for (alpha, word, p), coeff in a.terms.items():
        term = A.one()
        for i, e in enumerate(alpha, 1):
            if e:
                term = term * power(i, e)
        term = term * A.monomial(A.zero_alpha, word, p)
        total = total + term.scale(coeff)
    return total


AUTOMORPHISMS = {
    'reverse': _reverse,
    'frobenius_induced': _frobenius_induced,
    'antihom': _antihom,
    'trace_change': _trace_change,
    'shift': _shift,
}


def apply_automorphism(kind, a, **params):
    try:
        func = AUTOMORPHISMS[kind]
    except KeyError:
        raise BadAutomorphismParams("unknown automorphism {!r}; choose from "
                                    "{}".format(kind,
                                                ", ".join(AUTOMORPHISMS)))
    try:
        signature(func).bind(a, **params)
    except TypeError as e:
        raise BadAutomorphismParams("bad parameters for {}: {}".format(
            kind, e))
    return func(a, **params)
