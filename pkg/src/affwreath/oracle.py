# -*- coding: utf-8 -*-
"""
The faithful module V = P_n(F) (x) kS_n.

Polynomials act by left multiplication on the first factor and a simple
reflection acts by ``s_i (q (x) w) = (s_i q) (x) s_i w - D_i(q) (x) w``,
with D_i taken from the twisted Leibniz rule rather than the closed forms
the multiplication engine uses. Sending ``a`` to ``a (1 (x) 1)`` is a
bijection on normal-form monomials, so comparing ``(ab)(1 (x) 1)`` with
``a(b(1 (x) 1))`` checks the engine independently.
"""
import logging
from functools import lru_cache

from attr import attrib

from .awpa import _leibniz, affine_wreath
from .decorators import immutable
from .exceptions import SizeMismatch
from .perms import left_simple, reduced_word_of
from .scalars import ONE
from .types import SparseElem, accumulate

log = logging.getLogger(__name__)


@immutable(eq=False)
class PolyModule(object):
    frob = attrib()
    n = attrib()

    def __repr__(self):
        return "<PolyModule V_{}({})>".format(self.n, self.frob.name)

    @property
    def algebra(self):
        return affine_wreath(self.frob, self.n)

    def generator(self):
        """1 (x) 1."""
        A = self.algebra
        return PolyModElem(self, {(alpha, w, A.identity): c for (alpha, w), c
                                  in A.poly_x(A.zero_alpha).items()})

    def format_key(self, key):
        return self.algebra.format_key(key)

    def multiply(self, a, b):
        raise TypeError("V is a module, not an algebra; use oracle_act")

    def one(self):
        return self.generator()

    # actions on coefficient dicts keyed (alpha, word, w)

    def act_poly(self, poly, terms):
        A = self.algebra
        out = {}
        for (beta, v, w), c in terms.items():
            for (gamma, u), d in A.poly_mul(poly, {(beta, v): ONE}).items():
                accumulate(out, (gamma, u, w), c * d)
        return out

    def act_simple(self, i, terms):
        A = self.algebra
        out = {}
        for (beta, v, w), c in terms.items():
            q = {(beta, v): ONE}
            for (gamma, u), d in A.poly_act(i, q).items():
                accumulate(out, (gamma, u, left_simple(i, w)), c * d)
            for (gamma, u), d in _leibniz(A, i, beta, v).items():
                accumulate(out, (gamma, u, w), -c * d)
        return out

    def act_perm(self, p, terms):
        for i in reversed(reduced_word_of(p)):
            terms = self.act_simple(i, terms)
        return terms


class PolyModElem(SparseElem):
    __slots__ = ()


@lru_cache(maxsize=None)
def poly_module(frob, n):
    return PolyModule(frob, n)


def oracle_act(a, v):
    """The action of ``a`` in A_n(F) on ``v`` in V."""
    module = v.parent
    if a.parent.n != module.n or a.parent.frob is not module.frob:
        raise SizeMismatch("{!r} does not act on {!r}".format(a.parent,
                                                              module))
    out = {}
    for (alpha, word, p), c in a.terms.items():
        moved = module.act_perm(p, v.terms)
        moved = module.act_poly({(alpha, word): ONE}, moved)
        for key, d in moved.items():
            accumulate(out, key, c * d)
    return PolyModElem(module, out)


def oracle_image(a):
    """a (1 (x) 1), which has the same keys as the normal form of a."""
    module = poly_module(a.parent.frob, a.parent.n)
    return oracle_act(a, module.generator())


def oracle_product(a, b):
    """The product ab read back from a (b (1 (x) 1)) as an element of A_n."""
    v = oracle_act(a, oracle_image(b))
    return type(a)(a.parent, dict(v.terms))
