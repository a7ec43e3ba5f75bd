# -*- coding: utf-8 -*-
"""
Built-in Frobenius superalgebras.

``builtin(name, **params)`` returns the algebra; every constructor is
also importable on its own.
"""
import logging
from functools import lru_cache

from .exceptions import BadParams
from .frobenius import make_algebra
from .perms import all_perms, compose, identity_perm, reduced_word_of
from .scalars import root_of_unity

log = logging.getLogger(__name__)


def _cube(dim):
    return [[[0] * dim for _ in range(dim)] for _ in range(dim)]


def _unit_vector(dim, index):
    v = [0] * dim
    v[index] = 1
    return v


@lru_cache(maxsize=None)
def trivial():
    """The ground field: one basis vector, tr(1) = 1."""
    return make_algebra("k", ["1"], [0], [0], [[[1]]], [1])


@lru_cache(maxsize=None)
def clifford():
    """Cl = <c | c^2 = 1> with c odd, tr(1) = 1, tr(c) = 0."""
    cube = _cube(2)
    cube[0][0][0] = 1
    cube[0][1][1] = 1
    cube[1][0][1] = 1
    cube[1][1][0] = 1
    return make_algebra("Cl", ["1", "c"], [0, 0], [0, 1], cube, [1, 0])


@lru_cache(maxsize=None)
def dual_numbers(degree=2):
    """k[z]/(z^2) with |z| = degree and tr(a + bz) = b."""
    if degree < 0:
        raise BadParams("degree of z must be nonnegative")
    cube = _cube(2)
    cube[0][0][0] = 1
    cube[0][1][1] = 1
    cube[1][0][1] = 1
    return make_algebra("k[z]/(z^2)", ["1", "z"], [0, degree], [0, 0],
                        cube, [0, 1])


def _check_group_table(table):
    order = len(table)
    if order == 0 or any(len(row) != order for row in table):
        raise BadParams("group table must be square and nonempty")
    if any(not 0 <= x < order for row in table for x in row):
        raise BadParams("group table is not closed")
    identity = None
    for e in range(order):
        if all(table[e][g] == g and table[g][e] == g for g in range(order)):
            identity = e
            break
    if identity is None:
        raise BadParams("group table has no identity")
    for a in range(order):
        for b in range(order):
            for c in range(order):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise BadParams("group table is not associative at "
                                    "({}, {}, {})".format(a, b, c))
    for g in range(order):
        if identity not in table[g]:
            raise BadParams("element {} has no inverse".format(g))
    return identity


def group_algebra(table, labels=None, name="kG"):
    """
    Group algebra from a multiplication table of indices, with
    tr(sum a_g g) = a_e.
    """
    table = [list(row) for row in table]
    identity = _check_group_table(table)
    order = len(table)
    labels = list(labels) if labels else ["g{}".format(i)
                                          for i in range(order)]
    if len(labels) != order:
        raise BadParams("{} labels for a group of order {}".format(
            len(labels), order))
    cube = _cube(order)
    for a in range(order):
        for b in range(order):
            cube[a][b][table[a][b]] = 1
    log.debug("group algebra %s of order %d", name, order)
    return make_algebra(name, labels, [0] * order, [0] * order, cube,
                        _unit_vector(order, identity),
                        unit=_unit_vector(order, identity))


def _power_label(symbol, k):
    if k == 0:
        return ""
    return symbol if k == 1 else "{}^{}".format(symbol, k)


@lru_cache(maxsize=None)
def cyclic_group(m=2):
    if m < 1:
        raise BadParams("cyclic group order must be positive")
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    labels = [_power_label("g", k) or "1" for k in range(m)]
    return group_algebra(table, labels, name="kZ/{}".format(m))


@lru_cache(maxsize=None)
def symmetric_group(n=3):
    """Group algebra of S_n; elements are labelled by reduced words in
    letters a, b, c, ... for s_1, s_2, s_3, ..."""
    if not 1 <= n <= 5:
        raise BadParams("symmetric_group supports 1 <= n <= 5")
    elements = sorted(all_perms(n), key=lambda p: (len(reduced_word_of(p)),
                                                   reduced_word_of(p)))
    index = {p: i for i, p in enumerate(elements)}
    table = [[index[compose(p, q)] for q in elements] for p in elements]
    labels = ["".join(chr(ord('a') + i - 1) for i in reduced_word_of(p))
              or "e" for p in elements]
    assert elements[0] == identity_perm(n)
    return group_algebra(table, labels, name="kS{}".format(n))


@lru_cache(maxsize=None)
def taft(q=2, degree=1):
    """
    Taft algebra T_q: g^q = 1, y^q = 0, yg = w gy with w a primitive q-th
    root of unity. Basis y^k g^l sits at index k*q + l, |y| = degree and
    tr(y^k g^l) = 1 only for k = q-1, l = 0.
    """
    if q < 2:
        raise BadParams("taft requires q >= 2")
    if degree < 0:
        raise BadParams("degree of y must be nonnegative")
    dim = q * q
    cube = _cube(dim)
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if a + c >= q:
                        continue
                    # g^b y^c = w^{-bc} y^c g^b
                    cube[a * q + b][c * q + d][(a + c) * q + (b + d) % q] = \
                        root_of_unity(q, -b * c)
    labels = [(_power_label("y", k) + _power_label("g", l)) or "1"
              for k in range(q) for l in range(q)]
    degrees = [k * degree for k in range(q) for l in range(q)]
    trace = [1 if (k == q - 1 and l == 0) else 0
             for k in range(q) for l in range(q)]
    return make_algebra("T{}".format(q), labels, degrees, [0] * dim, cube,
                        trace, unit=_unit_vector(dim, 0), conductor=q)


BUILTINS = {
    'trivial': trivial,
    'clifford': clifford,
    'dual_numbers': dual_numbers,
    'group_algebra': group_algebra,
    'cyclic_group': cyclic_group,
    'symmetric_group': symmetric_group,
    'taft': taft,
}


def builtin(name, **params):
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise BadParams("unknown builtin algebra {!r}; choose from {}".format(
            name, ", ".join(sorted(BUILTINS))))
    try:
        return factory(**params)
    except TypeError as e:
        raise BadParams("bad parameters for {}: {}".format(name, e))
