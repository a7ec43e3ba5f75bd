# -*- coding: utf-8 -*-
"""
Symmetric group combinatorics in one-line notation.

Permutations are tuples of the images of ``1..n``; ``compose(p, q)`` is the
function ``i -> p(q(i))``, so ``s_i`` acting on the right of ``p`` swaps the
entries in positions ``i`` and ``i+1``. Engine code works on the raw
tuples; ``Perm`` wraps them for the public API.
"""
import itertools
import logging
from functools import lru_cache
from math import factorial

from attr import attrib

from .decorators import immutable
from .exceptions import BadComposition, ParseError, SizeMismatch

log = logging.getLogger(__name__)


# tuple helpers


def identity_perm(n):
    return tuple(range(1, n + 1))


def simple(n, i):
    if not 1 <= i < n:
        raise IndexError("s_{} is not defined in S_{}".format(i, n))
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def transposition(n, i, j):
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def compose(p, q):
    if len(p) != len(q):
        raise SizeMismatch("cannot compose permutations of {} and {} letters"
                           .format(len(p), len(q)))
    return tuple(p[x - 1] for x in q)


def inverse_of(p):
    inv = [0] * len(p)
    for i, x in enumerate(p, 1):
        inv[x - 1] = i
    return tuple(inv)


def right_simple(p, i):
    """p * s_i."""
    p = list(p)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def left_simple(i, p):
    """s_i * p: swap the values i and i+1."""
    return tuple(i + 1 if x == i else (i if x == i + 1 else x) for x in p)


def length_of(p):
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


@lru_cache(maxsize=None)
def reduced_word_of(p):
    """Indices ``i_1..i_k`` with ``p = s_{i_1} ... s_{i_k}`` and k minimal."""
    word = []
    q = list(p)
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def from_word(n, word):
    p = identity_perm(n)
    for i in word:
        p = right_simple(p, i)
    return p


def is_perm(p):
    return sorted(p) == list(range(1, len(p) + 1))


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def superpermute_word(p, word, parities):
    """
    Move ``word[i]`` to position ``p(i)``; returns ``(sign, new word)``.

    The sign collects ``(-1)^{|w_i||w_j|}`` for every pair whose order
    ``p`` inverts.
    """
    n = len(p)
    out = [None] * n
    for i, x in enumerate(p):
        out[x - 1] = word[i]
    odd = [parities[w] for w in word]
    flips = 0
    for a in range(n):
        if not odd[a]:
            continue
        for b in range(a + 1, n):
            if odd[b] and p[a] > p[b]:
                flips += 1
    return (-1 if flips % 2 else 1), tuple(out)


def permute_exponents(p, alpha):
    out = [0] * len(alpha)
    for i, x in enumerate(p):
        out[x - 1] = alpha[i]
    return tuple(out)


# public model


def _check_perm(instance, attribute, value):
    if not is_perm(value):
        raise SizeMismatch("{!r} is not a permutation in one-line notation"
                           .format(value))


@immutable
class Perm(object):
    images = attrib(converter=tuple, validator=_check_perm)

    @classmethod
    def identity(cls, n):
        return cls(identity_perm(n))

    @classmethod
    def simple(cls, n, i):
        return cls(simple(n, i))

    @classmethod
    def from_word(cls, n, word):
        return cls(from_word(n, word))

    @classmethod
    def parse(cls, text):
        """Read ``"[2,1,3]"``."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError("permutation must look like [2,1,3]: {!r}"
                             .format(text))
        try:
            images = [int(x) for x in body[1:-1].split(",") if x.strip()]
        except ValueError:
            raise ParseError("bad permutation {!r}".format(text))
        if not is_perm(images):
            raise ParseError("{!r} is not a permutation".format(text))
        return cls(images)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        return Perm(compose(self.images, other.images))

    def inverse(self):
        return Perm(inverse_of(self.images))

    def length(self):
        return length_of(self.images)

    def reduced_word(self):
        return reduced_word_of(self.images)

    def is_identity(self):
        return self.images == identity_perm(self.n)

    def __str__(self):
        return format_perm(self.images)


def format_perm(p):
    return "[{}]".format(",".join(str(x) for x in p))


# compositions and Young subgroups


def check_composition(comp, n=None):
    comp = tuple(int(c) for c in comp)
    if not comp or any(c < 1 for c in comp):
        raise BadComposition("{} is not a composition".format(list(comp)))
    if n is not None and sum(comp) != n:
        raise BadComposition("{} is not a composition of {}".format(
            list(comp), n))
    return comp


def compositions(n):
    """All compositions of n, in lexicographic order."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return sorted(out)


def block_of(comp):
    """Map position -> block number for a composition."""
    labels = []
    for b, size in enumerate(comp):
        labels.extend([b] * size)
    return tuple(labels)


def young_subgroup(comp):
    n = sum(comp)
    blocks = block_of(comp)
    return [p for p in all_perms(n)
            if all(blocks[x - 1] == blocks[i] for i, x in enumerate(p))]


def young_order(comp):
    total = 1
    for c in comp:
        total *= factorial(c)
    return total


def _runs(labels):
    comp = []
    previous = object()
    for label in labels:
        if label == previous:
            comp[-1] += 1
        else:
            comp.append(1)
            previous = label
    return tuple(comp)


def is_min_double_coset(p, mu, nu):
    mu_blocks, nu_blocks = block_of(mu), block_of(nu)
    inv = inverse_of(p)
    n = len(p)
    for j in range(n - 1):
        if nu_blocks[j] == nu_blocks[j + 1] and p[j] > p[j + 1]:
            return False
        if mu_blocks[j] == mu_blocks[j + 1] and inv[j] > inv[j + 1]:
            return False
    return True


def min_double_cosets(mu, nu):
    """
    Minimal length representatives of the double cosets S_mu \\ S_n / S_nu.

    Each entry is ``(p, mu_cap, nu_cap)`` with ``S_mu & p S_nu p^-1`` equal
    to the Young subgroup of ``mu_cap`` and ``p^-1 S_mu p & S_nu`` equal to
    that of ``nu_cap``.
    """
    mu = check_composition(mu)
    nu = check_composition(nu, sum(mu))
    mu_blocks, nu_blocks = block_of(mu), block_of(nu)
    out = []
    for p in all_perms(sum(mu)):
        if not is_min_double_coset(p, mu, nu):
            continue
        inv = inverse_of(p)
        mu_cap = _runs([(mu_blocks[i], nu_blocks[inv[i] - 1])
                        for i in range(len(p))])
        nu_cap = _runs([(nu_blocks[j], mu_blocks[p[j] - 1])
                        for j in range(len(p))])
        out.append((p, mu_cap, nu_cap))
    log.debug("%d double cosets for %s, %s", len(out), mu, nu)
    return out


def double_coset(p, mu, nu):
    left, right = young_subgroup(mu), young_subgroup(nu)
    return {compose(compose(a, p), b) for a in left for b in right}


def bruhat_leq(sigma, pi):
    """sigma <= pi iff sigma is the product of a subword of a reduced word
    of pi."""
    sigma = getattr(sigma, 'images', sigma)
    pi = getattr(pi, 'images', pi)
    if len(sigma) != len(pi):
        raise SizeMismatch("cannot compare permutations of {} and {} letters"
                           .format(len(sigma), len(pi)))
    reachable = {identity_perm(len(pi))}
    for i in reduced_word_of(pi):
        reachable |= {right_simple(x, i) for x in reachable}
    return sigma in reachable
