# -*- coding: utf-8 -*-
from attr import attrib
from attr.exceptions import FrozenInstanceError

from .decorators import immutable
from .exceptions import AlgebraMismatch
from .scalars import as_scalar, format_sum, is_scalar_like


class TermDict(dict):
    """Read-only coefficient mapping ``key -> CycScalar`` with no zeros."""

    __slots__ = ()

    def __setitem__(self, key, value):
        raise FrozenInstanceError()

    def __delitem__(self, key):
        raise FrozenInstanceError()

    def pop(self, key, *args):
        raise FrozenInstanceError()

    def popitem(self):
        raise FrozenInstanceError()

    def setdefault(self, key, default=None):
        raise FrozenInstanceError()

    def update(self, *args, **kwargs):
        raise FrozenInstanceError()

    def clear(self):
        raise FrozenInstanceError()


def accumulate(terms, key, coeff):
    """Add ``coeff`` at ``key`` of a plain dict, dropping cancelled keys."""
    old = terms.get(key)
    if old is None:
        if coeff:
            terms[key] = coeff
    else:
        total = old + coeff
        if total:
            terms[key] = total
        else:
            del terms[key]


def _to_terms(value):
    if isinstance(value, TermDict):
        return value
    return TermDict((k, as_scalar(c)) for k, c in value.items() if c)


@immutable(eq=False)
class SparseElem(object):
    """
    Sparse linear combination of keys over the cyclotomic scalars.

    The parent supplies ``multiply(a, b)`` and ``format_key(key)``; every
    concrete element class only fixes what a key means.
    """
    parent = attrib()
    terms = attrib(converter=_to_terms)

    # construction

    def _new(self, terms):
        return type(self)(self.parent, terms)

    @classmethod
    def zero(cls, parent):
        return cls(parent, TermDict())

    @classmethod
    def monomial(cls, parent, key, coeff=1):
        return cls(parent, {key: as_scalar(coeff)})

    # inspection

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def sorted_items(self, reverse=False):
        return sorted(self.terms.items(), key=lambda kv: kv[0],
                      reverse=reverse)

    def coefficient(self, key):
        return self.terms.get(key, as_scalar(0))

    def filter(self, predicate):
        return self._new({k: c for k, c in self.terms.items()
                          if predicate(k)})

    # arithmetic

    def _check_parent(self, other):
        if type(other) is not type(self) or other.parent is not self.parent:
            raise AlgebraMismatch(
                "cannot combine {} over {!r} with {} over {!r}".format(
                    type(self).__name__, self.parent,
                    type(other).__name__, getattr(other, 'parent', None)))

    def __add__(self, other):
        if is_scalar_like(other) and not as_scalar(other):
            return self
        self._check_parent(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            accumulate(terms, key, coeff)
        return self._new(terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if is_scalar_like(other) and not as_scalar(other):
            return self
        return self + (-other)

    def scale(self, scalar):
        scalar = as_scalar(scalar)
        if not scalar:
            return self.zero(self.parent)
        return self._new({k: c * scalar for k, c in self.terms.items()})

    def __mul__(self, other):
        if is_scalar_like(other):
            return self.scale(other)
        self._check_parent(other)
        return self.parent.multiply(self, other)

    def __rmul__(self, other):
        if is_scalar_like(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        result = self.parent.one()
        for _ in range(exponent):
            result = result * self
        return result

    # comparison

    def __eq__(self, other):
        if is_scalar_like(other):
            other = as_scalar(other)
            if not other:
                return not self.terms
            return self == self.parent.one().scale(other)
        if type(other) is not type(self) or other.parent is not self.parent:
            return False
        return self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    # text

    def __str__(self):
        return format_sum(
            (coeff, self.parent.format_key(key))
            for key, coeff in self.sorted_items(reverse=True))

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, str(self))
