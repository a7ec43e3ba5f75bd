# -*- coding: utf-8 -*-
"""
Reading elements back from the text that ``str()`` produces.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | name | 's[' perm ']' | 'b(' labels ')' | '(' expr ')'

Names are ``x<i>``, ``s<i>``, ``<label>_<i>``, a bare basis label and ``z``
(the root of unity of the algebra's conductor). Basis labels win over ``z``
and the longest match wins, so labels such as ``g^2`` read as one atom.
"""
import logging
import re

from .exceptions import AffWreathError, ParseError
from .perms import is_perm
from .scalars import ONE, CycScalar, as_scalar, is_scalar_like, root_of_unity
from .tensor import TensorElem

log = logging.getLogger(__name__)

_SPACE_RE = re.compile(r"\s+")
_INT_RE = re.compile(r"\d+")
_PERM_RE = re.compile(r"s\[([0-9,\s]*)\]")
_WORD_RE = re.compile(r"b\(([^()]*)\)")
_X_RE = re.compile(r"x(\d+)")
_S_RE = re.compile(r"s(\d+)")
_SLOT_RE = re.compile(r"_(\d+)")
_OPS = "()+-*/^"


def tokenize(text, labels=()):
    """Split ``text`` into ``(kind, value)`` tokens."""
    by_length = sorted((l for l in labels if not l.isdigit()), key=len,
                       reverse=True)
    tokens = []
    pos = 0
    while pos < len(text):
        space = _SPACE_RE.match(text, pos)
        if space:
            pos = space.end()
            continue
        candidates = []
        for kind, regex in (('perm', _PERM_RE), ('word', _WORD_RE)):
            m = regex.match(text, pos)
            if m:
                candidates.append((m.end(), 5, kind, m.group(1)))
        for label in by_length:
            if text.startswith(label, pos):
                end = pos + len(label)
                slot = _SLOT_RE.match(text, end)
                if slot:
                    candidates.append((slot.end(), 4, 'slot',
                                       (label, int(slot.group(1)))))
                else:
                    candidates.append((end, 4, 'label', label))
                break
        for kind, regex in (('x', _X_RE), ('s', _S_RE)):
            m = regex.match(text, pos)
            if m:
                candidates.append((m.end(), 3, kind, int(m.group(1))))
        if text.startswith("z", pos):
            candidates.append((pos + 1, 2, 'z', None))
        m = _INT_RE.match(text, pos)
        if m:
            candidates.append((m.end(), 1, 'int', int(m.group(0))))
        if candidates:
            end, _, kind, value = max(candidates,
                                      key=lambda c: (c[0], c[1]))
            tokens.append((kind, value))
            pos = end
        elif text[pos] in _OPS:
            tokens.append(('op', text[pos]))
            pos += 1
        else:
            raise ParseError("unexpected {!r} at position {} in {!r}".format(
                text[pos], pos, text))
    return tokens


class _Parser(object):

    def __init__(self, text, context):
        self.text = text
        self.context = context
        self.tokens = tokenize(text, context.frob.labels)
        self.pos = 0

    def error(self, message):
        return ParseError("{} in {!r}".format(message, self.text))

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of input")
        self.pos += 1
        return token

    def accept(self, op):
        if self.peek() == ('op', op):
            self.pos += 1
            return True
        return False

    def parse(self):
        if not self.tokens:
            raise self.error("empty element")
        value = self.expr()
        if self.peek() is not None:
            raise self.error("trailing {!r}".format(self.peek()[1]))
        return self.context.lift(value)

    def expr(self):
        value = self.term()
        while True:
            if self.accept('+'):
                value = self.add(value, self.term())
            elif self.accept('-'):
                value = self.add(value, self.negate(self.term()))
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept('*'):
                value = self.mul(value, self.unary())
            elif self.accept('/'):
                divisor = self.unary()
                if not is_scalar_like(divisor):
                    raise self.error("can only divide by scalars")
                value = self.mul(value, ONE / as_scalar(divisor))
            else:
                return value

    def unary(self):
        if self.accept('-'):
            return self.negate(self.unary())
        return self.power()

    def power(self):
        value = self.atom()
        if self.accept('^'):
            kind, exponent = self.take()
            if kind != 'int':
                raise self.error("exponent must be a nonnegative integer")
            if is_scalar_like(value):
                return as_scalar(value) ** exponent
            return value ** exponent
        return value

    def atom(self):
        kind, value = self.take()
        if kind == 'op':
            if value != '(':
                raise self.error("unexpected {!r}".format(value))
            inner = self.expr()
            if not self.accept(')'):
                raise self.error("missing ')'")
            return inner
        if kind == 'int':
            return CycScalar.rational(value)
        if kind == 'z':
            conductor = self.context.frob.conductor
            if conductor == 1:
                raise self.error("z needs a conductor above 1")
            return root_of_unity(conductor)
        try:
            return self.context.atom(kind, value)
        except AffWreathError as e:
            raise self.error(str(e))

    # arithmetic with scalars kept apart until they meet an element

    def add(self, a, b):
        if is_scalar_like(a) and is_scalar_like(b):
            return as_scalar(a) + as_scalar(b)
        return self.context.lift(a) + self.context.lift(b)

    def mul(self, a, b):
        if is_scalar_like(a) and is_scalar_like(b):
            return as_scalar(a) * as_scalar(b)
        if is_scalar_like(a):
            return b.scale(a)
        if is_scalar_like(b):
            return a.scale(b)
        return a * b

    def negate(self, a):
        return -as_scalar(a) if is_scalar_like(a) else -a


class _AlgContext(object):

    def __init__(self, frob):
        self.frob = frob

    def lift(self, value):
        if is_scalar_like(value):
            return self.frob.one().scale(value)
        return value

    def atom(self, kind, value):
        if kind == 'label':
            return self.frob.basis_element(self.frob.index_of(value))
        raise ParseError("{} is not an element of {}".format(
            kind, self.frob.name))


class _AwpaContext(object):

    def __init__(self, algebra):
        self.algebra = algebra
        self.frob = algebra.frob

    def lift(self, value):
        if is_scalar_like(value):
            return self.algebra.one().scale(value)
        return value

    def atom(self, kind, value):
        A = self.algebra
        F = self.frob
        if kind == 'x':
            return A.x(value)
        if kind == 's':
            if not 1 <= value < A.n:
                raise ParseError("s{} is not a generator of S_{}".format(
                    value, A.n))
            return A.s(value)
        if kind == 'perm':
            try:
                images = tuple(int(x) for x in value.split(",") if x.strip())
            except ValueError:
                raise ParseError("bad permutation s[{}]".format(value))
            if len(images) != A.n or not is_perm(images):
                raise ParseError("s[{}] is not a permutation of {}".format(
                    value, A.n))
            return A.perm(images)
        if kind == 'word':
            names = [x.strip() for x in value.split(",")]
            if len(names) != A.n:
                raise ParseError("b({}) needs {} labels".format(value, A.n))
            word = tuple(F.index_of(x) for x in names)
            return A.monomial(A.zero_alpha, word)
        if kind == 'slot':
            label, i = value
            return A.slot(F.basis_element(F.index_of(label)), i)
        if kind == 'label':
            if A.n != 1:
                raise ParseError("write {}_i to place {} in a slot of A_{}"
                                 .format(value, value, A.n))
            return A.slot(F.basis_element(F.index_of(value)), 1)
        raise ParseError("unexpected {}".format(kind))


def parse_alg_elem(frob, text):
    """An element of F from ``"2*c + 1"`` style text."""
    return _Parser(text, _AlgContext(frob)).parse()


def parse_element(algebra, text):
    """An element of A_n(F) from the text ``str()`` produces."""
    value = _Parser(text, _AwpaContext(algebra)).parse()
    log.debug("parsed %r as %s", text, value)
    return value


def parse_tensor(space, text):
    """An element of F^{(x)n}, written as in A_n(F) without x or s."""
    from .awpa import affine_wreath
    A = affine_wreath(space.frob, space.n)
    a = parse_element(A, text)
    if any(any(alpha) or p != A.identity for alpha, _, p in a.terms):
        raise ParseError("{!r} is not in {}^{}".format(text, space.frob.name,
                                                       space.n))
    return TensorElem(space, {w: c for (_, w, _), c in a.terms.items()})


def parse_cyclotomic(quotient, text):
    return quotient.reduce(parse_element(quotient.algebra, text))

