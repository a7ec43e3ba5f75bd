# -*- coding: utf-8 -*-
"""
Exact arithmetic in the cyclotomic fields Q(z_m).

A scalar stores its conductor ``m`` and its coordinates in the power basis
``1, z, ..., z^(phi(m)-1)`` reduced modulo the m-th cyclotomic polynomial.
Rational values are always demoted to conductor 1, and scalars of
different conductors are compared and combined inside Q(z_lcm).
"""
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from attr import attrib
from sympy import Poly, Symbol, cyclotomic_poly, factorint, totient
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert

from .decorators import immutable
from .exceptions import BadParams, DivisionByZero, ParseError

_Z = Symbol('z')
_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_SCALAR_CHARS_RE = re.compile(r"^[0-9z+\-*/^() ]+$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=None)
def _phi(m):
    return [QQ(int(c)) for c in cyclotomic_poly(m, polys=True).all_coeffs()]


@lru_cache(maxsize=None)
def euler_phi(m):
    return int(totient(m))


@lru_cache(maxsize=None)
def mobius(m):
    exponents = factorint(m).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def lcm(a, b):
    return a * b // gcd(a, b)


def _qq(value):
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    try:
        return QQ.from_sympy(value)
    except Exception:
        raise TypeError("not a rational value: {!r}".format(value))


def _to_dup(low):
    return dup_strip(list(reversed(low)))


def _reduce(m, low):
    """Reduce low-first coordinates modulo Phi_m, padded to phi(m)."""
    size = euler_phi(m)
    if m == 1:
        total = QQ(0)
        for c in low:
            total += c
        return (total,)
    if len(low) > size:
        rem = dup_rem(_to_dup(low), _phi(m), QQ)
        low = list(reversed(rem))
    low = list(low) + [QQ(0)] * (size - len(low))
    return tuple(low)


def _from_dup(m, dup):
    return _reduce(m, list(reversed(dup)))


def _trace_weight(m, k):
    q = m // gcd(m, k)
    return QQ(mobius(q), euler_phi(q))


@immutable(eq=False)
class CycScalar(object):
    conductor = attrib()
    coeffs = attrib()

    # construction

    @classmethod
    def from_coeffs(cls, conductor, coeffs):
        low = _reduce(conductor, [_qq(c) for c in coeffs])
        return cls._canonical(conductor, low)

    @classmethod
    def _canonical(cls, conductor, low):
        if conductor > 1 and all(c == 0 for c in low[1:]):
            return cls(1, (low[0],))
        return cls(conductor, tuple(low))

    @classmethod
    def rational(cls, value):
        return cls(1, (_qq(value),))

    # field structure

    def embed(self, conductor):
        """Coordinates of this scalar inside Q(z_conductor)."""
        if conductor == self.conductor:
            return self.coeffs
        if conductor % self.conductor:
            raise BadParams("Q(z_{}) does not embed in Q(z_{})".format(
                self.conductor, conductor))
        step = conductor // self.conductor
        low = [QQ(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            low[k * step] = c
        return _reduce(conductor, low)

    def _unify(self, other):
        if self.conductor == other.conductor:
            return self.conductor, self.coeffs, other.coeffs
        m = lcm(self.conductor, other.conductor)
        return m, self.embed(m), other.embed(m)

    def is_rational(self):
        return self.conductor == 1

    def rational_value(self):
        if self.conductor != 1:
            raise ValueError("{} is not rational".format(self))
        return self.coeffs[0]

    def normalized_trace(self):
        """Trace down to Q divided by the field degree; embedding invariant."""
        total = QQ(0)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                total += c * _trace_weight(self.conductor, k)
        return total

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._unify(other)
        return CycScalar._canonical(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._unify(other)
        return CycScalar._canonical(m, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycScalar(1, (self.coeffs[0] * other.coeffs[0],))
        if other.conductor == 1:
            c = other.coeffs[0]
            return CycScalar._canonical(
                self.conductor, [x * c for x in self.coeffs])
        if self.conductor == 1:
            return other * self
        m, a, b = self._unify(other)
        product = dup_mul(_to_dup(a), _to_dup(b), QQ)
        return CycScalar._canonical(m, _from_dup(m, product))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("division by zero scalar")
        if self.conductor == 1:
            return CycScalar(1, (QQ(1) / self.coeffs[0],))
        m = self.conductor
        inv = dup_invert(_to_dup(self.coeffs), _phi(m), QQ)
        return CycScalar._canonical(m, _from_dup(m, inv))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # comparison

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    __nonzero__ = __bool__

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        _, a, b = self._unify(other)
        return a == b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        trace = self.normalized_trace()
        return hash((int(trace.numerator), int(trace.denominator)))

    def __lt__(self, other):
        return self.rational_value() < _coerce(other).rational_value()

    # text

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "CycScalar({!r}, conductor={})".format(str(self),
                                                      self.conductor)


def _coerce(value):
    if isinstance(value, CycScalar):
        return value
    if is_scalar_like(value):
        return CycScalar.rational(value)
    return None


def is_scalar_like(value):
    return isinstance(value, (CycScalar, int, Fraction, QQ.dtype))


def as_scalar(value, conductor=None):
    """Coerce ints, fractions, QQ values and scalar strings to CycScalar."""
    if isinstance(value, CycScalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value, conductor)
    if is_scalar_like(value):
        return CycScalar.rational(value)
    raise TypeError("cannot use {!r} as a scalar".format(value))


ZERO = CycScalar.rational(0)
ONE = CycScalar.rational(1)


def root_of_unity(m, power=1):
    """Return z_m^power; root_of_unity(m, m) == 1."""
    if m < 1:
        raise BadParams("root of unity order must be positive, got {}"
                        .format(m))
    power %= m
    low = [0] * power + [1]
    return CycScalar.from_coeffs(m, low)


def scalar_arith(a, b, op):
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise BadParams("unknown scalar operation {!r}".format(op))


def sum_scalars(values):
    total = ZERO
    for value in values:
        total = total + value
    return total


# text format


def _format_rational(value):
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else "{}/{}".format(num, den)


def format_scalar(scalar):
    if scalar.conductor == 1:
        return _format_rational(scalar.coeffs[0])
    parts = []
    for k in reversed(range(len(scalar.coeffs))):
        c = scalar.coeffs[k]
        if c == 0:
            continue
        power = "" if k == 0 else ("z" if k == 1 else "z^{}".format(k))
        mag = _format_rational(abs(c))
        if not power:
            body = mag
        elif mag == "1":
            body = power
        else:
            body = "{}*{}".format(mag, power)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _format_term(coeff, factors):
    if coeff.is_rational():
        value = coeff.rational_value()
        negative = value < 0
        mag = _format_rational(abs(value))
        if not factors:
            return negative, mag
        if mag == "1":
            return negative, "*".join(factors)
        return negative, "*".join([mag] + list(factors))
    body = "({})".format(format_scalar(coeff))
    return False, "*".join([body] + list(factors))


def format_sum(pairs):
    """Render ``(coefficient, factor strings)`` pairs as ``a*x1 - b``."""
    parts = []
    for coeff, factors in pairs:
        negative, body = _format_term(coeff, factors)
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) or "0"


def parse_scalar(text, conductor=None):
    """
    Parse ``"p/q"`` or a polynomial in ``z`` such as ``"1/2*z^2 - z + 3"``.

    ``z`` denotes the primitive root of unity of the given conductor.
    """
    match = _RATIONAL_RE.match(text)
    if match:
        den = int(match.group(2)) if match.group(2) else 1
        if den == 0:
            raise DivisionByZero("zero denominator in {!r}".format(text))
        return CycScalar.rational(Fraction(int(match.group(1)), den))

    if not _SCALAR_CHARS_RE.match(text):
        raise ParseError("not a scalar: {!r}".format(text))
    try:
        expr = parse_expr(text, local_dict={'z': _Z},
                          transformations=_TRANSFORMATIONS)
        poly = Poly(expr.expand(), _Z, domain='QQ')
    except Exception as e:
        raise ParseError("not a scalar: {!r} ({})".format(text, e))
    coeffs = [QQ.from_sympy(c) for c in reversed(poly.all_coeffs())]
    if len(coeffs) > 1 and conductor is None:
        raise ParseError("scalar {!r} uses z but no conductor is known"
                         .format(text))
    return CycScalar.from_coeffs(conductor or 1, coeffs)
