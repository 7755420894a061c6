# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

'''
Exact ground fields.

The real numbers are modelled by the rationals (fractions.Fraction, always in
reduced form with a positive denominator) and the complex numbers by the
Gaussian rationals Q(i). Nothing in the package ever takes a square root, so
every result computed over these models is exact.
'''

from __future__ import absolute_import, division, print_function

import operator
from fractions import Fraction
from numbers import Rational as _RationalABC

from TenfoldWay.exceptions import DivisionByZero

Rational = Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, _RationalABC):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise ValueError("scalar {!r} has a zero denominator".format(x))
    raise TypeError("cannot interpret {!r} as an exact rational".format(x))


class GaussianRational(object):
    '''Immutable element re + im*i of Q(i)'''

    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        object.__setattr__(self, 're', _as_fraction(re))
        object.__setattr__(self, 'im', _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _RationalABC):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise DivisionByZero("division by zero in Q(i)")
        quotient = self * other.conjugate()
        return GaussianRational(quotient.re / norm, quotient.im / norm)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.re != 0 or self.im != 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        #Must agree with hash(Fraction) on the rational subfield
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return "GaussianRational({}, {})".format(format_rational(self.re), format_rational(self.im))

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return "{}i".format(format_rational(self.im))
        sign = "-" if self.im < 0 else "+"
        return "{}{}{}i".format(format_rational(self.re), sign, format_rational(abs(self.im)))


I = GaussianRational(0, 1)

_OPERATIONS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}


def arith(a, b, op):
    '''
    Exact field arithmetic on two scalars.

    op: one of 'add', 'sub', 'mul', 'div'
    '''
    if op not in _OPERATIONS:
        raise ValueError('"{}" is not a valid operation. Valid operations are: {}.'.format(
            op, ', '.join(sorted(_OPERATIONS))))
    if op == 'div' and b == 0:
        raise DivisionByZero("division of {} by zero".format(a))
    return _OPERATIONS[op](a, b)


def conjugate(z):
    '''Complex conjugation; the identity on rationals'''
    if isinstance(z, GaussianRational):
        return z.conjugate()
    return _as_fraction(z)


def sign(a):
    '''Strict trichotomy -1, 0, +1 of a rational'''
    a = _as_fraction(a)
    if a > 0:
        return 1
    if a < 0:
        return -1
    return 0


def real_part(z):
    return z.re if isinstance(z, GaussianRational) else _as_fraction(z)


def imag_part(z):
    return z.im if isinstance(z, GaussianRational) else Fraction(0)


def is_real(z):
    return not isinstance(z, GaussianRational) or z.im == 0


def format_rational(q):
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "{}/{}".format(q.numerator, q.denominator)


class ScalarField(object):
    '''
    One of the two exact ground fields.

    tag: 'R' (rational model of the reals) or 'C' (Gaussian rational model of the complex numbers)
    '''

    def __init__(self, tag):
        if tag not in ('R', 'C'):
            raise ValueError('"{}" is not a valid field tag. Valid tags are: "R", "C".'.format(tag))
        self.tag = tag

    @property
    def is_complex(self):
        return self.tag == 'C'

    @property
    def zero(self):
        return GaussianRational(0, 0) if self.is_complex else Fraction(0)

    @property
    def one(self):
        return GaussianRational(1, 0) if self.is_complex else Fraction(1)

    def coerce(self, x):
        '''Brings x into the canonical scalar type of this field'''
        if self.is_complex:
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, dict):
                return self.parse(x)
            return GaussianRational(_as_fraction(x), 0)
        if isinstance(x, GaussianRational):
            if x.im != 0:
                raise ValueError("{} is not in the rational field".format(x))
            return x.re
        return _as_fraction(x)

    def format(self, x):
        '''Serializes a scalar: "p/q" over R, {"re": "p/q", "im": "r/s"} over C'''
        x = self.coerce(x)
        if self.is_complex:
            return {"re": format_rational(x.re), "im": format_rational(x.im)}
        return format_rational(x)

    def parse(self, value):
        if self.is_complex:
            if isinstance(value, dict):
                return GaussianRational(_as_fraction(str(value["re"])), _as_fraction(str(value["im"])))
            return GaussianRational(_as_fraction(str(value)), 0)
        if isinstance(value, dict):
            raise ValueError("complex scalar {} given for a real algebra".format(value))
        if isinstance(value, float):
            raise ValueError("floating point scalar {} is not exact".format(value))
        return _as_fraction(str(value))

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.tag == self.tag

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "ScalarField('{}')".format(self.tag)


REALS = ScalarField('R')
COMPLEXES = ScalarField('C')


def field_from_tag(tag):
    if isinstance(tag, ScalarField):
        return tag
    if tag == 'R':
        return REALS
    if tag == 'C':
        return COMPLEXES
    raise ValueError('"{}" is not a valid field tag. Valid tags are: "R", "C".'.format(tag))
