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

from __future__ import absolute_import, division, print_function

import unittest
from fractions import Fraction

from hypothesis import assume, given
from hypothesis import strategies as st

from TenfoldWay.exceptions import DivisionByZero
from TenfoldWay.scalar import (COMPLEXES, I, REALS, GaussianRational, ScalarField, arith, conjugate,
                               field_from_tag, format_rational, sign)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussianRational, rationals, rationals)


class TestRationals(unittest.TestCase):

    def test_arith_operations(self):
        self.assertEqual(arith(Fraction(1, 2), Fraction(1, 3), 'add'), Fraction(5, 6))
        self.assertEqual(arith(Fraction(1, 2), Fraction(1, 3), 'sub'), Fraction(1, 6))
        self.assertEqual(arith(Fraction(2, 3), Fraction(3, 4), 'mul'), Fraction(1, 2))
        self.assertEqual(arith(Fraction(1, 2), Fraction(1, 4), 'div'), Fraction(2))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            arith(Fraction(1), Fraction(0), 'div')
        #Also usable as the builtin error
        with self.assertRaises(ZeroDivisionError):
            arith(Fraction(1), Fraction(0), 'div')

    def test_unknown_operation(self):
        with self.assertRaises(ValueError):
            arith(1, 2, 'pow')

    def test_sign_and_format(self):
        self.assertEqual(sign(Fraction(-3, 7)), -1)
        self.assertEqual(sign(0), 0)
        self.assertEqual(sign(Fraction(1, 9)), 1)
        self.assertEqual(format_rational(Fraction(-6, 4)), "-3/2")
        self.assertEqual(format_rational(5), "5")


class TestGaussianRational(unittest.TestCase):

    def test_i_squared(self):
        self.assertEqual(I * I, -1)
        self.assertEqual(1 / I, -I)

    def test_mixed_arithmetic(self):
        z = GaussianRational(1, 2)
        self.assertEqual(z + 1, GaussianRational(2, 2))
        self.assertEqual(Fraction(1, 2) * z, GaussianRational(Fraction(1, 2), 1))
        self.assertEqual(3 - z, GaussianRational(2, -2))
        self.assertEqual(z / GaussianRational(1, 2), 1)

    def test_hash_agrees_on_reals(self):
        self.assertEqual(GaussianRational(3, 0), Fraction(3))
        self.assertEqual(Fraction(3), GaussianRational(3, 0))
        self.assertEqual(hash(GaussianRational(Fraction(3, 4), 0)), hash(Fraction(3, 4)))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            GaussianRational(1, 1) / GaussianRational(0, 0)

    def test_immutable(self):
        z = GaussianRational(1, 1)
        with self.assertRaises(AttributeError):
            z.re = Fraction(2)

    def test_str(self):
        self.assertEqual(str(GaussianRational(1, 2)), "1+2i")
        self.assertEqual(str(GaussianRational(1, Fraction(-1, 2))), "1-1/2i")
        self.assertEqual(str(GaussianRational(0, 3)), "3i")
        self.assertEqual(str(GaussianRational(Fraction(2, 3), 0)), "2/3")

    def test_conjugate(self):
        self.assertEqual(conjugate(GaussianRational(1, 2)), GaussianRational(1, -2))
        self.assertEqual(conjugate(Fraction(5, 2)), Fraction(5, 2))


class TestScalarField(unittest.TestCase):

    def test_tags(self):
        self.assertIs(field_from_tag('R'), REALS)
        self.assertIs(field_from_tag(COMPLEXES), COMPLEXES)
        with self.assertRaises(ValueError):
            ScalarField('Q')

    def test_parse_and_format(self):
        self.assertEqual(REALS.parse("3/4"), Fraction(3, 4))
        self.assertEqual(REALS.parse(2), Fraction(2))
        self.assertEqual(REALS.format(Fraction(-3, 4)), "-3/4")
        self.assertEqual(COMPLEXES.parse({"re": "1", "im": "-2"}), GaussianRational(1, -2))
        self.assertEqual(COMPLEXES.format(I), {"re": "0", "im": "1"})

    def test_rejects_inexact_and_complex_input(self):
        with self.assertRaises(ValueError):
            REALS.parse(0.5)
        with self.assertRaises(ValueError):
            REALS.parse({"re": "0", "im": "1"})
        with self.assertRaises(ValueError):
            REALS.coerce(I)

    def test_zero_denominator_is_malformed(self):
        with self.assertRaises(ValueError):
            REALS.parse("1/0")
        with self.assertRaises(ValueError):
            COMPLEXES.parse({"re": "1", "im": "3/0"})

    def test_coerce(self):
        self.assertIsInstance(REALS.coerce(3), Fraction)
        self.assertIsInstance(COMPLEXES.coerce(3), GaussianRational)
        self.assertEqual(REALS.coerce(GaussianRational(2, 0)), Fraction(2))


class TestFieldAxioms(unittest.TestCase):

    @given(gaussians, gaussians, gaussians)
    def test_ring_laws(self, a, b, c):
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    @given(gaussians)
    def test_multiplicative_inverse(self, a):
        assume(a != 0)
        self.assertEqual(a * (1 / a), 1)
        self.assertEqual(a / a, GaussianRational(1, 0))

    @given(gaussians, gaussians)
    def test_conjugation_and_norm(self, a, b):
        self.assertEqual((a * b).conjugate(), a.conjugate() * b.conjugate())
        self.assertEqual((a * b).norm(), a.norm() * b.norm())
        self.assertEqual(a * a.conjugate(), a.norm())

    @given(rationals, rationals)
    def test_embedding_of_rationals(self, p, q):
        self.assertEqual(GaussianRational(p, 0) * GaussianRational(q, 0), p * q)
        self.assertEqual(GaussianRational(p, 0) + q, p + q)


if __name__ == '__main__':
    unittest.main()
