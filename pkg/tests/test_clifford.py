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

import itertools
import unittest

from TenfoldWay import clifford
from TenfoldWay.clifford import (MORITA_LABELS, CliffordSignature, GeneratorMap, brauer_wall,
                                 brauer_wall_complex, classify_clifford, classify_complex_clifford,
                                 clifford_complex, clifford_generators, clifford_real, complex_morita_table,
                                 end_superalgebra, morita_table, reduce_signature, verify_complex_periodicity,
                                 verify_generator_map, verify_periodicity)
from TenfoldWay.exceptions import (NotSuperDivision, RelationFailure, SignatureTooLarge, SizeTooLarge,
                                   SpanDeficient)


class TestCliffordAlgebras(unittest.TestCase):

    def test_dimensions(self):
        for p, q in [(0, 0), (1, 0), (2, 1), (3, 2)]:
            self.assertEqual(clifford_real((p, q)).dim, 2 ** (p + q))
        self.assertEqual(clifford_complex(3).dim, 8)

    def test_generator_relations(self):
        A = clifford_real((2, 2), validate=True)
        e = clifford_generators(A, 4)
        one = A.one()
        for idx, x in enumerate(e):
            self.assertEqual(x * x, one if idx < 2 else -one)
        for a, b in itertools.combinations(range(4), 2):
            self.assertTrue((e[a] * e[b] + e[b] * e[a]).is_zero())

    def test_complex_generators_square_to_one(self):
        A = clifford_complex(2, validate=True)
        for x in clifford_generators(A, 2):
            self.assertEqual(x * x, A.one())

    def test_signature_bounds(self):
        with self.assertRaises(SignatureTooLarge):
            CliffordSignature(5, 4)
        with self.assertRaises(SignatureTooLarge):
            clifford_complex(9)
        with self.assertRaises(ValueError):
            CliffordSignature(-1, 0)
        self.assertEqual(str(CliffordSignature(2, 1)), "Cl(2,1)")

    def test_labels(self):
        A = clifford_real((3, 0))
        self.assertEqual(A.label(0), "1")
        self.assertEqual(A.label(4), "e1e2")
        self.assertEqual(A.label(7), "e1e2e3")


class TestEndSuperalgebra(unittest.TestCase):

    def test_parity_and_products(self):
        E = end_superalgebra(1, 1, validate=True)
        self.assertEqual(E.parity, (0, 1, 1, 0))
        E12, E21 = E.basis(1), E.basis(2)
        self.assertEqual(E12 * E21, E.basis(0))
        self.assertTrue((E21 * E21).is_zero())

    def test_bounds(self):
        with self.assertRaises(SizeTooLarge):
            end_superalgebra(9, 8)
        with self.assertRaises(ValueError):
            end_superalgebra(0, 0)


class TestClassification(unittest.TestCase):

    def test_division_clifford_algebras(self):
        expected = {(0, 0): 'R', (1, 0): 'R_plus', (0, 1): 'R_minus', (2, 0): 'C_anti_plus',
                    (0, 2): 'C_anti_minus', (3, 0): 'H_minus', (0, 3): 'H_plus'}
        for signature, label in expected.items():
            self.assertEqual(classify_clifford(signature), label)

    def test_non_division(self):
        for signature in [(1, 1), (2, 2), (4, 0), (0, 4), (2, 1)]:
            with self.assertRaises(NotSuperDivision):
                classify_clifford(signature)

    def test_complex(self):
        self.assertEqual(classify_complex_clifford(0), 'C')
        self.assertEqual(classify_complex_clifford(1), 'C_comm')
        with self.assertRaises(NotSuperDivision):
            classify_complex_clifford(2)


class TestBrauerWall(unittest.TestCase):

    def test_classes(self):
        self.assertEqual(brauer_wall((0, 1)).value, 7)
        self.assertEqual(brauer_wall((5, 0)).value, 5)
        self.assertEqual(brauer_wall(CliffordSignature(2, 2)).value, 0)
        self.assertEqual(brauer_wall_complex(3).value, 1)
        self.assertEqual(brauer_wall_complex(3).modulus, 2)

    def test_reduce_signature(self):
        self.assertEqual(reduce_signature((3, 2)), CliffordSignature(1, 0))
        self.assertEqual(reduce_signature((1, 3)), CliffordSignature(0, 2))
        self.assertEqual(brauer_wall(reduce_signature((4, 1))), brauer_wall((4, 1)))

    def test_morita_labels_match_classification(self):
        for p, q in [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 3)]:
            self.assertEqual(MORITA_LABELS[brauer_wall((p, q)).value], classify_clifford((p, q)))

    def test_morita_table(self):
        rows = morita_table(3)
        self.assertEqual(len(rows), 10)
        by_signature = dict((row["signature"], row) for row in rows)
        self.assertEqual(by_signature["Cl(2,1)"]["reduced"], "Cl(1,0)")
        self.assertEqual(by_signature["Cl(2,1)"]["label"], 'R_plus')
        self.assertEqual(by_signature["Cl(2,1)"]["brauer_wall"], 1)
        self.assertIsNone(dict((r["signature"], r) for r in morita_table(4))["Cl(4,0)"]["label"])


class TestCertificates(unittest.TestCase):

    def test_periodicity(self):
        certificate = verify_periodicity((1, 0))
        self.assertEqual(certificate.span_dim, 8)
        self.assertEqual(len(certificate.generator_map.images), 3)
        data = certificate.to_dict()
        self.assertEqual(data["source"], {"p": 2, "q": 1, "dim": 8})
        self.assertEqual(data["target_dim"], 8)

    def test_periodicity_small_signatures(self):
        for n in range(3):
            for p in range(n + 1):
                certificate = verify_periodicity((p, n - p))
                self.assertEqual(certificate.span_dim, 2 ** (n + 2))

    def test_periodicity_rank_limit(self):
        with self.assertRaises(SignatureTooLarge):
            verify_periodicity((4, 3))

    def test_complex_periodicity(self):
        for n in range(3):
            certificate = verify_complex_periodicity(n)
            self.assertEqual(certificate.span_dim, 2 ** (n + 2))
            self.assertEqual(len(certificate.generator_map.images), n + 2)
            self.assertEqual(certificate.generator_map.target.field.tag, 'C')
        with self.assertRaises(SignatureTooLarge):
            verify_complex_periodicity(7)

    def test_complex_morita_table(self):
        rows = complex_morita_table(4)
        self.assertEqual([row["reduced"] for row in rows],
                         ["Cl_0(C)", "Cl_1(C)", "Cl_0(C)", "Cl_1(C)", "Cl_0(C)"])
        for row in rows:
            self.assertEqual(row["label"], clifford.COMPLEX_MORITA_LABELS[row["brauer_wall"]])

    def test_end_certificate(self):
        self.assertEqual(clifford.clifford_end_certificate().span_dim, 4)

    def test_quaternion_certificate(self):
        certificate = clifford.quaternion_morita_certificate()
        self.assertEqual(certificate.span_dim, 16)
        self.assertEqual(brauer_wall(certificate.generator_map.signature).value, 4)

    def test_relation_failures(self):
        source = clifford_real((1, 0))
        target = clifford_real((2, 0))
        e1, e2 = clifford_generators(target, 2)
        with self.assertRaises(RelationFailure) as ctx:
            verify_generator_map(GeneratorMap(source, CliffordSignature(1, 0), target, [e1 + e2]))
        self.assertEqual(ctx.exception.relation, "square")

        with self.assertRaises(RelationFailure) as ctx:
            verify_generator_map(GeneratorMap(target, CliffordSignature(2, 0), target, [e1, e1]))
        self.assertEqual(ctx.exception.relation, "anticommutation")
        self.assertEqual(ctx.exception.indices, (1, 2))

    def test_span_deficient(self):
        source = clifford_real((1, 0))
        target = clifford_real((2, 0))
        with self.assertRaises(SpanDeficient) as ctx:
            verify_generator_map(GeneratorMap(source, CliffordSignature(1, 0), target, [target.basis(1)]))
        self.assertEqual((ctx.exception.span_dim, ctx.exception.expected), (2, 4))

    def test_images_must_be_odd(self):
        target = clifford_real((2, 0))
        with self.assertRaises(ValueError):
            GeneratorMap(clifford_real((1, 0)), CliffordSignature(1, 0), target, [target.one()])


if __name__ == '__main__':
    unittest.main()
