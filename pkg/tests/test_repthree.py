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

import os
import unittest
from unittest import mock

import numpy as np

from TenfoldWay import repthree
from TenfoldWay.exceptions import ClosureExceeded, FieldMismatch, NotInvertible, NotIrreducible
from TenfoldWay.linalg import as_exact_matrix, determinant, rank
from TenfoldWay.repthree import (GroupRep, character, closure_cap, commutant, complexify,
                                 conjugate_linear_type, conjugate_rep, cyclic_complex_rep,
                                 cyclic_rotation_rep, direct_sum, fs_indicator, group_closure,
                                 quaternion_group_rep, quaternion_regular_rep, rep_report, schur_type,
                                 symmetric_group_rep, trivial_rep)
from TenfoldWay.scalar import COMPLEXES, REALS


class TestGroupClosure(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(trivial_rep().order, 1)
        self.assertEqual(cyclic_rotation_rep().order, 4)
        self.assertEqual(cyclic_complex_rep().order, 4)
        self.assertEqual(quaternion_group_rep().order, 8)
        self.assertEqual(quaternion_regular_rep().order, 8)
        self.assertEqual(symmetric_group_rep().order, 6)

    def test_identity_first_and_closed(self):
        rep = quaternion_group_rep()
        self.assertEqual(rep.index(np.eye(2, dtype=int).astype(object)), 0)
        for g in rep.elements:
            for h in rep.elements:
                self.assertIsNotNone(rep.index(g.dot(h)))

    def test_field_inference(self):
        self.assertEqual(group_closure([[[0, 1], [1, 0]]]).field, REALS)
        self.assertEqual(group_closure([[[0, 1], [-1, 0]], [[1, 0], [0, 1]]], field='C').field, COMPLEXES)

    def test_cap(self):
        with self.assertRaises(ClosureExceeded):
            group_closure([[[2]]], cap=10)

    def test_singular_generator(self):
        with self.assertRaises(NotInvertible):
            group_closure([[[1, 0], [0, 0]]])

    def test_environment_cap(self):
        with mock.patch.dict(os.environ, {'TENFOLD_CLOSURE_CAP': '3'}):
            self.assertEqual(closure_cap(), 3)
            with self.assertRaises(ClosureExceeded):
                cyclic_rotation_rep()
        with mock.patch.dict(os.environ, {'TENFOLD_CLOSURE_CAP': 'many'}):
            with self.assertRaises(ValueError):
                closure_cap()
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(closure_cap(), repthree.DEFAULT_CLOSURE_CAP)

    def test_dict_round_trip(self):
        rep = quaternion_group_rep()
        data = rep.to_dict()
        self.assertEqual(data["field"], "C")
        self.assertEqual(data["generators"][0][0][0], {"re": "0", "im": "1"})
        self.assertEqual(GroupRep.from_dict(data).order, 8)
        with self.assertRaises(ValueError):
            GroupRep.from_dict({"field": "R", "degree": 2, "generators": [[["1"]]]})


class TestCommutant(unittest.TestCase):

    def test_dimensions_and_types(self):
        expected = [(trivial_rep(), 1, 'R'), (cyclic_rotation_rep(), 2, 'C'),
                    (quaternion_regular_rep(), 4, 'H'), (symmetric_group_rep(), 1, 'R')]
        for rep, dim, kind in expected:
            result = commutant(rep)
            self.assertEqual(result.dimension, dim)
            self.assertEqual(result.division_type, kind)

    def test_basis_commutes_with_every_element(self):
        for rep in (cyclic_rotation_rep(), quaternion_regular_rep(), quaternion_group_rep()):
            for T in commutant(rep).basis:
                for g in rep.elements:
                    self.assertTrue(np.all(T.dot(g) == g.dot(T)))

    def test_closed_under_multiplication(self):
        result = commutant(quaternion_regular_rep())
        flat = np.array([T.reshape(-1) for T in result.basis], dtype=object)
        for S in result.basis:
            for T in result.basis:
                stacked = np.vstack([flat, S.dot(T).reshape(1, -1)])
                self.assertEqual(rank(stacked), result.dimension)

    def test_division_commutant_elements_invertible(self):
        rng = np.random.default_rng(7)
        for rep in (cyclic_rotation_rep(), quaternion_regular_rep()):
            basis = commutant(rep).basis
            for _ in range(1000):
                weights = rng.integers(-5, 6, size=len(basis))
                if not weights.any():
                    continue
                T = sum((int(w) * B for w, B in zip(weights, basis)), 0 * basis[0])
                self.assertNotEqual(determinant(T), 0)

    def test_complex_commutant(self):
        result = commutant(cyclic_complex_rep())
        self.assertEqual(result.dimension, 1)
        self.assertEqual(result.division_type, 'C')
        self.assertIsNone(commutant(complexify(cyclic_rotation_rep())).division_type)


class TestSchurType(unittest.TestCase):

    def test_fixtures(self):
        self.assertEqual(schur_type(cyclic_rotation_rep()), 'C')
        self.assertEqual(schur_type(quaternion_regular_rep()), 'H')
        self.assertEqual(schur_type(symmetric_group_rep()), 'R')

    def test_reducible(self):
        self.assertEqual(schur_type(direct_sum(trivial_rep(), trivial_rep())), 'reducible')
        self.assertEqual(schur_type(direct_sum(symmetric_group_rep(), symmetric_group_rep())), 'reducible')

    def test_requires_real_representation(self):
        with self.assertRaises(FieldMismatch):
            schur_type(quaternion_group_rep())
        with self.assertRaises(FieldMismatch):
            direct_sum(trivial_rep(), trivial_rep(field='C'))


class TestFrobeniusSchur(unittest.TestCase):

    def test_indicator_values(self):
        self.assertEqual(fs_indicator(trivial_rep(field='C')), 1)
        self.assertEqual(fs_indicator(cyclic_complex_rep()), 0)
        self.assertEqual(fs_indicator(quaternion_group_rep()), -1)
        self.assertEqual(fs_indicator(symmetric_group_rep()), 1)

    def test_reducible_rejected(self):
        with self.assertRaises(NotIrreducible) as ctx:
            fs_indicator(complexify(cyclic_rotation_rep()))
        self.assertEqual(ctx.exception.commutant_dim, 2)

    def test_matches_real_forms(self):
        self.assertEqual(schur_type(cyclic_rotation_rep()), 'C')
        self.assertEqual(fs_indicator(cyclic_complex_rep()), 0)
        self.assertEqual(schur_type(quaternion_regular_rep()), 'H')
        self.assertEqual(fs_indicator(quaternion_group_rep()), -1)

    def test_invariant_under_conjugation(self):
        rng = np.random.default_rng(11)
        for rep in (quaternion_group_rep(), symmetric_group_rep(), cyclic_complex_rep()):
            d = rep.degree
            expected = fs_indicator(rep)
            for _ in range(5):
                while True:
                    P = as_exact_matrix(rng.integers(-3, 4, size=(d, d)).tolist(), rep.field)
                    if determinant(P) != 0:
                        break
                conjugated = conjugate_rep(rep, P)
                self.assertEqual(conjugated.order, rep.order)
                self.assertEqual(fs_indicator(conjugated), expected)

    def test_character(self):
        rep = symmetric_group_rep()
        self.assertEqual(character(rep, 0), 2)
        self.assertEqual(sorted(character(rep, r) for r in range(rep.order)), [-1, -1, 0, 0, 0, 2])


class TestConjugateLinear(unittest.TestCase):

    def test_agrees_with_indicator(self):
        types = {1: 'R', 0: 'C', -1: 'H'}
        for rep in (trivial_rep(field='C'), cyclic_complex_rep(), quaternion_group_rep(), symmetric_group_rep()):
            self.assertEqual(conjugate_linear_type(rep), types[fs_indicator(rep)])

    def test_quaternionic(self):
        self.assertEqual(conjugate_linear_type(quaternion_group_rep()), 'H')


class TestReport(unittest.TestCase):

    def test_reports(self):
        self.assertEqual(rep_report(quaternion_group_rep()),
                         {"order": 8, "commutant_dim": 1, "type": "H", "fs": "-1"})
        self.assertEqual(rep_report(symmetric_group_rep()),
                         {"order": 6, "commutant_dim": 1, "type": "R", "fs": "+1"})
        self.assertEqual(rep_report(cyclic_rotation_rep()),
                         {"order": 4, "commutant_dim": 2, "type": "C", "fs": None})
        self.assertEqual(rep_report(cyclic_complex_rep())["fs"], "0")


if __name__ == '__main__':
    unittest.main()
