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
The threefold way for finite matrix groups over Q and Q(i).

A representation is given by generator matrices; the group is closed by a
breadth-first search. The commutant End(rho) is computed exactly as the
nullspace of T rho(g) - rho(g) T = 0 over the generators, turned into an
abstract algebra and recognized as R, C or H. Complex representations get the
Frobenius-Schur indicator (1/|G|) sum_g tr(g^2) and the equivalent test through
conjugate-linear operators J = M o conj commuting with the group.
'''

from __future__ import absolute_import, division, print_function

import logging
import os

import numpy as np

from TenfoldWay.divclass import canonical, realify, recognize_even_division
from TenfoldWay.exceptions import (ClosureExceeded, FieldMismatch, InternalContradiction,
                                   NotDivision, NotInvertible, NotIrreducible)
from TenfoldWay.linalg import as_exact_matrix, identity, inverse, rank, solve_linear
from TenfoldWay.scalar import COMPLEXES, I, REALS, conjugate, field_from_tag, is_real, real_part, sign
from TenfoldWay.superalgebra import left_mul_operator, matrix_algebra

log = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 10000


def closure_cap():
    '''The group closure cap, overridable through TENFOLD_CLOSURE_CAP'''
    value = os.environ.get('TENFOLD_CLOSURE_CAP')
    if value is None or value.strip() == '':
        return DEFAULT_CLOSURE_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ValueError('TENFOLD_CLOSURE_CAP must be an integer, got "{}"'.format(value))
    if cap < 1:
        raise ValueError("TENFOLD_CLOSURE_CAP must be positive, got {}".format(cap))
    return cap


def _key(matrix):
    return tuple(matrix.reshape(-1))


def _matmul(a, b, field):
    return as_exact_matrix(a.dot(b), field)


class GroupRep(object):
    '''
    A finite matrix group acting on Q^n or Q(i)^n.

    field: ScalarField of the matrix entries
    generators: list of (degree x degree) exact matrices
    elements: every group element, in discovery order, the identity first
    '''

    def __init__(self, field, generators, elements):
        self.field = field_from_tag(field)
        self.generators = generators
        self.elements = elements
        self._index = dict((_key(g), r) for r, g in enumerate(elements))

    @property
    def degree(self):
        return self.elements[0].shape[0]

    @property
    def order(self):
        return len(self.elements)

    def index(self, matrix):
        '''Position of a group element in the element list, or None'''
        return self._index.get(_key(as_exact_matrix(matrix, self.field)))

    def to_dict(self):
        fmt = self.field.format
        return {
            "field": self.field.tag,
            "degree": self.degree,
            "generators": [[[fmt(x) for x in row] for row in g] for g in self.generators],
        }

    @classmethod
    def from_dict(cls, data, cap=None):
        field = field_from_tag(data["field"])
        degree = int(data["degree"])
        generators = []
        for g in data["generators"]:
            matrix = np.array([[field.parse(x) for x in row] for row in g], dtype=object)
            if matrix.shape != (degree, degree):
                raise ValueError("generator of shape {} given for degree {}".format(matrix.shape, degree))
            generators.append(matrix)
        if not generators:
            generators = [identity(degree, field)]
        return group_closure(generators, cap=cap, field=field)

    def __repr__(self):
        return "GroupRep(field='{}', degree={}, order={})".format(self.field.tag, self.degree, self.order)


class CommutantResult(object):
    '''
    End(rho) for a GroupRep.

    basis: matrices spanning {T : T rho(g) = rho(g) T for all g}
    algebra: the commutant as a purely even SuperAlgebra in that basis
    division_type: 'R', 'C' or 'H', or None when the commutant has zero divisors
    '''

    def __init__(self, basis, algebra, division_type):
        self.basis = basis
        self.algebra = algebra
        self.division_type = division_type

    @property
    def dimension(self):
        return len(self.basis)

    def to_dict(self, field):
        fmt = field.format
        return {
            "dimension": self.dimension,
            "type": self.division_type if self.division_type is not None else "reducible",
            "basis": [[[fmt(x) for x in row] for row in T] for T in self.basis],
        }


def group_closure(generators, cap=None, field=None):
    '''
    Closes a set of invertible matrices under multiplication.

    generators: list of square matrices of equal degree
    cap: maximal group order; defaults to closure_cap()
    field: 'R' or 'C'; inferred from the entries when omitted

    Returns a GroupRep whose elements are listed in breadth-first discovery order.
    '''
    if not generators:
        raise ValueError("group_closure needs at least one generator")
    if cap is None:
        cap = closure_cap()
    if field is None:
        entries = [x for g in generators for x in np.asarray(g, dtype=object).reshape(-1)]
        field = REALS if all(is_real(x) for x in entries) else COMPLEXES
    field = field_from_tag(field)

    gens = [as_exact_matrix(g, field) for g in generators]
    degree = gens[0].shape[0]
    for idx, g in enumerate(gens):
        if g.shape != (degree, degree):
            raise ValueError("generator {} has shape {}, expected {}".format(idx, g.shape, (degree, degree)))
        if rank(g) != degree:
            raise NotInvertible(idx, "generator {} is singular".format(idx))

    elements = [identity(degree, field)]
    seen = set([_key(elements[0])])
    cursor = 0
    while cursor < len(elements):
        g = elements[cursor]
        cursor += 1
        for s in gens:
            h = _matmul(g, s, field)
            key = _key(h)
            if key in seen:
                continue
            seen.add(key)
            elements.append(h)
            if len(elements) > cap:
                raise ClosureExceeded(cap)
    log.debug("closed %d generators of degree %d to a group of order %d", len(gens), degree, len(elements))
    return GroupRep(field, gens, elements)


def character(rep, g):
    '''Exact trace of a group element, given as a matrix or an index into rep.elements'''
    matrix = rep.elements[g] if isinstance(g, int) else as_exact_matrix(g, rep.field)
    return sum((matrix[a, a] for a in range(matrix.shape[0])), rep.field.zero)


def _commutation_system(generators, degree, twisted=None):
    '''
    Rows of T A - B T = 0 in the unknowns T_ab at index a * degree + b.

    For the commutant A = B = rho(g); for conjugate-linear operators A = conj(rho(g)).
    '''
    rows = []
    for idx, B in enumerate(generators):
        A = twisted[idx] if twisted is not None else B
        for a in range(degree):
            for c in range(degree):
                row = [0] * (degree * degree)
                for b in range(degree):
                    row[a * degree + b] = row[a * degree + b] + A[b, c]
                    row[b * degree + c] = row[b * degree + c] - B[a, b]
                rows.append(row)
    return np.array(rows, dtype=object)


def commutant(rep):
    '''
    End(rho): all matrices commuting with the group, and its division type.

    The commutant always contains the identity. For a finite group a zero divisor
    in End(rho) means rho is reducible.
    '''
    d = rep.degree
    solution = solve_linear(_commutation_system(rep.generators, d), None, rep.field)
    basis = [as_exact_matrix(v.reshape(d, d), rep.field) for v in solution.nullspace]
    for T in basis:
        for g in rep.elements:
            if not np.all(_matmul(T, g, rep.field) == _matmul(g, T, rep.field)):
                raise InternalContradiction("commutant matrix fails to commute with a group element")
    algebra = matrix_algebra(basis, rep.field)

    division_type = None
    if rep.field.is_complex:
        #Over C Schur's lemma leaves only the scalars
        if algebra.dim == 1:
            division_type = recognize_even_division(realify(algebra)).label
    else:
        try:
            division_type = recognize_even_division(algebra).label
        except NotDivision as err:
            log.debug("commutant of dimension %d is not a division algebra: %s", algebra.dim, err)
    log.debug("commutant of %r: dimension %d, type %s", rep, len(basis), division_type)
    return CommutantResult(basis, algebra, division_type)


def schur_type(rep):
    ''''R', 'C' or 'H' for an irreducible real representation, 'reducible' otherwise'''
    if rep.field.is_complex:
        raise FieldMismatch("schur_type expects a representation over the rationals")
    division_type = commutant(rep).division_type
    return division_type if division_type is not None else 'reducible'


def _require_irreducible(rep):
    dim = commutant(rep).dimension
    if dim > 1:
        raise NotIrreducible(dim)


def fs_indicator(rep):
    '''
    Frobenius-Schur indicator (1/|G|) sum_g tr(g^2) of an irreducible complex representation.

    Real representations are complexified first. Returns +1 (real type),
    0 (complex type) or -1 (quaternionic type).
    '''
    if not rep.field.is_complex:
        rep = complexify(rep)
    _require_irreducible(rep)
    total = rep.field.zero
    for g in rep.elements:
        r = rep.index(_matmul(g, g, rep.field))
        if r is None:
            raise InternalContradiction("square of a group element is missing from the closure")
        total = total + character(rep, r)
    value = total / rep.order
    if not is_real(value) or real_part(value) not in (-1, 0, 1):
        raise InternalContradiction("Frobenius-Schur sum gave {}".format(value))
    return int(real_part(value))


def conjugate_linear_type(rep):
    '''
    Type of an irreducible complex representation from conjugate-linear intertwiners.

    Solves M conj(rho(g)) = rho(g) M. With no solution the type is 'C'; otherwise
    J = M o conj squares to M conj(M) = lambda * 1 with lambda real, and the type is
    'R' for lambda > 0 and 'H' for lambda < 0.
    '''
    if not rep.field.is_complex:
        rep = complexify(rep)
    _require_irreducible(rep)
    d = rep.degree
    conjugated = [_conjugate_matrix(g) for g in rep.generators]
    solution = solve_linear(_commutation_system(rep.generators, d, conjugated), None, rep.field)
    if not solution.nullspace:
        return 'C'
    M = as_exact_matrix(solution.nullspace[0].reshape(d, d), rep.field)
    square = _matmul(M, _conjugate_matrix(M), rep.field)
    lam = square[0, 0]
    if not is_real(lam) or lam == 0 or not np.all(square == identity(d, rep.field) * lam):
        raise InternalContradiction("J^2 = M conj(M) is not a nonzero real scalar")
    log.debug("conjugate-linear J with J^2 = %s", lam)
    return 'R' if sign(real_part(lam)) > 0 else 'H'


def _conjugate_matrix(matrix):
    out = np.empty(matrix.shape, dtype=object)
    for idx, x in np.ndenumerate(matrix):
        out[idx] = conjugate(x)
    return out


def _format_fs(fs):
    if fs is None:
        return None
    return "{:+d}".format(fs) if fs else "0"


def rep_report(rep):
    '''Summary dict: order, commutant dimension, type and Frobenius-Schur indicator'''
    result = commutant(rep)
    fs = None
    if rep.field.is_complex:
        kind = 'reducible'
        if result.dimension == 1:
            fs = fs_indicator(rep)
            kind = {1: 'R', 0: 'C', -1: 'H'}[fs]
    else:
        kind = result.division_type if result.division_type is not None else 'reducible'
        try:
            fs = fs_indicator(rep)
        except NotIrreducible:
            fs = None
    return {
        "order": rep.order,
        "commutant_dim": result.dimension,
        "type": kind,
        "fs": _format_fs(fs),
    }


###Constructions###

def direct_sum(rep1, rep2, cap=None):
    '''Block diagonal sum; the generator lists are paired index by index'''
    if rep1.field != rep2.field:
        raise FieldMismatch("cannot add a {} representation to a {} one".format(rep1.field.tag, rep2.field.tag))
    if len(rep1.generators) != len(rep2.generators):
        raise ValueError("direct_sum needs the same number of generators, got {} and {}".format(
            len(rep1.generators), len(rep2.generators)))
    d1, d2 = rep1.degree, rep2.degree
    generators = []
    for g1, g2 in zip(rep1.generators, rep2.generators):
        block = np.empty((d1 + d2, d1 + d2), dtype=object)
        block.fill(rep1.field.zero)
        block[:d1, :d1] = g1
        block[d1:, d1:] = g2
        generators.append(block)
    return group_closure(generators, cap=cap, field=rep1.field)


def complexify(rep, cap=None):
    '''The same matrices read over Q(i)'''
    return group_closure(rep.generators, cap=cap, field=COMPLEXES)


def conjugate_rep(rep, P, cap=None):
    '''The equivalent representation g -> P^-1 rho(g) P'''
    P = as_exact_matrix(P, rep.field)
    P_inv = inverse(P, rep.field)
    if P_inv is None:
        raise NotInvertible("P", "conjugating matrix is singular")
    generators = [_matmul(_matmul(P_inv, g, rep.field), P, rep.field) for g in rep.generators]
    return group_closure(generators, cap=cap, field=rep.field)


###Fixtures###

def trivial_rep(degree=1, field=REALS):
    field = field_from_tag(field)
    return group_closure([identity(degree, field)], field=field)


def cyclic_rotation_rep():
    '''C_4 acting on R^2 by quarter turns; complex type'''
    return group_closure([[[0, -1], [1, 0]]], field=REALS)


def cyclic_complex_rep():
    '''C_4 acting on C by g -> i'''
    return group_closure([[[I]]], field=COMPLEXES)


def quaternion_group_rep():
    '''Q_8 in degree 2: i -> diag(i, -i), j -> [[0, 1], [-1, 0]]; quaternionic type'''
    return group_closure([[[I, 0], [0, -I]], [[0, 1], [-1, 0]]], field=COMPLEXES)


def quaternion_regular_rep():
    '''Q_8 acting on H = R^4 by left multiplication with i and j'''
    H = canonical('H')
    generators = [left_mul_operator(H.basis(a)).matrix for a in (1, 2)]
    return group_closure(generators, field=REALS)


def symmetric_group_rep():
    '''Standard degree 2 representation of S_3 over the rationals; real type'''
    return group_closure([[[-1, 1], [0, 1]], [[0, -1], [1, -1]]], field=REALS)


FIXTURES = {
    'trivial': trivial_rep,
    'c4_rotation': cyclic_rotation_rep,
    'c4_complex': cyclic_complex_rep,
    'q8_complex': quaternion_group_rep,
    'q8_regular': quaternion_regular_rep,
    's3_standard': symmetric_group_rep,
}
