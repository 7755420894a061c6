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
Exact linear algebra over the rational and Gaussian rational fields.

Matrices are numpy arrays of dtype=object holding exact scalars. Elimination
itself runs on plain nested lists, which is markedly faster than elementwise
access into object arrays.
'''

from __future__ import absolute_import, division, print_function

import logging
from fractions import Fraction

import numpy as np

from TenfoldWay.scalar import REALS, GaussianRational, field_from_tag

log = logging.getLogger(__name__)


def _exact(x):
    #Plain ints would turn into floats under true division
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    return Fraction(x)


def as_exact_matrix(rows, field=REALS):
    '''Copies rows into an object array of canonical scalars of the given field'''
    field = field_from_tag(field)
    rows = np.asarray(rows, dtype=object)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    out = np.empty(rows.shape, dtype=object)
    for idx, value in np.ndenumerate(rows):
        out[idx] = field.coerce(value)
    return out


def zeros(shape, field=REALS):
    field = field_from_tag(field)
    out = np.empty(shape, dtype=object)
    out.fill(field.zero)
    return out


def identity(n, field=REALS):
    field = field_from_tag(field)
    out = zeros((n, n), field)
    for i in range(n):
        out[i, i] = field.one
    return out


def rref(matrix, rhs=None):
    '''
    Reduced row echelon form by exact Gauss-Jordan elimination.

    matrix: (m x n) object array or nested list
    rhs: optional length-m vector, eliminated alongside the matrix

    Returns (reduced rows, reduced rhs or None, pivot columns)
    '''
    matrix = np.asarray(matrix, dtype=object)
    rows = [[_exact(x) for x in r] for r in matrix] if matrix.size else []
    t = [_exact(x) for x in rhs] if rhs is not None else None
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if rows[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        pivot_row = rows[piv_r]
        fp = pivot_row[piv_c]
        if fp != 1:
            pivot_row = [x / fp for x in pivot_row]
            rows[piv_r] = pivot_row
            if t is not None:
                t[piv_r] = t[piv_r] / fp
        #Only the nonzero tail of the pivot row matters
        support = [c for c in range(piv_c, n_cols) if pivot_row[c] != 0]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = rows[r][piv_c]
            if fr == 0:
                continue
            row = rows[r]
            for c in support:
                row[c] = row[c] - fr * pivot_row[c]
            if t is not None:
                t[r] = t[r] - fr * t[piv_r]
        pivots.append(piv_c)
        piv_r += 1
    return rows, t, pivots


class SolutionSet(object):
    '''
    Solution set of an exact linear system A x = b.

    consistent: False when the system has no solution (a flag, not a failure)
    particular: one solution (free variables set to zero), or None
    nullspace: list of basis vectors of ker(A), in pivot order:
      one vector per free column f with a 1 in position f
    pivots: pivot columns of the reduced echelon form
    '''

    def __init__(self, consistent, particular, nullspace, pivots, n_cols):
        self.consistent = consistent
        self.particular = particular
        self.nullspace = nullspace
        self.pivots = pivots
        self.n_cols = n_cols

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def unique(self):
        return self.consistent and not self.nullspace

    def __repr__(self):
        return "SolutionSet(consistent={}, rank={}, nullity={})".format(
            self.consistent, self.rank, len(self.nullspace))


def solve_linear(matrix, rhs=None, field=REALS):
    '''
    Solves A x = rhs exactly (rhs defaults to zero).

    matrix: (m x n) system, typically several operators stacked row-wise
    Returns a SolutionSet with a particular solution and a canonical nullspace basis.
    '''
    field = field_from_tag(field)
    matrix = np.asarray(matrix, dtype=object)
    if matrix.ndim != 2:
        raise ValueError("system must be a 2-d matrix, got shape {}".format(matrix.shape))
    n_rows, n_cols = matrix.shape
    if rhs is not None and len(rhs) != n_rows:
        raise ValueError("rhs has length {}, system has {} rows".format(len(rhs), n_rows))

    rows, t, pivots = rref(matrix, rhs)

    consistent = True
    if t is not None:
        for r in range(len(pivots), n_rows):
            if t[r] != 0:
                consistent = False
                break

    particular = None
    if consistent:
        particular = zeros(n_cols, field)
        if t is not None:
            for r, c in enumerate(pivots):
                particular[c] = field.coerce(t[r])

    pivot_set = set(pivots)
    nullspace = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        vec = zeros(n_cols, field)
        vec[f] = field.one
        for r, c in enumerate(pivots):
            vec[c] = field.coerce(-rows[r][f])
        nullspace.append(vec)

    log.debug("solved %dx%d system: rank %d, nullity %d, consistent %s",
              n_rows, n_cols, len(pivots), len(nullspace), consistent)
    return SolutionSet(consistent, particular, nullspace, pivots, n_cols)


def rank(matrix):
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return 0
    return len(rref(matrix)[2])


def determinant(matrix):
    '''Exact determinant by fraction-based elimination'''
    rows = [[_exact(x) for x in r] for r in np.asarray(matrix, dtype=object)]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        for r in range(c, n):
            if rows[r][c] != 0:
                break
        else:
            return Fraction(0)
        if r != c:
            rows[c], rows[r] = rows[r], rows[c]
            det = -det
        pivot = rows[c][c]
        det = det * pivot
        for r2 in range(c + 1, n):
            factor = rows[r2][c] / pivot
            if factor == 0:
                continue
            for c2 in range(c, n):
                rows[r2][c2] = rows[r2][c2] - factor * rows[c][c2]
    return det


def is_positive_definite(gram):
    '''Leading principal minor test on a symmetric rational matrix'''
    gram = np.asarray(gram, dtype=object)
    n = gram.shape[0]
    for k in range(1, n + 1):
        if determinant(gram[:k, :k]) <= 0:
            return False
    return True


class LinearOperator(object):
    '''
    A square exact matrix acting on coordinate vectors.

    matrix: (dim x dim) object array; column k is the image of the k-th basis vector
    '''

    def __init__(self, matrix, field=REALS):
        self.field = field_from_tag(field)
        self.matrix = as_exact_matrix(matrix, self.field)
        if self.matrix.shape[0] != self.matrix.shape[1]:
            raise ValueError("operator must be square, got shape {}".format(self.matrix.shape))

    @property
    def dim(self):
        return self.matrix.shape[0]

    def apply(self, vector):
        return self.matrix.dot(np.asarray(vector, dtype=object))

    def rank(self):
        return rank(self.matrix)

    def is_invertible(self):
        return self.rank() == self.dim

    def solve(self, rhs):
        return solve_linear(self.matrix, list(rhs), self.field)

    def __eq__(self, other):
        if isinstance(other, LinearOperator):
            other = other.matrix
        other = np.asarray(other, dtype=object)
        return other.shape == self.matrix.shape and bool(np.all(self.matrix == other))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "LinearOperator(dim={}, field='{}')".format(self.dim, self.field.tag)


def inverse(matrix, field=REALS):
    '''Exact inverse of a square matrix, or None when it is singular'''
    field = field_from_tag(field)
    matrix = np.asarray(matrix, dtype=object)
    n = matrix.shape[0]
    augmented = np.empty((n, 2 * n), dtype=object)
    augmented[:, :n] = matrix
    augmented[:, n:] = identity(n, field)
    rows, _, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        return None
    out = np.empty((n, n), dtype=object)
    for r in range(n):
        for c in range(n):
            out[r, c] = field.coerce(rows[r][n + c])
    return out


def coordinates_in_basis(columns, vectors, field=REALS):
    '''
    Expresses each vector in the basis given by linearly independent columns.

    Returns a list holding, per vector, its coordinate array or None
    when the vector is not in the span.
    '''
    field = field_from_tag(field)
    basis = np.array([list(c) for c in columns], dtype=object).T
    #Independent rows of the basis matrix give an invertible square block
    _, _, row_selection = rref(basis.T)
    if len(row_selection) != basis.shape[1]:
        raise ValueError("basis columns are linearly dependent")
    block_inverse = inverse(basis[row_selection, :], field)
    out = []
    for v in vectors:
        v = np.asarray(list(v), dtype=object)
        x = block_inverse.dot(v[row_selection])
        out.append(x if bool(np.all(basis.dot(x) == v)) else None)
    return out
