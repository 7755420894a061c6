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
Finite-dimensional superalgebras presented by graded structure constants.

A SuperAlgebra has basis b_0 .. b_{n-1}, each of parity 0 (even) or 1 (odd),
and products b_i b_j = sum_k c_{ij}^k b_k. The graded (Koszul) tensor product
uses the sign rule (a x b)(a' x b') = (-1)^{|b||a'|} (aa') x (bb').
'''

from __future__ import absolute_import, division, print_function

import json
import logging

import numpy as np

from TenfoldWay.exceptions import (AlgebraMismatch, BadUnit, FieldMismatch,
                                   GradingViolation, NonAssociative, NotInvertible)
from TenfoldWay.linalg import (LinearOperator, coordinates_in_basis, identity, inverse, rank,
                               solve_linear, zeros)
from TenfoldWay.scalar import REALS, field_from_tag, format_rational, is_real, real_part

log = logging.getLogger(__name__)

MAX_DIM = 256


class SuperAlgebra(object):
    '''
    A finite-dimensional associative unital superalgebra over R (rationals) or C (Gaussian rationals).

    field: ScalarField or tag 'R' / 'C'
    parity: sequence of 0/1, one entry per basis element
    products: dict {(i, j): {k: c_ij^k}} holding the nonzero structure constants
    unit: coordinates of the unit element
    labels: optional names of the basis elements, used when printing elements
    validate: if True, grading, associativity and the unit law are checked exhaustively
    '''

    def __init__(self, field, parity, products, unit, labels=None, validate=True):
        self.field = field_from_tag(field)
        self.parity = tuple(int(p) for p in parity)
        self.dim = len(self.parity)
        if self.dim < 1:
            raise ValueError("a superalgebra needs at least one basis element")
        if self.dim > MAX_DIM:
            raise ValueError("dimension {} exceeds the supported maximum of {}".format(self.dim, MAX_DIM))
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parity entries must be 0 or 1, got {}".format(list(parity)))
        if len(unit) != self.dim:
            raise ValueError("unit has {} coordinates, algebra has dimension {}".format(len(unit), self.dim))

        coerce = self.field.coerce
        zero = self.field.zero
        #Dense structure constants c_ij^k; _table[i][j] lists the (k, c) with c != 0
        self.mul_table = zeros((self.dim, self.dim, self.dim), self.field)
        self._table = [[[] for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), row in products.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError("product index ({}, {}) out of range".format(i, j))
            entries = []
            for k in sorted(row):
                if not 0 <= k < self.dim:
                    raise ValueError("structure constant index {} out of range".format(k))
                c = coerce(row[k])
                if c != zero:
                    entries.append((k, c))
                    self.mul_table[i, j, k] = c
            self._table[i][j] = entries

        self.unit = np.array([coerce(u) for u in unit], dtype=object)
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("{} labels given for dimension {}".format(len(self.labels), self.dim))

        if validate:
            self.validate()
        log.debug("constructed %s superalgebra of dimension %d (%d even, %d odd)",
                  self.field.tag, self.dim, len(self.even_indices), len(self.odd_indices))

    @classmethod
    def from_dense(cls, field, parity, mul_table, unit, labels=None, validate=True):
        '''Builds an algebra from a dense (dim x dim x dim) array of structure constants'''
        mul_table = np.asarray(mul_table, dtype=object)
        n = len(parity)
        if mul_table.shape != (n, n, n):
            raise ValueError("mul_table has shape {}, expected {}".format(mul_table.shape, (n, n, n)))
        products = {}
        for i in range(n):
            for j in range(n):
                row = dict((k, mul_table[i, j, k]) for k in range(n) if mul_table[i, j, k] != 0)
                if row:
                    products[(i, j)] = row
        return cls(field, parity, products, unit, labels=labels, validate=validate)

    def products(self, i, j):
        '''Nonzero structure constants of b_i b_j as a list of (k, c)'''
        return self._table[i][j]

    @property
    def even_indices(self):
        return [i for i, p in enumerate(self.parity) if p == 0]

    @property
    def odd_indices(self):
        return [i for i, p in enumerate(self.parity) if p == 1]

    @property
    def is_purely_even(self):
        return not self.odd_indices

    def label(self, i):
        return self.labels[i] if self.labels is not None else "b{}".format(i)

    ###Elements###

    def element(self, coords):
        return Element(self, coords)

    def basis(self, i):
        coords = zeros(self.dim, self.field)
        coords[i] = self.field.one
        return Element(self, coords)

    def one(self):
        return Element(self, self.unit)

    def zero(self):
        return Element(self, zeros(self.dim, self.field))

    def _mul_coords(self, a, b):
        out = [self.field.zero] * self.dim
        b_support = [(j, y) for j, y in enumerate(b) if y != 0]
        for i, x in enumerate(a):
            if x == 0:
                continue
            table_i = self._table[i]
            for j, y in b_support:
                s = x * y
                for k, c in table_i[j]:
                    out[k] = out[k] + s * c
        return np.array(out, dtype=object)

    ###Validation###

    def validate(self):
        '''Exhaustive check of the grading, associativity and unit law over basis tuples'''
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k, _ in self._table[i][j]:
                    if self.parity[k] != (self.parity[i] + self.parity[j]) % 2:
                        raise GradingViolation(i, j, k)

        unit = self.unit
        for idx in range(n):
            if unit[idx] != 0 and self.parity[idx] != 0:
                raise BadUnit(idx, "unit has an odd component")
        for i in range(n):
            b = self.basis(i).coords
            if not _vec_equal(self._mul_coords(unit, b), b):
                raise BadUnit(i, "unit * b != b")
            if not _vec_equal(self._mul_coords(b, unit), b):
                raise BadUnit(i, "b * unit != b")

        #(b_i b_j) b_k == b_i (b_j b_k) through the sparse table
        for i in range(n):
            for j in range(n):
                ij = self._table[i][j]
                for k in range(n):
                    left = {}
                    for m, c in ij:
                        for t, d in self._table[m][k]:
                            left[t] = left.get(t, 0) + c * d
                    right = {}
                    for m, c in self._table[j][k]:
                        for t, d in self._table[i][m]:
                            right[t] = right.get(t, 0) + c * d
                    if not _dict_equal(left, right):
                        raise NonAssociative(i, j, k)
        return True

    ###Derived structures###

    def even_part(self):
        '''
        The even subalgebra A_0.

        Returns (SuperAlgebra, indices) where indices[r] is the position in this
        algebra of the r-th basis element of the subalgebra.
        '''
        indices = self.even_indices
        position = dict((old, new) for new, old in enumerate(indices))
        products = {}
        for a, i in enumerate(indices):
            for b, j in enumerate(indices):
                row = dict((position[k], c) for k, c in self._table[i][j])
                if row:
                    products[(a, b)] = row
        unit = [self.unit[i] for i in indices]
        labels = [self.label(i) for i in indices] if self.labels is not None else None
        return SuperAlgebra(self.field, [0] * len(indices), products, unit, labels=labels, validate=False), indices

    def lift_even(self, coords):
        '''Embeds coordinates over the even subalgebra back into this algebra'''
        out = zeros(self.dim, self.field)
        for r, i in enumerate(self.even_indices):
            out[i] = coords[r]
        return Element(self, out)

    def structure_equal(self, other):
        return (isinstance(other, SuperAlgebra) and self.field == other.field
                and self.parity == other.parity and _vec_equal(self.unit, other.unit)
                and self._table == other._table)

    ###Interchange###

    def to_dict(self):
        fmt = self.field.format
        out = {
            "field": self.field.tag,
            "dim": self.dim,
            "parity": list(self.parity),
            "unit": [fmt(u) for u in self.unit],
            "mul": [[[fmt(c) for c in self.mul_table[i, j]] for j in range(self.dim)]
                    for i in range(self.dim)],
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data, validate=True):
        field = field_from_tag(data["field"])
        dim = int(data["dim"])
        parity = data["parity"]
        if len(parity) != dim:
            raise ValueError("parity has length {}, dim is {}".format(len(parity), dim))
        mul = data["mul"]
        if len(mul) != dim or any(len(row) != dim for row in mul):
            raise ValueError("mul must be a {0}x{0} array of coordinate vectors".format(dim))
        products = {}
        for i in range(dim):
            for j in range(dim):
                vec = mul[i][j]
                if len(vec) != dim:
                    raise ValueError("mul[{}][{}] has {} coordinates, expected {}".format(i, j, len(vec), dim))
                row = {}
                for k, s in enumerate(vec):
                    c = field.parse(s)
                    if c != 0:
                        row[k] = c
                if row:
                    products[(i, j)] = row
        unit = [field.parse(s) for s in data["unit"]]
        return cls(field, parity, products, unit, labels=data.get("labels"), validate=validate)

    def dumps(self):
        return dumps(self)

    def __repr__(self):
        return "SuperAlgebra(field='{}', dim={}, even={}, odd={})".format(
            self.field.tag, self.dim, len(self.even_indices), len(self.odd_indices))


class Element(object):
    '''
    A coordinate vector in a SuperAlgebra.

    parity_tag: 'even' if the support lies in even basis indices, 'odd' if in odd
      indices, 'mixed' otherwise (the zero element counts as even)
    '''

    def __init__(self, algebra, coords):
        self.algebra = algebra
        if len(coords) != algebra.dim:
            raise ValueError("element has {} coordinates, algebra has dimension {}".format(
                len(coords), algebra.dim))
        coerce = algebra.field.coerce
        self.coords = np.array([coerce(c) for c in coords], dtype=object)

    @property
    def parity_tag(self):
        parities = set(self.algebra.parity[i] for i, c in enumerate(self.coords) if c != 0)
        if parities <= {0}:
            return 'even'
        if parities == {1}:
            return 'odd'
        return 'mixed'

    @property
    def is_homogeneous(self):
        return self.parity_tag != 'mixed'

    @property
    def parity(self):
        '''0 or 1 for homogeneous elements, None for mixed ones'''
        return {'even': 0, 'odd': 1}.get(self.parity_tag)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected an Element, got {!r}".format(other))
        if other.algebra is not self.algebra and not other.algebra.structure_equal(self.algebra):
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, self.coords - other.coords)

    def __neg__(self):
        return Element(self.algebra, -self.coords)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, self.coords * c)

    def __rmul__(self, other):
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, c * self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra and not other.algebra.structure_equal(self.algebra):
            return False
        return _vec_equal(self.coords, other.coords)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def to_list(self):
        return [self.algebra.field.format(c) for c in self.coords]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            name = self.algebra.label(i)
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            elif is_real(c):
                terms.append("{}*{}".format(format_rational(real_part(c)), name))
            else:
                terms.append("({})*{}".format(c, name))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return "Element({})".format(self)


def _vec_equal(a, b):
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def _dict_equal(left, right):
    for key in set(left) | set(right):
        if left.get(key, 0) != right.get(key, 0):
            return False
    return True


def make_superalgebra(field, parity, mul_table, unit, labels=None, validate=True):
    '''
    Builds a SuperAlgebra from a dense structure constant array.

    mul_table: dim x dim array whose (i, j) entry is the coordinate vector of b_i b_j
    validate: set False only for internally generated tables (they are revalidated in tests)
    Raises GradingViolation, NonAssociative or BadUnit with the witnessing indices.
    '''
    return SuperAlgebra.from_dense(field, parity, mul_table, unit, labels=labels, validate=validate)


def validate(algebra):
    return algebra.validate()


def multiply(a, b):
    '''Bilinear product of two elements of the same algebra'''
    if not isinstance(a, Element) or not isinstance(b, Element):
        raise TypeError("multiply expects two Elements")
    a._check(b)
    return Element(a.algebra, a.algebra._mul_coords(a.coords, b.coords))


def left_mul_operator(a):
    '''Matrix of x -> a x; column k holds the coordinates of a b_k'''
    algebra = a.algebra
    matrix = zeros((algebra.dim, algebra.dim), algebra.field)
    for k in range(algebra.dim):
        matrix[:, k] = algebra._mul_coords(a.coords, algebra.basis(k).coords)
    return LinearOperator(matrix, algebra.field)


def right_mul_operator(a):
    '''Matrix of x -> x a'''
    algebra = a.algebra
    matrix = zeros((algebra.dim, algebra.dim), algebra.field)
    for k in range(algebra.dim):
        matrix[:, k] = algebra._mul_coords(algebra.basis(k).coords, a.coords)
    return LinearOperator(matrix, algebra.field)


def is_invertible(a):
    '''In a finite-dimensional unital algebra a is invertible iff x -> a x is bijective'''
    return not a.is_zero() and left_mul_operator(a).rank() == a.algebra.dim


def invert(a):
    '''
    Two-sided inverse of a, found by solving L_a x = unit exactly.

    Raises NotInvertible when the system has no solution or the solution fails
    to be an inverse from both sides.
    '''
    algebra = a.algebra
    if a.is_zero():
        raise NotInvertible(a, "zero element")
    solution = solve_linear(left_mul_operator(a).matrix, list(algebra.unit), algebra.field)
    if not solution.consistent:
        raise NotInvertible(a, "L_a x = 1 has no solution")
    b = Element(algebra, solution.particular)
    one = algebra.one()
    if multiply(a, b) != one or multiply(b, a) != one:
        raise NotInvertible(a, "one-sided inverse only")
    return b


def graded_tensor(A, B, validate=False):
    '''
    Graded tensor product A (x) B.

    Basis element (i, j) sits at index i * B.dim + j with parity parity_A[i] + parity_B[j] mod 2;
    (a x b)(a' x b') = (-1)^{|b||a'|} (a a') x (b b').
    '''
    if A.field != B.field:
        raise FieldMismatch("cannot tensor a {} algebra with a {} algebra".format(A.field.tag, B.field.tag))
    nA, nB = A.dim, B.dim
    if nA * nB > MAX_DIM:
        raise ValueError("tensor product dimension {} exceeds {}".format(nA * nB, MAX_DIM))
    parity = [(A.parity[i] + B.parity[j]) % 2 for i in range(nA) for j in range(nB)]

    products = {}
    for i in range(nA):
        for i2 in range(nA):
            a_row = A.products(i, i2)
            if not a_row:
                continue
            for j in range(nB):
                #Koszul sign: b_j moves past a_{i2}
                sign = -1 if B.parity[j] * A.parity[i2] else 1
                for j2 in range(nB):
                    b_row = B.products(j, j2)
                    if not b_row:
                        continue
                    row = {}
                    for k, c in a_row:
                        for l, d in b_row:
                            row[k * nB + l] = sign * c * d
                    products[(i * nB + j, i2 * nB + j2)] = row

    unit = [A.unit[i] * B.unit[j] for i in range(nA) for j in range(nB)]
    labels = None
    if A.labels is not None or B.labels is not None:
        labels = ["{}(x){}".format(A.label(i), B.label(j)) for i in range(nA) for j in range(nB)]
    log.debug("graded tensor of dims %d and %d", nA, nB)
    return SuperAlgebra(A.field, parity, products, unit, labels=labels, validate=validate)


def pure_tensor(a, b, product):
    '''The element a (x) b of a graded tensor product built from a's and b's algebras'''
    nB = b.algebra.dim
    coords = zeros(product.dim, product.field)
    for i, x in enumerate(a.coords):
        if x == 0:
            continue
        for j, y in enumerate(b.coords):
            if y != 0:
                coords[i * nB + j] = x * y
    return Element(product, coords)


def change_of_basis(algebra, P, validate=False):
    '''
    Re-expresses the algebra in a new basis.

    P: invertible (dim x dim) matrix whose columns are the new basis vectors in old
      coordinates; it must not mix parities, so the grading carries over unchanged.
    '''
    P = np.asarray(P, dtype=object)
    n = algebra.dim
    if P.shape != (n, n):
        raise ValueError("change of basis must be {0}x{0}, got {1}".format(n, P.shape))
    for k in range(n):
        for i in range(n):
            if P[k, i] != 0 and algebra.parity[k] != algebra.parity[i]:
                raise ValueError("change of basis mixes parities at ({}, {})".format(k, i))
    P_inv = inverse(P, algebra.field)
    if P_inv is None:
        raise ValueError("change of basis matrix is singular")

    columns = [np.array([algebra.field.coerce(x) for x in P[:, i]], dtype=object) for i in range(n)]
    products = {}
    for i in range(n):
        for j in range(n):
            v = P_inv.dot(algebra._mul_coords(columns[i], columns[j]))
            row = dict((k, v[k]) for k in range(n) if v[k] != 0)
            if row:
                products[(i, j)] = row
    unit = P_inv.dot(algebra.unit)
    return SuperAlgebra(algebra.field, algebra.parity, products, list(unit), validate=validate)


def random_graded_basis(algebra, rng, low=-3, high=3):
    '''Random exact invertible matrix preserving the grading (integer entries in [low, high])'''
    n = algebra.dim
    P = zeros((n, n), algebra.field)
    for block in (algebra.even_indices, algebra.odd_indices):
        if not block:
            continue
        while True:
            values = rng.integers(low, high + 1, size=(len(block), len(block)))
            sub = np.array([[algebra.field.coerce(int(v)) for v in row] for row in values], dtype=object)
            if rank(sub) == len(block):
                break
        for r, k in enumerate(block):
            for c, i in enumerate(block):
                P[k, i] = sub[r, c]
    return P


def matrix_algebra(basis_matrices, field=REALS, validate=False):
    '''
    Purely even algebra spanned by the given (linearly independent) square matrices.

    The span must be closed under multiplication and contain the identity; the
    structure constants are the coordinates of B_i B_j in the given basis.
    '''
    field = field_from_tag(field)
    basis = [np.asarray(B, dtype=object) for B in basis_matrices]
    if not basis:
        raise ValueError("matrix_algebra needs at least one basis matrix")
    degree = basis[0].shape[0]
    flat = [B.reshape(-1) for B in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(len(basis))]
    targets = [basis[i].dot(basis[j]).reshape(-1) for i, j in pairs] + [identity(degree, field).reshape(-1)]
    coordinates = coordinates_in_basis(flat, targets, field)
    if any(c is None for c in coordinates):
        raise ValueError("span of the given matrices is not a unital subalgebra")
    products = {}
    for (i, j), vec in zip(pairs, coordinates[:-1]):
        row = dict((k, vec[k]) for k in range(len(basis)) if vec[k] != 0)
        if row:
            products[(i, j)] = row
    return SuperAlgebra(field, [0] * len(basis), products, list(coordinates[-1]), validate=validate)


def dumps(algebra):
    '''Canonical JSON text of an algebra; loads(dumps(A)) reproduces it byte for byte'''
    return json.dumps(algebra.to_dict(), separators=(", ", ": "))


def loads(text, validate=True):
    return SuperAlgebra.from_dict(json.loads(text), validate=validate)
