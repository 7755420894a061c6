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
Real super division algebras and their classification into ten types.

Everything is decided over the rationals. Where the classical argument
rescales an odd element e by a real number to reach e^2 = +1 or -1, this
module reports only the sign of e^2: over R the rescaling by sqrt(|e^2|)
always exists, so the real isomorphism class depends on that sign alone.
For the same reason the even-part witnesses carry unnormalized squares
(u^2 = -d with d > 0 for C, a positive definite Gram matrix for H).

Odd part soundness: if one nonzero odd element e is invertible then every
odd element is a*e for an even a (A_1 = A_0 e), so when A_0 is a division
algebra all nonzero odd elements are invertible. Conversely if the first odd
basis element is not invertible, no odd element can be.

The recentering step of the H branch solves directly for an odd y that
commutes with all of A_0 (the element q^{-1} e for the quaternion q
implementing conjugation by e). The classical write-up states the
replacement as q e^{-1}; the commuting element is q^{-1} e, which is what
the nullspace computation produces.
'''

from __future__ import absolute_import, division, print_function

import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from TenfoldWay.exceptions import InternalContradiction, NotDivision, NotSuperDivision
from TenfoldWay.linalg import coordinates_in_basis, is_positive_definite, solve_linear, zeros
from TenfoldWay.scalar import I, REALS, format_rational, imag_part, real_part, sign
from TenfoldWay.superalgebra import SuperAlgebra, invert, is_invertible

log = logging.getLogger(__name__)

LABELS = ('R', 'C', 'H', 'R_plus', 'R_minus', 'C_comm',
          'C_anti_plus', 'C_anti_minus', 'H_plus', 'H_minus')

_VALID_FIELDS = [
    ('R', False, 'n/a', 'n/a'),
    ('C', False, 'n/a', 'n/a'),
    ('H', False, 'n/a', 'n/a'),
    ('R', True, 1, 'n/a'),
    ('R', True, -1, 'n/a'),
    ('C', True, 'irrelevant', 'commutes'),
    ('C', True, 1, 'anticommutes'),
    ('C', True, -1, 'anticommutes'),
    ('H', True, 1, 'commutes'),
    ('H', True, -1, 'commutes'),
]
_VALID = set(_VALID_FIELDS)


class TenfoldClass(namedtuple('TenfoldClass', ['even_type', 'has_odd', 'e_square_sign', 'commutation'])):
    '''
    One of the ten real super division algebra types.

    even_type: 'R', 'C' or 'H'
    has_odd: whether A_1 != 0
    e_square_sign: +1, -1, 'irrelevant' (C with commuting e) or 'n/a'
    commutation: 'commutes', 'anticommutes' or 'n/a'
    '''
    __slots__ = ()

    def __new__(cls, even_type, has_odd, e_square_sign='n/a', commutation='n/a'):
        self = super(TenfoldClass, cls).__new__(cls, even_type, bool(has_odd), e_square_sign, commutation)
        if tuple(self) not in _VALID:
            raise ValueError("{} is not one of the ten super division algebra types".format(tuple(self)))
        return self

    @property
    def label(self):
        return _BY_CLASS[self]

    @classmethod
    def from_label(cls, label):
        if label not in _BY_LABEL:
            raise ValueError('"{}" is not a valid label. Valid labels are: {}.'.format(
                label, ', '.join('"{}"'.format(e) for e in LABELS)))
        return _BY_LABEL[label]

    def __str__(self):
        return self.label


_BY_CLASS = {}
_BY_LABEL = {}
for _label, _fields in zip(LABELS, _VALID_FIELDS):
    _cls = TenfoldClass(*_fields)
    _BY_CLASS[_cls] = _label
    _BY_LABEL[_label] = _cls

TEN_CLASSES = tuple(_BY_LABEL[label] for label in LABELS)

_EVEN_DIMS = {'R': 1, 'C': 2, 'H': 4}


class EvenPartType(object):
    '''
    Result of recognizing A_0 as R, C or H, with witnesses living in the ambient algebra.

    label: 'R', 'C' or 'H'
    u, d: for C, an even element with u^2 = -d * 1 and d > 0
    pure_basis, gram: for H, three trace-zero even elements with uv + vu = -2 gram[u, v] * 1
      and gram positive definite
    '''

    def __init__(self, label, algebra, u=None, d=None, pure_basis=None, gram=None):
        self.label = label
        self.algebra = algebra
        self.u = u
        self.d = d
        self.pure_basis = pure_basis
        self.gram = gram

    def verify(self):
        '''Rechecks the defining identities of the witness exactly'''
        one = self.algebra.one()
        if self.label == 'C':
            return self.d > 0 and self.u * self.u == -self.d * one
        if self.label == 'H':
            for r, u in enumerate(self.pure_basis):
                for c, v in enumerate(self.pure_basis):
                    if u * v + v * u != (-2 * self.gram[r, c]) * one:
                        return False
            return is_positive_definite(self.gram)
        return True

    def to_dict(self):
        out = {"type": self.label}
        if self.label == 'C':
            out["u"] = self.u.to_list()
            out["d"] = format_rational(self.d)
        elif self.label == 'H':
            out["pure_basis"] = [p.to_list() for p in self.pure_basis]
            out["gram"] = [[format_rational(x) for x in row] for row in self.gram]
        return out

    def __repr__(self):
        return "EvenPartType('{}')".format(self.label)


class SuperDivisionCheck(object):
    '''Outcome of a successful super division test: the even type and the chosen odd element'''

    def __init__(self, even_type, chosen_e, notes):
        self.even_type = even_type
        self.chosen_e = chosen_e
        self.notes = notes


class ClassificationReport(object):
    '''
    Audit trail of a classification.

    tenfold_class: the TenfoldClass reached
    chosen_e: the odd element used first (first odd basis element), or None
    recentered_e: in the H branch, the odd element commuting with A_0; otherwise None
    even_witness: the EvenPartType of A_0
    trace: ordered list of the proof steps taken
    '''

    def __init__(self, tenfold_class, chosen_e, recentered_e, even_witness, trace):
        self.tenfold_class = tenfold_class
        self.chosen_e = chosen_e
        self.recentered_e = recentered_e
        self.even_witness = even_witness
        self.trace = trace

    @property
    def label(self):
        return self.tenfold_class.label

    def to_dict(self):
        return {
            "label": self.label,
            "invariants": list(invariant_tuple(self)),
            "even_witness": self.even_witness.to_dict(),
            "chosen_e": self.chosen_e.to_list() if self.chosen_e is not None else None,
            "recentered_e": self.recentered_e.to_list() if self.recentered_e is not None else None,
            "trace": list(self.trace),
        }

    def __repr__(self):
        return "ClassificationReport('{}')".format(self.label)


def _unit_multiple(x):
    '''The scalar l with x = l * 1, or None'''
    unit = x.algebra.unit
    k = next(i for i, u in enumerate(unit) if u != 0)
    lam = x.coords[k] / unit[k]
    if x != lam * x.algebra.one():
        return None
    return lam


def _trace_form(algebra):
    '''t(x) = Tr(L_x) / dim on basis elements, so that t(1) = 1'''
    n = algebra.dim
    row = []
    for r in range(n):
        total = sum((c for k in range(n) for m, c in algebra.products(r, k) if m == k), Fraction(0))
        row.append(total / n)
    return row


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _candidates(algebra, even_only=False):
    '''Deterministic list of simple homogeneous elements to test for non-invertibility'''
    odd, even = algebra.odd_indices, algebra.even_indices
    one = algebra.one()
    if not even_only:
        for i in odd:
            yield algebra.basis(i)
        for a, i in enumerate(odd):
            for j in odd[a + 1:]:
                yield algebra.basis(i) + algebra.basis(j)
                yield algebra.basis(i) - algebra.basis(j)
    for i in even:
        yield algebra.basis(i)
    for i in even:
        yield one + algebra.basis(i)
        yield one - algebra.basis(i)
    for a, i in enumerate(even):
        for j in even[a + 1:]:
            yield algebra.basis(i) + algebra.basis(j)
            yield algebra.basis(i) - algebra.basis(j)


def find_non_invertible(algebra, even_only=False):
    '''
    Searches simple homogeneous elements (odd ones first) for a nonzero non-invertible one.

    Returns the first such Element, or None if no candidate is singular.
    '''
    for candidate in _candidates(algebra, even_only):
        if not candidate.is_zero() and not is_invertible(candidate):
            log.debug("non-invertible witness found: %s", candidate)
            return candidate
    return None


def _reject_even(algebra, even, fallback):
    witness = find_non_invertible(even, even_only=True)
    if witness is not None:
        raise NotDivision(algebra.lift_even(witness.coords))
    raise NotDivision(fallback)


def recognize_even_division(algebra):
    '''
    Recognizes the even part A_0 of a real superalgebra as R, C or H.

    dim 1 gives R. In dim 2 a non-scalar basis element x satisfies x^2 = alpha + beta x;
    A_0 is C iff beta^2 + 4 alpha < 0, witnessed by u = 2x - beta with u^2 = beta^2 + 4 alpha.
    In dim 4 the trace form splits A_0 into scalars and a pure 3-space on which
    uv + vu = -2 B(u, v) must hold with B positive definite; this characterizes H.

    Raises NotDivision with a nonzero non-invertible even element, or a description of
    the violated identity when no rational zero divisor is at hand.
    '''
    even, indices = algebra.even_part()
    n = even.dim
    one = even.one()
    lift = algebra.lift_even

    if n == 1:
        log.debug("A_0 is one-dimensional: R")
        return EvenPartType('R', algebra)

    if n == 2:
        x = None
        for r in range(n):
            candidate = even.basis(r)
            if coordinates_in_basis([one.coords], [candidate.coords], even.field)[0] is None:
                x = candidate
                break
        alpha, beta = coordinates_in_basis([one.coords, x.coords], [(x * x).coords], even.field)[0]
        disc = beta * beta + 4 * alpha
        if disc < 0:
            u = 2 * x - beta * one
            log.debug("A_0 is C: x^2 = %s + %s x, discriminant %s", alpha, beta, disc)
            return EvenPartType('C', algebra, u=lift(u.coords), d=-disc)
        root = _rational_sqrt(disc)
        if root is not None:
            #(x - r1)(x - r2) = 0 with r1, r2 = (beta +- root) / 2
            raise NotDivision(lift((x - ((beta + root) / 2) * one).coords))
        _reject_even(algebra, even, "x^2 = {} + {} x has discriminant {} >= 0".format(
            format_rational(alpha), format_rational(beta), format_rational(disc)))

    if n == 4:
        trace = _trace_form(even)
        solution = solve_linear(np.array([trace], dtype=object), None, even.field)
        pure = [even.element(v) for v in solution.nullspace]
        gram = zeros((3, 3), REALS)
        for r, u in enumerate(pure):
            for c, v in enumerate(pure):
                s = u * v + v * u
                lam = _unit_multiple(s)
                if lam is None:
                    _reject_even(algebra, even, "u v + v u is not scalar for pure elements {} and {}".format(
                        lift(u.coords), lift(v.coords)))
                gram[r, c] = -lam / 2
        if not is_positive_definite(gram):
            for r, u in enumerate(pure):
                root = _rational_sqrt(-gram[r, r])
                if root is not None and root != 0:
                    raise NotDivision(lift((u - root * one).coords))
            _reject_even(algebra, even, "quadratic form on the pure part is not positive definite")
        log.debug("A_0 is H: pure part Gram matrix %s", gram.tolist())
        return EvenPartType('H', algebra, pure_basis=[lift(p.coords) for p in pure], gram=gram)

    _reject_even(algebra, even, "even part has dimension {}, not 1, 2 or 4".format(n))


def is_super_division(algebra):
    '''
    Decides whether every nonzero homogeneous element is invertible.

    Succeeds iff A_0 is recognized as R, C or H and either A_1 = 0 or the first odd
    basis element is invertible. Raises NotSuperDivision carrying a concrete nonzero
    non-invertible homogeneous element (or the violated identity).
    '''
    if algebra.field.is_complex:
        raise ValueError("only real superalgebras are classified; pass complex ones through realify first")
    notes = []
    try:
        even_type = recognize_even_division(algebra)
    except NotDivision as err:
        witness = find_non_invertible(algebra)
        raise NotSuperDivision(witness if witness is not None else err.witness,
                               "A_0 is not a division algebra, witness {}".format(
                                   witness if witness is not None else err.witness))
    notes.append("A_0 is a division algebra of type {}".format(even_type.label))

    chosen_e = None
    odd = algebra.odd_indices
    if odd:
        chosen_e = algebra.basis(odd[0])
        if not is_invertible(chosen_e):
            raise NotSuperDivision(chosen_e, "odd basis element {} is not invertible, so no odd element is".format(chosen_e))
        notes.append("odd element {} is invertible, hence A_1 = A_0 e and every nonzero odd element is invertible".format(chosen_e))
    else:
        notes.append("A_1 = 0")
    return SuperDivisionCheck(even_type, chosen_e, notes)


def classify(algebra):
    '''
    Places a real super division algebra among the ten types by running the
    case analysis on A_0 = R, C, H.

    Returns a ClassificationReport. Raises NotSuperDivision when the algebra is
    not a super division algebra and InternalContradiction when a case excluded
    by the argument shows up.
    '''
    check = is_super_division(algebra)
    even_type = check.even_type
    e = check.chosen_e
    trace = list(check.notes)
    recentered = None

    if e is None:
        tenfold_class = TenfoldClass(even_type.label, False)
        trace.append("purely even: the division algebra {}".format(even_type.label))

    elif even_type.label == 'R':
        lam = _unit_multiple(e * e)
        if lam is None or lam == 0:
            raise InternalContradiction("e^2 is not a nonzero real although A_0 = R")
        trace.append("A_0 = R: e^2 = {}, rescaling by a real number gives e^2 = {:+d}".format(
            format_rational(lam), sign(lam)))
        tenfold_class = TenfoldClass('R', True, sign(lam))

    elif even_type.label == 'C':
        u = even_type.u
        conjugated = e * u * invert(e)
        if conjugated == u:
            trace.append("A_0 = C: e u e^-1 = u, e commutes with C and rescales over C to e^2 = 1")
            tenfold_class = TenfoldClass('C', True, 'irrelevant', 'commutes')
        elif conjugated == -u:
            lam = _unit_multiple(e * e)
            if lam is None or lam == 0:
                raise InternalContradiction("e anticommutes with u but e^2 is not real")
            trace.append("A_0 = C: e u e^-1 = -u (complex conjugation), e^2 = {} is real, sign {:+d}".format(
                format_rational(lam), sign(lam)))
            tenfold_class = TenfoldClass('C', True, sign(lam), 'anticommutes')
        else:
            raise InternalContradiction("e u e^-1 is neither u nor -u: {}".format(conjugated))

    elif even_type.label == 'H':
        recentered = _commuting_odd_element(algebra)
        lam = _unit_multiple(recentered * recentered)
        if lam is None or lam == 0:
            raise InternalContradiction("odd element commuting with A_0 has non-real square")
        trace.append("A_0 = H: recentered odd element {} commutes with A_0, square {} of sign {:+d}".format(
            recentered, format_rational(lam), sign(lam)))
        tenfold_class = TenfoldClass('H', True, sign(lam), 'commutes')

    else:
        raise InternalContradiction("unknown even type {}".format(even_type.label))

    log.debug("classified as %s", tenfold_class.label)
    return ClassificationReport(tenfold_class, e, recentered, even_type, trace)


def _commuting_odd_element(algebra):
    '''First nullspace vector of y a = a y (a over the even basis, y odd)'''
    odd = algebra.odd_indices
    rows = []
    for a in algebra.even_indices:
        b_a = algebra.basis(a)
        columns = []
        for o in odd:
            b_o = algebra.basis(o)
            columns.append((b_o * b_a - b_a * b_o).coords)
        for t in range(algebra.dim):
            row = [col[t] for col in columns]
            if any(x != 0 for x in row):
                rows.append(row)
    if not rows:
        rows = [[0] * len(odd)]
    solution = solve_linear(np.array(rows, dtype=object), None, algebra.field)
    if not solution.nullspace:
        raise InternalContradiction("no odd element commutes with A_0 = H")
    coords = zeros(algebra.dim, algebra.field)
    for r, o in enumerate(odd):
        coords[o] = solution.nullspace[0][r]
    return algebra.element(coords)


def invariant_tuple(report):
    '''(dim A_0, has_odd, commutation, e_square_sign); equal tuples iff equal classes'''
    cls = report.tenfold_class if isinstance(report, ClassificationReport) else report
    return (_EVEN_DIMS[cls.even_type], cls.has_odd, cls.commutation, cls.e_square_sign)


###Canonical algebras###

_REAL_TABLE = ({(0, 0): {0: 1}}, ['1'])
_COMPLEX_TABLE = ({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: -1}}, ['1', 'i'])


def quaternion_products():
    '''Structure constants of H on the basis 1, i, j, k'''
    #i^2 = j^2 = k^2 = ijk = -1
    signs = {(1, 2): (3, 1), (2, 3): (1, 1), (3, 1): (2, 1),
             (2, 1): (3, -1), (3, 2): (1, -1), (1, 3): (2, -1)}
    products = {}
    for a in range(4):
        products[(0, a)] = {a: 1}
        products[(a, 0)] = {a: 1}
    for a in range(1, 4):
        products[(a, a)] = {0: -1}
    for (a, b), (k, s) in signs.items():
        products[(a, b)] = {k: s}
    return products, ['1', 'i', 'j', 'k']


def crossed_product(even_products, even_labels, sigma, lam, validate=True):
    '''
    The superalgebra A_0 + A_0 e with e a = sigma(a) e and e^2 = lam.

    even_products: structure constants of A_0 (basis element 0 is the unit)
    sigma: (n0 x n0) matrix of an involutive automorphism of A_0 (column j = sigma(b_j))
    lam: nonzero rational fixed by sigma
    '''
    n0 = len(even_labels)
    dense = {}
    for (i, j), row in even_products.items():
        dense[(i, j)] = row

    def even_mul(i, j):
        return dense.get((i, j), {})

    def add(target, key, k, c):
        row = target.setdefault(key, {})
        row[k] = row.get(k, 0) + c

    products = {}
    for i in range(n0):
        for j in range(n0):
            for k, c in even_mul(i, j).items():
                add(products, (i, j), k, c)
                add(products, (i, n0 + j), n0 + k, c)
            #b_i e * b_j = b_i sigma(b_j) e
            for m in range(n0):
                s = sigma[m][j]
                if s == 0:
                    continue
                for k, c in even_mul(i, m).items():
                    add(products, (n0 + i, j), n0 + k, s * c)
                    add(products, (n0 + i, n0 + j), k, lam * s * c)
    labels = list(even_labels) + [('e' if l == '1' else l + 'e') for l in even_labels]
    unit = [1] + [0] * (2 * n0 - 1)
    return SuperAlgebra(REALS, [0] * n0 + [1] * n0, products, unit, labels=labels, validate=validate)


def canonical(label):
    '''
    Explicit structure constants of the canonical algebra of a type.

    label: one of LABELS or a TenfoldClass
    Dimensions are 1, 2, 4 for the purely even types, 2 for R_+-, 4 for the C types and 8 for H_+-.
    '''
    cls = label if isinstance(label, TenfoldClass) else TenfoldClass.from_label(label)
    if cls.even_type == 'R':
        products, labels = _REAL_TABLE
    elif cls.even_type == 'C':
        products, labels = _COMPLEX_TABLE
    else:
        products, labels = quaternion_products()
    n0 = len(labels)

    if not cls.has_odd:
        return SuperAlgebra(REALS, [0] * n0, products, [1] + [0] * (n0 - 1), labels=labels)

    sigma = [[1 if r == c else 0 for c in range(n0)] for r in range(n0)]
    if cls.commutation == 'anticommutes':
        #Complex conjugation: i -> -i
        sigma[1][1] = -1
    lam = 1 if cls.e_square_sign == 'irrelevant' else cls.e_square_sign
    return crossed_product(products, labels, sigma, lam)


def realify(algebra, validate=False):
    '''
    The underlying real superalgebra of a complex one.

    Basis element b_k of the complex algebra becomes the real pair (b_k, i b_k) at
    indices 2k, 2k + 1; parities are inherited.
    '''
    if not algebra.field.is_complex:
        raise ValueError("realify expects a complex (C-model) algebra")
    n = algebra.dim
    parity = [algebra.parity[k // 2] for k in range(2 * n)]
    i_powers = [1, I]
    products = {}
    for a in range(n):
        for b in range(n):
            entries = algebra.products(a, b)
            if not entries:
                continue
            for s in (0, 1):
                for t in (0, 1):
                    row = {}
                    phase = i_powers[s] * i_powers[t]
                    for k, c in entries:
                        gamma = phase * c
                        if real_part(gamma) != 0:
                            row[2 * k] = real_part(gamma)
                        if imag_part(gamma) != 0:
                            row[2 * k + 1] = imag_part(gamma)
                    if row:
                        products[(2 * a + s, 2 * b + t)] = row
    unit = []
    for u in algebra.unit:
        unit.extend([real_part(u), imag_part(u)])
    labels = None
    if algebra.labels is not None:
        labels = []
        for l in algebra.labels:
            labels.extend([l, "i" if l == "1" else "i" + l])
    return SuperAlgebra(REALS, parity, products, unit, labels=labels, validate=validate)
