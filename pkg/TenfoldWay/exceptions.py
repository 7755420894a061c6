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


class TenfoldError(Exception):
    '''Base class for every domain rejection raised by the package'''
    pass


class DivisionByZero(TenfoldError, ZeroDivisionError):
    pass


class GradingViolation(TenfoldError):
    '''Structure constant c_{ij}^k is nonzero although parity[k] != parity[i] + parity[j]'''

    def __init__(self, i, j, k):
        self.i, self.j, self.k = i, j, k
        super(GradingViolation, self).__init__(
            "b{} * b{} has a nonzero b{} component of the wrong parity".format(i, j, k))


class NonAssociative(TenfoldError):

    def __init__(self, i, j, k):
        self.i, self.j, self.k = i, j, k
        super(NonAssociative, self).__init__(
            "(b{0} b{1}) b{2} != b{0} (b{1} b{2})".format(i, j, k))


class BadUnit(TenfoldError):

    def __init__(self, index, reason="unit law fails"):
        self.index = index
        super(BadUnit, self).__init__("{} at basis element b{}".format(reason, index))


class AlgebraMismatch(TenfoldError):
    pass


class FieldMismatch(TenfoldError):
    pass


class NotInvertible(TenfoldError):

    def __init__(self, element, reason="no two-sided inverse"):
        self.element = element
        super(NotInvertible, self).__init__("{}: {}".format(reason, element))


class NotDivision(TenfoldError):
    '''
    Raised when an (even) algebra is not a division algebra.

    witness: either a nonzero non-invertible Element, or a string
      naming the identity / definiteness condition that failed
    '''

    def __init__(self, witness, reason=None):
        self.witness = witness
        super(NotDivision, self).__init__(reason or "not a division algebra, witness {}".format(witness))


class NotSuperDivision(TenfoldError):

    def __init__(self, witness, reason=None):
        self.witness = witness
        super(NotSuperDivision, self).__init__(
            reason or "not a super division algebra, witness {}".format(witness))


class InternalContradiction(TenfoldError):
    '''A case excluded by the classification argument was observed'''
    pass


class SignatureTooLarge(TenfoldError):
    pass


class SizeTooLarge(TenfoldError):
    pass


class RelationFailure(TenfoldError):

    def __init__(self, relation, indices, value):
        self.relation = relation
        self.indices = indices
        self.value = value
        super(RelationFailure, self).__init__(
            "{} fails for generator image(s) {}: got {}".format(relation, indices, value))


class SpanDeficient(TenfoldError):

    def __init__(self, span_dim, expected):
        self.span_dim = span_dim
        self.expected = expected
        super(SpanDeficient, self).__init__(
            "generator images span {} dimensions, expected {}".format(span_dim, expected))


class ClosureExceeded(TenfoldError):

    def __init__(self, cap):
        self.cap = cap
        super(ClosureExceeded, self).__init__("group closure exceeded cap of {} elements".format(cap))


class NotIrreducible(TenfoldError):

    def __init__(self, commutant_dim):
        self.commutant_dim = commutant_dim
        super(NotIrreducible, self).__init__(
            "commutant has dimension {} over C, representation is reducible".format(commutant_dim))
