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
Real and complex Clifford algebras, matrix superalgebras, Brauer-Wall classes
and explicit certificates for the periodicity isomorphisms

    Cl(p+1, q+1) = Cl(p, q) (x) Cl(1, 1),    Cl(1, 1) = End(R^{1|1}),
    Cl_{n+2}(C) = Cl_n(C) (x) Cl_2(C).

Basis monomials are subsets of the generators, ordered by size and then
lexicographically; generator e_i is basis element i (1-based).
'''

from __future__ import absolute_import, division, print_function

import itertools
import logging
from collections import namedtuple

import numpy as np

from TenfoldWay.divclass import canonical, classify, realify
from TenfoldWay.exceptions import (NotSuperDivision, RelationFailure, SignatureTooLarge,
                                   SizeTooLarge, SpanDeficient)
from TenfoldWay.linalg import rank
from TenfoldWay.scalar import COMPLEXES, REALS
from TenfoldWay.superalgebra import SuperAlgebra, graded_tensor, pure_tensor

log = logging.getLogger(__name__)

MAX_CLIFFORD_RANK = 8
MAX_END_DIM = 256

#Expected super division label of each real Brauer-Wall class
MORITA_LABELS = {
    0: 'R',
    1: 'R_plus',
    2: 'C_anti_plus',
    3: 'H_minus',
    4: 'H',
    5: 'H_plus',
    6: 'C_anti_minus',
    7: 'R_minus',
}

#Complex classes 0, 1 are represented by Cl_0(C) and Cl_1(C)
COMPLEX_MORITA_LABELS = {0: 'C', 1: 'C_comm'}


class CliffordSignature(namedtuple('CliffordSignature', ['p', 'q'])):
    '''p generators squaring to +1 followed by q generators squaring to -1'''
    __slots__ = ()

    def __new__(cls, p, q):
        p, q = int(p), int(q)
        if p < 0 or q < 0:
            raise ValueError("signature entries must be nonnegative, got ({}, {})".format(p, q))
        if p + q > MAX_CLIFFORD_RANK:
            raise SignatureTooLarge("signature ({}, {}) exceeds p + q <= {}".format(p, q, MAX_CLIFFORD_RANK))
        return super(CliffordSignature, cls).__new__(cls, p, q)

    @property
    def n(self):
        return self.p + self.q

    def __str__(self):
        return "Cl({},{})".format(self.p, self.q)


class BrauerWallClass(namedtuple('BrauerWallClass', ['modulus', 'value'])):
    __slots__ = ()

    def __new__(cls, modulus, value):
        if modulus not in (8, 2):
            raise ValueError("Brauer-Wall modulus must be 8 (real) or 2 (complex), got {}".format(modulus))
        return super(BrauerWallClass, cls).__new__(cls, modulus, value % modulus)


class GeneratorMap(object):
    '''
    Images of the generators of a Clifford algebra in a target superalgebra.

    source: the Clifford algebra, with signature
    target: the target SuperAlgebra
    images: one odd target Element per source generator
    '''

    def __init__(self, source, signature, target, images):
        if len(images) != signature.n:
            raise ValueError("{} images given for {} generators".format(len(images), signature.n))
        for idx, image in enumerate(images):
            if image.parity_tag != 'odd' or image.is_zero():
                raise ValueError("image of generator {} is not a nonzero odd element".format(idx + 1))
        self.source = source
        self.signature = signature
        self.target = target
        self.images = images


class PeriodicityCertificate(object):
    '''A verified GeneratorMap: squares, anticommutation and span all checked exactly'''

    def __init__(self, name, generator_map, span_dim):
        self.name = name
        self.generator_map = generator_map
        self.span_dim = span_dim

    def to_dict(self):
        gmap = self.generator_map
        return {
            "certificate": self.name,
            "source": {"p": gmap.signature.p, "q": gmap.signature.q, "dim": gmap.source.dim},
            "target_dim": gmap.target.dim,
            "images": [image.to_list() for image in gmap.images],
            "span_dim": self.span_dim,
        }


def _monomial_product(left, right, signature):
    '''
    Product of two basis monomials given as sorted index tuples.

    Sorts the concatenation by adjacent transpositions, counting them for the sign,
    then cancels equal neighbours with the square of that generator.
    '''
    word = list(left) + list(right)
    sign = 1
    #Insertion sort; every swap of distinct generators anticommutes
    for a in range(1, len(word)):
        b = a
        while b > 0 and word[b - 1] > word[b]:
            word[b - 1], word[b] = word[b], word[b - 1]
            sign = -sign
            b -= 1
    out = []
    for g in word:
        if out and out[-1] == g:
            out.pop()
            if g > signature.p:
                sign = -sign
        else:
            out.append(g)
    return sign, tuple(out)


def _monomials(n):
    return [s for size in range(n + 1) for s in itertools.combinations(range(1, n + 1), size)]


def _monomial_label(subset):
    return "1" if not subset else "".join("e{}".format(g) for g in subset)


def _clifford(signature, field, validate):
    basis = _monomials(signature.n)
    index = dict((s, r) for r, s in enumerate(basis))
    products = {}
    for a, s in enumerate(basis):
        for b, t in enumerate(basis):
            sign, word = _monomial_product(s, t, signature)
            products[(a, b)] = {index[word]: sign}
    parity = [len(s) % 2 for s in basis]
    unit = [1] + [0] * (len(basis) - 1)
    labels = [_monomial_label(s) for s in basis]
    log.debug("built %s of dimension %d", signature, len(basis))
    return SuperAlgebra(field, parity, products, unit, labels=labels, validate=validate)


def clifford_real(signature, validate=False):
    '''
    The real Clifford algebra Cl(p, q) as a superalgebra of dimension 2^(p+q).

    signature: CliffordSignature or a (p, q) pair
    '''
    signature = _as_signature(signature)
    return _clifford(signature, REALS, validate)


def clifford_complex(n, validate=False):
    '''The complex Clifford algebra Cl_n(C) over the Gaussian rationals, all generators squaring to +1'''
    if n < 0:
        raise ValueError("n must be nonnegative, got {}".format(n))
    if n > MAX_CLIFFORD_RANK:
        raise SignatureTooLarge("Cl_{}(C) exceeds n <= {}".format(n, MAX_CLIFFORD_RANK))
    return _clifford(CliffordSignature(n, 0), COMPLEXES, validate)


def _as_signature(signature):
    if isinstance(signature, CliffordSignature):
        return signature
    if isinstance(signature, dict):
        return CliffordSignature(signature["p"], signature["q"])
    p, q = signature
    return CliffordSignature(p, q)


def clifford_generators(algebra, n):
    '''Generators e_1 .. e_n of a Clifford algebra built by this module'''
    return [algebra.basis(i) for i in range(1, n + 1)]


def end_superalgebra(r, s, validate=False):
    '''
    End(R^{r|s}): matrix units E_ab on a space with r even and s odd coordinates.

    E_ab sits at index a * (r + s) + b with parity parity(a) + parity(b); E_ab E_cd = delta_bc E_ad.
    '''
    N = r + s
    if r < 0 or s < 0 or N < 1:
        raise ValueError("end_superalgebra needs r, s >= 0 and r + s >= 1, got ({}, {})".format(r, s))
    if N * N > MAX_END_DIM:
        raise SizeTooLarge("End(R^{}|{}) has dimension {} > {}".format(r, s, N * N, MAX_END_DIM))
    coord_parity = [0] * r + [1] * s
    parity = [(coord_parity[a] + coord_parity[b]) % 2 for a in range(N) for b in range(N)]
    products = {}
    for a in range(N):
        for b in range(N):
            for d in range(N):
                products[(a * N + b, b * N + d)] = {a * N + d: 1}
    unit = [1 if a == b else 0 for a in range(N) for b in range(N)]
    labels = ["E{}{}".format(a + 1, b + 1) for a in range(N) for b in range(N)]
    return SuperAlgebra(REALS, parity, products, unit, labels=labels, validate=validate)


def brauer_wall(signature):
    '''Real class (p - q) mod 8 of Cl(p, q)'''
    signature = _as_signature(signature)
    return BrauerWallClass(8, signature.p - signature.q)


def brauer_wall_complex(n):
    '''Complex class n mod 2 of Cl_n(C)'''
    return BrauerWallClass(2, n)


def verify_generator_map(generator_map, name="generator map"):
    '''
    Verifies that generator images satisfy the Clifford relations and generate the target.

    Checks (a) image_i^2 = +1 for the first p generators and -1 for the rest,
    (b) images pairwise anticommute, (c) the products of images over all subsets
    span the whole target. Raises RelationFailure or SpanDeficient with the witness.
    '''
    signature = generator_map.signature
    target = generator_map.target
    images = generator_map.images
    one = target.one()

    for idx, x in enumerate(images):
        expected = one if idx < signature.p else -one
        square = x * x
        if square != expected:
            raise RelationFailure("square", (idx + 1,), str(square))

    for a, b in itertools.combinations(range(len(images)), 2):
        anticommutator = images[a] * images[b] + images[b] * images[a]
        if not anticommutator.is_zero():
            raise RelationFailure("anticommutation", (a + 1, b + 1), str(anticommutator))

    monomials = []
    for subset in _monomials(len(images)):
        word = one
        for g in subset:
            word = word * images[g - 1]
        monomials.append(list(word.coords))
    span_dim = rank(np.array(monomials, dtype=object))
    if span_dim != target.dim:
        raise SpanDeficient(span_dim, target.dim)
    log.debug("%s verified: %d images span dimension %d", name, len(images), span_dim)
    return PeriodicityCertificate(name, generator_map, span_dim)


def verify_periodicity(signature):
    '''
    Certifies Cl(p+1, q+1) = Cl(p, q) (x) Cl(1, 1).

    The generators of Cl(p+1, q+1) (p+1 positive, then q+1 negative) go to
    e_1 x 1 .. e_p x 1, 1 x f_1, e_{p+1} x 1 .. e_{p+q} x 1, 1 x f_2. The e_i x 1 and
    1 x f_j anticommute by the Koszul sign because both factors are odd.
    '''
    signature = _as_signature(signature)
    p, q = signature
    if p + q + 2 > MAX_CLIFFORD_RANK:
        raise SignatureTooLarge("Cl({},{}) exceeds p + q <= {}".format(p + 1, q + 1, MAX_CLIFFORD_RANK))
    base = clifford_real(signature)
    hyperbolic = clifford_real((1, 1))
    target = graded_tensor(base, hyperbolic)
    source_sig = CliffordSignature(p + 1, q + 1)
    source = clifford_real(source_sig)

    e = clifford_generators(base, p + q)
    f1, f2 = clifford_generators(hyperbolic, 2)
    base_one, hyperbolic_one = base.one(), hyperbolic.one()
    images = ([pure_tensor(e[i], hyperbolic_one, target) for i in range(p)]
              + [pure_tensor(base_one, f1, target)]
              + [pure_tensor(e[p + j], hyperbolic_one, target) for j in range(q)]
              + [pure_tensor(base_one, f2, target)])
    gmap = GeneratorMap(source, source_sig, target, images)
    return verify_generator_map(gmap, "{} = {} (x) Cl(1,1)".format(source_sig, signature))


def verify_complex_periodicity(n):
    '''
    Certifies Cl_{n+2}(C) = Cl_n(C) (x) Cl_2(C) over the Gaussian rationals.

    e_1 .. e_n go to e_i x 1, and e_{n+1}, e_{n+2} to 1 x f_1, 1 x f_2; every image squares to +1.
    '''
    if n < 0:
        raise ValueError("n must be nonnegative, got {}".format(n))
    if n + 2 > MAX_CLIFFORD_RANK:
        raise SignatureTooLarge("Cl_{}(C) exceeds n <= {}".format(n + 2, MAX_CLIFFORD_RANK))
    base = clifford_complex(n)
    plane = clifford_complex(2)
    target = graded_tensor(base, plane)
    source_sig = CliffordSignature(n + 2, 0)

    f1, f2 = clifford_generators(plane, 2)
    base_one, plane_one = base.one(), plane.one()
    images = ([pure_tensor(e, plane_one, target) for e in clifford_generators(base, n)]
              + [pure_tensor(base_one, f1, target), pure_tensor(base_one, f2, target)])
    gmap = GeneratorMap(clifford_complex(n + 2), source_sig, target, images)
    return verify_generator_map(gmap, "Cl_{}(C) = Cl_{}(C) (x) Cl_2(C)".format(n + 2, n))


def clifford_end_certificate():
    '''Cl(1,1) = End(R^{1|1}) via e_1 -> E12 + E21, e_2 -> E12 - E21'''
    source_sig = CliffordSignature(1, 1)
    target = end_superalgebra(1, 1)
    E12, E21 = target.basis(1), target.basis(2)
    gmap = GeneratorMap(clifford_real(source_sig), source_sig, target, [E12 + E21, E12 - E21])
    return verify_generator_map(gmap, "Cl(1,1) = End(R^1|1)")


def quaternion_morita_certificate():
    '''Cl(4,0) = H (x) Cl(1,1) via 1 x f_1, i x f_2, j x f_2, k x f_2, placing H in class 4'''
    H = canonical('H')
    hyperbolic = clifford_real((1, 1))
    target = graded_tensor(H, hyperbolic)
    f1, f2 = clifford_generators(hyperbolic, 2)
    images = [pure_tensor(H.one(), f1, target)] + [pure_tensor(H.basis(a), f2, target) for a in (1, 2, 3)]
    source_sig = CliffordSignature(4, 0)
    gmap = GeneratorMap(clifford_real(source_sig), source_sig, target, images)
    return verify_generator_map(gmap, "Cl(4,0) = H (x) Cl(1,1)")


def reduce_signature(signature):
    '''Strips min(p, q) factors of Cl(1, 1) from Cl(p, q)'''
    signature = _as_signature(signature)
    m = min(signature.p, signature.q)
    return CliffordSignature(signature.p - m, signature.q - m)


def classify_clifford(signature):
    '''
    Label of Cl(p, q) as a real super division algebra.

    Raises NotSuperDivision with a zero-divisor witness for the other signatures.
    '''
    signature = _as_signature(signature)
    return classify(clifford_real(signature)).label


def classify_complex_clifford(n):
    return classify(realify(clifford_complex(n))).label


def morita_table(max_rank=4):
    '''
    One row per signature with p + q <= max_rank: Brauer-Wall class, reduced
    signature and the computed label of the reduced algebra (None when the
    reduced algebra is not a super division algebra).
    '''
    rows = []
    for n in range(max_rank + 1):
        for p in range(n, -1, -1):
            signature = CliffordSignature(p, n - p)
            reduced = reduce_signature(signature)
            try:
                label = classify_clifford(reduced)
            except NotSuperDivision:
                label = None
            rows.append({
                "signature": str(signature),
                "p": signature.p,
                "q": signature.q,
                "brauer_wall": brauer_wall(signature).value,
                "reduced": str(reduced),
                "label": label,
            })
    return rows


def complex_morita_table(max_rank=4):
    '''
    One row per Cl_n(C) with n <= max_rank. The algebra is reduced two generators at a
    time, each step certified by verify_complex_periodicity, and the label of what remains
    is computed; the row also carries the claimed class brauer_wall_complex(n).

    Raises RelationFailure or SpanDeficient if a reduction step fails to verify.
    '''
    rows = []
    for n in range(max_rank + 1):
        m = n
        while m >= 2:
            verify_complex_periodicity(m - 2)
            m -= 2
        try:
            label = classify_complex_clifford(m)
        except NotSuperDivision:
            label = None
        rows.append({
            "signature": "Cl_{}(C)".format(n),
            "n": n,
            "brauer_wall": brauer_wall_complex(n).value,
            "reduced": "Cl_{}(C)".format(m),
            "label": label,
        })
    return rows
