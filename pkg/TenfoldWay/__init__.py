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

from TenfoldWay.__version__ import __version__
from TenfoldWay.scalar import COMPLEXES, I, REALS, GaussianRational, Rational
from TenfoldWay.superalgebra import SuperAlgebra, Element, graded_tensor, invert, make_superalgebra
from TenfoldWay.divclass import LABELS, TenfoldClass, canonical, classify, is_super_division, realify
from TenfoldWay.clifford import clifford_complex, clifford_real, verify_periodicity
from TenfoldWay.repthree import commutant, fs_indicator, group_closure, schur_type
from TenfoldWay.main import SelfTest
