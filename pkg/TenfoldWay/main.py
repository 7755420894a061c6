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

import logging

from TenfoldWay.tables import Tables
from TenfoldWay.validity_tests import ValidityTests

log = logging.getLogger(__name__)

SECTIONS = ("tenfold", "clifford", "periodicity", "morita", "threefold")


class SelfTest(Tables, ValidityTests):
    '''Class running the bundled self test corpus and collecting a pass/fail matrix'''

    def __init__(self, sections=None, max_periodicity_rank=4, canonical_override=None):
        '''
        sections:
          Type: list of str. Default: None (all sections).
          Subset of "tenfold", "clifford", "periodicity", "morita", "threefold".
          Sections always run in that order, whatever order they are given in.

        max_periodicity_rank:
          Type: int. Default: 4.
          Largest p + q for which Cl(p+1, q+1) = Cl(p, q) (x) Cl(1, 1) is certified,
          also the rank of the Morita table.

        canonical_override:
          Type: dict. Default: None.
          Maps labels to replacement SuperAlgebras used in place of the canonical ones
          by the tenfold section. Used to inject corrupted tables.
        '''
        if sections is None:
            sections = SECTIONS
        unknown = [s for s in sections if s not in SECTIONS]
        if unknown:
            raise ValueError('"{}" is not a valid section. Valid sections are: {}.'.format(
                unknown[0], ', '.join('"{}"'.format(s) for s in SECTIONS)))

        self.sections = [s for s in SECTIONS if s in sections]
        self.max_periodicity_rank = max_periodicity_rank
        self.canonical_override = canonical_override
        self.records = []

        for section in self.sections:
            getattr(self, "{}_checks".format(section))()
            failed = sum(1 for r in self.records if r["section"] == section and not r["passed"])
            log.info("section %s finished with %d failure(s)", section, failed)

        self.results_df = self._get_results_df(self.records)
        self.summary_df = self._get_summary_df(self.results_df)

    @property
    def passed(self):
        return bool(self.results_df["passed"].all())

    def failures(self):
        return self._get_failures_df(self.results_df)

    def to_dict(self):
        return {
            "passed": self.passed,
            "sections": self.sections,
            "checks": [dict(r) for r in self.records],
        }

    def report(self):
        '''Human readable pass/fail matrix followed by any failing checks'''
        lines = [self.summary_df.to_string()]
        failures = self.failures()
        if not failures.empty:
            lines.append("")
            lines.append("Failures:")
            lines.append(failures.to_string(index=False))
        return "\n".join(lines)
