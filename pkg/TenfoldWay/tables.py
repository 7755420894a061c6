from __future__ import absolute_import, division, print_function

import pandas as pd

from TenfoldWay.clifford import morita_table

RESULT_COLUMNS = ["section", "check", "passed", "detail"]


class Tables(object):
    ''' This class constructs Pandas DataFrames that summarize the self test.'''

    def _get_results_df(self, records):
      '''One row per check: section, check, passed, detail'''
      return pd.DataFrame(records, columns=RESULT_COLUMNS)


    def _get_summary_df(self, results_df):
      '''
      Returns the pass/fail matrix, one row per section.

        checks: number of checks run in the section
        passed: number of checks that passed
        failed: number of checks that failed
        status: "PASS" if every check in the section passed, else "FAIL"
      '''
      if results_df.empty:
          return pd.DataFrame(columns=["checks", "passed", "failed", "status"])

      grouped = results_df.groupby("section", sort=False)["passed"]
      summary_df = pd.DataFrame({"checks": grouped.size(),
                                 "passed": grouped.sum().astype(int)})
      summary_df["failed"] = summary_df["checks"] - summary_df["passed"]
      summary_df["status"] = ["PASS" if f == 0 else "FAIL" for f in summary_df["failed"]]
      return summary_df


    def _get_morita_df(self, max_rank=4):
      '''
      Signatures up to the given rank with their Brauer-Wall class, reduced
      signature and the computed label of the reduced algebra.
      '''
      return pd.DataFrame(morita_table(max_rank)).set_index("signature")


    def _get_failures_df(self, results_df):
      return results_df.loc[~results_df["passed"]].reset_index(drop=True)
