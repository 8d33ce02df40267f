"""
Reproduction tables
===================

Run every result table in the harness and print the summary.  Exit status
follows the CLI: 0 all pass, 1 some fail, 2 only inconclusive rows.
"""

import sys

from atgraph.repro import exit_code, format_table, run_all

reports = run_all(seed=0)
print(format_table(reports))
sys.exit(exit_code(reports))
