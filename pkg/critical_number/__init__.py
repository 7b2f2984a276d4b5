""" __init__.py for critical_number """
from critical_number.formula import CrResult, cr_formula
from critical_number.oracle import (OracleOutcome, cr_bruteforce,
                                    spanning_all_of_size)
from critical_number.extremal import (extremal_witness, ExtremalSummary,
                                      summarize_witness, witness_sweep)
from critical_number.table import TableRow, cr_table, parse_orders, write_table_csv
