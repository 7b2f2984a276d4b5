""" __init__.py for theorem_lab """
from theorem_lab.bounds import BoundReport
from theorem_lab.verifiers import (verify_cauchy_davenport, verify_diderrich,
                                   verify_ddsh, EXHAUSTIVE, SAMPLED)
