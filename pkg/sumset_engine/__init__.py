""" __init__.py for sumset_engine """
from sumset_engine.subsets import GroupSubset, translate_bits
from sumset_engine.sumsets import (RestrictedSumsetTable, sumset, iterated_sumset,
                                   restricted_sumsets, sigma, sigma_witness,
                                   restricted_sumset_witness, detect_ap,
                                   is_arithmetic_progression)
