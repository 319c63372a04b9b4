"""
Multipliers Package

Counter automata accepting ⊗(ν(g), ν(g·s)) for each generator s.
"""
from .patterns import MULT_ALPHABET, PAIR_ALPHABET, CaseTemplate, multiplier_input
from .x0 import build_l_x0, build_n0, classify_x0, x0_case_patterns
from .x1 import (
    build_case5b_machine,
    build_k1_l1,
    build_l2,
    build_n,
    build_n1,
    classify_x1,
    x1_case_patterns,
)
from .dispatch import CaseDispatchMachine
from .bundle import (
    MultiplierBundle,
    build_inverse_multiplier,
    build_l_x1,
    build_multipliers,
    get_multipliers,
)

__all__ = [
    'MULT_ALPHABET', 'PAIR_ALPHABET', 'CaseTemplate', 'multiplier_input',
    'build_l_x0', 'build_n0', 'classify_x0', 'x0_case_patterns',
    'build_case5b_machine', 'build_k1_l1', 'build_l2', 'build_n', 'build_n1',
    'classify_x1', 'x1_case_patterns',
    'CaseDispatchMachine',
    'MultiplierBundle', 'build_inverse_multiplier', 'build_l_x1', 'build_multipliers',
    'get_multipliers',
]
