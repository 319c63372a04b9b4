"""
Automata Package

Deterministic counter automata over finite alphabets, DFA/NFA closure
operations and lazy products.
"""
from .alphabet import Alphabet, ConvWord, convolve, deconvolve
from .counters import CounterOp, Guard, Transition
from .machine import Automaton, CounterMachine, Rule, RunResult
from .finite import (
    Dfa,
    Nfa,
    complement,
    concat,
    crawl,
    determinize,
    intersect,
    shifted_copy_dfa,
    union,
)
from .products import (
    ProductMachine,
    SwappedMachine,
    conv_product,
    product_counter_counter,
    product_counter_dfa,
)
from .analysis import audit_determinism, count_accepted, to_dot

__all__ = [
    'Alphabet', 'ConvWord', 'convolve', 'deconvolve',
    'CounterOp', 'Guard', 'Transition',
    'Automaton', 'CounterMachine', 'Rule', 'RunResult',
    'Dfa', 'Nfa', 'complement', 'concat', 'crawl', 'determinize', 'intersect',
    'shifted_copy_dfa', 'union',
    'ProductMachine', 'SwappedMachine', 'conv_product',
    'product_counter_counter', 'product_counter_dfa',
    'audit_determinism', 'count_accepted', 'to_dot',
]
