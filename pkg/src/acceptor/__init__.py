"""
Acceptor Package

The normal-form language of reduced tree pair diagrams as a 2-counter machine.
"""
from .machines import (
    CARET_ALPHABET,
    COLUMN_ALPHABET,
    INTERIOR_ALPHABET,
    INTERIOR_RULES,
    AcceptorBundle,
    build_acceptor,
    build_l_tt,
    build_m_int,
    build_m_tree,
    build_r_dfa,
    get_acceptor,
)
from .reports import QuasigeodesicReport, ogden_witness, pump_mutations, quasigeodesic_report

__all__ = [
    'CARET_ALPHABET', 'COLUMN_ALPHABET', 'INTERIOR_ALPHABET', 'INTERIOR_RULES',
    'AcceptorBundle', 'build_acceptor', 'build_l_tt', 'build_m_int', 'build_m_tree',
    'build_r_dfa', 'get_acceptor',
    'QuasigeodesicReport', 'ogden_witness', 'pump_mutations', 'quasigeodesic_report',
]
