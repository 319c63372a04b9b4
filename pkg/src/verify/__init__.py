"""
Verify Package

Exhaustive and seeded cross-checks of the automata against the tree pair oracle.
"""
from .report import CheckRecorder, CheckResult, VerificationReport
from .checks import (
    EXPECTED_COUNTERS,
    run_all,
    verify_acceptor,
    verify_case_partition,
    verify_determinism,
    verify_group_laws,
    verify_multiplier,
    verify_ogden,
    verify_quasigeodesic,
    verify_roundtrips,
)

__all__ = [
    'CheckRecorder', 'CheckResult', 'VerificationReport',
    'EXPECTED_COUNTERS', 'run_all', 'verify_acceptor', 'verify_case_partition',
    'verify_determinism', 'verify_group_laws', 'verify_multiplier', 'verify_ogden',
    'verify_quasigeodesic', 'verify_roundtrips',
]
