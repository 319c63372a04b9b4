"""
One-pass dispatcher for the x1 multiplier

Runs the case-pattern DFAs, the case 5b machine and a single copy of the
normal-form acceptor side by side. The acceptor reads the upper track until
the case 5b machine passes the first rotated column, and the lower track from
then on; the two tracks agree on everything before that column, so either
reading certifies the same prefix.
"""
from .patterns import MULT_ALPHABET
from ..automata import Automaton, CounterMachine, CounterOp, Dfa, Guard, Transition
from ..automata.counters import uncovered
from ..utils.config import PAD

# case 5b states in which the lower track is the one to certify
_LOWER_PHASE = frozenset({"q2", "q3", "q4", "q5"})
_CASE5B_ACCEPT = "q4"

class CaseDispatchMachine(Automaton):
    """Accepts (N1 ∩ ⊗(F, ·)) ∪ (K1 ∩ ⊗(F, ·)) ∪ (case5b ∩ ⊗(·, F)) deterministically.

    State: (n1 state, k1 state, case5b state, (acceptor state, ended)); a dead
    component is None. Counters: the acceptor's, then the case 5b counter.
    """

    def __init__(self, n1: Dfa, k1: Dfa, case5b: CounterMachine, f_machine: Automaton, name: str = "l_x1"):
        super().__init__(
            MULT_ALPHABET,
            f_machine.counters + case5b.counters,
            (n1.start, k1.start, case5b.start, (f_machine.start, False)),
            name,
        )
        self.n1 = n1
        self.k1 = k1
        self.case5b = case5b
        self.f_machine = f_machine
        self._f_idle = (Guard.any(f_machine.counters), CounterOp.nop(f_machine.counters))
        self._case5b_idle = (Guard.any(case5b.counters), CounterOp.nop(case5b.counters))
        self._cache = {}

    def parts(self) -> tuple:
        return (self.n1, self.k1, self.case5b, self.f_machine)

    def _case5b_moves(self, state, column) -> list:
        """Moves of the case 5b branch, completed with dying moves on uncovered guards."""
        guard, op = self._case5b_idle
        if state is None:
            return [(guard, None, op)]
        moves = [(t.guard, t.target, t.op) for t in self.case5b.transitions(state, column)]
        for point in uncovered([m[0] for m in moves], self.case5b.counters):
            moves.append((point, None, op))
        return moves

    def _f_moves(self, state, letter) -> list:
        inner, ended = state
        if letter == PAD:
            guard, op = self._f_idle
            return [(guard, (inner, True), op)]
        if ended:
            return []
        return [(t.guard, (t.target, False), t.op) for t in self.f_machine.transitions(inner, letter)]

    def transitions(self, state, letter) -> tuple:
        key = (state, letter)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._compute(state, letter)
            self._cache[key] = cached
        return cached

    def _compute(self, state, column) -> tuple:
        n1_state, k1_state, case5b_state, f_state = state
        upper, lower = column
        if upper == PAD and lower == PAD:
            return ()
        n1_next = self.n1.next_state(n1_state, column) if n1_state is not None else None
        k1_next = self.k1.next_state(k1_state, column) if k1_state is not None else None
        result = []
        for case5b_guard, case5b_next, case5b_op in self._case5b_moves(case5b_state, column):
            if case5b_next is None and case5b_state in _LOWER_PHASE:
                # the other branches died before case 5b switched tracks
                continue
            if n1_next is None and k1_next is None and case5b_next is None:
                continue
            letter = lower if case5b_next in _LOWER_PHASE else upper
            for f_guard, f_next, f_op in self._f_moves(f_state, letter):
                result.append(Transition(
                    f_guard + case5b_guard,
                    (n1_next, k1_next, case5b_next, f_next),
                    f_op + case5b_op,
                ))
        return tuple(result)

    def is_accepting(self, state) -> bool:
        n1_state, k1_state, case5b_state, (f_state, _) = state
        if not self.f_machine.is_accepting(f_state):
            return False
        return (
            (n1_state is not None and self.n1.is_accepting(n1_state))
            or (k1_state is not None and self.k1.is_accepting(k1_state))
            or case5b_state == _CASE5B_ACCEPT
        )
