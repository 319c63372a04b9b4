"""
Counter guards, counter operations and transitions
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Hashable, NamedTuple, Sequence

from ..utils.exceptions import AutomatonError, CounterUnderflowError

ANY = "any"
ZERO = "=0"
POS = ">0"

NOP = "nop"
INC = "+1"
DEC = "-1"
RESET = "reset"

_TESTS = (ANY, ZERO, POS)
_ACTIONS = (NOP, INC, DEC, RESET)

@dataclass(frozen=True)
class Guard:
    """One zero-test per counter."""
    tests: tuple = ()

    def __post_init__(self):
        for test in self.tests:
            if test not in _TESTS:
                raise AutomatonError(f"unknown guard test {test!r}")

    @classmethod
    def any(cls, k: int) -> "Guard":
        return cls((ANY,) * k)

    @classmethod
    def on(cls, k: int, index: int, test: str) -> "Guard":
        tests = [ANY] * k
        tests[index] = test
        return cls(tuple(tests))

    def holds(self, counters: Sequence[int]) -> bool:
        for test, value in zip(self.tests, counters):
            if test == ZERO and value != 0:
                return False
            if test == POS and value <= 0:
                return False
        return True

    def overlaps(self, other: "Guard") -> bool:
        return all(a == ANY or b == ANY or a == b for a, b in zip(self.tests, other.tests))

    def __add__(self, other: "Guard") -> "Guard":
        return Guard(self.tests + other.tests)

    def __str__(self) -> str:
        return ",".join(f"c{i}{test}" for i, test in enumerate(self.tests) if test != ANY)

@dataclass(frozen=True)
class CounterOp:
    """One action per counter."""
    actions: tuple = ()

    def __post_init__(self):
        for action in self.actions:
            if action not in _ACTIONS:
                raise AutomatonError(f"unknown counter action {action!r}")

    @classmethod
    def nop(cls, k: int) -> "CounterOp":
        return cls((NOP,) * k)

    @classmethod
    def on(cls, k: int, index: int, action: str) -> "CounterOp":
        actions = [NOP] * k
        actions[index] = action
        return cls(tuple(actions))

    def apply(self, counters: Sequence[int], state: Hashable = None) -> tuple:
        result = []
        for index, (action, value) in enumerate(zip(self.actions, counters)):
            if action == INC:
                value += 1
            elif action == DEC:
                if value == 0:
                    raise CounterUnderflowError(index, state)
                value -= 1
            elif action == RESET:
                value = 0
            result.append(value)
        return tuple(result)

    def __add__(self, other: "CounterOp") -> "CounterOp":
        return CounterOp(self.actions + other.actions)

    def __str__(self) -> str:
        return ",".join(f"c{i}{action}" for i, action in enumerate(self.actions) if action != NOP)

class Transition(NamedTuple):
    guard: Guard
    target: Hashable
    op: CounterOp

    def label_suffix(self) -> str:
        parts = [str(self.guard), str(self.op)]
        return " ".join(part for part in parts if part)

def valuations(k: int):
    """Points of the zero/positive lattice, as guards with no ANY entries."""
    return [Guard(tests) for tests in product((ZERO, POS), repeat=k)]

def uncovered(guards: Sequence[Guard], k: int) -> list:
    """Lattice points that no guard in ``guards`` admits."""
    return [point for point in valuations(k) if not any(g.overlaps(point) for g in guards)]
