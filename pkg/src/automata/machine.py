"""
Deterministic counter automata
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Optional, Sequence

from .alphabet import Alphabet, ConvWord
from .counters import CounterOp, Guard, Transition
from ..utils.exceptions import AlphabetError, AutomatonError, DeterminismError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

State = Hashable

@dataclass(frozen=True)
class RunResult:
    """Outcome of a run; ``steps`` is the number of letters consumed."""
    accepted: bool
    reason: str
    steps: int
    trace: tuple = field(default_factory=tuple)

class Automaton(ABC):
    """Deterministic k-counter automaton over an alphabet.

    A configuration is a state plus k non-negative counters. Counters start at
    zero and a word is accepted when the run ends in an accepting state with
    every counter back at zero.
    """

    def __init__(self, alphabet: Alphabet, counters: int, start: State, name: str = ""):
        if counters < 0:
            raise AutomatonError("counter count must be non-negative")
        self.alphabet = alphabet
        self.counters = counters
        self.start = start
        self.name = name or self.__class__.__name__

    @abstractmethod
    def transitions(self, state: State, letter) -> tuple:
        """All transitions leaving ``state`` on ``letter``, whatever their guards."""

    @abstractmethod
    def is_accepting(self, state: State) -> bool:
        pass

    def parts(self) -> tuple:
        """Component machines for composite automata; explicit machines have none."""
        return ()

    def enabled(self, state: State, counters: Sequence[int], letter) -> Optional[Transition]:
        found = [t for t in self.transitions(state, letter) if t.guard.holds(counters)]
        if len(found) > 1:
            raise DeterminismError(state, letter, len(found))
        return found[0] if found else None

    def step(self, state: State, counters: Sequence[int], letter):
        """Next configuration, or None when no transition is enabled."""
        transition = self.enabled(state, counters, letter)
        if transition is None:
            return None
        return transition.target, transition.op.apply(counters, state)

    def run(self, word: Iterable, trace: bool = False) -> RunResult:
        letters = word.columns if isinstance(word, ConvWord) else word
        state, counters = self.start, (0,) * self.counters
        configurations = [(state, counters)] if trace else []
        steps = 0
        for position, letter in enumerate(letters):
            if letter not in self.alphabet:
                raise AlphabetError(f"letter {letter!r} is not in the alphabet of {self.name}", letter, position)
            if self.alphabet.tracks > 1 and self.alphabet.is_all_pad(letter):
                return RunResult(False, f"malformed convolution at position {position}",
                                 steps, tuple(configurations))
            moved = self.step(state, counters, letter)
            if moved is None:
                return RunResult(False, f"no transition on {letter!r} at position {position}",
                                 steps, tuple(configurations))
            state, counters = moved
            steps += 1
            if trace:
                configurations.append((state, counters))
        if not self.is_accepting(state):
            reason = "final state is not accepting"
        elif any(counters):
            reason = "counters are not zero at the end"
        else:
            reason = "accepted"
        return RunResult(reason == "accepted", reason, steps, tuple(configurations))

    def accepts(self, word: Iterable) -> bool:
        return self.run(word).accepted

    def __repr__(self):
        return f"{self.__class__.__name__}(name={self.name!r}, counters={self.counters})"

class Rule(NamedTuple):
    source: State
    letter: Hashable
    guard: Guard
    target: State
    op: CounterOp

class CounterMachine(Automaton):
    """Counter automaton with an explicit transition table."""

    def __init__(self, alphabet: Alphabet, counters: int, start: State,
                 accepting: Iterable[State], rules: Iterable[Rule], name: str = ""):
        super().__init__(alphabet, counters, start, name)
        self.accepting = frozenset(accepting)
        table = defaultdict(list)
        states = {start} | set(self.accepting)
        for rule in rules:
            if rule.letter not in alphabet:
                raise AlphabetError(f"rule letter {rule.letter!r} is not in the alphabet", rule.letter)
            if len(rule.guard.tests) != counters or len(rule.op.actions) != counters:
                raise AutomatonError(f"rule {rule.source!r} -> {rule.target!r} has the wrong counter width")
            table[(rule.source, rule.letter)].append(Transition(rule.guard, rule.target, rule.op))
            states.update((rule.source, rule.target))
        self.table = {key: tuple(value) for key, value in table.items()}
        self.states = frozenset(states)
        logger.debug(f"Built {self.name}: {len(self.states)} states, {len(self.table)} table entries")

    def transitions(self, state: State, letter) -> tuple:
        return self.table.get((state, letter), ())

    def is_accepting(self, state: State) -> bool:
        return state in self.accepting
